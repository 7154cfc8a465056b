//! Checking enumerator parameters against the known-parameter registry.

use selfdual::bincode::{EnumeratorId, Family, KnownParamsRegistry, RegistryLayer};

fn main() {
    let registry = KnownParamsRegistry::shipped();
    let ids = [
        EnumeratorId { family: Family::W66_3, beta: 60, gamma: None },
        EnumeratorId { family: Family::W64_1, beta: 60, gamma: None },
        EnumeratorId { family: Family::W68_2, beta: 67, gamma: Some(1) },
        EnumeratorId { family: Family::W58_2, beta: 0, gamma: Some(50) },
    ];
    for id in &ids {
        let baseline = registry.check_layer(id, RegistryLayer::Baseline);
        let updated = registry.check_layer(id, RegistryLayer::Updated);
        println!("{id}: baseline {baseline:?}, updated {updated:?}");
    }

    let mut local = KnownParamsRegistry::shipped();
    local.add(&ids[2]);
    for (length, doc) in local.to_documents() {
        println!("length {length}: {} bytes of JSON", doc.len());
    }
}
