//! Self-dual lifts of the F4 code P_7(0, W, w) to F4+uF4 with binary distance at least 10.

use selfdual::bincode::{has_word_below, summarize};
use selfdual::lifts::{lift_search, project_code, LiftBase, LiftBudget};

fn main() {
    let base = LiftBase::p7();
    println!("{} free u-positions", base.free_positions());
    let budget = LiftBudget { max_candidates: 4000, seed: 7 };
    let result = lift_search(&base, |b| !has_word_below(b, 10).unwrap(), budget).unwrap();
    println!(
        "examined {}, self-dual {}, hits {}, sampled {}",
        result.examined,
        result.self_dual,
        result.candidates.len(),
        result.truncated
    );
    for c in result.candidates.iter().take(5) {
        assert_eq!(project_code(&c.code).generator(), base.code().generator());
        println!("u-parts {} -> {}", c.assignment_hex(), summarize(&c.binary));
    }
}
