//! Rebuilds the tabulated codes and compares them with the printed parameters.
//! Pass table numbers as arguments; the default is 1 and 5.

use selfdual::tables::{verify_table, verify_table1, verify_table2, VerifyOptions};

fn main() {
    let tables: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let tables = if tables.is_empty() { vec![1, 5] } else { tables };
    let options = VerifyOptions::default();
    for t in tables {
        let report = match t {
            1 => verify_table1(&options),
            2 => verify_table2(&options),
            _ => verify_table(t, &options),
        };
        match report {
            Ok(r) => println!("{r}"),
            Err(e) => println!("table {t}: {e}"),
        }
    }
}
