use selfdual::bincode::{has_word_below, CodeType};
use selfdual::extend::{f2u_extension_image, psi_code};
use selfdual::lifts::{BuiltinCode, L1_PRINTED_BORDER};
use selfdual::qdc::{bordered, BorderSpec};
use selfdual::rings::parse_f4u_expr;
use selfdual::tables::{
    parse_f2u_unit, parse_f2u_x, row_code, table_rows, verify_table, verify_table1, verify_table2, RowStatus,
    VerifyOptions,
};

fn only(rows: &[usize]) -> VerifyOptions {
    VerifyOptions {
        full_enumeration: false,
        rows: Some(rows.to_vec()),
    }
}

#[test]
fn small_table1_rows_pass() {
    let report = verify_table1(&only(&[0, 1])).unwrap();
    assert_eq!(report.rows.len(), 2);
    assert!(report.passed(), "{report}");
}

#[test]
fn l1_image_has_reported_beta() {
    let report = verify_table2(&only(&[0])).unwrap();
    assert_eq!(report.rows[0].status, RowStatus::Pass, "{report}");
}

#[test]
fn first_extension_rows_pass() {
    for table in [4u8, 5, 6] {
        let report = verify_table(table, &only(&[0, 1])).unwrap();
        assert_eq!(report.count(RowStatus::Pass), 2, "{report}");
    }
}

#[test]
fn table6_l1_rows_need_the_corrected_border() {
    let printed: Vec<_> = L1_PRINTED_BORDER.iter().map(|t| parse_f4u_expr(t).unwrap()).collect();
    let printed_code = bordered(&BuiltinCode::L1.first_row(), &BorderSpec::new(printed[0], printed[1], printed[2]));
    let printed_psi = psi_code(&printed_code);

    let l1_rows: Vec<_> = table_rows(6).unwrap().iter().filter(|r| r.base == BuiltinCode::L1).collect();
    assert_eq!(l1_rows.len(), 8);
    let mut printed_extremal = 0;
    for row in l1_rows {
        let corrected = row_code(6, row).unwrap();
        assert_eq!(corrected.classify_type(), CodeType::TypeI);
        assert!(!has_word_below(&corrected, 12).unwrap(), "{}", row.x);

        let x = parse_f2u_x(row.x).unwrap();
        let other = f2u_extension_image(&printed_psi, &x, parse_f2u_unit(row.c).unwrap()).unwrap();
        if !has_word_below(&other, 12).unwrap() {
            printed_extremal += 1;
        }
    }
    assert!(printed_extremal < 8);
}

#[test]
fn table3_rows_are_not_extremal() {
    let below: usize = table_rows(3)
        .unwrap()
        .iter()
        .map(|row| has_word_below(&row_code(3, row).unwrap(), 10).unwrap() as usize)
        .sum();
    assert_eq!(below, 6);
}
