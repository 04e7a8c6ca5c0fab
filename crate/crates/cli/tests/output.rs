use iterbound_cli::output::*;

#[test]
fn twelve_significant_digits() {
    assert_eq!(fmt_num(0.1296), "0.1296");
    assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333");
    assert_eq!(fmt_num(5400.0), "5400");
    assert_eq!(fmt_num(8.964083874125839), "8.96408387413");
    assert_eq!(fmt_num(1.5e-300), "1.5e-300");
    assert_eq!(fmt_num(-2.5e-7), "-2.5e-07");
    assert_eq!(fmt_num(123456789012345.0), "1.23456789012e+14");
    assert_eq!(fmt_num(0.0), "0");
    assert_eq!(fmt_num(1.52587890625e-5), "1.52587890625e-05");
    assert_eq!(fmt_num(0.00012), "0.00012");
}

#[test]
fn csv_body() {
    let mut t = Table::new("x", vec!["a", "b"]);
    t.push(vec!["1".into(), fmt_num(0.5)]);
    assert_eq!(t.to_csv().unwrap(), "a,b\n1,0.5\n");
}
