use proptest::prelude::*;
use repcheck::bounds::{parse_maximal_indices, RTable};
use repcheck::catalog;
use repcheck::ctformat::{emit_table, parse_group_spec, parse_table, TableFile};
use repcheck::cyclo::{parse_value, Cyclotomic};

fn cyclotomic() -> impl Strategy<Value = (u64, Cyclotomic)> {
    (1u64..=24).prop_flat_map(|n| prop::collection::vec(-9i64..=9, n as usize).prop_map(move |c| (n, Cyclotomic::from_dense_int(n, &c))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cyclotomic_text_roundtrip((n, x) in cyclotomic()) {
        prop_assert_eq!(parse_value(&x.to_text(n), n).unwrap(), x);
    }

    #[test]
    fn cyclotomic_ring_laws((_, a) in cyclotomic(), (_, b) in cyclotomic(), (_, c) in cyclotomic()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&a.conj()).conj(), a.mul(&a.conj()));
    }

    #[test]
    fn value_parser_never_panics(s in "[-+*/^z0-9 ()]{0,24}", n in 0u64..30) {
        let _ = parse_value(&s, n);
    }

    #[test]
    fn table_parser_never_panics(lines in prop::collection::vec("(name|order|classes|sizes|orders|powermap|conductor|char|indicators)( [-+o0-9*z^]{1,5}){0,6}", 0..12)) {
        let _ = parse_table(&lines.join("\n"));
    }

    #[test]
    fn group_parser_never_panics(lines in prop::collection::vec("(name|kind|degree|prime|dim|order|gen)( [a-z0-9(),;]{1,8}){0,4}", 0..8)) {
        let _ = parse_group_spec(&lines.join("\n"));
    }

    #[test]
    fn data_parsers_never_panic(lines in prop::collection::vec("(group |normal )?[A-Za-z0-9().-]{0,6}( [0-9-]{1,6}){0,5}", 0..8)) {
        let text = lines.join("\n");
        let _ = RTable::parse(&text);
        let _ = parse_maximal_indices(&text);
    }

    #[test]
    fn module_expressions_never_panic(s in "(perm|deleted|dual|tensor|factor|natural)?[(),0-9 ]{0,12}") {
        let _ = repcheck::cli::module_from_expr(&s, 0);
    }
}

#[test]
fn computed_tables_roundtrip_through_ctb() {
    for name in ["C3", "Q8", "A4", "S4", "C7:C3", "SL2(3)", "AGammaL(1,8)"] {
        let t = catalog::table(name, 0).unwrap();
        let text = emit_table(&TableFile::from_table(&t));
        let back = parse_table(&text).unwrap();
        assert_eq!(back, TableFile::from_table(&t), "{name}");
        let t2 = back.to_table().unwrap();
        assert_eq!(t2.rows, t.rows, "{name}");
        assert_eq!(emit_table(&TableFile::from_table(&t2)), text, "{name}");
    }
}

#[test]
fn shipped_tables_reemit_identically() {
    for name in ["A8", "M11", "SL3(2)", "M22"] {
        let t = catalog::load_table(name).unwrap();
        let once = emit_table(&TableFile::from_table(&t));
        let again = emit_table(&TableFile::from_table(&parse_table(&once).unwrap().to_table().unwrap()));
        assert_eq!(once, again, "{name}");
    }
}
