use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use spinchar::classdata::{builtin, trivial, GroupData, Sign, SplitClassLabel, SplitFamily};
use spinchar::exactnum::{rat, CycloValue};
use spinchar::partitions::{enumerate_partitions, ClassLabel, Partition, PartitionKind, Pvf};
use spinchar::spintable::{
    hyperoctahedral_odd_closed_form, symmetric_odd_value, table_spin_hyperoctahedral, table_spin_symmetric,
    table_spin_wreath, wreath_odd_closed_form, CharacterTable, Family, Format, Presentation, RowKind,
};

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn i_sqrt(q: i64) -> CycloValue {
    &CycloValue::i() * &CycloValue::sqrt_rational(&rat(q, 1)).unwrap()
}

fn odd_class(rho: Pvf) -> SplitClassLabel {
    SplitClassLabel { base: ClassLabel::new(Pvf::empty(), rho), family: SplitFamily::OddSplit, sign: Sign::Plus }
}

fn even_class(rho: Pvf) -> SplitClassLabel {
    SplitClassLabel { base: ClassLabel::new(rho, Pvf::empty()), family: SplitFamily::EvenSplit, sign: Sign::Plus }
}

fn row_of(t: &CharacterTable, index: &Pvf, kind: RowKind) -> usize {
    t.rows.iter().position(|r| &r.index == index && r.kind == kind).expect("row present")
}

fn assert_all_invariants(t: &CharacterTable) {
    for c in t.invariant_report() {
        assert!(c.passed, "{} n = {} {}: {} failed: {:?}", t.family, t.n, t.group.name, c.name, c.witness);
    }
}

fn degree_sum(t: &CharacterTable) -> BigInt {
    t.rows.iter().map(|r| &r.degree * &r.degree).sum()
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

#[test]
fn symmetric_tables() {
    for n in 1..=8 {
        let t = table_spin_symmetric(n).unwrap();
        assert_all_invariants(&t);
        assert_eq!(degree_sum(&t), factorial(n));
    }
    let t = table_spin_symmetric(3).unwrap();
    let plus = row_of(&t, &Pvf::single(0, p(&[2, 1])), RowKind::AssociatePlus);
    let minus = row_of(&t, &Pvf::single(0, p(&[2, 1])), RowKind::AssociateMinus);
    let at = odd_class(Pvf::single(0, p(&[2, 1])));
    assert_eq!(t.value(plus, &at), CycloValue::i());
    assert_eq!(t.value(minus, &at), -CycloValue::i());
    let basic = row_of(&t, &Pvf::single(0, p(&[3])), RowKind::DoubleSpin);
    assert_eq!(t.rows[basic].degree, BigInt::from(2));
    assert_eq!(t.value(basic, &even_class(Pvf::single(0, p(&[3])))), CycloValue::from_int(1));
}

#[test]
fn hyperoctahedral_tables() {
    for n in 1..=7 {
        for pres in [Presentation::AForm, Presentation::BForm] {
            let t = table_spin_hyperoctahedral(n, pres).unwrap();
            assert_all_invariants(&t);
            assert_eq!(degree_sum(&t), BigInt::from(2).pow(n) * factorial(n));
        }
    }
    let t = table_spin_hyperoctahedral(2, Presentation::AForm).unwrap();
    assert_eq!(t.rows.len(), 2);
    assert_eq!(t.columns.len(), 2);
    let two = Pvf::single(0, p(&[2]));
    let plus = row_of(&t, &two, RowKind::AssociatePlus);
    let minus = row_of(&t, &two, RowKind::AssociateMinus);
    assert_eq!(t.value(plus, &even_class(Pvf::single(0, p(&[1, 1])))), CycloValue::from_int(2));
    assert_eq!(t.value(plus, &odd_class(two.clone())), i_sqrt(2));
    assert_eq!(t.value(minus, &odd_class(two.clone())), -i_sqrt(2));
    let b = table_spin_hyperoctahedral(2, Presentation::BForm).unwrap();
    assert_eq!(b.value(plus, &odd_class(two)), CycloValue::sqrt_rational(&rat(2, 1)).unwrap());
}

#[test]
fn wreath_tables() {
    let cases = [("cyclic2", 4), ("cyclic3", 3), ("sym3", 3), ("cyclic4", 2)];
    for (id, max) in cases {
        let g = builtin(id).unwrap();
        for n in 1..=max {
            let t = table_spin_wreath(n, &g, Presentation::AForm).unwrap();
            assert_all_invariants(&t);
            assert_eq!(degree_sum(&t), BigInt::from(2).pow(n) * factorial(n) * BigInt::from(g.order).pow(n));
            assert!(t.rows.iter().all(|r| r.degree > BigInt::zero()));
        }
    }
}

/// Rank one over cyclic(2): the odd value at {c:(1)} is i·γ(c) in the a-form, γ(c) in the b-form.
#[test]
fn cyclic2_rank_one_values() {
    let g = builtin("cyclic2").unwrap();
    for (pres, phase) in [(Presentation::AForm, CycloValue::i()), (Presentation::BForm, CycloValue::one())] {
        let t = table_spin_wreath(1, &g, pres).unwrap();
        assert_eq!(t.rows.len(), 4);
        for gamma in 0..2 {
            let lambda = Pvf::single(gamma, p(&[1]));
            let plus = row_of(&t, &lambda, RowKind::AssociatePlus);
            for c in 0..2 {
                let v = t.value(plus, &odd_class(Pvf::single(c, p(&[1]))));
                assert_eq!(v, &phase * g.value(gamma, c));
            }
        }
    }
}

#[test]
fn closed_forms() {
    assert_eq!(hyperoctahedral_odd_closed_form(&p(&[2]), &p(&[2])).unwrap(), i_sqrt(2));
    assert_eq!(hyperoctahedral_odd_closed_form(&p(&[3]), &p(&[3])).unwrap(), i_sqrt(3));
    assert_eq!(
        hyperoctahedral_odd_closed_form(&p(&[5]), &p(&[5])).unwrap(),
        -CycloValue::sqrt_rational(&rat(5, 1)).unwrap()
    );
    assert!(hyperoctahedral_odd_closed_form(&p(&[3]), &p(&[2, 1])).unwrap().is_zero());
    assert!(hyperoctahedral_odd_closed_form(&p(&[2, 1]), &p(&[2, 1])).is_err());
    assert_eq!(symmetric_odd_value(&p(&[2, 1]), &p(&[2, 1])).unwrap(), CycloValue::i());
    assert!(symmetric_odd_value(&p(&[3]), &p(&[3])).is_err());

    let g = builtin("cyclic2").unwrap();
    for gamma in 0..2 {
        for c in 0..2 {
            let v = wreath_odd_closed_form(&Pvf::single(gamma, p(&[1])), &Pvf::single(c, p(&[1])), &g).unwrap();
            assert_eq!(v, g.value(gamma, c).clone());
        }
    }
}

#[test]
fn closed_forms_agree_on_trivial_group() {
    let t = trivial();
    for n in 1..=7 {
        for nu in enumerate_partitions(n, PartitionKind::Strict).into_iter().filter(|nu| nu.len() % 2 == 1) {
            for mu in enumerate_partitions(n, PartitionKind::Strict) {
                let a = hyperoctahedral_odd_closed_form(&nu, &mu).unwrap();
                let b = wreath_odd_closed_form(&Pvf::single(0, nu.clone()), &Pvf::single(0, mu.clone()), &t).unwrap();
                assert_eq!(a, b, "ν = {nu}, μ = {mu}");
            }
        }
    }
}

#[test]
fn wreath_over_trivial_is_hyperoctahedral() {
    for n in 1..=6 {
        for pres in [Presentation::AForm, Presentation::BForm] {
            let w = table_spin_wreath(n, &trivial(), pres).unwrap();
            let h = table_spin_hyperoctahedral(n, pres).unwrap();
            assert_eq!(w.columns, h.columns);
            assert_eq!(w.rows, h.rows, "n = {n}");
        }
    }
}

/// Hand-computed orthogonality at rank two: ⟨ξ⁺, ξ⁺⟩ = 1/8·2² + 1/4·|i√2|² = 1.
#[test]
fn rank_two_norm_by_hand() {
    let t = table_spin_hyperoctahedral(2, Presentation::AForm).unwrap();
    let weights: Vec<BigRational> = t.columns.iter().map(|c| c.weight.clone()).collect();
    assert!(weights.contains(&rat(1, 8)) && weights.contains(&rat(1, 4)));
    for row in &t.rows {
        let norm: CycloValue = row.values.iter().zip(&weights).map(|(v, w)| v.norm_sq().scale(w)).sum();
        assert_eq!(norm, CycloValue::one());
    }
}

#[test]
fn serialization_round_trips() {
    let g = builtin("cyclic3").unwrap();
    for t in [
        table_spin_symmetric(5).unwrap(),
        table_spin_hyperoctahedral(4, Presentation::BForm).unwrap(),
        table_spin_wreath(2, &g, Presentation::AForm).unwrap(),
    ] {
        let text = t.render(Format::Json).unwrap();
        assert_eq!(CharacterTable::from_json(&text).unwrap(), t);
        let csv = t.render(Format::Csv).unwrap();
        assert_eq!(csv.lines().count(), t.rows.len() + 1);
        assert!(!t.render(Format::Pretty).unwrap().is_empty());
    }
    assert!(CharacterTable::from_json("{\"format\": \"nope\"}").is_err());
}

#[test]
fn family_tags() {
    assert_eq!(table_spin_symmetric(2).unwrap().family, Family::SpinSymmetric);
    assert_eq!(table_spin_hyperoctahedral(2, Presentation::AForm).unwrap().family, Family::SpinHyperoctahedral);
    assert_eq!(table_spin_wreath(1, &trivial(), Presentation::AForm).unwrap().family, Family::SpinWreath);
}

fn small_group() -> impl Strategy<Value = (GroupData, u32)> {
    prop::sample::select(vec![("trivial", 5u32), ("cyclic2", 3), ("cyclic3", 2), ("sym3", 2), ("cyclic5", 1)])
        .prop_flat_map(|(id, max)| (Just(builtin(id).unwrap()), 1..=max))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn generated_tables_are_orthonormal((g, n) in small_group(), b in any::<bool>()) {
        let pres = if b { Presentation::AForm } else { Presentation::BForm };
        let t = table_spin_wreath(n, &g, pres).unwrap();
        prop_assert!(t.check_orthonormality().is_ok());
        prop_assert!(t.check_odd_half_norm().is_ok());
        prop_assert!(t.check_partner_law().is_ok());
        prop_assert!(t.check_double_spin_vanishing().is_ok());
        prop_assert_eq!(t.rows.len(), t.columns.len());
    }
}
