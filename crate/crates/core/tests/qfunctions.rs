mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use spinchar::classdata::{Sign, SplitClassLabel, SplitFamily};
use spinchar::exactnum::{rat, CycloValue};
use spinchar::partitions::{enumerate_partitions, ClassLabel, Partition, PartitionKind, Pvf};
use spinchar::qfunctions::{bilinear, char_value, pfaffian, q_general, Algebra, PowerSumVector};
use spinchar::spintable::{table_spin_hyperoctahedral, Presentation, RowKind};

fn to_poly(v: &PowerSumVector) -> common::Poly {
    v.terms().map(|(l, c)| (l.parts().to_vec(), c.clone())).collect()
}

fn strict_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(|n| enumerate_partitions(n, PartitionKind::Strict)).collect()
}

#[test]
fn pfaffian_route_matches_raising_operators() {
    for nu in strict_up_to(8) {
        let q = q_general(&nu).unwrap();
        assert_eq!(q.degree(), nu.weight());
        assert_eq!(to_poly(&q), common::q_raising(nu.parts()), "Q_{nu}");
    }
}

#[test]
fn frozen_q_functions() {
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(q_general(&p(&[2, 1])).unwrap().to_string(), "4/3*p[1,1,1] - 4/3*p[3]");
    assert_eq!(q_general(&p(&[])).unwrap(), PowerSumVector::one());
    assert_eq!(q_general(&p(&[2])).unwrap().to_string(), "2*p[1,1]");
    assert!(q_general(&p(&[2, 2])).is_err());
}

#[test]
fn q_functions_are_orthogonal() {
    let all = strict_up_to(8);
    for nu in &all {
        let qn = q_general(nu).unwrap();
        for mu in all.iter().filter(|m| m.weight() == nu.weight()) {
            let qm = q_general(mu).unwrap();
            let want = if nu == mu { BigRational::from_integer(BigInt::from(2).pow(nu.len() as u32)) } else { BigRational::zero() };
            assert_eq!(bilinear(&qn, &qm), want, "<Q_{nu}, Q_{mu}>");
            assert_eq!(common::poly_bilinear(&to_poly(&qn), &to_poly(&qm)), want);
        }
    }
}

#[test]
fn symmetric_values_are_integers() {
    for n in 0..=8 {
        for nu in enumerate_partitions(n, PartitionKind::Strict) {
            for lambda in enumerate_partitions(n, PartitionKind::Odd) {
                assert!(char_value(&nu, &lambda, Algebra::A).unwrap().is_integer());
            }
        }
    }
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    assert_eq!(char_value(&p(&[2, 1]), &p(&[3]), Algebra::A).unwrap(), rat(-1, 1));
    assert_eq!(char_value(&p(&[2, 1]), &p(&[1, 1, 1]), Algebra::A).unwrap(), rat(1, 1));
    assert_eq!(char_value(&p(&[3]), &p(&[1, 1, 1]), Algebra::A).unwrap(), rat(2, 1));
}

#[test]
fn mismatched_inputs_are_rejected() {
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    assert!(char_value(&p(&[3]), &p(&[1, 1]), Algebra::A).is_err());
    assert!(char_value(&p(&[3]), &p(&[2, 1]), Algebra::B).is_err());
    assert!(PowerSumVector::p(1).checked_add(&PowerSumVector::p(3)).is_err());
    assert!(PowerSumVector::p(1).checked_add(&PowerSumVector::zero(3)).is_ok());
}

#[test]
fn pfaffian_rejects_bad_matrices() {
    let r = |a: i64| BigRational::from_integer(a.into());
    assert!(pfaffian(&[vec![r(0), r(1), r(2)], vec![r(-1), r(0), r(3)], vec![r(-2), r(-3), r(0)]]).is_err());
    assert!(pfaffian(&[vec![r(0), r(1)], vec![r(1), r(0)]]).is_err());
    assert!(pfaffian(&[vec![r(1), r(1)], vec![r(-1), r(0)]]).is_err());
    assert_eq!(pfaffian::<BigRational>(&[]).unwrap(), BigRational::one());
    assert_eq!(pfaffian(&[vec![r(0), r(5)], vec![r(-5), r(0)]]).unwrap(), r(5));
}

/// Even-class values of the hyperoctahedral table against the symmetric-group
/// values read off the same Q-function: the ratio is 2^{(l(α) + p(ν) − ε(ν))/2},
/// with p(ν) = (|ν| − l(ν)) mod 2 and ε(ν) = l(ν) mod 2.
#[test]
fn hyperoctahedral_even_values_scale_symmetric_ones() {
    for n in 1..=6 {
        let table = table_spin_hyperoctahedral(n, Presentation::AForm).unwrap();
        for (i, row) in table.rows.iter().enumerate() {
            if row.kind == RowKind::AssociateMinus {
                continue;
            }
            let nu = row.index.get(0).cloned().unwrap_or_default();
            for alpha in enumerate_partitions(n, PartitionKind::Odd) {
                let class = SplitClassLabel {
                    base: ClassLabel::new(Pvf::single(0, alpha.clone()), Pvf::empty()),
                    family: SplitFamily::EvenSplit,
                    sign: Sign::Plus,
                };
                let zeta = char_value(&nu, &alpha, Algebra::A).unwrap();
                let e = alpha.len() + nu.parity() as usize - nu.len() % 2;
                assert_eq!(e % 2, 0);
                let want = CycloValue::from_rational(&(zeta * BigRational::from_integer(BigInt::from(2).pow((e / 2) as u32))));
                assert_eq!(table.value(i, &class), want, "ν = {nu}, α = {alpha}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn pfaffian_squares_to_determinant(k in 1usize..4, seed in prop::collection::vec(-5i64..6, 21)) {
        let dim = 2 * k;
        let mut m = vec![vec![BigRational::zero(); dim]; dim];
        let mut it = seed.into_iter().cycle();
        for i in 0..dim {
            for j in i + 1..dim {
                let v = BigRational::new(BigInt::from(it.next().unwrap()), BigInt::from(1 + (i + j) as i64 % 3));
                m[j][i] = -v.clone();
                m[i][j] = v;
            }
        }
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, common::det(m));
    }

    #[test]
    fn product_is_bilinear(a in 0u32..3, b in 0u32..3, c in 0u32..3) {
        let (a, b, c) = (2 * a + 1, 2 * b + 1, 2 * c + 1);
        let x = PowerSumVector::p(a).mul(&PowerSumVector::p(b));
        let y = PowerSumVector::p(a).mul(&PowerSumVector::p(c));
        let lhs = bilinear(&x, &y);
        let rhs = common::poly_bilinear(&to_poly(&x), &to_poly(&y));
        prop_assert_eq!(lhs, rhs);
    }
}
