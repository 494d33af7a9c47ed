//! End-to-end acceptance run: one line per criterion, nonzero exit on any failure.

mod common;

use std::cell::OnceCell;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use spinchar::classdata::{builtin, is_split, split_classes, trivial, GroupData, Sign, SplitClassLabel, SplitFamily};
use spinchar::exactnum::{rat, CycloValue};
use spinchar::oracle::{build_cover, verify_table, Cover};
use spinchar::partitions::{enumerate_partitions, ClassLabel, Partition, PartitionKind, Pvf};
use spinchar::qfunctions::{bilinear, char_value, q_general, Algebra};
use spinchar::spintable::{
    hyperoctahedral_odd_closed_form, symmetric_odd_value, table_spin_hyperoctahedral, table_spin_symmetric,
    table_spin_wreath, wreath_odd_closed_form, CharacterTable, Presentation, RowKind,
};

type Outcome = Result<String, String>;

const PRESENTATIONS: [Presentation; 2] = [Presentation::AForm, Presentation::BForm];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn g(id: &str) -> GroupData {
    builtin(id).expect("builtin group")
}

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).expect("partition")
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// Every table the crate generates at default bounds.
fn all_tables() -> Result<Vec<CharacterTable>, String> {
    let e = |x: spinchar::Error| x.to_string();
    let mut out = Vec::new();
    for n in 1..=9 {
        out.push(table_spin_symmetric(n).map_err(e)?);
    }
    for pres in PRESENTATIONS {
        for n in 1..=8 {
            out.push(table_spin_hyperoctahedral(n, pres).map_err(e)?);
        }
        for (id, max) in [("cyclic2", 5), ("cyclic3", 5), ("sym3", 5), ("cyclic4", 3), ("cyclic5", 3)] {
            for n in 1..=max {
                out.push(table_spin_wreath(n, &g(id), pres).map_err(e)?);
            }
        }
    }
    Ok(out)
}

fn counting_identity() -> Outcome {
    let mut cases = 0;
    for (id, max) in [("trivial", 5), ("cyclic2", 3), ("cyclic3", 2), ("sym3", 2)] {
        let grp = g(id);
        for n in 1..=max {
            let splits = split_classes(n, &grp).len();
            let rows = table_spin_wreath(n, &grp, Presentation::AForm).map_err(|e| e.to_string())?.rows.len();
            ensure(splits == rows, || format!("{id} n = {n}: {splits} split classes, {rows} rows"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, group) cases"))
}

fn split_referee() -> Outcome {
    for (id, max) in [("trivial", 3), ("cyclic2", 2)] {
        let grp = g(id);
        for n in 1..=max {
            for pres in PRESENTATIONS {
                let cover = build_cover(n, &grp, pres).map_err(|e| e.to_string())?;
                let predicted: BTreeSet<ClassLabel> = split_classes(n as u32, &grp).into_iter().map(|(c, _)| c).collect();
                ensure(cover.empirical_splits() == predicted, || format!("{id} n = {n} {pres}: split sets differ"))?;
            }
        }
    }
    let cover = build_cover(3, &trivial(), Presentation::AForm).map_err(|e| e.to_string())?;
    let one = |v: &[u32]| Pvf::single(0, p(v));
    let want: BTreeSet<ClassLabel> = [
        ClassLabel::new(one(&[3]), Pvf::empty()),
        ClassLabel::new(one(&[1, 1, 1]), Pvf::empty()),
        ClassLabel::new(Pvf::empty(), one(&[3])),
    ]
    .into();
    ensure(cover.empirical_splits() == want, || "rank three split set".into())?;
    let fused = ClassLabel::new(Pvf::empty(), one(&[2, 1]));
    ensure(cover.realized_types().contains(&fused) && is_split(&fused).is_none(), || "(∅,(2,1)) should fuse".into())?;
    Ok("split sets equal the predicate; (∅,(2,1)) fuses".into())
}

fn orthonormality(tables: &[CharacterTable]) -> Outcome {
    let half = CycloValue::from_rational(&rat(1, 2));
    for t in tables {
        let tag = || format!("{} n = {} {}", t.family, t.n, t.group.name);
        t.check_orthonormality().map_err(|e| format!("{}: {e}", tag()))?;
        for row in t.rows.iter().filter(|r| r.kind != RowKind::DoubleSpin) {
            let mut even = CycloValue::zero();
            let mut odd = CycloValue::zero();
            for (v, c) in row.values.iter().zip(&t.columns) {
                let term = v.norm_sq().scale(&c.weight);
                match c.class.family {
                    SplitFamily::EvenSplit => even = &even + &term,
                    SplitFamily::OddSplit => odd = &odd + &term,
                }
            }
            ensure(even == half && odd == half, || format!("{}: associate norm splits as {even} + {odd}", tag()))?;
        }
    }
    Ok(format!("{} tables", tables.len()))
}

fn degree_identity(tables: &[CharacterTable]) -> Outcome {
    for t in tables {
        let sum: BigInt = t.rows.iter().map(|r| &r.degree * &r.degree).sum();
        let want = match t.family {
            spinchar::spintable::Family::SpinSymmetric => factorial(t.n),
            _ => BigInt::from(2).pow(t.n) * factorial(t.n) * BigInt::from(t.group.order).pow(t.n),
        };
        ensure(sum == want, || format!("{} n = {} {}: Σ deg² = {sum}, want {want}", t.family, t.n, t.group.name))?;
        ensure(t.rows.iter().all(|r| r.degree > BigInt::zero()), || "non-positive degree".into())?;
    }
    Ok(format!("{} tables", tables.len()))
}

fn q_engine() -> Outcome {
    let mut count = 0;
    for n in 0..=8 {
        let strict = enumerate_partitions(n, PartitionKind::Strict);
        for nu in &strict {
            let q = q_general(nu).map_err(|e| e.to_string())?;
            let poly: common::Poly = q.terms().map(|(l, c)| (l.parts().to_vec(), c.clone())).collect();
            ensure(poly == common::q_raising(nu.parts()), || format!("Q_{nu} differs from the raising-operator expansion"))?;
            for mu in &strict {
                let want = if nu == mu { BigRational::from_integer(BigInt::from(2).pow(nu.len() as u32)) } else { BigRational::zero() };
                let got = bilinear(&q, &q_general(mu).map_err(|e| e.to_string())?);
                ensure(got == want, || format!("<Q_{nu}, Q_{mu}> = {got}"))?;
            }
            for lambda in enumerate_partitions(n, PartitionKind::Odd) {
                let v = char_value(nu, &lambda, Algebra::A).map_err(|e| e.to_string())?;
                ensure(v.is_integer(), || format!("ζ^{lambda}_{nu} = {v}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} strict ν"))
}

fn exceptional_values() -> Outcome {
    let sqrt = |q: i64| CycloValue::sqrt_rational(&rat(q, 1)).expect("positive");
    let i = CycloValue::i();
    let e = |x: spinchar::Error| x.to_string();
    let cases = [
        (hyperoctahedral_odd_closed_form(&p(&[2]), &p(&[2])).map_err(e)?, &i * &sqrt(2), "ξ(2) at (2)"),
        (hyperoctahedral_odd_closed_form(&p(&[3]), &p(&[3])).map_err(e)?, &i * &sqrt(3), "ξ(3) at (3)"),
        (hyperoctahedral_odd_closed_form(&p(&[5]), &p(&[5])).map_err(e)?, -sqrt(5), "ξ(5) at (5)"),
        (symmetric_odd_value(&p(&[2, 1]), &p(&[2, 1])).map_err(e)?, i.clone(), "ζ(2,1) at (2,1)"),
    ];
    for (got, want, what) in cases {
        ensure(got == want, || format!("{what} = {got}"))?;
    }
    let c2 = g("cyclic2");
    for gamma in 0..2 {
        for c in 0..2 {
            let got = wreath_odd_closed_form(&Pvf::single(gamma, p(&[1])), &Pvf::single(c, p(&[1])), &c2).map_err(e)?;
            ensure(&got == c2.value(gamma, c) || got == -c2.value(gamma, c), || format!("cyclic2 rank one: {got}"))?;
        }
    }
    Ok("i√2, i√3, −√5, i, ±γ(c)".into())
}

fn half_norm() -> Outcome {
    let mut pairs = 0;
    for pres in PRESENTATIONS {
        for n in 1..=6 {
            let t = table_spin_hyperoctahedral(n, pres).map_err(|e| e.to_string())?;
            t.check_odd_half_norm().map_err(|e| format!("n = {n} {pres}: {e}"))?;
            pairs += t.rows.iter().filter(|r| r.kind == RowKind::AssociatePlus).count();
        }
    }
    Ok(format!("{pairs} associate pairs"))
}

/// Extends each row to a function on the cover's classes, then checks the z-sign law,
/// conjugation invariance, and Σ_x χ(x) conj χ'(x) = |cover| δ.
fn elementwise(table: &CharacterTable, cover: &Cover) -> Result<(), String> {
    let e = |x: spinchar::Error| x.to_string();
    let mut class_values = vec![vec![CycloValue::zero(); cover.classes.len()]; table.rows.len()];
    for (k, class) in cover.classes.iter().enumerate() {
        let Some(family) = is_split(&class.label) else { continue };
        let plus = cover.class_of_element(&cover.canonical_representative(&class.label).map_err(e)?).map_err(e)?;
        let sign = if k == plus { Sign::Plus } else { Sign::Minus };
        let col = SplitClassLabel { base: class.label.clone(), family, sign };
        for (i, row) in class_values.iter_mut().enumerate() {
            row[k] = table.value(i, &col);
        }
    }
    let gens = cover.generators();
    for (x, &k) in cover.elements.iter().zip(&cover.class_of) {
        let zk = cover.class_of_element(&x.times_z()).map_err(e)?;
        for row in &class_values {
            ensure(row[zk] == -&row[k], || "χ(zx) ≠ −χ(x)".into())?;
        }
        for gen in &gens {
            let conj = cover.multiply(&cover.multiply(gen, x).map_err(e)?, &cover.inverse(gen).map_err(e)?).map_err(e)?;
            ensure(cover.class_of_element(&conj).map_err(e)? == k, || "class_of is not conjugation invariant".into())?;
        }
    }
    let order = CycloValue::from_int(cover.order() as i64);
    for (i, a) in class_values.iter().enumerate() {
        for (j, b) in class_values.iter().enumerate() {
            let sum: CycloValue = cover
                .classes
                .iter()
                .enumerate()
                .map(|(k, c)| (&a[k] * &b[k].conj()).scale(&BigRational::from_integer(c.size.into())))
                .sum();
            let want = if i == j { order.clone() } else { CycloValue::zero() };
            ensure(sum == want, || format!("rows {i}, {j}: Σ χ conj χ' = {sum}"))?;
        }
    }
    let report = verify_table(table, cover).map_err(e)?;
    ensure(report.passed(), || format!("oracle report: {:?}", report.failures().collect::<Vec<_>>()))
}

fn oracle_elementwise() -> Outcome {
    let e = |x: spinchar::Error| x.to_string();
    for pres in PRESENTATIONS {
        let cover = build_cover(2, &trivial(), pres).map_err(e)?;
        let t = table_spin_hyperoctahedral(2, pres).map_err(e)?;
        elementwise(&t, &cover).map_err(|m| format!("trivial n = 2 {pres}: {m}"))?;
        let c2 = g("cyclic2");
        let cover = build_cover(1, &c2, pres).map_err(e)?;
        let t = table_spin_wreath(1, &c2, pres).map_err(e)?;
        elementwise(&t, &cover).map_err(|m| format!("cyclic2 n = 1 {pres}: {m}"))?;
    }
    Ok("class functions, χ(zx) = −χ(x), element orthogonality".into())
}

fn reduction() -> Outcome {
    let e = |x: spinchar::Error| x.to_string();
    for pres in PRESENTATIONS {
        for n in 1..=6 {
            let w = table_spin_wreath(n, &trivial(), pres).map_err(e)?;
            let h = table_spin_hyperoctahedral(n, pres).map_err(e)?;
            ensure(w.columns == h.columns && w.rows == h.rows, || format!("n = {n} {pres}: tables differ"))?;
        }
    }
    let t = trivial();
    for n in 1..=6 {
        for nu in enumerate_partitions(n, PartitionKind::Strict).into_iter().filter(|nu| nu.len() % 2 == 1) {
            for mu in enumerate_partitions(n, PartitionKind::Strict) {
                let a = hyperoctahedral_odd_closed_form(&nu, &mu).map_err(e)?;
                let b = wreath_odd_closed_form(&Pvf::single(0, nu.clone()), &Pvf::single(0, mu.clone()), &t).map_err(e)?;
                ensure(a == b, || format!("closed forms differ at ν = {nu}, μ = {mu}"))?;
            }
        }
    }
    Ok("n ≤ 6, both presentations; closed forms agree".into())
}

fn main() {
    // generated on first use, so criterion 3 is charged with building them
    let tables: OnceCell<Result<Vec<CharacterTable>, String>> = OnceCell::new();
    let with_tables = |f: fn(&[CharacterTable]) -> Outcome| -> Outcome {
        match tables.get_or_init(all_tables) {
            Ok(t) => f(t),
            Err(e) => Err(format!("table generation failed: {e}")),
        }
    };
    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("counting identity", 1, Box::new(counting_identity)),
        ("oracle split referee", 10, Box::new(split_referee)),
        ("orthonormality", 30, Box::new(|| with_tables(orthonormality))),
        ("degree identity", 5, Box::new(|| with_tables(degree_identity))),
        ("Q-function engine", 10, Box::new(q_engine)),
        ("exceptional values", 1, Box::new(exceptional_values)),
        ("norm-1/2 law", 5, Box::new(half_norm)),
        ("elementwise oracle", 10, Box::new(oracle_elementwise)),
        ("reduction", 5, Box::new(reduction)),
    ];
    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let outcome = run();
        let dt = t0.elapsed();
        let timing = format!("{:.2}s / {budget}s", dt.as_secs_f64());
        let over = if dt > Duration::from_secs(*budget) { " (over budget)" } else { "" };
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS [{timing}{over}] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL [{timing}{over}] {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
