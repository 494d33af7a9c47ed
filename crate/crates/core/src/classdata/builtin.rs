use super::group::{Cayley, GroupCharacter, GroupClass, GroupData};
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;

/// Built-in groups: `trivial`, `cyclic<k>` (1 ≤ k ≤ 12), `sym3`.
pub fn builtin(id: &str) -> Result<GroupData> {
    let g = match id {
        "trivial" => cyclic(1, "trivial"),
        "sym3" | "symmetric3" => sym3(),
        _ => match id.strip_prefix("cyclic").and_then(|k| k.parse::<u32>().ok()) {
            Some(k) if (1..=12).contains(&k) => cyclic(k, &format!("cyclic{k}")),
            _ => return Err(Error::InvalidGroup(format!("unknown builtin group `{id}`"))),
        },
    };
    g.validate()?;
    Ok(g)
}

pub fn trivial() -> GroupData {
    builtin("trivial").expect("builtin")
}

fn cyclic(k: u32, name: &str) -> GroupData {
    let label = |m: u32| match m {
        0 => "1".to_string(),
        1 => "g".to_string(),
        _ => format!("g^{m}"),
    };
    let classes = (0..k)
        .map(|m| GroupClass { label: label(m), size: 1, inverse: ((k - m) % k) as usize })
        .collect();
    let characters = (0..k)
        .map(|j| GroupCharacter {
            label: if k == 1 { "triv".to_string() } else { format!("chi{j}") },
            values: (0..k).map(|m| CycloValue::root_of_unity(k, (j * m) as i64)).collect(),
        })
        .collect();
    let n = k as usize;
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    GroupData {
        name: name.to_string(),
        order: k as u64,
        classes,
        characters,
        cayley: Some(Cayley { table, class_of: (0..n).collect() }),
    }
}

fn sym3() -> GroupData {
    // elements as images of (0,1,2); (p*q)(x) = p(q(x))
    let elems: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let index = |p: [usize; 3]| elems.iter().position(|e| *e == p).expect("closed");
    let table = elems
        .iter()
        .map(|p| elems.iter().map(|q| index([p[q[0]], p[q[1]], p[q[2]]])).collect())
        .collect();
    let class_of = vec![0, 1, 1, 1, 2, 2];
    let int = CycloValue::from_int;
    GroupData {
        name: "sym3".to_string(),
        order: 6,
        classes: vec![
            GroupClass { label: "1".into(), size: 1, inverse: 0 },
            GroupClass { label: "(12)".into(), size: 3, inverse: 1 },
            GroupClass { label: "(123)".into(), size: 2, inverse: 2 },
        ],
        characters: vec![
            GroupCharacter { label: "triv".into(), values: vec![int(1), int(1), int(1)] },
            GroupCharacter { label: "sgn".into(), values: vec![int(1), int(-1), int(1)] },
            GroupCharacter { label: "std".into(), values: vec![int(2), int(0), int(-1)] },
        ],
        cayley: Some(Cayley { table, class_of }),
    }
}
