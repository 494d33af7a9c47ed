//! Text syntax: a sum of terms `q*z(N)^k`, e.g. `1/2*z(3)^1 - 1/2*z(3)^2`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CycloValue;
use crate::error::{Error, Result};

pub(crate) fn render(v: &CycloValue) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let n = v.conductor();
    let mut out = String::new();
    for (idx, (k, q)) in v.terms().into_iter().enumerate() {
        let neg = q.is_negative();
        let mag = q.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if k == 0 {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*z({n})^{k}"));
        }
    }
    out
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
    let (a, b) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let a: num_bigint::BigInt = a.parse().map_err(|_| err("bad numerator"))?;
    let b: num_bigint::BigInt = b.parse().map_err(|_| err("bad denominator"))?;
    if b.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(a, b))
}

pub fn parse(text: &str) -> Result<CycloValue> {
    let err = |reason: &str| Error::Parse { text: text.to_string(), reason: reason.to_string() };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty value"));
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for c in compact.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let splits = (c == '+' || c == '-') && depth == 0 && prev.is_some() && prev != Some('^');
        if splits {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
        prev = Some(c);
    }
    terms.push(cur);

    let mut total = CycloValue::zero();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, term.strip_prefix('+').unwrap_or(&term)),
        };
        if body.is_empty() {
            return Err(err("dangling sign"));
        }
        let (coef, root) = match body.find("z(") {
            Some(pos) => {
                let coef = body[..pos].trim_end_matches('*');
                (coef, Some(&body[pos..]))
            }
            None => (body, None),
        };
        let mut q = if coef.is_empty() { BigRational::one() } else { parse_rational(coef)? };
        if sign < 0 {
            q = -q;
        }
        let value = match root {
            None => CycloValue::from_rational(&q),
            Some(r) => {
                let close = r.find(')').ok_or_else(|| err("unclosed z("))?;
                let n: u32 = r[2..close].parse().map_err(|_| err("bad conductor"))?;
                if n == 0 {
                    return Err(err("conductor must be positive"));
                }
                let tail = &r[close + 1..];
                let k: i64 = if tail.is_empty() {
                    1
                } else {
                    let e = tail.strip_prefix('^').ok_or_else(|| err("expected ^ after z(N)"))?;
                    e.parse().map_err(|_| err("bad exponent"))?
                };
                CycloValue::root_of_unity(n, k).scale(&q)
            }
        };
        total = &total + &value;
    }
    Ok(total)
}

impl std::str::FromStr for CycloValue {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}
