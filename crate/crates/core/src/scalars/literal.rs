use std::collections::BTreeMap;

use super::{Constraint, ScalarError, UnityScalar};

/// Parses `z^3*q^-2`, `1`, `-1`, `z`, `q`, or `z^1/6` (explicit order) with
/// `z = ζ_ambient`.
pub fn parse_scalar(text: &str, ambient: u64) -> Result<UnityScalar, ScalarError> {
    let bad = || ScalarError::Malformed(text.to_string());
    let text = text.trim();
    if text.is_empty() {
        return Err(bad());
    }
    let mut acc = UnityScalar::one(ambient);
    for factor in text.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), Some(e.trim())),
            None => (factor, None),
        };
        let term = match base {
            "1" if exp.is_none() => UnityScalar::one(ambient),
            "-1" if exp.is_none() => UnityScalar::minus_one(),
            "z" => match exp {
                None => UnityScalar::root(ambient, 1),
                Some(e) => match e.split_once('/') {
                    Some((a, n)) => {
                        let a: i64 = a.trim().parse().map_err(|_| bad())?;
                        let n: u64 = n.trim().parse().map_err(|_| bad())?;
                        if n == 0 {
                            return Err(bad());
                        }
                        UnityScalar::root(n, a)
                    }
                    None => UnityScalar::root(ambient, e.parse().map_err(|_| bad())?),
                },
            },
            name if is_ident(name) => {
                let e: i64 = match exp {
                    None => 1,
                    Some(e) => e.parse().map_err(|_| bad())?,
                };
                let mut g = BTreeMap::new();
                g.insert(name.to_string(), e);
                UnityScalar::from_parts(1, 0, g)
            }
            _ => return Err(bad()),
        };
        acc = acc.mul(&term);
    }
    Ok(acc)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses `LHS != 1` or `LHS = 1`.
pub fn parse_constraint(text: &str, ambient: u64) -> Result<Constraint, ScalarError> {
    let bad = || ScalarError::Malformed(text.to_string());
    let (lhs, rhs, equal) = if let Some((l, r)) = text.split_once("!=") {
        (l, r, false)
    } else if let Some((l, r)) = text.split_once('=') {
        (l, r, true)
    } else {
        return Err(bad());
    };
    // `a != b` is read as `a·b^{-1} != 1`
    let lhs = parse_scalar(lhs, ambient)?.mul(&parse_scalar(rhs, ambient)?.inv());
    Ok(Constraint { lhs, equal })
}
