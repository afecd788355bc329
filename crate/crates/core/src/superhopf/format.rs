use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalars::CycNumber;

use super::linalg::nonzero;
use super::zoo::Builder;
use super::{SuperHopfError, SuperHopfPresentation, Vector};

/// Parses `c0 ± c1*z^k ± …` with rational `c` and `z = ζ_order`, e.g.
/// `-1`, `1/2*z^3`, `1+z-z^2`.
pub fn parse_coefficient(text: &str, order: u64) -> Option<CycNumber> {
    let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return None;
    }
    // split into signed terms, keeping '-' that follows '^'
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = text.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        if (b == b'+' || b == b'-') && i > 0 && bytes[i - 1] != b'^' && bytes[i - 1] != b'*' {
            terms.push(&text[start..i]);
            start = i;
        }
    }
    terms.push(&text[start..]);
    let mut acc = CycNumber::zero(order);
    for term in terms {
        let (neg, body) = match term.as_bytes().first()? {
            b'-' => (true, &term[1..]),
            b'+' => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return None;
        }
        let (coeff, power) = match body.split_once('*') {
            Some((c, z)) => (Some(c), Some(z)),
            None if body.starts_with('z') => (None, Some(body)),
            None => (Some(body), None),
        };
        let mut r = match coeff {
            Some(c) => parse_rational(c)?,
            None => BigRational::one(),
        };
        if neg {
            r = -r;
        }
        let k: i64 = match power {
            None => 0,
            Some("z") => 1,
            Some(z) => z.strip_prefix("z^")?.parse().ok()?,
        };
        acc.add_assign(&CycNumber::root(order, k).scale(&r));
    }
    Some(acc)
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses the sparse line format:
///
/// ```text
/// order 2
/// dim 2
/// basis 1 x
/// parity 0 1
/// unit 1 : 1
/// counit 1 : 1
/// mult 1 x -> x : 1
/// comult x -> x 1 : 1
/// antipode x -> x : -1
/// grouplike 1 : 1
/// ```
///
/// Lines starting with `#` are comments (labels may contain `#`).
/// `mult`, `comult`, `antipode` and `unit`/`counit` lines accumulate; each
/// `grouplike` line adds one vector written as `label : coeff, label : coeff`.
pub fn parse_presentation(text: &str) -> Result<SuperHopfPresentation, SuperHopfError> {
    let mut order: Option<u64> = None;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut parity: Option<Vec<u8>> = None;
    let mut body: Vec<(usize, String, String)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: &str| SuperHopfError::Parse(n + 1, m.to_string());
        let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(|| err("missing value"))?;
        let rest = rest.trim();
        match key {
            "order" => order = Some(rest.parse().ok().filter(|&o| o > 0).ok_or_else(|| err("bad order"))?),
            "dim" => dim = Some(rest.parse().map_err(|_| err("bad dimension"))?),
            "basis" => labels = Some(rest.split_whitespace().map(String::from).collect()),
            "parity" => {
                parity = Some(
                    rest.split_whitespace()
                        .map(|p| match p {
                            "0" => Ok(0),
                            "1" => Ok(1),
                            _ => Err(err("parity must be 0 or 1")),
                        })
                        .collect::<Result<_, _>>()?,
                )
            }
            "unit" | "counit" | "mult" | "comult" | "antipode" | "grouplike" => {
                body.push((n + 1, key.to_string(), rest.to_string()))
            }
            _ => return Err(err(&format!("unknown key `{key}`"))),
        }
    }
    let order = order.unwrap_or(2);
    let dim = dim.ok_or(SuperHopfError::Parse(0, "missing `dim`".into()))?;
    let labels = labels.unwrap_or_else(|| (1..=dim).map(|i| format!("e{i}")).collect());
    if labels.len() != dim {
        return Err(SuperHopfError::Parse(0, "basis length differs from dim".into()));
    }
    let mut seen = labels.clone();
    seen.sort();
    seen.dedup();
    if seen.len() != dim {
        return Err(SuperHopfError::Parse(0, "duplicate basis label".into()));
    }
    let parity = parity.unwrap_or_else(|| vec![0; dim]);
    if parity.len() != dim {
        return Err(SuperHopfError::Parse(0, "parity length differs from dim".into()));
    }
    let mut b = Builder::new(order, labels, parity);
    for (n, key, rest) in body {
        let err = |m: &str| SuperHopfError::Parse(n, m.to_string());
        let at = |l: &str| b.h.index(l).ok_or_else(|| err(&format!("unknown basis label `{l}`")));
        if key == "grouplike" {
            let mut v = b.h.zero();
            for part in rest.split(',') {
                let (l, c) = part.split_once(':').ok_or_else(|| err("expected `label : coeff`"))?;
                let c = parse_coefficient(c, order).ok_or_else(|| err("bad coefficient"))?;
                v[at(l.trim())?].add_assign(&c);
            }
            b.h.group_likes.push(v);
            continue;
        }
        let (lhs, c) = rest.rsplit_once(':').ok_or_else(|| err("expected `… : coeff`"))?;
        let c = parse_coefficient(c, order).ok_or_else(|| err("bad coefficient"))?;
        let (src, dst) = match lhs.split_once("->") {
            Some((s, d)) => (s.split_whitespace().collect::<Vec<_>>(), d.split_whitespace().collect::<Vec<_>>()),
            None => (lhs.split_whitespace().collect(), Vec::new()),
        };
        match (key.as_str(), src.as_slice(), dst.as_slice()) {
            ("unit", [k], []) => {
                let k = at(k)?;
                b.h.unit[k].add_assign(&c);
            }
            ("counit", [k], []) => {
                let k = at(k)?;
                b.h.counit[k].add_assign(&c);
            }
            ("mult", [i, j], [k]) => {
                let (i, j, k) = (at(i)?, at(j)?, at(k)?);
                b.h.mult[i][j][k].add_assign(&c);
            }
            ("comult", [i], [j, k]) => {
                let (i, j, k) = (at(i)?, at(j)?, at(k)?);
                b.h.comult[i][j][k].add_assign(&c);
            }
            ("antipode", [i], [j]) => {
                let (i, j) = (at(i)?, at(j)?);
                b.h.antipode[i][j].add_assign(&c);
            }
            _ => return Err(err(&format!("malformed `{key}` line"))),
        }
    }
    Ok(b.h)
}

fn vector_entries(h: &SuperHopfPresentation, v: &Vector) -> String {
    let parts: Vec<String> = nonzero(v).map(|(i, c)| format!("{} : {c}", h.labels[i])).collect();
    parts.join(", ")
}

/// Inverse of [`parse_presentation`]; only nonzero entries are written.
pub fn serialize_presentation(h: &SuperHopfPresentation) -> String {
    let n = h.dim();
    let mut out = format!("order {}\ndim {n}\nbasis {}\n", h.order, h.labels.join(" "));
    let p: Vec<String> = h.parity.iter().map(u8::to_string).collect();
    out.push_str(&format!("parity {}\n", p.join(" ")));
    let l = &h.labels;
    for (k, c) in nonzero(&h.unit) {
        out.push_str(&format!("unit {} : {c}\n", l[k]));
    }
    for (k, c) in nonzero(&h.counit) {
        out.push_str(&format!("counit {} : {c}\n", l[k]));
    }
    for i in 0..n {
        for j in 0..n {
            for (k, c) in nonzero(&h.mult[i][j]) {
                out.push_str(&format!("mult {} {} -> {} : {c}\n", l[i], l[j], l[k]));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for (k, c) in nonzero(&h.comult[i][j]) {
                out.push_str(&format!("comult {} -> {} {} : {c}\n", l[i], l[j], l[k]));
            }
        }
    }
    for i in 0..n {
        for (j, c) in nonzero(&h.antipode[i]) {
            out.push_str(&format!("antipode {} -> {} : {c}\n", l[i], l[j]));
        }
    }
    for g in &h.group_likes {
        out.push_str(&format!("grouplike {}\n", vector_entries(h, g)));
    }
    out
}
