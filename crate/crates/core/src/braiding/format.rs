use std::collections::BTreeMap;

use crate::scalars::{parse_constraint, parse_scalar};

use super::{BraidingError, BraidingMatrix};

/// A parsed braiding input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingFile {
    pub matrix: BraidingMatrix,
    pub parity: Option<Vec<u8>>,
}

/// Parses the line-oriented `key = value` format:
///
/// ```text
/// torsion = 7
/// generics = q
/// theta = 2
/// constraints = q^2 != 1
/// row 1 = -1 q^-1
/// row 2 = 1 q
/// parity = 1 0
/// ```
pub fn parse_braiding(text: &str) -> Result<BraidingFile, BraidingError> {
    let mut keys: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut rows: BTreeMap<usize, (usize, String)> = BTreeMap::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .filter(|(k, _)| !k.trim().is_empty() && !k.contains('!'))
            .ok_or_else(|| BraidingError::Parse(n + 1, format!("expected `key = value`: {line}")))?;
        let key = key.trim();
        let value = value.trim().to_string();
        if let Some(idx) = key.strip_prefix("row") {
            let i: usize = idx
                .trim()
                .parse()
                .map_err(|_| BraidingError::Parse(n + 1, format!("bad row index `{idx}`")))?;
            if rows.insert(i, (n + 1, value)).is_some() {
                return Err(BraidingError::Parse(n + 1, format!("duplicate row {i}")));
            }
        } else {
            match key {
                "torsion" | "generics" | "theta" | "constraints" | "parity" => {
                    if keys.insert(key.to_string(), (n + 1, value)).is_some() {
                        return Err(BraidingError::Parse(n + 1, format!("duplicate key `{key}`")));
                    }
                }
                _ => return Err(BraidingError::Parse(n + 1, format!("unknown key `{key}`"))),
            }
        }
    }
    let get = |k: &str| keys.get(k).cloned();
    let torsion: u64 = match get("torsion") {
        Some((l, v)) => v
            .parse()
            .ok()
            .filter(|t| *t >= 1)
            .ok_or_else(|| BraidingError::Parse(l, format!("bad torsion `{v}`")))?,
        None => 1,
    };
    let generics: Vec<String> = get("generics")
        .map(|(_, v)| v.split_whitespace().map(str::to_string).collect())
        .unwrap_or_default();
    let (tl, tv) = get("theta").ok_or_else(|| BraidingError::Parse(0, "missing `theta`".into()))?;
    let theta: usize = tv
        .parse()
        .ok()
        .filter(|t| *t >= 1)
        .ok_or_else(|| BraidingError::Parse(tl, format!("bad theta `{tv}`")))?;
    let check_generics = |line: usize, s: &crate::scalars::UnityScalar| -> Result<(), BraidingError> {
        for name in s.generic_exps().keys() {
            if !generics.contains(name) {
                return Err(BraidingError::Parse(line, format!("undeclared generic `{name}`")));
            }
        }
        Ok(())
    };
    let mut entries = Vec::with_capacity(theta);
    for i in 1..=theta {
        let (line, v) = rows
            .get(&i)
            .cloned()
            .ok_or_else(|| BraidingError::Parse(0, format!("missing row {i}")))?;
        let row = v
            .split_whitespace()
            .map(|lit| parse_scalar(lit, torsion).map_err(|e| BraidingError::Parse(line, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != theta {
            return Err(BraidingError::Parse(line, format!("row {i} has {} entries, expected {theta}", row.len())));
        }
        for s in &row {
            check_generics(line, s)?;
        }
        entries.push(row);
    }
    if let Some(extra) = rows.keys().find(|k| **k == 0 || **k > theta) {
        return Err(BraidingError::Parse(rows[extra].0, format!("row {extra} out of range")));
    }
    let mut constraints = Vec::new();
    if let Some((line, v)) = get("constraints") {
        for part in v.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let c = parse_constraint(part, torsion).map_err(|e| BraidingError::Parse(line, e.to_string()))?;
            check_generics(line, &c.lhs)?;
            constraints.push(c);
        }
    }
    let parity = match get("parity") {
        None => None,
        Some((line, v)) => {
            let p = v
                .split_whitespace()
                .map(|t| match t {
                    "0" => Ok(0u8),
                    "1" => Ok(1u8),
                    _ => Err(BraidingError::Parse(line, format!("bad parity `{t}`"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if p.len() != theta {
                return Err(BraidingError::Parse(line, "parity length differs from theta".into()));
            }
            Some(p)
        }
    };
    let matrix = BraidingMatrix::new(entries)?
        .with_ambient(torsion)
        .with_generics(&generics)
        .with_constraints(constraints);
    Ok(BraidingFile { matrix, parity })
}

pub fn serialize_braiding(f: &BraidingFile) -> String {
    let b = &f.matrix;
    let l = b.ambient();
    let mut s = format!("torsion = {l}\n");
    if !b.generics().is_empty() {
        s.push_str(&format!("generics = {}\n", b.generics().join(" ")));
    }
    s.push_str(&format!("theta = {}\n", b.theta()));
    if !b.constraints().is_empty() {
        let cs: Vec<String> = b.constraints().iter().map(|c| c.to_literal(l)).collect();
        s.push_str(&format!("constraints = {}\n", cs.join(", ")));
    }
    for (i, row) in b.entries().iter().enumerate() {
        let lits: Vec<String> = row.iter().map(|q| q.to_literal(l)).collect();
        s.push_str(&format!("row {} = {}\n", i + 1, lits.join(" ")));
    }
    if let Some(p) = &f.parity {
        let ps: Vec<String> = p.iter().map(u8::to_string).collect();
        s.push_str(&format!("parity = {}\n", ps.join(" ")));
    }
    s
}
