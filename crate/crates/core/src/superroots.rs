//! Positive root sets of the contragredient Lie superalgebras of types A–D,
//! D(2,1;α), F(4) and G(3), with parity propagation along odd reflections.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::weyl::{apply_reflection, cartan_from_roots, export_roots, RootSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    D21,
    F4,
    G3,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::D21 => "D(2,1;alpha)",
            Family::F4 => "F(4)",
            Family::G3 => "G(3)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperRootError {
    #[error("rank {theta} is not valid for type {family}")]
    InvalidRank { family: Family, theta: usize },
    #[error("unknown object {0}")]
    UnknownObject(usize),
    #[error("parity vector has length {got}, expected {want}")]
    ParityLength { got: usize, want: usize },
    #[error("more than {0} objects")]
    CapExceeded(usize),
}

/// `p: Z^θ → {±1}` given on simple roots.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParityFunction(pub Vec<i8>);

impl ParityFunction {
    pub fn even(theta: usize) -> Self {
        ParityFunction(vec![1; theta])
    }

    /// From `0/1` flags (`1` = odd).
    pub fn from_bits(bits: &[u8]) -> Self {
        ParityFunction(bits.iter().map(|b| if b % 2 == 1 { -1 } else { 1 }).collect())
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.0.iter().map(|s| u8::from(*s < 0)).collect()
    }

    pub fn theta(&self) -> usize {
        self.0.len()
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.0[i] < 0
    }

    /// Homomorphic extension to `Z^θ`.
    pub fn of(&self, v: &[i64]) -> i8 {
        let odd: i64 = v
            .iter()
            .zip(&self.0)
            .filter(|(_, p)| **p < 0)
            .map(|(c, _)| *c)
            .sum();
        if odd.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ObjectId {
    Parity(ParityFunction),
    /// `X_k` of D(2,1;α) or the listed object (0) of F(4)/G(3).
    Listed(usize),
    /// The F(4) object whose roots correct the listed set: `α_1+2α_2+α_3`
    /// replaced by `α_1+2α_2+2α_3`, and `α_1+2α_2+3α_3+α_4` added.
    Corrected,
    /// Reached from the starting object by the given reflections.
    Reflected(usize, Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperRootFamily {
    pub family: Family,
    pub theta: usize,
    pub object: ObjectId,
    pub positive_roots: RootSet,
}

impl SuperRootFamily {
    pub fn export(&self) -> String {
        let roots: Vec<Vec<i64>> = self.positive_roots.iter().cloned().collect();
        export_roots(&roots)
    }
}

/// `p̂(α_k) = p(α_k)(−1)^{m_ik}` when `α_i` is odd; unchanged otherwise.
pub fn parity_reflect(p: &ParityFunction, i: usize, row: &[i64]) -> ParityFunction {
    if !p.is_odd(i) {
        return p.clone();
    }
    ParityFunction(
        p.0.iter()
            .zip(row)
            .map(|(pk, m)| if m.rem_euclid(2) == 1 { -pk } else { *pk })
            .collect(),
    )
}

/// `u_ij = α_i + … + α_j` (1-based, inclusive).
fn u(theta: usize, i: usize, j: usize) -> Vec<i64> {
    (1..=theta).map(|k| i64::from(i <= k && k <= j)).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn alpha(theta: usize, i: usize) -> Vec<i64> {
    u(theta, i, i)
}

pub fn build_classical(family: Family, theta: usize, p: &ParityFunction) -> Result<SuperRootFamily, SuperRootError> {
    let min = match family {
        Family::A => 1,
        Family::B | Family::C => 2,
        Family::D => 3,
        _ => return Err(SuperRootError::InvalidRank { family, theta }),
    };
    if theta < min {
        return Err(SuperRootError::InvalidRank { family, theta });
    }
    if p.theta() != theta {
        return Err(SuperRootError::ParityLength { got: p.theta(), want: theta });
    }
    let t = theta;
    let mut roots = RootSet::new();
    for i in 1..=t {
        for j in i..=t {
            if !(family == Family::D && (i, j) == (t - 1, t)) {
                roots.insert(u(t, i, j));
            }
        }
    }
    match family {
        Family::A => {}
        Family::B => {
            for i in 1..=t {
                for j in i + 1..=t {
                    roots.insert(add(&u(t, i, t), &u(t, j, t)));
                }
            }
        }
        Family::C => {
            for i in 1..t {
                for j in i + 1..t {
                    roots.insert(add(&u(t, i, t), &u(t, j, t - 1)));
                }
                if p.of(&u(t, i, t - 1)) == 1 {
                    roots.insert(add(&u(t, i, t - 1), &u(t, i, t)));
                }
            }
        }
        Family::D => {
            if p.is_odd(t - 2) {
                roots.insert(add(&alpha(t, t - 1), &alpha(t, t)));
            }
            for i in 1..=t - 2 {
                roots.insert(add(&u(t, i, t - 2), &alpha(t, t)));
                for j in i + 1..=t - 2 {
                    roots.insert(add(&u(t, i, t), &u(t, j, t - 2)));
                }
                if p.of(&u(t, i, t - 1)) == -1 {
                    roots.insert(add(&u(t, i, t), &u(t, i, t - 2)));
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(SuperRootFamily {
        family,
        theta,
        object: ObjectId::Parity(p.clone()),
        positive_roots: roots,
    })
}

fn from_list(rows: &[&[i64]]) -> RootSet {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn build_exceptional(family: Family, object: usize) -> Result<SuperRootFamily, SuperRootError> {
    let (theta, roots) = match (family, object) {
        (Family::D21, 0) => (
            3,
            from_list(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]),
        ),
        (Family::D21, k @ 1..=3) => {
            let mut r = from_list(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
            let mut top = vec![1, 1, 1];
            top[k - 1] += 1;
            r.insert(top);
            for j in (1..=3).filter(|&j| j != k) {
                r.insert(add(&alpha(3, k), &alpha(3, j)));
            }
            (3, r)
        }
        (Family::F4, 0) => (
            4,
            from_list(&[
                &[1, 0, 0, 0],
                &[1, 1, 0, 0],
                &[1, 1, 1, 0],
                &[1, 1, 2, 0],
                &[1, 2, 1, 0],
                &[1, 1, 1, 1],
                &[1, 1, 2, 1],
                &[1, 2, 2, 1],
                &[1, 2, 3, 2],
                &[0, 1, 1, 1],
                &[0, 1, 2, 1],
                &[0, 1, 1, 0],
                &[0, 1, 2, 0],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 1, 1],
                &[0, 0, 0, 1],
            ]),
        ),
        (Family::G3, 0) => (
            3,
            from_list(&[
                &[1, 0, 0],
                &[1, 1, 0],
                &[1, 1, 1],
                &[1, 2, 1],
                &[1, 3, 1],
                &[1, 3, 2],
                &[1, 4, 2],
                &[0, 1, 0],
                &[0, 1, 1],
                &[0, 2, 1],
                &[0, 3, 1],
                &[0, 3, 2],
                &[0, 0, 1],
            ]),
        ),
        (Family::D21 | Family::F4 | Family::G3, k) => return Err(SuperRootError::UnknownObject(k)),
        (f, _) => return Err(SuperRootError::InvalidRank { family: f, theta: 0 }),
    };
    Ok(SuperRootFamily {
        family,
        theta,
        object: ObjectId::Listed(object),
        positive_roots: roots,
    })
}

/// Cartan row `i` read off a positive root set: `m_ik = −max{n : α_k + nα_i ∈ Δ_+}`.
pub fn cartan_row_from_roots(roots: &RootSet, i: usize) -> Vec<i64> {
    let theta = roots.iter().next().map_or(0, Vec::len);
    (0..theta).map(|k| cartan_from_roots(roots, k, i)).collect()
}

/// `Δ_+^{r_i X} = s_i(Δ_+^X \ {α_i}) ∪ {α_i}`, or `None` if some image is
/// not positive.
pub fn reflect_positive(roots: &RootSet, i: usize) -> Option<RootSet> {
    let row = cartan_row_from_roots(roots, i);
    let theta = row.len();
    let mut e = vec![0i64; theta];
    e[i] = 1;
    let mut out = RootSet::new();
    out.insert(e.clone());
    for b in roots.iter().filter(|b| **b != e) {
        let img = apply_reflection(&row, i, b);
        if img.iter().any(|c| *c < 0) {
            return None;
        }
        out.insert(img);
    }
    Some(out)
}

/// The listed F(4) set, corrected so that it is closed under reflections.
pub fn f4_corrected() -> SuperRootFamily {
    let mut roots = build_exceptional(Family::F4, 0).expect("listed object").positive_roots;
    roots.remove(&vec![1, 2, 1, 0]);
    roots.insert(vec![1, 2, 2, 0]);
    roots.insert(vec![1, 2, 3, 1]);
    SuperRootFamily {
        family: Family::F4,
        theta: 4,
        object: ObjectId::Corrected,
        positive_roots: roots,
    }
}

/// All objects reachable from the starting object. Types A and B follow odd
/// reflections on parity functions, which keep the shape of the chain. In
/// types C and D an odd reflection may turn one shape into the other, so
/// these, like the exceptional types, are closed under reflections of root
/// sets. F(4) starts from [`f4_corrected`].
pub fn family_atlas(
    family: Family,
    theta: usize,
    p0: Option<&ParityFunction>,
    cap: usize,
) -> Result<Vec<SuperRootFamily>, SuperRootError> {
    let p0 = p0.cloned().unwrap_or_else(|| ParityFunction::even(theta));
    let first = match family {
        Family::A | Family::B => return parity_closure(family, theta, p0, cap),
        Family::C | Family::D => build_classical(family, theta, &p0)?,
        Family::F4 => f4_corrected(),
        _ => build_exceptional(family, 0)?,
    };
    reflection_closure(first, cap)
}

/// Closure of `{p_0}` under [`parity_reflect`] at odd vertices.
pub fn parity_closure(
    family: Family,
    theta: usize,
    p0: ParityFunction,
    cap: usize,
) -> Result<Vec<SuperRootFamily>, SuperRootError> {
    let mut seen: BTreeSet<ParityFunction> = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([p0.clone()]);
    seen.insert(p0);
    while let Some(p) = queue.pop_front() {
        let obj = build_classical(family, theta, &p)?;
        for i in (0..theta).filter(|&i| p.is_odd(i)) {
            let row = cartan_row_from_roots(&obj.positive_roots, i);
            let q = parity_reflect(&p, i, &row);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return Err(SuperRootError::CapExceeded(cap));
                }
                queue.push_back(q);
            }
        }
        out.push(obj);
    }
    Ok(out)
}

/// Closure of one object under [`reflect_positive`], deduplicated by root set.
pub fn reflection_closure(first: SuperRootFamily, cap: usize) -> Result<Vec<SuperRootFamily>, SuperRootError> {
    let mut seen: BTreeSet<RootSet> = BTreeSet::new();
    seen.insert(first.positive_roots.clone());
    let mut out = vec![first];
    let mut k = 0;
    while k < out.len() {
        let cur = out[k].clone();
        for i in 0..cur.theta {
            let Some(next) = reflect_positive(&cur.positive_roots, i) else { continue };
            if !seen.insert(next.clone()) {
                continue;
            }
            if seen.len() > cap {
                return Err(SuperRootError::CapExceeded(cap));
            }
            let path = match &cur.object {
                ObjectId::Reflected(b, p) => {
                    let mut p = p.clone();
                    p.push(i);
                    ObjectId::Reflected(*b, p)
                }
                _ => ObjectId::Reflected(0, vec![i]),
            };
            out.push(SuperRootFamily {
                family: cur.family,
                theta: cur.theta,
                object: path,
                positive_roots: next,
            });
        }
        k += 1;
    }
    Ok(out)
}

/// A permutation `π` with `{(r_{π(0)}, …, r_{π(θ-1)}) : r ∈ a} = b`, if any.
pub fn permutation_between(a: &RootSet, b: &RootSet) -> Option<Vec<usize>> {
    perm_search_from(a, b, true).pop()
}

/// Every such permutation, in lexicographic order.
pub fn permutations_between(a: &RootSet, b: &RootSet) -> Vec<Vec<usize>> {
    perm_search_from(a, b, false)
}

fn perm_search_from(a: &RootSet, b: &RootSet, first_only: bool) -> Vec<Vec<usize>> {
    let theta = a.iter().next().map_or(0, Vec::len);
    let mut out = Vec::new();
    if a.len() != b.len() || b.iter().next().map_or(0, Vec::len) != theta {
        return out;
    }
    let mut perm = Vec::with_capacity(theta);
    let mut used = vec![false; theta];
    perm_search(a, b, theta, &mut perm, &mut used, &mut out, first_only);
    out
}

/// Renumbers coordinates: `r ↦ (r_{π(0)}, …, r_{π(θ-1)})`.
pub fn permute_roots(set: &RootSet, perm: &[usize]) -> RootSet {
    set.iter().map(|r| perm.iter().map(|&k| r[k]).collect()).collect()
}

fn perm_search(
    a: &RootSet,
    b: &RootSet,
    theta: usize,
    perm: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Vec<usize>>,
    first_only: bool,
) {
    if perm.len() == theta {
        if permute_roots(a, perm) == *b {
            out.push(perm.clone());
        }
        return;
    }
    let pos = perm.len();
    // prune on the multiset of values in the coordinate being fixed
    let mut want: Vec<i64> = b.iter().map(|r| r[pos]).collect();
    want.sort_unstable();
    for k in 0..theta {
        if used[k] {
            continue;
        }
        let mut got: Vec<i64> = a.iter().map(|r| r[k]).collect();
        got.sort_unstable();
        if got != want {
            continue;
        }
        used[k] = true;
        perm.push(k);
        perm_search(a, b, theta, perm, used, out, first_only);
        perm.pop();
        used[k] = false;
        if first_only && !out.is_empty() {
            return;
        }
    }
}

/// Whether a positive root set is, after renumbering vertices, a displayed
/// set of type C or D for some parity function.
pub fn classical_shape(roots: &RootSet) -> Option<(Family, ParityFunction, Vec<usize>)> {
    let theta = roots.iter().next().map_or(0, Vec::len);
    for family in [Family::C, Family::D] {
        for bits in 0..(1u64 << theta) {
            let b: Vec<u8> = (0..theta).map(|i| ((bits >> i) & 1) as u8).collect();
            let p = ParityFunction::from_bits(&b);
            let Ok(obj) = build_classical(family, theta, &p) else { continue };
            if let Some(perm) = permutation_between(roots, &obj.positive_roots) {
                return Some((family, p, perm));
            }
        }
    }
    None
}
