use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::scalars::CycNumber;

use super::Vector;

pub(crate) fn zeros(order: u64, n: usize) -> Vector {
    vec![CycNumber::zero(order); n]
}

pub(crate) fn unit_vector(order: u64, n: usize, i: usize) -> Vector {
    let mut v = zeros(order, n);
    v[i] = CycNumber::one(order);
    v
}

pub(crate) fn nonzero(v: &[CycNumber]) -> impl Iterator<Item = (usize, &CycNumber)> {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero())
}

/// `v += c·w`.
pub(crate) fn axpy(v: &mut [CycNumber], c: &CycNumber, w: &[CycNumber]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in v.iter_mut().zip(w) {
        if !y.is_zero() {
            x.add_assign(&c.mul(y));
        }
    }
}

pub(crate) fn signed(c: &CycNumber, odd: bool) -> CycNumber {
    if odd {
        c.neg()
    } else {
        c.clone()
    }
}

pub(crate) fn add_at<K: Ord>(m: &mut BTreeMap<K, CycNumber>, k: K, c: &CycNumber) {
    if c.is_zero() {
        return;
    }
    match m.entry(k) {
        Entry::Occupied(mut e) => {
            e.get_mut().add_assign(c);
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

pub(crate) fn same(a: &[CycNumber], b: &[CycNumber]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.sub(y).is_zero())
}

pub(crate) fn same_map<K: Ord>(a: &BTreeMap<K, CycNumber>, b: &BTreeMap<K, CycNumber>) -> bool {
    let mut d: BTreeMap<&K, CycNumber> = BTreeMap::new();
    for (k, c) in a {
        add_at(&mut d, k, c);
    }
    for (k, c) in b {
        add_at(&mut d, k, &c.neg());
    }
    d.is_empty()
}

/// Reduced row echelon form, built one vector at a time.
#[derive(Clone, Debug)]
pub(crate) struct Rref {
    /// pivot column -> row with a 1 there and zeros in the other pivot columns
    pub rows: BTreeMap<usize, Vector>,
}

impl Rref {
    pub fn new() -> Self {
        Rref { rows: BTreeMap::new() }
    }

    pub fn reduce(&self, v: &[CycNumber]) -> Vector {
        let mut v = v.to_vec();
        for (&p, row) in &self.rows {
            if !v[p].is_zero() {
                let c = v[p].neg();
                axpy(&mut v, &c, row);
            }
        }
        v
    }

    /// Adds `v`, returning whether it was independent.
    pub fn insert(&mut self, v: &[CycNumber]) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = x.mul(&inv);
        }
        for row in self.rows.values_mut() {
            if !row[p].is_zero() {
                let c = row[p].neg();
                axpy(row, &c, &v);
            }
        }
        self.rows.insert(p, v);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Solves `A x = b` for a unique `x`; `None` if the system is inconsistent or
/// underdetermined.
pub(crate) fn solve_unique(a: &[Vector], b: &[CycNumber], order: u64) -> Option<Vector> {
    let cols = a.first().map_or(0, Vec::len);
    let mut e = Rref::new();
    for (row, rhs) in a.iter().zip(b) {
        let mut aug = row.clone();
        aug.push(rhs.clone());
        e.insert(&aug);
    }
    if e.rows.contains_key(&cols) || e.rank() != cols {
        return None;
    }
    let mut x = zeros(order, cols);
    for (&p, row) in &e.rows {
        x[p] = row[cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix given by columns.
pub(crate) fn invert(cols: &[Vector], order: u64) -> Option<Vec<Vector>> {
    let n = cols.len();
    let mut e = Rref::new();
    // rows of [M | I] where M has the given columns
    for r in 0..n {
        let mut row: Vector = cols.iter().map(|c| c[r].clone()).collect();
        row.extend(unit_vector(order, n, r));
        e.insert(&row);
    }
    if (0..n).any(|p| !e.rows.contains_key(&p)) {
        return None;
    }
    // inverse[i][j] in row i, column n + j; return by columns
    Some(
        (0..n)
            .map(|j| (0..n).map(|i| e.rows[&i][n + j].clone()).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> CycNumber {
        CycNumber::from_integer(3, n)
    }

    #[test]
    fn solve_and_invert() {
        let a = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let x = solve_unique(&a, &[q(3), q(2)], 3).unwrap();
        assert!(same(&x, &[q(1), q(1)]));
        let cols = vec![vec![q(2), q(1)], vec![q(1), q(1)]];
        let inv = invert(&cols, 3).unwrap();
        assert!(same(&inv[0], &[q(1), q(-1)]));
        assert!(same(&inv[1], &[q(-1), q(2)]));
        assert!(invert(&[vec![q(1), q(1)], vec![q(2), q(2)]], 3).is_none());
    }

    #[test]
    fn rref_reduces_to_normal_form() {
        let mut e = Rref::new();
        assert!(e.insert(&[q(0), q(2), q(4)]));
        assert!(!e.insert(&[q(0), q(1), q(2)]));
        let r = e.reduce(&[q(5), q(1), q(0)]);
        assert!(same(&r, &[q(5), q(0), q(-2)]));
    }
}
