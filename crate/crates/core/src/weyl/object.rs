use crate::braiding::BraidingMatrix;
use crate::scalars::{q_number, UnityScalar};

use super::WeylError;

/// An ordered basis `F = (f_1, …, f_θ)` of `Z^θ` together with the matrix
/// `q^F_ij = χ(f_i, f_j)` of the seed bicharacter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidObject {
    pub q: BraidingMatrix,
    /// `base[j]` is `f_j` in seed coordinates.
    pub base: Vec<Vec<i64>>,
    pub parity: Option<Vec<u8>>,
}

impl GroupoidObject {
    pub fn seed(q: &BraidingMatrix, parity: Option<Vec<u8>>) -> Self {
        let n = q.theta();
        let base = (0..n)
            .map(|j| (0..n).map(|i| i64::from(i == j)).collect())
            .collect();
        GroupoidObject {
            q: q.clone(),
            base,
            parity,
        }
    }

    /// Rebuilds an object from a base, checking unimodularity.
    pub fn from_base(seed: &BraidingMatrix, base: Vec<Vec<i64>>, parity: Option<Vec<u8>>) -> Result<Self, WeylError> {
        let d = determinant(&base);
        if d.abs() != 1 {
            return Err(WeylError::NotUnimodular(d));
        }
        let n = seed.theta();
        let entries = (0..n)
            .map(|a| (0..n).map(|b| seed.chi(&base[a], &base[b])).collect())
            .collect();
        let q = BraidingMatrix::new(entries)
            .expect("square")
            .with_ambient(seed.ambient())
            .with_generics(seed.generics())
            .with_constraints(seed.constraints().to_vec());
        Ok(GroupoidObject { q, base, parity })
    }

    pub fn theta(&self) -> usize {
        self.q.theta()
    }

    /// Cartan row `(a_i1, …, a_iθ)`, `None` where the entry is undefined.
    pub fn cartan_row(&self, i: usize, cap: usize) -> Vec<Option<i64>> {
        (0..self.theta()).map(|j| cartan_entry(&self.q, i, j, cap)).collect()
    }

    /// `s_i`: `f'_j = f_j − a_ij f_i`, with the new matrix recomputed from the seed.
    pub fn reflect(&self, seed: &BraidingMatrix, i: usize, cap: usize) -> Result<Self, WeylError> {
        let row = self.cartan_row(i, cap);
        let row: Vec<i64> = row
            .iter()
            .enumerate()
            .map(|(j, a)| a.ok_or(WeylError::UndefinedCartan { i, j }))
            .collect::<Result<_, _>>()?;
        let n = self.theta();
        let base: Vec<Vec<i64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|t| self.base[j][t] - row[j] * self.base[i][t])
                    .collect()
            })
            .collect();
        let parity = self.parity.as_ref().map(|p| reflect_parity(p, i, &row));
        Self::from_base(seed, base, parity)
    }
}

/// `p̂(α_k) = p(α_k) p(α_i)^{-a_ik}`: flips `k` exactly when `α_i` is odd and
/// `a_ik` is odd.
pub fn reflect_parity(p: &[u8], i: usize, row: &[i64]) -> Vec<u8> {
    if p[i].is_multiple_of(2) {
        return p.to_vec();
    }
    p.iter()
        .zip(row)
        .map(|(pk, a)| ((*pk as i64 + a.rem_euclid(2)) % 2) as u8)
        .collect()
}

/// `a_ij = −min{n ≥ 0 : (n+1)_{q_ii} = 0 or q_ii^n q_ij q_ji = 1}`, searched
/// for `n ≤ cap`.
pub fn cartan_entry(q: &BraidingMatrix, i: usize, j: usize, cap: usize) -> Option<i64> {
    if i == j {
        return Some(2);
    }
    let qii = q.q(i, i);
    let e = q.q(i, j).mul(q.q(j, i));
    let mut pow = UnityScalar::one(1);
    for n in 0..=cap {
        if q_number(n as u64 + 1, qii).zero || pow.mul(&e).is_one() {
            return Some(-(n as i64));
        }
        pow = pow.mul(qii);
    }
    None
}

pub fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|x| *x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}
