use crate::scalars::UnityScalar;

use super::{BraidingError, BraidingMatrix};

/// Diagonal Yetter–Drinfeld data over `Γ = ∏ Z/m_t`: each basis vector `x_j`
/// is homogeneous of degree `g_j`, has character `χ_j` and parity `k_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YDDatum {
    pub group_orders: Vec<u64>,
    pub g: Vec<Vec<u64>>,
    pub chi: Vec<Vec<u64>>,
    pub parity: Vec<u8>,
}

impl YDDatum {
    pub fn new(
        group_orders: Vec<u64>,
        g: Vec<Vec<i64>>,
        chi: Vec<Vec<i64>>,
        parity: Vec<u8>,
    ) -> Result<Self, BraidingError> {
        let r = group_orders.len();
        let theta = g.len();
        if group_orders.contains(&0)
            || chi.len() != theta
            || parity.len() != theta
            || g.iter().chain(&chi).any(|v| v.len() != r)
        {
            return Err(BraidingError::MalformedDatum);
        }
        let reduce = |vs: Vec<Vec<i64>>| -> Vec<Vec<u64>> {
            vs.into_iter()
                .map(|v| {
                    v.iter()
                        .zip(&group_orders)
                        .map(|(x, m)| x.rem_euclid(*m as i64) as u64)
                        .collect()
                })
                .collect()
        };
        Ok(YDDatum {
            g: reduce(g),
            chi: reduce(chi),
            parity: parity.into_iter().map(|k| k % 2).collect(),
            group_orders,
        })
    }

    pub fn theta(&self) -> usize {
        self.g.len()
    }

    /// `χ_j(g_i)`.
    pub fn pairing(&self, i: usize, j: usize) -> UnityScalar {
        let l = self.group_orders.iter().fold(1u64, |a, m| num_integer::lcm(a, *m));
        let e: u64 = (0..self.group_orders.len())
            .map(|t| self.g[i][t] * self.chi[j][t] * (l / self.group_orders[t]))
            .sum();
        UnityScalar::root(l, (e % l) as i64)
    }

    /// Swaps the roles of degrees and characters.
    pub fn transposed(&self) -> Self {
        YDDatum {
            g: self.chi.clone(),
            chi: self.g.clone(),
            ..self.clone()
        }
    }
}

/// `q_ij = χ_j(g_i)`, together with the datum's parity vector.
pub fn braiding_from_yd_datum(d: &YDDatum) -> (BraidingMatrix, Vec<u8>) {
    let n = d.theta();
    let entries = (0..n)
        .map(|i| (0..n).map(|j| d.pairing(i, j)).collect())
        .collect();
    (
        BraidingMatrix::new(entries).expect("nonempty square datum"),
        d.parity.clone(),
    )
}

/// `q̃_ii = (−1)^{k_i} q_ii`, off-diagonal entries unchanged.
pub fn super_sign_transform(b: &BraidingMatrix, k: &[u8]) -> BraidingMatrix {
    let n = b.theta();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let q = b.q(i, j).clone();
                    if i == j && k[i] % 2 == 1 {
                        q.neg()
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    BraidingMatrix::new(entries)
        .expect("shape preserved")
        .with_constraints(b.constraints().to_vec())
        .with_ambient(b.ambient())
}

/// `((−1)^{k_i k_j} q_ij)`.
pub fn signed_braiding(b: &BraidingMatrix, k: &[u8]) -> BraidingMatrix {
    let n = b.theta();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let q = b.q(i, j).clone();
                    if k[i] % 2 == 1 && k[j] % 2 == 1 {
                        q.neg()
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    BraidingMatrix::new(entries)
        .expect("shape preserved")
        .with_constraints(b.constraints().to_vec())
        .with_ambient(b.ambient())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braiding::dynkin_of;

    #[test]
    fn sign_character() {
        let d = YDDatum::new(vec![2], vec![vec![1]], vec![vec![1]], vec![1]).unwrap();
        let (b, p) = braiding_from_yd_datum(&d);
        assert!(b.q(0, 0).is_minus_one());
        assert_eq!(p, vec![1]);
    }

    #[test]
    fn trivial_character() {
        let d = YDDatum::new(vec![3, 4], vec![vec![1, 2], vec![2, 3]], vec![vec![0, 0], vec![0, 0]], vec![0, 0])
            .unwrap();
        let (b, _) = braiding_from_yd_datum(&d);
        assert!(b.entries().iter().flatten().all(UnityScalar::is_one));
    }

    #[test]
    fn cyclic_five() {
        let d = YDDatum::new(vec![5], vec![vec![1]], vec![vec![2]], vec![0]).unwrap();
        let (b, _) = braiding_from_yd_datum(&d);
        assert_eq!(b.q(0, 0), &UnityScalar::root(5, 2));
    }

    #[test]
    fn sign_transform() {
        let q = UnityScalar::generic("q");
        let b = BraidingMatrix::new(vec![vec![q.clone()]]).unwrap();
        assert_eq!(super_sign_transform(&b, &[0]), b);
        assert_eq!(super_sign_transform(&b, &[1]).q(0, 0), &q.neg());
    }

    #[test]
    fn transform_matches_signed_diagram() {
        let b = BraidingMatrix::from_exponents(12, &[vec![1, 5, 7], vec![2, 3, 11], vec![4, 6, 9]]).unwrap();
        for mask in 0u8..8 {
            let k: Vec<u8> = (0..3).map(|i| (mask >> i) & 1).collect();
            assert_eq!(
                dynkin_of(&super_sign_transform(&b, &k)),
                dynkin_of(&signed_braiding(&b, &k)),
                "k = {k:?}"
            );
        }
    }
}
