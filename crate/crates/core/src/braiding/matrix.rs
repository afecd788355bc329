use crate::scalars::{Constraint, ScalarError, SpecializationMap, UnityScalar};

use super::BraidingError;

/// A diagonal braiding `c(x_i ⊗ x_j) = q_ij x_j ⊗ x_i`, with declared side
/// conditions on its generic parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidingMatrix {
    entries: Vec<Vec<UnityScalar>>,
    ambient: u64,
    generics: Vec<String>,
    constraints: Vec<Constraint>,
}

impl BraidingMatrix {
    pub fn new(entries: Vec<Vec<UnityScalar>>) -> Result<Self, BraidingError> {
        let theta = entries.len();
        if theta == 0 {
            return Err(BraidingError::EmptyMatrix);
        }
        if entries.iter().any(|r| r.len() != theta) {
            return Err(BraidingError::NotSquare);
        }
        let ambient = entries
            .iter()
            .flatten()
            .fold(1u64, |l, s| num_integer::lcm(l, s.torsion_order()));
        let mut generics: Vec<String> = entries
            .iter()
            .flatten()
            .flat_map(|s| s.generic_exps().keys().cloned())
            .collect();
        generics.sort();
        generics.dedup();
        Ok(BraidingMatrix {
            entries,
            ambient,
            generics,
            constraints: Vec::new(),
        })
    }

    /// Builds from torsion exponents: `q_ij = ζ_order^{exps[i][j]}`.
    pub fn from_exponents(order: u64, exps: &[Vec<i64>]) -> Result<Self, BraidingError> {
        let entries = exps
            .iter()
            .map(|r| r.iter().map(|e| UnityScalar::root(order, *e)).collect())
            .collect();
        let mut b = Self::new(entries)?;
        b.ambient = num_integer::lcm(b.ambient, order);
        Ok(b)
    }

    pub fn with_constraints(mut self, constraints: Vec<Constraint>) -> Self {
        self.constraints = constraints;
        self
    }

    pub fn with_ambient(mut self, ambient: u64) -> Self {
        self.ambient = num_integer::lcm(self.ambient, ambient);
        self
    }

    pub fn with_generics(mut self, names: &[String]) -> Self {
        for n in names {
            if !self.generics.contains(n) {
                self.generics.push(n.clone());
            }
        }
        self.generics.sort();
        self
    }

    pub fn theta(&self) -> usize {
        self.entries.len()
    }

    pub fn ambient(&self) -> u64 {
        self.ambient
    }

    pub fn generics(&self) -> &[String] {
        &self.generics
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn q(&self, i: usize, j: usize) -> &UnityScalar {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<UnityScalar>] {
        &self.entries
    }

    /// `χ(α, β) = ∏ q_ij^{α_i β_j}`.
    pub fn chi(&self, alpha: &[i64], beta: &[i64]) -> UnityScalar {
        let mut acc = UnityScalar::one(1);
        for (i, a) in alpha.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in beta.iter().enumerate() {
                if *b != 0 {
                    acc = acc.mul(&self.entries[i][j].pow(a * b));
                }
            }
        }
        acc
    }

    /// `χ(α, α)`.
    pub fn q_alpha(&self, alpha: &[i64]) -> UnityScalar {
        self.chi(alpha, alpha)
    }

    /// `(q_{π(i) π(j)})`: new vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let entries = perm
            .iter()
            .map(|&a| perm.iter().map(|&b| self.entries[a][b].clone()).collect())
            .collect();
        BraidingMatrix {
            entries,
            ..self.clone()
        }
    }

    /// Principal submatrix on `indices` (in the given order).
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        self.permuted(indices)
    }

    pub fn transpose(&self) -> Self {
        let n = self.theta();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect())
            .collect();
        BraidingMatrix {
            entries,
            ..self.clone()
        }
    }

    /// `q_ij ↦ q_ij t`, `q_ji ↦ q_ji t^{-1}`.
    pub fn twisted(&self, i: usize, j: usize, t: &UnityScalar) -> Self {
        let mut out = self.clone();
        out.entries[i][j] = out.entries[i][j].mul(t);
        out.entries[j][i] = out.entries[j][i].mul(&t.inv());
        out.ambient = num_integer::lcm(out.ambient, t.torsion_order());
        out
    }

    /// Replaces generics by roots of unity, after checking declared constraints.
    pub fn specialize(&self, m: &SpecializationMap) -> Result<Self, ScalarError> {
        m.check(&self.constraints)?;
        let entries = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| m.substitute(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let mut out = BraidingMatrix::new(entries).expect("shape preserved");
        out.ambient = num_integer::lcm(out.ambient, num_integer::lcm(self.ambient, m.target_order));
        Ok(out)
    }

    pub fn is_torsion(&self) -> bool {
        self.entries.iter().flatten().all(UnityScalar::is_torsion)
    }

    /// Exponent table `q_ij = ζ_L^{e_ij}` for a torsion matrix and `L` a
    /// multiple of every entry order.
    pub fn exponents(&self, order: u64) -> Option<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| {
                        if !s.is_torsion() {
                            return None;
                        }
                        s.with_ambient(order).map(|w| w.torsion_exp())
                    })
                    .collect()
            })
            .collect()
    }
}
