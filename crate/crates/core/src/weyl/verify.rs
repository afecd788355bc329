use std::fmt;

use crate::braiding::dynkin_of;

use super::{apply_reflection, cartan_from_roots, GroupoidAtlas, RootSet, WeylError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A root with coordinates of both signs.
    Axiom1 { object: usize, root: Vec<i64> },
    /// `s_i(Δ^X) ≠ Δ^{r_i X}`.
    Axiom2 { object: usize, i: usize },
    /// `Δ^X ∩ Zα_i ≠ {±α_i}`.
    Axiom3 { object: usize, i: usize },
    /// `(r_i r_j)^{m_ij}(X) ≠ X`.
    Axiom4 { object: usize, i: usize, j: usize, m: usize },
    /// `a_ij^X ≠ a_ij^{r_i X}`.
    CartanNotConstant { object: usize, i: usize, j: usize },
    /// The q-matrix entry disagrees with the root strings.
    CartanMismatch { object: usize, i: usize, j: usize, from_matrix: i64, from_roots: i64 },
    NotInvolution { object: usize, i: usize },
    /// Equalities expected when `a_ij = 0` fail.
    Remark1 { object: usize, i: usize, j: usize },
    /// Equalities expected when `q_ii^{a_ij} = q_ij q_ji` for every `j` fail.
    Remark2 { object: usize, i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Axiom1 { object, root } => write!(f, "axiom 1: object {object} has mixed-sign root {root:?}"),
            Violation::Axiom2 { object, i } => write!(f, "axiom 2: s_{} maps roots of object {object} wrongly", i + 1),
            Violation::Axiom3 { object, i } => write!(f, "axiom 3: object {object}, multiples of alpha_{}", i + 1),
            Violation::Axiom4 { object, i, j, m } => {
                write!(f, "axiom 4: object {object}, (r_{} r_{})^{m} is not the identity", i + 1, j + 1)
            }
            Violation::CartanNotConstant { object, i, j } => {
                write!(f, "cartan: a_{}{} differs between object {object} and its reflection", i + 1, j + 1)
            }
            Violation::CartanMismatch { object, i, j, from_matrix, from_roots } => write!(
                f,
                "cartan: object {object}, a_{}{} = {from_matrix} but root strings give {from_roots}",
                i + 1,
                j + 1
            ),
            Violation::NotInvolution { object, i } => write!(f, "r_{} is not an involution at object {object}", i + 1),
            Violation::Remark1 { object, i, j } => {
                write!(f, "a_{}{} = 0 identities fail at object {object}", i + 1, j + 1)
            }
            Violation::Remark2 { object, i } => write!(f, "transpose identities fail at object {object}, vertex {}", i + 1),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSystemReport {
    pub objects_checked: usize,
    pub violations: Vec<Violation>,
}

impl RootSystemReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn unit(theta: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; theta];
    v[i] = c;
    v
}

/// Checks the four root-system axioms, constancy of Cartan entries along
/// reflections, and agreement of the q-matrix Cartan entries with the root
/// strings (`a_ij` of the matrix is the `α_i`-string through `α_j`, i.e.
/// `cartan_from_roots(Δ, j, i)`).
pub fn verify_root_system(atlas: &GroupoidAtlas) -> Result<RootSystemReport, WeylError> {
    let roots: &[RootSet] = atlas.roots.as_deref().ok_or(WeylError::Incomplete)?;
    let theta = atlas.theta();
    let mut v = Vec::new();
    for (x, set) in roots.iter().enumerate() {
        for r in set {
            if !(r.iter().all(|c| *c >= 0) || r.iter().all(|c| *c <= 0)) {
                v.push(Violation::Axiom1 { object: x, root: r.clone() });
            }
        }
        for i in 0..theta {
            let t = atlas.target(x, i).ok_or(WeylError::Incomplete)?;
            let row = atlas.row(x, i);
            let image: RootSet = set.iter().map(|b| apply_reflection(&row, i, b)).collect();
            if image != roots[t] {
                v.push(Violation::Axiom2 { object: x, i });
            }
            let multiples: Vec<&Vec<i64>> = set
                .iter()
                .filter(|r| r.iter().enumerate().all(|(k, c)| k == i || *c == 0))
                .collect();
            let want = [unit(theta, i, -1), unit(theta, i, 1)];
            if multiples.len() != 2 || !multiples.iter().all(|r| want.contains(r)) {
                v.push(Violation::Axiom3 { object: x, i });
            }
            for j in 0..theta {
                if atlas.cartan[x][i][j] != atlas.cartan[t][i][j] {
                    v.push(Violation::CartanNotConstant { object: x, i, j });
                }
                if i == j {
                    continue;
                }
                let from_roots = cartan_from_roots(set, j, i);
                let from_matrix = row[j];
                if from_roots != from_matrix {
                    v.push(Violation::CartanMismatch { object: x, i, j, from_matrix, from_roots });
                }
                if j > i {
                    let m = set
                        .iter()
                        .filter(|r| {
                            r.iter().enumerate().all(|(k, c)| (k == i || k == j || *c == 0) && *c >= 0)
                                && r.iter().any(|c| *c > 0)
                        })
                        .count();
                    let mut y = x;
                    for _ in 0..m {
                        let yj = atlas.target(y, j).ok_or(WeylError::Incomplete)?;
                        y = atlas.target(yj, i).ok_or(WeylError::Incomplete)?;
                    }
                    if y != x {
                        v.push(Violation::Axiom4 { object: x, i, j, m });
                    }
                }
            }
        }
    }
    Ok(RootSystemReport {
        objects_checked: roots.len(),
        violations: v,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReflectionReport {
    pub edges_checked: usize,
    pub remark1_cases: usize,
    pub remark2_cases: usize,
    pub violations: Vec<Violation>,
}

impl ReflectionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// On every morphism `X → r_i X`: involutivity; for `a_ij = 0`,
/// `q'_jj = q_jj` and `q'_jk q'_kj = q_jk q_kj` (`k ≠ i, j`); and when
/// `q_ii^{a_ij} = q_ij q_ji` for all `j ≠ i`, `q'_ij = q_ji`, `q'_ji = q_ij`
/// and the diagram is unchanged.
pub fn verify_reflection_identities(atlas: &GroupoidAtlas) -> ReflectionReport {
    let theta = atlas.theta();
    let mut rep = ReflectionReport::default();
    for &(x, i, t) in &atlas.morphisms {
        rep.edges_checked += 1;
        if atlas.target(t, i) != Some(x) {
            rep.violations.push(Violation::NotInvolution { object: x, i });
        }
        // objects are stored up to twist, so the exact reflected matrix is recomputed
        let q = &atlas.objects[x].q;
        let Ok(reflected) = atlas.objects[x].reflect(&atlas.seed, i, atlas.cartan_cap) else {
            continue;
        };
        let qr = &reflected.q;
        let row = atlas.row(x, i);
        for j in (0..theta).filter(|&j| j != i && row[j] == 0) {
            rep.remark1_cases += 1;
            let mut ok = qr.q(j, j) == q.q(j, j);
            for k in (0..theta).filter(|&k| k != i && k != j) {
                ok &= qr.q(j, k).mul(qr.q(k, j)) == q.q(j, k).mul(q.q(k, j));
            }
            if !ok {
                rep.violations.push(Violation::Remark1 { object: x, i, j });
            }
        }
        let hypothesis = (0..theta)
            .filter(|&j| j != i)
            .all(|j| q.q(i, i).pow(row[j]) == q.q(i, j).mul(q.q(j, i)));
        if hypothesis && theta > 1 {
            rep.remark2_cases += 1;
            let mut ok = dynkin_of(qr) == dynkin_of(q);
            for j in (0..theta).filter(|&j| j != i) {
                ok &= qr.q(i, j) == q.q(j, i) && qr.q(j, i) == q.q(i, j);
            }
            if !ok {
                rep.violations.push(Violation::Remark2 { object: x, i });
            }
        }
    }
    rep
}
