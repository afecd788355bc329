//! Nichols algebras of diagonal type at desk scale: the braid group action on
//! tensor powers, the quantum symmetrizer, graded dimensions, root vectors and
//! verification of defining relations.

mod braid;
mod hilbert;
mod relations;
mod tensor;

pub use braid::{
    all_reduced_words, apply_braid_word, apply_symmetrizer, block_words, braid_generator_action, matsumoto_lift,
    symmetrizer, SymmetrizerRoute,
};
pub use hilbert::{graded_dims, rank, HilbertTable};
pub use relations::{
    hyperletters, presentation, relations_for, root_vector_expr, verify_relation, Relation, RelationKind,
    RelationMode, RootVectorExpr, Verdict,
};
pub use tensor::{braided_commutator, Word, TensorElement};

use num_integer::Integer;
use thiserror::Error;

use crate::braiding::BraidingMatrix;
use crate::exec::Exec;
use crate::scalars::{UnityOrder, UnityScalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("braid generator {k} out of range for a word of length {len}")]
    Position { k: usize, len: usize },
    #[error("braiding has generic parameters; specialize first")]
    NeedsSpecialization,
    #[error("{what} {got} exceeds cap {cap}")]
    CapExceeded { what: &'static str, got: usize, cap: usize },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("{0} is not a positive root of the family")]
    NotARoot(String),
    #[error("relations are only known for families A, B, C, D (got {0})")]
    UnsupportedFamily(String),
    #[error("Cartan entry a_{i}{j} is undefined")]
    UndefinedCartan { i: usize, j: usize },
    #[error("letter {letter} out of range for rank {theta}")]
    Letter { letter: usize, theta: usize },
    #[error("component is not of super type")]
    NotSuperType,
    #[error("root system: {0}")]
    Weyl(String),
}

/// Caps and execution strategy for symmetrizer computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NicholsConfig {
    pub degree_cap: usize,
    pub block_cap: usize,
    pub exec: Exec,
}

impl Default for NicholsConfig {
    fn default() -> Self {
        NicholsConfig {
            degree_cap: 8,
            block_cap: 5000,
            exec: Exec::default(),
        }
    }
}

/// `q_α = χ(α, α)` and its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub root: Vec<i64>,
    pub q_alpha: UnityScalar,
    pub n_alpha: UnityOrder,
}

pub fn root_exponent(b: &BraidingMatrix, alpha: &[i64]) -> RootDatum {
    let q_alpha = b.q_alpha(alpha);
    RootDatum {
        root: alpha.to_vec(),
        n_alpha: q_alpha.unity_order(),
        q_alpha,
    }
}

/// Exponents `q_ij = ζ_L^{e_ij}` with `L` the least common order of the entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Exponents {
    pub order: u64,
    pub e: Vec<Vec<u64>>,
}

impl Exponents {
    pub fn of(b: &BraidingMatrix) -> Result<Self, NicholsError> {
        let mut order = 1u64;
        for s in b.entries().iter().flatten() {
            match s.unity_order() {
                UnityOrder::Finite(n) => order = order.lcm(&n),
                UnityOrder::Infinite => return Err(NicholsError::NeedsSpecialization),
            }
        }
        let e = b.exponents(order).ok_or(NicholsError::NeedsSpecialization)?;
        Ok(Exponents { order, e })
    }

    pub fn theta(&self) -> usize {
        self.e.len()
    }

    pub fn get(&self, a: u8, b: u8) -> u64 {
        self.e[a as usize][b as usize]
    }
}

/// Multinomial coefficient `|d|! / ∏ d_i!`, saturating.
pub(crate) fn block_size(content: &[usize]) -> usize {
    let mut acc: u128 = 1;
    let mut n: u128 = 0;
    for &c in content {
        for k in 1..=c as u128 {
            n += 1;
            acc = acc * n / k;
            if acc > usize::MAX as u128 {
                return usize::MAX;
            }
        }
    }
    acc as usize
}
