//! Exact scalars: symbolic roots of unity with generic parameters, and the
//! cyclotomic fields they specialize into.

mod cyclotomic;
mod literal;
mod qnumbers;
mod unity;

pub use cyclotomic::{cyclotomic_polynomial, CycNumber};
pub use literal::{parse_constraint, parse_scalar};
pub use qnumbers::{q_binomial_flag, q_binomial_monomial, q_binomial_value, q_factorial_value, q_number, QNumber};
pub use unity::{UnityOrder, UnityScalar};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot embed Q(zeta_{from}) into Q(zeta_{to})")]
    IncompatibleOrder { from: u64, to: u64 },
    #[error("no assignment for generic parameter `{0}`")]
    MissingAssignment(String),
    #[error("constraint `{0}` violated by specialization")]
    ConstraintViolated(String),
    #[error("value is not a monomial; specialize first")]
    NotMonomial,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
}

/// A declared side condition `lhs ≠ 1` (or `lhs = 1`) on generic parameters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub lhs: UnityScalar,
    pub equal: bool,
}

impl Constraint {
    pub fn not_one(lhs: UnityScalar) -> Self {
        Constraint { lhs, equal: false }
    }

    /// Whether the constraint holds symbolically (generics treated as
    /// non-torsion and independent).
    pub fn holds_symbolically(&self) -> bool {
        self.lhs.is_one() == self.equal
    }

    pub fn holds_under(&self, m: &SpecializationMap) -> Result<bool, ScalarError> {
        Ok(m.substitute(&self.lhs)?.is_one() == self.equal)
    }

    pub fn to_literal(&self, ambient: u64) -> String {
        let op = if self.equal { "=" } else { "!=" };
        format!("{} {op} 1", self.lhs.to_literal(ambient))
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.equal { "=" } else { "!=" };
        write!(f, "{} {op} 1", self.lhs)
    }
}

/// Assignment of every generic parameter to a power of `ζ_L`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpecializationMap {
    pub target_order: u64,
    pub assignments: BTreeMap<String, i64>,
}

impl SpecializationMap {
    pub fn new(target_order: u64) -> Self {
        SpecializationMap {
            target_order,
            assignments: BTreeMap::new(),
        }
    }

    pub fn assign(mut self, name: &str, exp: i64) -> Self {
        self.assignments.insert(name.to_string(), exp);
        self
    }

    /// Replaces generics by their assigned roots of unity.
    pub fn substitute(&self, s: &UnityScalar) -> Result<UnityScalar, ScalarError> {
        let l = self.target_order;
        let mut out = UnityScalar::root(s.torsion_order(), s.torsion_exp() as i64);
        for (name, e) in s.generic_exps() {
            let c = self
                .assignments
                .get(name)
                .ok_or_else(|| ScalarError::MissingAssignment(name.clone()))?;
            out = out.mul(&UnityScalar::root(l, c * e));
        }
        Ok(out)
    }

    /// Exponent `k` with `substitute(s) = ζ_L^k`.
    pub fn exponent(&self, s: &UnityScalar) -> Result<u64, ScalarError> {
        let t = self.substitute(s)?;
        let w = t
            .with_ambient(self.target_order)
            .ok_or(ScalarError::IncompatibleOrder {
                from: t.unity_order().finite().unwrap_or(0),
                to: self.target_order,
            })?;
        Ok(w.torsion_exp())
    }

    pub fn check(&self, constraints: &[Constraint]) -> Result<(), ScalarError> {
        for c in constraints {
            if !c.holds_under(self)? {
                return Err(ScalarError::ConstraintViolated(c.to_string()));
            }
        }
        Ok(())
    }
}

/// Evaluates `s` in `Q(ζ_L)`; `L` must be divisible by the order of the
/// torsion part.
pub fn specialize(s: &UnityScalar, m: &SpecializationMap) -> Result<CycNumber, ScalarError> {
    Ok(CycNumber::root(m.target_order, m.exponent(s)? as i64))
}

/// Like [`specialize`], after checking the declared constraints.
pub fn specialize_checked(
    s: &UnityScalar,
    m: &SpecializationMap,
    constraints: &[Constraint],
) -> Result<CycNumber, ScalarError> {
    m.check(constraints)?;
    specialize(s, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specialize_embeds_roots() {
        let m = SpecializationMap::new(12);
        assert_eq!(specialize(&UnityScalar::root(3, 1), &m).unwrap(), CycNumber::root(12, 4));
        assert!(specialize(&UnityScalar::root(5, 1), &m).is_err());
    }

    #[test]
    fn specialize_generic() {
        let m = SpecializationMap::new(5).assign("q", 1);
        let s = UnityScalar::generic("q").pow(2);
        assert_eq!(specialize(&s, &m).unwrap(), CycNumber::root(5, 2));
        assert_eq!(
            specialize(&s, &SpecializationMap::new(5)),
            Err(ScalarError::MissingAssignment("q".into()))
        );
    }

    #[test]
    fn constraint_violation() {
        let c = Constraint::not_one(UnityScalar::generic("q").pow(2));
        assert!(c.holds_symbolically());
        let bad = SpecializationMap::new(4).assign("q", 2);
        assert!(matches!(
            specialize_checked(&UnityScalar::generic("q"), &bad, std::slice::from_ref(&c)),
            Err(ScalarError::ConstraintViolated(_))
        ));
        let good = SpecializationMap::new(5).assign("q", 1);
        assert!(specialize_checked(&UnityScalar::generic("q"), &good, &[c]).is_ok());
    }
}
