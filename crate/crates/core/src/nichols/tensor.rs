use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Exponents, NicholsError};
use crate::braiding::BraidingMatrix;
use crate::scalars::CycNumber;

/// A basis word of `T(V)`, letters 0-based internally and printed 1-based.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self, theta: usize) -> Vec<usize> {
        let mut c = vec![0; theta];
        for &a in &self.0 {
            c[a as usize] += 1;
        }
        c
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.0.iter().map(|a| (a + 1).to_string()).collect();
        write!(f, "({})", l.join(","))
    }
}

/// A homogeneous-length element of `T(V)` with coefficients in `Q(ζ_L)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    theta: usize,
    order: u64,
    terms: BTreeMap<Word, CycNumber>,
}

impl TensorElement {
    pub fn zero(theta: usize, order: u64) -> Self {
        TensorElement {
            theta,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(theta: usize, order: u64, w: Word) -> Self {
        let mut e = Self::zero(theta, order);
        e.terms.insert(w, CycNumber::one(order));
        e
    }

    /// The generator `x_i` (0-based).
    pub fn letter(theta: usize, order: u64, i: usize) -> Self {
        Self::word(theta, order, Word(vec![i as u8]))
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Word, CycNumber> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> CycNumber {
        self.terms.get(w).cloned().unwrap_or_else(|| CycNumber::zero(self.order))
    }

    /// Tensor degree, `None` for zero.
    pub fn length(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// Common `Z^θ`-degree of all terms.
    pub fn degree(&self) -> Result<Option<Vec<i64>>, NicholsError> {
        let mut it = self.terms.keys().map(|w| w.content(self.theta));
        let Some(first) = it.next() else {
            return Ok(None);
        };
        if it.any(|c| c != first) {
            return Err(NicholsError::Inhomogeneous);
        }
        Ok(Some(first.into_iter().map(|c| c as i64).collect()))
    }

    pub fn add_term(&mut self, w: Word, c: &CycNumber) {
        if c.is_zero() {
            return;
        }
        let c = lift(c, self.order);
        match self.terms.get_mut(&w) {
            Some(v) => {
                v.add_assign(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &CycNumber) -> Self {
        let c = lift(c, self.order);
        let mut out = Self::zero(self.theta, self.order);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(w, v)| (w.clone(), v.mul(&c))).collect();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CycNumber::from_integer(self.order, -1)))
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.theta, self.order);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = u.0.clone();
                w.extend_from_slice(&v.0);
                out.add_term(Word(w), &a.mul(b));
            }
        }
        out
    }

    /// Renames letters: `i ↦ map[i]`, into rank `theta`.
    pub fn map_letters(&self, map: &[usize], theta: usize) -> Self {
        let mut out = Self::zero(theta, self.order);
        for (w, c) in &self.terms {
            out.add_term(Word(w.0.iter().map(|&a| map[a as usize] as u8).collect()), c);
        }
        out
    }

    /// Integer group-ring coordinates `Z[C_L]` of every term, after clearing
    /// denominators; returns the common multiplier used.
    pub(crate) fn to_group_ring(&self) -> (BTreeMap<Word, Vec<i64>>, BigInt) {
        let mut den = BigInt::one();
        for c in self.terms.values() {
            for r in c.coeffs() {
                den = den.lcm(r.denom());
            }
        }
        let f = BigRational::from_integer(den.clone());
        let l = self.order as usize;
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut v = vec![0i64; l];
                for (k, r) in c.coeffs().iter().enumerate() {
                    let n = (r * &f).to_integer();
                    v[k] = i64::try_from(n).expect("coefficient fits in i64");
                }
                (w.clone(), v)
            })
            .collect();
        (terms, den)
    }

    pub(crate) fn from_group_ring(theta: usize, order: u64, terms: &BTreeMap<Word, Vec<i64>>, den: &BigInt) -> Self {
        let inv = BigRational::new(BigInt::one(), den.clone());
        let mut out = Self::zero(theta, order);
        for (w, v) in terms {
            let c = CycNumber::from_root_counts(order, v);
            if !c.is_zero() {
                out.terms.insert(w.clone(), c.scale(&inv));
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})*{w}")).collect();
        parts.join(" + ")
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn lift(c: &CycNumber, order: u64) -> CycNumber {
    if c.order() == order {
        c.clone()
    } else if c.coeffs().iter().skip(1).all(|x| x.is_zero()) {
        CycNumber::from_rational(order, c.coeffs()[0].clone())
    } else {
        c.embed(order).expect("coefficient lies in the field of the braiding")
    }
}

/// `[x, y]_c = xy − χ(α, β) yx` for homogeneous `x`, `y` of degrees `α`, `β`.
pub fn braided_commutator(x: &TensorElement, y: &TensorElement, b: &BraidingMatrix) -> Result<TensorElement, NicholsError> {
    let ex = Exponents::of(b)?;
    let (Some(a), Some(bd)) = (x.degree()?, y.degree()?) else {
        return Ok(TensorElement::zero(x.theta, x.order));
    };
    let mut s: u64 = 0;
    for i in 0..ex.theta() {
        for j in 0..ex.theta() {
            s += (a[i] * bd[j]) as u64 * ex.e[i][j];
        }
    }
    let x = x.clone_in(ex.order);
    let y = y.clone_in(ex.order);
    let chi = CycNumber::root(ex.order, (s % ex.order) as i64);
    Ok(x.mul(&y).sub(&y.mul(&x).scale(&chi)))
}

impl TensorElement {
    /// The same element over `Q(ζ_order)`, `order` a multiple of the current one.
    pub fn clone_in(&self, order: u64) -> Self {
        if order == self.order {
            return self.clone();
        }
        TensorElement {
            theta: self.theta,
            order,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), lift(c, order))).collect(),
        }
    }
}
