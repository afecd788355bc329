use super::{CycNumber, ScalarError, UnityOrder, UnityScalar};

/// Zero test for `(n)_q = 1 + q + … + q^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QNumber {
    pub n: u64,
    pub q: UnityScalar,
    pub zero: bool,
}

impl QNumber {
    /// The value in `Q(ζ_L)` for torsion `q` whose order divides `L`.
    pub fn value(&self, order: u64) -> Result<CycNumber, ScalarError> {
        let w = self.q.with_ambient(order).ok_or(ScalarError::NotMonomial)?;
        if !self.q.is_torsion() {
            return Err(ScalarError::NotMonomial);
        }
        let mut counts = vec![0i64; order as usize];
        for j in 0..self.n {
            counts[((w.torsion_exp() * j) % order) as usize] += 1;
        }
        Ok(CycNumber::from_root_counts(order, &counts))
    }
}

pub fn q_number(n: u64, q: &UnityScalar) -> QNumber {
    let zero = match q.unity_order() {
        UnityOrder::Infinite => n == 0,
        UnityOrder::Finite(1) => n == 0,
        UnityOrder::Finite(d) => n.is_multiple_of(d),
    };
    QNumber { n, q: q.clone(), zero }
}

/// Whether the Gaussian binomial `binom(n, j)_q` vanishes (q-Lucas).
pub fn q_binomial_flag(n: u64, j: u64, q: &UnityScalar) -> bool {
    assert!(j <= n);
    match q.unity_order() {
        UnityOrder::Finite(d) if d > 1 => j % d > n % d,
        _ => false,
    }
}

/// Symbolic evaluation; only the trivial cases are monomials.
pub fn q_binomial_monomial(n: u64, j: u64, q: &UnityScalar) -> Result<UnityScalar, ScalarError> {
    assert!(j <= n);
    if j == 0 || j == n {
        Ok(UnityScalar::one(q.torsion_order()))
    } else {
        Err(ScalarError::NotMonomial)
    }
}

/// `binom(n, j)_q` in `Q(ζ_L)` via `C(n,j) = C(n-1,j-1) + q^j C(n-1,j)`.
pub fn q_binomial_value(n: u64, j: u64, q: &CycNumber) -> CycNumber {
    assert!(j <= n);
    let l = q.order();
    let j = j as usize;
    let mut powers = vec![CycNumber::one(l)];
    for k in 1..=j {
        powers.push(powers[k - 1].mul(q));
    }
    let mut row = vec![CycNumber::one(l)];
    for m in 1..=n as usize {
        let mut next = vec![CycNumber::zero(l); (m + 1).min(j + 1)];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = if k == 0 {
                CycNumber::zero(l)
            } else {
                row[k - 1].clone()
            };
            if k < row.len() && k < m {
                v.add_assign(&powers[k].mul(&row[k]));
            }
            *slot = v;
        }
        row = next;
    }
    row[j].clone()
}

/// `(n)_q! = ∏_{k=1}^n (k)_q` in `Q(ζ_L)`.
pub fn q_factorial_value(n: u64, q: &CycNumber) -> CycNumber {
    let l = q.order();
    let mut acc = CycNumber::one(l);
    let mut qk = CycNumber::one(l);
    let mut partial = CycNumber::zero(l);
    for _ in 1..=n {
        partial.add_assign(&qk);
        qk = qk.mul(q);
        acc = acc.mul(&partial);
    }
    acc
}
