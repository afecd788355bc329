use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ScalarError;

/// Precomputed data for `Q(ζ_L)`: the cyclotomic polynomial and the reduction
/// of every power `t^k`, `0 ≤ k < L`, modulo it.
#[derive(Debug)]
struct CycField {
    degree: usize,
    phi: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

fn field(order: u64) -> Arc<CycField> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("cyclotomic cache poisoned").get(&order) {
        return f.clone();
    }
    let phi = cyclotomic_polynomial(order);
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut cur = vec![0i64; degree];
    if degree > 0 {
        cur[0] = 1;
    }
    for _ in 0..order {
        powers.push(cur.clone());
        // multiply by t and reduce with t^degree = -(phi_0 + ... + phi_{d-1} t^{d-1})
        let top = cur[degree - 1];
        for k in (1..degree).rev() {
            cur[k] = cur[k - 1] - top * phi[k];
        }
        cur[0] = -top * phi[0];
    }
    let f = Arc::new(CycField {
        degree,
        phi,
        powers,
    });
    cache
        .lock()
        .expect("cyclotomic cache poisoned")
        .insert(order, f.clone());
    f
}

/// Integer coefficients (low to high) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    assert!(n >= 1);
    // t^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = div_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    quot
}

/// An element of the cyclotomic field `Q(ζ_L)`, stored densely as the
/// coefficients of its reduction modulo `Φ_L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycNumber {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl CycNumber {
    pub fn zero(order: u64) -> Self {
        let f = field(order);
        CycNumber {
            order,
            coeffs: vec![BigRational::zero(); f.degree],
        }
    }

    pub fn one(order: u64) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u64, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(order: u64, r: BigRational) -> Self {
        let mut z = Self::zero(order);
        z.coeffs[0] = r;
        z
    }

    /// `ζ_L^k`.
    pub fn root(order: u64, k: i64) -> Self {
        let f = field(order);
        let k = k.rem_euclid(order as i64) as usize;
        CycNumber {
            order,
            coeffs: f.powers[k]
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(*c)))
                .collect(),
        }
    }

    /// `Σ_k counts[k] ζ_L^k` for an element of the group ring `Z[C_L]`.
    pub fn from_root_counts(order: u64, counts: &[i64]) -> Self {
        let f = field(order);
        let mut acc = vec![0i128; f.degree];
        for (k, c) in counts.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (a, p) in acc.iter_mut().zip(&f.powers[k % order as usize]) {
                *a += (*c as i128) * (*p as i128);
            }
        }
        CycNumber {
            order,
            coeffs: acc
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        }
    }

    /// Builds `Σ coeffs[k] ζ_L^k` from arbitrary-length power-basis coefficients.
    pub fn from_power_coeffs(order: u64, coeffs: &[BigRational]) -> Self {
        let f = field(order);
        let mut out = vec![BigRational::zero(); f.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[k % order as usize]) {
                if *p != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(*p));
                }
            }
        }
        CycNumber { order, coeffs: out }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients in the power basis `1, ζ, …, ζ^{φ(L)-1}`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.is_one()) && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Image under `Q(ζ_L) ⊂ Q(ζ_M)`, `ζ_L ↦ ζ_M^{M/L}`.
    pub fn embed(&self, target: u64) -> Result<Self, ScalarError> {
        if !target.is_multiple_of(self.order) {
            return Err(ScalarError::IncompatibleOrder {
                from: self.order,
                to: target,
            });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = target / self.order;
        let mut wide = vec![BigRational::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            wide[(k as u64 * step % target) as usize] = c.clone();
        }
        Ok(Self::from_power_coeffs(target, &wide))
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (
            self.embed(l).expect("lcm embedding"),
            other.embed(l).expect("lcm embedding"),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = self.aligned(other);
            return a.add(&b);
        }
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        if self.order != other.order {
            *self = self.add(other);
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        if self.order != other.order {
            *self = self.sub(other);
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = self.aligned(other);
            return a.mul(&b);
        }
        let f = field(self.order);
        let d = f.degree;
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] += a * b;
            }
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        for (k, c) in prod.iter().enumerate().skip(d) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&f.powers[k % self.order as usize]) {
                if *p != 0 {
                    *o += c * BigRational::from_integer(BigInt::from(*p));
                }
            }
        }
        CycNumber {
            order: self.order,
            coeffs: out,
        }
    }

    /// `self · ζ_L^k`.
    pub fn mul_root(&self, k: i64) -> Self {
        let f = field(self.order);
        let l = self.order as i64;
        let mut out = vec![BigRational::zero(); f.degree];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = (i as i64 + k).rem_euclid(l) as usize;
            for (o, p) in out.iter_mut().zip(&f.powers[idx]) {
                match *p {
                    0 => {}
                    1 => *o += c,
                    -1 => *o -= c,
                    p => *o += c * BigRational::from_integer(BigInt::from(p)),
                }
            }
        }
        CycNumber {
            order: self.order,
            coeffs: out,
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against `Φ_L`.
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let f = field(self.order);
        let phi: Vec<BigRational> = f
            .phi
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(*c)))
            .collect();
        // invariant: r0 ≡ s0·a, r1 ≡ s1·a (mod Φ)
        let mut r0 = phi;
        let mut s0: Vec<BigRational> = vec![];
        let mut r1 = trim(self.coeffs.clone());
        let mut s1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ_L is irreducible
        let c = r1[0].clone();
        let inv_c = c.recip();
        let s: Vec<BigRational> = s1.iter().map(|x| x * &inv_c).collect();
        Ok(Self::from_power_coeffs(self.order, &s))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Numerical value at `ζ_L = e^{2πi/L}` (sanity checks only).
    pub fn eval_f64(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rational_to_f64(c);
            let ang = 2.0 * std::f64::consts::PI * k as f64 / self.order as f64;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = trim(a.to_vec());
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        quot[k] = c;
        rem = trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    (trim(quot), rem)
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => format!("z^{k}"),
                (_, false) => format!("{mag}*z^{k}"),
            };
            terms.push((sign, body));
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (sign, body)) in terms.iter().enumerate() {
            if i == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            out.push_str(body);
        }
        f.write_str(&out)
    }
}
