use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use num_integer::Integer;

/// Multiplicative order of a [`UnityScalar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnityOrder {
    Finite(u64),
    Infinite,
}

impl UnityOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            UnityOrder::Finite(n) => Some(n),
            UnityOrder::Infinite => None,
        }
    }
}

impl fmt::Display for UnityOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnityOrder::Finite(n) => write!(f, "{n}"),
            UnityOrder::Infinite => f.write_str("inf"),
        }
    }
}

/// An element of `<ζ_N> × Z^{generics}`: a root of unity times a monomial in
/// formal generic parameters.
///
/// Generic parameters are non-torsion and multiplicatively independent, so
/// equality and orders are decidable. Values with different ambient orders
/// compare equal when they denote the same root of unity.
#[derive(Clone, Debug)]
pub struct UnityScalar {
    order: u64,
    exp: u64,
    generics: BTreeMap<String, i64>,
}

impl UnityScalar {
    /// The identity with ambient torsion order `order`.
    pub fn one(order: u64) -> Self {
        Self::root(order, 0)
    }

    /// `ζ_order^exp`.
    pub fn root(order: u64, exp: i64) -> Self {
        assert!(order >= 1, "torsion order must be positive");
        UnityScalar {
            order,
            exp: exp.rem_euclid(order as i64) as u64,
            generics: BTreeMap::new(),
        }
    }

    pub fn minus_one() -> Self {
        Self::root(2, 1)
    }

    /// A generic parameter `name^1` with ambient torsion order 1.
    pub fn generic(name: &str) -> Self {
        let mut generics = BTreeMap::new();
        generics.insert(name.to_string(), 1);
        UnityScalar {
            order: 1,
            exp: 0,
            generics,
        }
    }

    pub fn from_parts(order: u64, exp: i64, generics: BTreeMap<String, i64>) -> Self {
        let mut s = Self::root(order, exp);
        s.generics = generics.into_iter().filter(|(_, e)| *e != 0).collect();
        s
    }

    /// Ambient torsion order `N`.
    pub fn torsion_order(&self) -> u64 {
        self.order
    }

    /// Torsion exponent `a` of `ζ_N^a`, reduced mod `N`.
    pub fn torsion_exp(&self) -> u64 {
        self.exp
    }

    pub fn generic_exps(&self) -> &BTreeMap<String, i64> {
        &self.generics
    }

    pub fn is_torsion(&self) -> bool {
        self.generics.is_empty()
    }

    /// Reduced fraction `(a/g, N/g)` identifying the root of unity.
    fn canonical(&self) -> (u64, u64) {
        let g = self.exp.gcd(&self.order);
        (self.exp / g, self.order / g)
    }

    pub fn is_one(&self) -> bool {
        self.generics.is_empty() && self.exp == 0
    }

    pub fn is_minus_one(&self) -> bool {
        self.generics.is_empty() && self.canonical() == (1, 2)
    }

    /// Re-expresses the torsion part with ambient order `order` (which must be
    /// a multiple of the current one).
    pub fn with_ambient(&self, order: u64) -> Option<Self> {
        let (a, n) = self.canonical();
        if !order.is_multiple_of(n) {
            return None;
        }
        Some(UnityScalar {
            order,
            exp: a * (order / n),
            generics: self.generics.clone(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        let l = self.order.lcm(&other.order);
        let exp = (self.exp * (l / self.order) + other.exp * (l / other.order)) % l;
        let mut generics = self.generics.clone();
        for (k, e) in &other.generics {
            let v = generics.entry(k.clone()).or_insert(0);
            *v += e;
        }
        generics.retain(|_, e| *e != 0);
        UnityScalar {
            order: l,
            exp,
            generics,
        }
    }

    pub fn inv(&self) -> Self {
        UnityScalar {
            order: self.order,
            exp: (self.order - self.exp) % self.order,
            generics: self.generics.iter().map(|(k, e)| (k.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let n = self.order as i128;
        let exp = ((self.exp as i128 * k as i128).rem_euclid(n)) as u64;
        UnityScalar {
            order: self.order,
            exp,
            generics: self
                .generics
                .iter()
                .filter(|_| k != 0)
                .map(|(name, e)| (name.clone(), e * k))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.mul(&Self::minus_one())
    }

    /// Multiplicative order; infinite as soon as a generic exponent is nonzero.
    pub fn unity_order(&self) -> UnityOrder {
        if !self.generics.is_empty() {
            return UnityOrder::Infinite;
        }
        UnityOrder::Finite(self.canonical().1)
    }

    /// All `r` with `r² = self` inside the group (0 or 2 of them).
    pub fn square_roots(&self) -> Vec<Self> {
        if self.generics.values().any(|e| e % 2 != 0) {
            return Vec::new();
        }
        let generics: BTreeMap<String, i64> =
            self.generics.iter().map(|(k, e)| (k.clone(), e / 2)).collect();
        let n = 2 * self.order;
        let first = UnityScalar {
            order: n,
            exp: self.exp,
            generics: generics.clone(),
        };
        let second = UnityScalar {
            order: n,
            exp: (self.exp + self.order) % n,
            generics,
        };
        vec![first, second]
    }

    /// Renders the scalar as a literal relative to ambient order `ambient`, or
    /// relative to its own order when it does not embed there.
    pub fn to_literal(&self, ambient: u64) -> String {
        match self.with_ambient(ambient) {
            Some(s) => s.render(false),
            None => self.render(true),
        }
    }

    fn render(&self, explicit_order: bool) -> String {
        let mut parts = Vec::new();
        if self.exp != 0 {
            if explicit_order {
                parts.push(format!("z^{}/{}", self.exp, self.order));
            } else {
                parts.push(format!("z^{}", self.exp));
            }
        }
        for (k, e) in &self.generics {
            parts.push(format!("{k}^{e}"));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    fn key(&self) -> (u64, u64, &BTreeMap<String, i64>) {
        let (a, n) = self.canonical();
        (n, a, &self.generics)
    }
}

impl PartialEq for UnityScalar {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for UnityScalar {}

impl Hash for UnityScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for UnityScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnityScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

/// Renders with an explicit torsion order (`z^a/N`), independent of any ambient.
impl fmt::Display for UnityScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(true))
    }
}
