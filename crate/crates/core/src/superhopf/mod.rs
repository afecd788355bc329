//! Finite-dimensional Hopf superalgebras given by structure constants over
//! `Q(ζ_L)`: axiom checks, bosonization, the correspondence between pairs
//! `(H, g)` and `(𝓗, u)`, Yetter–Drinfeld supermodules and biproducts.

mod aeg;
mod biproduct;
mod bosonize;
mod format;
mod linalg;
mod modules;
pub mod zoo;

pub use aeg::{aeg_backward, aeg_forward, aeg_transform, AegPair};
pub use biproduct::{biproduct, inclusion_over_bosonization, verify_braided_hopf, BraidedHopfData};
pub use bosonize::bosonize;
pub use format::{parse_coefficient, parse_presentation, serialize_presentation};
pub use modules::{
    regular_module, tensor_supermodules, trivial_module, verify_comodule, verify_module, verify_yd_compat,
    yang_baxter_holds, yd_braiding, yd_from_datum, BraidingMap, SuperModulePresentation, YdFailure, YdReport,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exec::Exec;
use crate::scalars::CycNumber;

use linalg::{add_at, axpy, nonzero, same, same_map, signed, unit_vector, zeros};

/// A dense coordinate vector.
pub type Vector = Vec<CycNumber>;

/// Coordinates in a tensor square, keyed by pairs of basis indices.
pub type Tensor2 = BTreeMap<(usize, usize), CycNumber>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuperHopfError {
    #[error("malformed presentation: {0}")]
    Shape(String),
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("axioms fail: {0}")]
    Axioms(String),
    #[error("{0} is not group-like")]
    NotGroupLike(String),
    #[error("u^2 != 1")]
    NotInvolution,
    #[error("the adjoint action of u does not split into ±1 eigenspaces")]
    NotDiagonalizable,
    #[error("{0}")]
    Module(String),
}

/// Structure constants of a Hopf superalgebra on a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperHopfPresentation {
    /// Coefficients live in `Q(ζ_order)`.
    pub order: u64,
    pub labels: Vec<String>,
    pub parity: Vec<u8>,
    /// `mult[i][j]` = `e_i e_j`.
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    /// `comult[i][j][k]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub comult: Vec<Vec<Vector>>,
    pub counit: Vector,
    /// `antipode[i]` = `S(e_i)`.
    pub antipode: Vec<Vector>,
    /// Declared group-like elements.
    pub group_likes: Vec<Vector>,
}

impl SuperHopfPresentation {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> Vector {
        zeros(self.order, self.dim())
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.order, self.dim(), i)
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The basis vector with the given label.
    pub fn element(&self, label: &str) -> Option<Vector> {
        self.index(label).map(|i| self.basis(i))
    }

    pub fn check_shape(&self) -> Result<(), SuperHopfError> {
        let n = self.dim();
        let bad = |what: &str| Err(SuperHopfError::Shape(what.to_string()));
        if n == 0 {
            return bad("empty basis");
        }
        if self.parity.len() != n || self.parity.iter().any(|p| *p > 1) {
            return bad("parity vector");
        }
        let vec_ok = |v: &Vector| v.len() == n && v.iter().all(|c| c.order() == self.order);
        if self.mult.len() != n || self.mult.iter().any(|r| r.len() != n || !r.iter().all(vec_ok)) {
            return bad("multiplication table");
        }
        if self.comult.len() != n || self.comult.iter().any(|r| r.len() != n || !r.iter().all(vec_ok)) {
            return bad("comultiplication table");
        }
        if !vec_ok(&self.unit) || !vec_ok(&self.counit) {
            return bad("unit or counit");
        }
        if self.antipode.len() != n || !self.antipode.iter().all(vec_ok) {
            return bad("antipode");
        }
        if !self.group_likes.iter().all(vec_ok) {
            return bad("group-like list");
        }
        Ok(())
    }

    pub fn product(&self, a: &[CycNumber], b: &[CycNumber]) -> Vector {
        let mut out = self.zero();
        for (i, x) in nonzero(a) {
            for (j, y) in nonzero(b) {
                axpy(&mut out, &x.mul(y), &self.mult[i][j]);
            }
        }
        out
    }

    pub fn coproduct(&self, a: &[CycNumber]) -> Tensor2 {
        let mut out = Tensor2::new();
        for (i, x) in nonzero(a) {
            for (j, row) in self.comult[i].iter().enumerate() {
                for (k, c) in nonzero(row) {
                    add_at(&mut out, (j, k), &x.mul(c));
                }
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[CycNumber]) -> CycNumber {
        let mut s = CycNumber::zero(self.order);
        for (i, x) in nonzero(a) {
            s.add_assign(&x.mul(&self.counit[i]));
        }
        s
    }

    pub fn antipode_of(&self, a: &[CycNumber]) -> Vector {
        let mut out = self.zero();
        for (i, x) in nonzero(a) {
            axpy(&mut out, x, &self.antipode[i]);
        }
        out
    }

    /// `Δ(a) = a ⊗ a` and `ε(a) = 1`.
    pub fn is_group_like(&self, a: &[CycNumber]) -> bool {
        let mut aa = Tensor2::new();
        for (i, x) in nonzero(a) {
            for (j, y) in nonzero(a) {
                add_at(&mut aa, (i, j), &x.mul(y));
            }
        }
        same_map(&self.coproduct(a), &aa) && self.counit_of(a).is_one()
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn parity_of(&self, a: &[CycNumber]) -> Option<u8> {
        let mut ps = nonzero(a).map(|(i, _)| self.parity[i]);
        let p = ps.next()?;
        ps.all(|q| q == p).then_some(p)
    }

    /// All coefficients moved into `Q(ζ_order)`, `order` a multiple of the current one.
    pub fn with_order(&self, order: u64) -> Result<Self, SuperHopfError> {
        let lift = |c: &CycNumber| {
            c.embed(order)
                .map_err(|e| SuperHopfError::Shape(format!("coefficient field: {e}")))
        };
        let lv = |v: &Vector| v.iter().map(lift).collect::<Result<Vector, _>>();
        let lt = |t: &Vec<Vec<Vector>>| {
            t.iter()
                .map(|r| r.iter().map(lv).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(SuperHopfPresentation {
            order,
            labels: self.labels.clone(),
            parity: self.parity.clone(),
            mult: lt(&self.mult)?,
            unit: lv(&self.unit)?,
            comult: lt(&self.comult)?,
            counit: lv(&self.counit)?,
            antipode: self.antipode.iter().map(lv).collect::<Result<_, _>>()?,
            group_likes: self.group_likes.iter().map(lv).collect::<Result<_, _>>()?,
        })
    }

    /// Same structure constants (labels and group-like lists are ignored).
    pub fn same_structure(&self, other: &Self) -> bool {
        let tables = |a: &Vec<Vec<Vector>>, b: &Vec<Vec<Vector>>| {
            a.len() == b.len()
                && a.iter()
                    .zip(b)
                    .all(|(r, s)| r.len() == s.len() && r.iter().zip(s).all(|(x, y)| same(x, y)))
        };
        self.parity == other.parity
            && tables(&self.mult, &other.mult)
            && tables(&self.comult, &other.comult)
            && same(&self.unit, &other.unit)
            && same(&self.counit, &other.counit)
            && self.antipode.len() == other.antipode.len()
            && self.antipode.iter().zip(&other.antipode).all(|(x, y)| same(x, y))
    }

    /// Renumbers the basis: new basis vector `k` is old basis vector `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.dim();
        let mut inv = vec![0; n];
        for (k, &p) in perm.iter().enumerate() {
            inv[p] = k;
        }
        let pv = |v: &Vector| (0..n).map(|k| v[perm[k]].clone()).collect::<Vector>();
        let mut comult = vec![vec![zeros(self.order, n); n]; n];
        for (k, &p) in perm.iter().enumerate() {
            for j in 0..n {
                for (l, c) in nonzero(&self.comult[p][j]) {
                    comult[k][inv[j]][inv[l]] = c.clone();
                }
            }
        }
        SuperHopfPresentation {
            order: self.order,
            labels: perm.iter().map(|&p| self.labels[p].clone()).collect(),
            parity: perm.iter().map(|&p| self.parity[p]).collect(),
            mult: perm
                .iter()
                .map(|&a| perm.iter().map(|&b| pv(&self.mult[a][b])).collect())
                .collect(),
            unit: pv(&self.unit),
            comult,
            counit: pv(&self.counit),
            antipode: perm.iter().map(|&a| pv(&self.antipode[a])).collect(),
            group_likes: self.group_likes.iter().map(pv).collect(),
        }
    }
}

/// How `B ⊗ B` is multiplied when checking that `Δ` is multiplicative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignRule {
    /// `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`.
    #[default]
    Super,
    /// The untwisted product, as a negative control.
    Dropped,
}

/// How `b ⊗ c` is moved past itself in the product of `B ⊗ B`.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Twist<'a> {
    Sign(SignRule),
    Braided(&'a BraidingMap),
}

impl Twist<'_> {
    /// `c(e_b ⊗ e_c)` as terms `(c', b')` of `B ⊗ B`.
    fn apply(&self, h: &SuperHopfPresentation, b: usize, c: usize) -> Tensor2 {
        match self {
            Twist::Sign(rule) => {
                let odd = *rule == SignRule::Super && h.parity[b] * h.parity[c] == 1;
                Tensor2::from([((c, b), signed(&CycNumber::one(h.order), odd))])
            }
            Twist::Braided(m) => m.image(b, c),
        }
    }
}

/// Product in `B ⊗ B` twisted by `twist`.
pub(crate) fn tensor_product(h: &SuperHopfPresentation, x: &Tensor2, y: &Tensor2, twist: Twist) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((a, b), s) in x {
        for ((c, d), t) in y {
            let st = s.mul(t);
            for ((c2, b2), r) in twist.apply(h, *b, *c) {
                let coeff = st.mul(&r);
                let left = &h.mult[*a][c2];
                let right = &h.mult[b2][*d];
                for (i, l) in nonzero(left) {
                    for (j, rr) in nonzero(right) {
                        add_at(&mut out, (i, j), &coeff.mul(l).mul(rr));
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    Shape,
    Grading,
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    Multiplicativity,
    UnitCoproduct,
    CounitMultiplicative,
    Antipode,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Shape => "table shapes",
            Axiom::Grading => "grading",
            Axiom::Associativity => "associativity",
            Axiom::Unit => "unit",
            Axiom::Coassociativity => "coassociativity",
            Axiom::Counit => "counit",
            Axiom::Multiplicativity => "multiplicativity of comultiplication",
            Axiom::UnitCoproduct => "comultiplication of the unit",
            Axiom::CounitMultiplicative => "multiplicativity of counit",
            Axiom::Antipode => "antipode",
        })
    }
}

/// A failed axiom with the first basis tuple (in lexicographic order) that violates it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HopfReport {
    pub failures: Vec<AxiomFailure>,
}

impl HopfReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failure(&self, axiom: Axiom) -> Option<&AxiomFailure> {
        self.failures.iter().find(|f| f.axiom == axiom)
    }

    /// One line per failure, witnesses by basis label.
    pub fn render(&self, h: &SuperHopfPresentation) -> String {
        if self.passed() {
            return "all axioms hold\n".into();
        }
        let mut out = String::new();
        for f in &self.failures {
            let w: Vec<&str> = f.witness.iter().map(|&i| h.labels[i].as_str()).collect();
            out.push_str(&format!("FAIL {} at ({})\n", f.axiom, w.join(",")));
        }
        out
    }
}

pub fn verify_super_hopf(h: &SuperHopfPresentation) -> HopfReport {
    verify_super_hopf_with(h, SignRule::Super, Exec::default())
}

pub fn verify_super_hopf_with(h: &SuperHopfPresentation, rule: SignRule, exec: Exec) -> HopfReport {
    if h.check_shape().is_err() {
        return HopfReport {
            failures: vec![AxiomFailure {
                axiom: Axiom::Shape,
                witness: Vec::new(),
            }],
        };
    }
    check_axioms(h, Twist::Sign(rule), exec, true)
}

/// Runs the axiom checks; with `antipode == false` the antipode is not tested.
pub(crate) fn check_axioms(h: &SuperHopfPresentation, twist: Twist, exec: Exec, antipode: bool) -> HopfReport {
    let n = h.dim();
    let idx: Vec<usize> = (0..n).collect();
    let one = CycNumber::one(h.order);
    let first = |rows: Vec<Option<Vec<usize>>>| rows.into_iter().flatten().next();
    let mut failures = Vec::new();
    let mut record = |axiom: Axiom, w: Option<Vec<usize>>| {
        if let Some(witness) = w {
            failures.push(AxiomFailure { axiom, witness });
        }
    };

    record(
        Axiom::Grading,
        first(exec.map(&idx, |&i| grading_witness(h, i))).or_else(|| {
            if let Some((k, _)) = nonzero(&h.unit).find(|(k, _)| h.parity[*k] == 1) {
                return Some(vec![k]);
            }
            nonzero(&h.counit).find(|(k, _)| h.parity[*k] == 1).map(|(k, _)| vec![k])
        }),
    );

    record(
        Axiom::Associativity,
        first(exec.map(&idx, |&i| {
            for j in 0..n {
                let ij = &h.mult[i][j];
                for k in 0..n {
                    let left = h.product(ij, &h.basis(k));
                    let right = h.product(&h.basis(i), &h.mult[j][k]);
                    if !same(&left, &right) {
                        return Some(vec![i, j, k]);
                    }
                }
            }
            None
        })),
    );

    record(
        Axiom::Unit,
        first(exec.map(&idx, |&i| {
            let e = h.basis(i);
            (!same(&h.product(&h.unit, &e), &e) || !same(&h.product(&e, &h.unit), &e)).then(|| vec![i])
        })),
    );

    record(
        Axiom::Coassociativity,
        first(exec.map(&idx, |&i| {
            let d = h.coproduct(&h.basis(i));
            let mut left: BTreeMap<(usize, usize, usize), CycNumber> = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((a, b), c) in &d {
                for ((x, y), t) in h.coproduct(&h.basis(*a)) {
                    add_at(&mut left, (x, y, *b), &c.mul(&t));
                }
                for ((x, y), t) in h.coproduct(&h.basis(*b)) {
                    add_at(&mut right, (*a, x, y), &c.mul(&t));
                }
            }
            (!same_map(&left, &right)).then(|| vec![i])
        })),
    );

    record(
        Axiom::Counit,
        first(exec.map(&idx, |&i| {
            let d = h.coproduct(&h.basis(i));
            let mut left = h.zero();
            let mut right = h.zero();
            for ((a, b), c) in &d {
                left[*b].add_assign(&c.mul(&h.counit[*a]));
                right[*a].add_assign(&c.mul(&h.counit[*b]));
            }
            let e = h.basis(i);
            (!same(&left, &e) || !same(&right, &e)).then(|| vec![i])
        })),
    );

    record(
        Axiom::Multiplicativity,
        first(exec.map(&idx, |&i| {
            let di = h.coproduct(&h.basis(i));
            for j in 0..n {
                let dj = h.coproduct(&h.basis(j));
                let lhs = h.coproduct(&h.mult[i][j]);
                let rhs = tensor_product(h, &di, &dj, twist);
                if !same_map(&lhs, &rhs) {
                    return Some(vec![i, j]);
                }
            }
            None
        })),
    );

    let mut unit_unit = Tensor2::new();
    for (a, x) in nonzero(&h.unit) {
        for (b, y) in nonzero(&h.unit) {
            add_at(&mut unit_unit, (a, b), &x.mul(y));
        }
    }
    record(
        Axiom::UnitCoproduct,
        (!same_map(&h.coproduct(&h.unit), &unit_unit) || !h.counit_of(&h.unit).sub(&one).is_zero()).then(Vec::new),
    );

    record(
        Axiom::CounitMultiplicative,
        first(exec.map(&idx, |&i| {
            (0..n)
                .find(|&j| {
                    !h.counit_of(&h.mult[i][j])
                        .sub(&h.counit[i].mul(&h.counit[j]))
                        .is_zero()
                })
                .map(|j| vec![i, j])
        })),
    );

    if antipode {
        record(Axiom::Antipode, first(exec.map(&idx, |&i| antipode_witness(h, i))));
    }
    HopfReport { failures }
}

fn grading_witness(h: &SuperHopfPresentation, i: usize) -> Option<Vec<usize>> {
    let n = h.dim();
    for j in 0..n {
        if let Some((k, _)) = nonzero(&h.mult[i][j]).find(|(k, _)| h.parity[*k] != (h.parity[i] + h.parity[j]) % 2) {
            return Some(vec![i, j, k]);
        }
        if let Some((k, _)) = nonzero(&h.comult[i][j]).find(|(k, _)| (h.parity[j] + h.parity[*k]) % 2 != h.parity[i]) {
            return Some(vec![i, j, k]);
        }
    }
    nonzero(&h.antipode[i])
        .find(|(j, _)| h.parity[*j] != h.parity[i])
        .map(|(j, _)| vec![i, j])
}

/// `m(S⊗id)Δ(e_i)` and `m(id⊗S)Δ(e_i)` against `ε(e_i)1`.
fn antipode_witness(h: &SuperHopfPresentation, i: usize) -> Option<Vec<usize>> {
    let d = h.coproduct(&h.basis(i));
    let mut left = h.zero();
    let mut right = h.zero();
    for ((a, b), c) in &d {
        let sa = &h.antipode[*a];
        let sb = &h.antipode[*b];
        axpy(&mut left, c, &h.product(sa, &h.basis(*b)));
        axpy(&mut right, c, &h.product(&h.basis(*a), sb));
    }
    let mut target = h.zero();
    axpy(&mut target, &h.counit[i], &h.unit);
    (!same(&left, &target) || !same(&right, &target)).then(|| vec![i])
}

/// The convolution inverse of the identity, found by solving the linear
/// system `m(S⊗id)Δ = uε` for the matrix of `S`.
pub(crate) fn solve_antipode(h: &SuperHopfPresentation) -> Option<Vec<Vector>> {
    let n = h.dim();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..n {
        let d = h.coproduct(&h.basis(i));
        for t in 0..n {
            // unknown s[a][j] sits in column a*n + j
            let mut row = zeros(h.order, n * n);
            for ((a, b), c) in &d {
                for j in 0..n {
                    let m = &h.mult[j][*b][t];
                    if !m.is_zero() {
                        row[a * n + j].add_assign(&c.mul(m));
                    }
                }
            }
            rows.push(row);
            rhs.push(h.counit[i].mul(&h.unit[t]));
        }
    }
    let s = linalg::solve_unique(&rows, &rhs, h.order)?;
    Some((0..n).map(|a| s[a * n..(a + 1) * n].to_vec()).collect())
}
