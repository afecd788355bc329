use std::collections::BTreeMap;

use num_integer::Integer;

use crate::braiding::YDDatum;
use crate::scalars::CycNumber;

use super::linalg::{add_at, axpy, nonzero, same, same_map, signed, unit_vector, zeros};
use super::{SuperHopfError, SuperHopfPresentation, Tensor2, Vector};

/// A left supermodule over a presented `H`, optionally with a left coaction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperModulePresentation {
    pub order: u64,
    pub labels: Vec<String>,
    pub parity: Vec<u8>,
    /// `action[h][v]` = `e_h · v_v`.
    pub action: Vec<Vec<Vector>>,
    /// `coaction[v][h][w]` is the coefficient of `e_h ⊗ v_w` in `δ(v_v)`.
    pub coaction: Option<Vec<Vec<Vector>>>,
}

impl SuperModulePresentation {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.order, self.dim(), i)
    }

    pub fn act(&self, h: &[CycNumber], v: &[CycNumber]) -> Vector {
        let mut out = zeros(self.order, self.dim());
        for (i, x) in nonzero(h) {
            for (j, y) in nonzero(v) {
                axpy(&mut out, &x.mul(y), &self.action[i][j]);
            }
        }
        out
    }

    /// `δ(v)` as terms `(h, w)`; empty without a coaction.
    pub fn coact(&self, v: &[CycNumber]) -> Tensor2 {
        let mut out = Tensor2::new();
        let Some(co) = &self.coaction else {
            return out;
        };
        for (i, x) in nonzero(v) {
            for (h, row) in co[i].iter().enumerate() {
                for (w, c) in nonzero(row) {
                    add_at(&mut out, (h, w), &x.mul(c));
                }
            }
        }
        out
    }
}

fn fail<T>(msg: String) -> Result<T, SuperHopfError> {
    Err(SuperHopfError::Module(msg))
}

/// Shape, parity, unit and associativity of the action.
pub fn verify_module(h: &SuperHopfPresentation, v: &SuperModulePresentation) -> Result<(), SuperHopfError> {
    let (n, m) = (h.dim(), v.dim());
    if v.parity.len() != m
        || v.action.len() != n
        || v.action.iter().any(|r| r.len() != m || r.iter().any(|x| x.len() != m))
    {
        return fail("action table has the wrong shape".into());
    }
    for a in 0..n {
        for b in 0..m {
            if let Some((c, _)) = nonzero(&v.action[a][b]).find(|(c, _)| v.parity[*c] != (h.parity[a] + v.parity[b]) % 2) {
                return fail(format!(
                    "action {}·{} -> {} breaks parity",
                    h.labels[a], v.labels[b], v.labels[c]
                ));
            }
        }
    }
    for b in 0..m {
        if !same(&v.act(&h.unit, &v.basis(b)), &v.basis(b)) {
            return fail(format!("unit does not fix {}", v.labels[b]));
        }
    }
    for a in 0..n {
        for c in 0..n {
            for b in 0..m {
                let left = v.act(&h.mult[a][c], &v.basis(b));
                let right = v.act(&h.basis(a), &v.action[c][b]);
                if !same(&left, &right) {
                    return fail(format!(
                        "({}{})·{} != {}·({}·{})",
                        h.labels[a], h.labels[c], v.labels[b], h.labels[a], h.labels[c], v.labels[b]
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Shape, parity, coassociativity and counit of the coaction.
pub fn verify_comodule(h: &SuperHopfPresentation, v: &SuperModulePresentation) -> Result<(), SuperHopfError> {
    let (n, m) = (h.dim(), v.dim());
    let Some(co) = &v.coaction else {
        return fail("no coaction".into());
    };
    if co.len() != m || co.iter().any(|r| r.len() != n || r.iter().any(|x| x.len() != m)) {
        return fail("coaction table has the wrong shape".into());
    }
    for b in 0..m {
        let d = v.coact(&v.basis(b));
        if let Some(((k, w), _)) = d.iter().find(|((k, w), _)| (h.parity[*k] + v.parity[*w]) % 2 != v.parity[b]) {
            return fail(format!(
                "coaction of {} has term {}⊗{} of the wrong parity",
                v.labels[b], h.labels[*k], v.labels[*w]
            ));
        }
        let mut left: BTreeMap<(usize, usize, usize), CycNumber> = BTreeMap::new();
        let mut right = BTreeMap::new();
        let mut counit = zeros(v.order, m);
        for ((k, w), c) in &d {
            for ((x, y), t) in h.coproduct(&h.basis(*k)) {
                add_at(&mut left, (x, y, *w), &c.mul(&t));
            }
            for ((x, y), t) in v.coact(&v.basis(*w)) {
                add_at(&mut right, (*k, x, y), &c.mul(&t));
            }
            counit[*w].add_assign(&c.mul(&h.counit[*k]));
        }
        if !same_map(&left, &right) {
            return fail(format!("coaction is not coassociative on {}", v.labels[b]));
        }
        if !same(&counit, &v.basis(b)) {
            return fail(format!("coaction is not counital on {}", v.labels[b]));
        }
    }
    Ok(())
}

/// `𝕜` with `h·1 = ε(h)1` and `δ(1) = 1 ⊗ 1`.
pub fn trivial_module(h: &SuperHopfPresentation) -> SuperModulePresentation {
    let one = |c: &CycNumber| vec![c.clone()];
    SuperModulePresentation {
        order: h.order,
        labels: vec!["k".into()],
        parity: vec![0],
        action: h.counit.iter().map(|c| vec![one(c)]).collect(),
        coaction: Some(vec![h.unit.iter().map(one).collect()]),
    }
}

/// `H` acting on itself by left multiplication.
pub fn regular_module(h: &SuperHopfPresentation) -> SuperModulePresentation {
    SuperModulePresentation {
        order: h.order,
        labels: h.labels.clone(),
        parity: h.parity.clone(),
        action: h.mult.clone(),
        coaction: None,
    }
}

/// `V ⊗ W` with `h·(v⊗w) = (−1)^{|h^(2)||v|} h^(1)·v ⊗ h^(2)·w`, basis
/// vector `a·dim W + b` being `v_a ⊗ w_b`. When both carry coactions, the
/// tensor coaction `δ(v⊗w) = (−1)^{|v^(0)||w^(−1)|} v^(−1)w^(−1) ⊗ v^(0) ⊗ w^(0)`
/// is included.
pub fn tensor_supermodules(
    h: &SuperHopfPresentation,
    v: &SuperModulePresentation,
    w: &SuperModulePresentation,
) -> Result<SuperModulePresentation, SuperHopfError> {
    verify_module(h, v)?;
    verify_module(h, w)?;
    let (n, dv, dw) = (h.dim(), v.dim(), w.dim());
    let d = dv * dw;
    let mut labels = Vec::with_capacity(d);
    let mut parity = Vec::with_capacity(d);
    for a in 0..dv {
        for b in 0..dw {
            labels.push(format!("{}|{}", v.labels[a], w.labels[b]));
            parity.push((v.parity[a] + w.parity[b]) % 2);
        }
    }
    let mut action = vec![vec![zeros(h.order, d); d]; n];
    for x in 0..n {
        let dx = h.coproduct(&h.basis(x));
        for a in 0..dv {
            for b in 0..dw {
                let out = &mut action[x][a * dw + b];
                for ((x1, x2), c) in &dx {
                    let c = signed(c, h.parity[*x2] * v.parity[a] == 1);
                    for (a2, s) in nonzero(&v.action[*x1][a]) {
                        for (b2, t) in nonzero(&w.action[*x2][b]) {
                            out[a2 * dw + b2].add_assign(&c.mul(s).mul(t));
                        }
                    }
                }
            }
        }
    }
    let coaction = match (&v.coaction, &w.coaction) {
        (Some(_), Some(_)) => {
            let mut co = vec![vec![zeros(h.order, d); n]; d];
            for a in 0..dv {
                let da = v.coact(&v.basis(a));
                for b in 0..dw {
                    let db = w.coact(&w.basis(b));
                    for ((ka, a0), s) in &da {
                        for ((kb, b0), t) in &db {
                            let c = signed(&s.mul(t), v.parity[*a0] * h.parity[*kb] == 1);
                            for (k, m) in nonzero(&h.mult[*ka][*kb]) {
                                co[a * dw + b][k][a0 * dw + b0].add_assign(&c.mul(m));
                            }
                        }
                    }
                }
            }
            Some(co)
        }
        _ => None,
    };
    Ok(SuperModulePresentation {
        order: h.order,
        labels,
        parity,
        action,
        coaction,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YdFailure {
    Module(String),
    Comodule(String),
    /// The compatibility fails on `e_h` and `v_v`.
    Compatibility { h: usize, v: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct YdReport {
    pub failures: Vec<YdFailure>,
}

impl YdReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `δ(h·v) = Σ ± h^(1)v^(−1)S(h^(3)) ⊗ h^(2)·v^(0)` with sign
/// `(−1)^{|v^(−1)|(|h^(2)|+|h^(3)|) + |h^(2)||h^(3)|}` on all basis pairs.
pub fn verify_yd_compat(h: &SuperHopfPresentation, v: &SuperModulePresentation) -> YdReport {
    let mut failures = Vec::new();
    if let Err(SuperHopfError::Module(m)) = verify_module(h, v) {
        failures.push(YdFailure::Module(m));
    }
    if let Err(SuperHopfError::Module(m)) = verify_comodule(h, v) {
        failures.push(YdFailure::Comodule(m));
    }
    if !failures.is_empty() {
        return YdReport { failures };
    }
    let p = |i: usize| h.parity[i] as usize;
    'outer: for x in 0..h.dim() {
        let mut d2: BTreeMap<(usize, usize, usize), CycNumber> = BTreeMap::new();
        for ((a, c), s) in h.coproduct(&h.basis(x)) {
            for ((a1, a2), t) in h.coproduct(&h.basis(a)) {
                add_at(&mut d2, (a1, a2, c), &s.mul(&t));
            }
        }
        for b in 0..v.dim() {
            let lhs = v.coact(&v.action[x][b]);
            let mut rhs = Tensor2::new();
            for ((k, w), c) in v.coact(&v.basis(b)) {
                for ((x1, x2, x3), t) in &d2 {
                    let odd = (p(k) * (p(*x2) + p(*x3)) + p(*x2) * p(*x3)) % 2 == 1;
                    let coeff = signed(&c.mul(t), odd);
                    let left = h.product(&h.product(&h.basis(*x1), &h.basis(k)), &h.antipode[*x3]);
                    for (i, l) in nonzero(&left) {
                        for (j, r) in nonzero(&v.action[*x2][w]) {
                            add_at(&mut rhs, (i, j), &coeff.mul(l).mul(r));
                        }
                    }
                }
            }
            if !same_map(&lhs, &rhs) {
                failures.push(YdFailure::Compatibility { h: x, v: b });
                break 'outer;
            }
        }
    }
    YdReport { failures }
}

/// A linear map `V ⊗ W → W ⊗ V`; `cols[a·dim W + b]` is the image of
/// `v_a ⊗ w_b` on the basis `w_{b'} ⊗ v_{a'}` indexed `b'·dim V + a'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidingMap {
    pub order: u64,
    pub dim_v: usize,
    pub dim_w: usize,
    pub cols: Vec<Vector>,
}

impl BraidingMap {
    /// `c(v_a ⊗ w_b)` as terms `(b', a')`.
    pub fn image(&self, a: usize, b: usize) -> Tensor2 {
        nonzero(&self.cols[a * self.dim_w + b])
            .map(|(k, c)| ((k / self.dim_v, k % self.dim_v), c.clone()))
            .collect()
    }
}

/// `c(x⊗y) = (−1)^{|x^(0)||y|} x^(−1)·y ⊗ x^(0)`.
pub fn yd_braiding(
    h: &SuperHopfPresentation,
    v: &SuperModulePresentation,
    w: &SuperModulePresentation,
) -> Result<BraidingMap, SuperHopfError> {
    for m in [v, w] {
        if let Some(f) = verify_yd_compat(h, m).failures.first() {
            return fail(format!("not a Yetter–Drinfeld supermodule: {f:?}"));
        }
    }
    let (dv, dw) = (v.dim(), w.dim());
    let mut cols = vec![zeros(h.order, dv * dw); dv * dw];
    for a in 0..dv {
        for ((k, a0), c) in v.coact(&v.basis(a)) {
            for b in 0..dw {
                let c = signed(&c, v.parity[a0] * w.parity[b] == 1);
                for (b2, t) in nonzero(&w.action[k][b]) {
                    cols[a * dw + b][b2 * dv + a0].add_assign(&c.mul(t));
                }
            }
        }
    }
    Ok(BraidingMap {
        order: h.order,
        dim_v: dv,
        dim_w: dw,
        cols,
    })
}

/// `c_12 c_23 c_12 = c_23 c_12 c_23` on `V^{⊗3}` for `c: V⊗V → V⊗V`.
pub fn yang_baxter_holds(c: &BraidingMap) -> bool {
    assert_eq!(c.dim_v, c.dim_w, "a self-braiding");
    let m = c.dim_v;
    type T3 = BTreeMap<(usize, usize, usize), CycNumber>;
    let c12 = |t: &T3| -> T3 {
        let mut out = T3::new();
        for ((a, b, d), s) in t {
            for ((b2, a2), r) in c.image(*a, *b) {
                add_at(&mut out, (b2, a2, *d), &s.mul(&r));
            }
        }
        out
    };
    let c23 = |t: &T3| -> T3 {
        let mut out = T3::new();
        for ((a, b, d), s) in t {
            for ((d2, b2), r) in c.image(*b, *d) {
                add_at(&mut out, (*a, d2, b2), &s.mul(&r));
            }
        }
        out
    };
    (0..m * m * m).all(|i| {
        let t = T3::from([((i / (m * m), i / m % m, i % m), CycNumber::one(c.order))]);
        same_map(&c12(&c23(&c12(&t))), &c23(&c12(&c23(&t))))
    })
}

/// The group algebra of `Γ = ∏ Z/m_t` and the module `V` of a diagonal
/// datum: `g·x_j = χ_j(g) x_j`, `δ(x_j) = g_j ⊗ x_j`, parity `k_j`.
pub fn yd_from_datum(d: &YDDatum) -> (SuperHopfPresentation, SuperModulePresentation) {
    let orders = &d.group_orders;
    let l = orders.iter().fold(1u64, |a, m| a.lcm(m));
    let size: usize = orders.iter().map(|&m| m as usize).product();
    let digits = |mut i: usize| -> Vec<u64> {
        let mut out = vec![0; orders.len()];
        for t in (0..orders.len()).rev() {
            out[t] = (i % orders[t] as usize) as u64;
            i /= orders[t] as usize;
        }
        out
    };
    let index = |g: &[u64]| -> usize {
        g.iter()
            .zip(orders)
            .fold(0usize, |acc, (x, m)| acc * *m as usize + (*x % m) as usize)
    };
    let elems: Vec<Vec<u64>> = (0..size).map(digits).collect();
    let label = |g: &[u64]| {
        let s: Vec<String> = g.iter().map(u64::to_string).collect();
        format!("g{}", s.join("."))
    };
    let e = |i: usize| unit_vector(l, size, i);
    let mut mult = vec![vec![zeros(l, size); size]; size];
    let mut comult = vec![vec![zeros(l, size); size]; size];
    let mut antipode = vec![zeros(l, size); size];
    for (a, ga) in elems.iter().enumerate() {
        for (b, gb) in elems.iter().enumerate() {
            let sum: Vec<u64> = ga.iter().zip(gb).map(|(x, y)| x + y).collect();
            mult[a][b] = e(index(&sum));
        }
        comult[a][a] = e(a);
        let neg: Vec<u64> = ga.iter().zip(orders).map(|(x, m)| (m - x) % m).collect();
        antipode[a] = e(index(&neg));
    }
    let hopf = SuperHopfPresentation {
        order: l,
        labels: elems.iter().map(|g| label(g)).collect(),
        parity: vec![0; size],
        mult,
        unit: e(0),
        comult,
        counit: vec![CycNumber::one(l); size],
        antipode,
        group_likes: (0..size).map(e).collect(),
    };
    let theta = d.theta();
    let chi = |g: &[u64], j: usize| -> CycNumber {
        let k: u64 = (0..orders.len()).map(|t| g[t] * d.chi[j][t] * (l / orders[t])).sum();
        CycNumber::root(l, (k % l) as i64)
    };
    let mut action = vec![vec![zeros(l, theta); theta]; size];
    for (a, g) in elems.iter().enumerate() {
        for j in 0..theta {
            action[a][j][j] = chi(g, j);
        }
    }
    let mut coaction = vec![vec![zeros(l, theta); size]; theta];
    for j in 0..theta {
        coaction[j][index(&d.g[j])][j] = CycNumber::one(l);
    }
    let module = SuperModulePresentation {
        order: l,
        labels: (1..=theta).map(|j| format!("x{j}")).collect(),
        parity: d.parity.clone(),
        action,
        coaction: Some(coaction),
    };
    (hopf, module)
}
