use crate::exec::Exec;

use super::bosonize::smash;
use super::linalg::{add_at, nonzero, same, same_map, signed, zeros};
use super::modules::{tensor_supermodules, verify_yd_compat, yd_braiding, SuperModulePresentation};
use super::{check_axioms, SuperHopfError, SuperHopfPresentation, Tensor2, Twist, Vector};

/// A Hopf algebra `R` in the category of Yetter–Drinfeld supermodules over
/// some `H`: structure constants plus the action and coaction on the same basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedHopfData {
    pub algebra: SuperHopfPresentation,
    pub yd: SuperModulePresentation,
}

fn fail<T>(msg: String) -> Result<T, SuperHopfError> {
    Err(SuperHopfError::Module(msg))
}

/// Yetter–Drinfeld compatibility, the braided Hopf axioms (with `R ⊗ R`
/// multiplied through the braiding) and that the structure maps are module
/// and comodule maps.
pub fn verify_braided_hopf(r: &BraidedHopfData, h: &SuperHopfPresentation) -> Result<(), SuperHopfError> {
    let a = &r.algebra;
    a.check_shape()?;
    if r.yd.labels.len() != a.dim() || r.yd.parity != a.parity {
        return fail("module basis differs from the algebra basis".into());
    }
    if let Some(f) = verify_yd_compat(h, &r.yd).failures.first() {
        return fail(format!("not a Yetter–Drinfeld supermodule: {f:?}"));
    }
    let c = yd_braiding(h, &r.yd, &r.yd)?;
    let report = check_axioms(a, Twist::Braided(&c), Exec::default(), true);
    if !report.passed() {
        return Err(SuperHopfError::Axioms(report.render(a).trim_end().to_string()));
    }
    let rr = tensor_supermodules(h, &r.yd, &r.yd)?;
    let n = a.dim();
    let flat = |t: &Tensor2| -> Vector {
        let mut v = zeros(a.order, n * n);
        for ((x, y), c) in t {
            v[x * n + y] = c.clone();
        }
        v
    };
    // m(v) for v in R ⊗ R
    let mult = |v: &Vector| -> Vector {
        let mut out = a.zero();
        for (k, c) in nonzero(v) {
            for (j, m) in nonzero(&a.mult[k / n][k % n]) {
                out[j].add_assign(&c.mul(m));
            }
        }
        out
    };
    // (id ⊗ f) applied to coaction terms (h, w)
    let co_map = |t: &Tensor2, f: &dyn Fn(usize) -> Vector| -> Tensor2 {
        let mut out = Tensor2::new();
        for ((k, w), c) in t {
            for (j, m) in nonzero(&f(*w)) {
                add_at(&mut out, (*k, j), &c.mul(m));
            }
        }
        out
    };
    for x in 0..h.dim() {
        for k in 0..n * n {
            let e = rr.basis(k);
            if !same(&r.yd.act(&h.basis(x), &mult(&e)), &mult(&rr.act(&h.basis(x), &e))) {
                return fail(format!("multiplication is not {}-linear", h.labels[x]));
            }
        }
        for b in 0..n {
            let db = flat(&a.coproduct(&a.basis(b)));
            let lhs = flat(&a.coproduct(&r.yd.action[x][b]));
            if !same(&lhs, &rr.act(&h.basis(x), &db)) {
                return fail(format!("comultiplication is not {}-linear", h.labels[x]));
            }
            let e = a.counit_of(&r.yd.action[x][b]);
            if !e.sub(&h.counit[x].mul(&a.counit[b])).is_zero() {
                return fail(format!("counit is not {}-linear", h.labels[x]));
            }
        }
        let u = r.yd.act(&h.basis(x), &a.unit);
        let mut eu = a.zero();
        for (i, c) in nonzero(&a.unit) {
            eu[i] = c.mul(&h.counit[x]);
        }
        if !same(&u, &eu) {
            return fail(format!("unit is not {}-linear", h.labels[x]));
        }
    }
    for k in 0..n * n {
        let e = rr.basis(k);
        let lhs = r.yd.coact(&mult(&e));
        let rhs = co_map(&rr.coact(&e), &|w| mult(&rr.basis(w)));
        if !same_map(&lhs, &rhs) {
            return fail("multiplication is not colinear".into());
        }
    }
    for b in 0..n {
        let lhs = rr.coact(&flat(&a.coproduct(&a.basis(b))));
        let rhs = co_map(&r.yd.coact(&a.basis(b)), &|w| flat(&a.coproduct(&a.basis(w))));
        if !same_map(&lhs, &rhs) {
            return fail("comultiplication is not colinear".into());
        }
        let mut lhs = h.zero();
        for ((k, w), c) in r.yd.coact(&a.basis(b)) {
            lhs[k].add_assign(&c.mul(&a.counit[w]));
        }
        let mut rhs = h.zero();
        for (i, c) in nonzero(&h.unit) {
            rhs[i] = c.mul(&a.counit[b]);
        }
        if !same(&lhs, &rhs) {
            return fail("counit is not colinear".into());
        }
    }
    let mut one_one = Tensor2::new();
    for (i, c) in nonzero(&h.unit) {
        for (j, d) in nonzero(&a.unit) {
            add_at(&mut one_one, (i, j), &c.mul(d));
        }
    }
    if !same_map(&r.yd.coact(&a.unit), &one_one) {
        return fail("unit is not colinear".into());
    }
    Ok(())
}

/// `R # H` on the basis `r_a # h_i` (index `a·dim H + i`) with
/// `(a#h)(b#f) = (−1)^{|h^(2)||b|} a(h^(1)·b) # h^(2)f`,
/// `Δ(a#h) = (−1)^{|(a^(2))_(0)||h^(1)|} a^(1) # (a^(2))_(−1)h^(1) ⊗ (a^(2))_(0) # h^(2)`,
/// `ε(a#h) = ε(a)ε(h)` and
/// `S(a#h) = (−1)^{|a_(0)||h|} (1 # S(a_(−1)h))(S(a_(0)) # 1)`.
pub fn biproduct(r: &BraidedHopfData, h: &SuperHopfPresentation) -> Result<SuperHopfPresentation, SuperHopfError> {
    verify_braided_hopf(r, h)?;
    let a = &r.algebra;
    if a.order != h.order {
        return Err(SuperHopfError::Shape("R and H use different coefficient fields".into()));
    }
    let (nr, nh) = (a.dim(), h.dim());
    let d = nr * nh;
    let idx = |x: usize, i: usize| x * nh + i;
    let pr = |x: usize| a.parity[x] as usize;
    let ph = |i: usize| h.parity[i] as usize;
    let mut labels = Vec::with_capacity(d);
    let mut parity = Vec::with_capacity(d);
    for x in 0..nr {
        for i in 0..nh {
            labels.push(format!("{}#{}", a.labels[x], h.labels[i]));
            parity.push(((pr(x) + ph(i)) % 2) as u8);
        }
    }
    let mut mult = vec![vec![zeros(h.order, d); d]; d];
    for x in 0..nr {
        for i in 0..nh {
            let di = h.coproduct(&h.basis(i));
            for y in 0..nr {
                for f in 0..nh {
                    let out = &mut mult[idx(x, i)][idx(y, f)];
                    for ((i1, i2), c) in &di {
                        let c = signed(c, ph(*i2) * pr(y) % 2 == 1);
                        let left = a.product(&a.basis(x), &r.yd.action[*i1][y]);
                        let right = &h.mult[*i2][f];
                        for (s, l) in nonzero(&left) {
                            for (t, m) in nonzero(right) {
                                out[idx(s, t)].add_assign(&c.mul(l).mul(m));
                            }
                        }
                    }
                }
            }
        }
    }
    let mut comult = vec![vec![zeros(h.order, d); d]; d];
    for x in 0..nr {
        let dx = a.coproduct(&a.basis(x));
        for i in 0..nh {
            let di = h.coproduct(&h.basis(i));
            let out = &mut comult[idx(x, i)];
            for ((x1, x2), c) in &dx {
                for ((k, x20), s) in r.yd.coact(&a.basis(*x2)) {
                    for ((i1, i2), t) in &di {
                        let sign = pr(x20) * ph(*i1) % 2 == 1;
                        let coeff = signed(&c.mul(&s).mul(t), sign);
                        for (j, m) in nonzero(&h.mult[k][*i1]) {
                            out[idx(*x1, j)][idx(x20, *i2)].add_assign(&coeff.mul(m));
                        }
                    }
                }
            }
        }
    }
    let mut counit = zeros(h.order, d);
    let mut unit = zeros(h.order, d);
    for x in 0..nr {
        for i in 0..nh {
            counit[idx(x, i)] = a.counit[x].mul(&h.counit[i]);
            unit[idx(x, i)] = a.unit[x].mul(&h.unit[i]);
        }
    }
    let mut out = SuperHopfPresentation {
        order: h.order,
        labels,
        parity,
        mult,
        unit,
        comult,
        counit,
        antipode: vec![zeros(h.order, d); d],
        group_likes: Vec::new(),
    };
    let embed_h = |v: &Vector| -> Vector {
        let mut e = zeros(h.order, d);
        for (x, c) in nonzero(&a.unit) {
            for (i, s) in nonzero(v) {
                e[idx(x, i)] = c.mul(s);
            }
        }
        e
    };
    let embed_r = |v: &Vector| -> Vector {
        let mut e = zeros(h.order, d);
        for (x, c) in nonzero(v) {
            for (i, s) in nonzero(&h.unit) {
                e[idx(x, i)] = c.mul(s);
            }
        }
        e
    };
    let mut antipode = vec![zeros(h.order, d); d];
    for x in 0..nr {
        for i in 0..nh {
            let target = &mut antipode[idx(x, i)];
            for ((k, x0), c) in r.yd.coact(&a.basis(x)) {
                let c = signed(&c, pr(x0) * ph(i) % 2 == 1);
                let s_h = h.antipode_of(&h.mult[k][i]);
                let prod = out.product(&embed_h(&s_h), &embed_r(&a.antipode[x0]));
                for (j, v) in nonzero(&prod) {
                    target[j].add_assign(&c.mul(v));
                }
            }
        }
    }
    out.antipode = antipode;
    out.group_likes = h.group_likes.iter().map(embed_h).collect();
    Ok(out)
}

/// `incl(R)`: the same algebra, purely even, as a Yetter–Drinfeld module over
/// `H^σ` with `(h#σ^k)·v = (−1)^{k|v|} h·v` and `δ(v) = v^(−1)#σ^{|v^(0)|} ⊗ v^(0)`.
pub fn inclusion_over_bosonization(r: &BraidedHopfData, h: &SuperHopfPresentation) -> (BraidedHopfData, SuperHopfPresentation) {
    let hs = smash(h);
    let (n, nh) = (r.algebra.dim(), h.dim());
    let mut action = vec![vec![zeros(h.order, n); n]; 2 * nh];
    for k in 0..nh {
        for e in 0..2 {
            for v in 0..n {
                let odd = e * r.algebra.parity[v] as usize == 1;
                action[k + nh * e][v] = r.yd.action[k][v].iter().map(|c| signed(c, odd)).collect();
            }
        }
    }
    let coaction = r.yd.coaction.as_ref().map(|co| {
        (0..n)
            .map(|v| {
                let mut rows = vec![zeros(h.order, n); 2 * nh];
                for (k, row) in co[v].iter().enumerate() {
                    for (w, c) in nonzero(row) {
                        rows[k + nh * r.algebra.parity[w] as usize][w] = c.clone();
                    }
                }
                rows
            })
            .collect()
    });
    let zero_parity = vec![0; n];
    let incl = BraidedHopfData {
        algebra: SuperHopfPresentation {
            parity: zero_parity.clone(),
            ..r.algebra.clone()
        },
        yd: SuperModulePresentation {
            order: h.order,
            labels: r.yd.labels.clone(),
            parity: zero_parity,
            action,
            coaction,
        },
    };
    (incl, hs)
}
