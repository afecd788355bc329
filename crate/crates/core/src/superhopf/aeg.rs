use crate::exec::Exec;
use crate::scalars::CycNumber;

use super::bosonize::{sigma, smash};
use super::linalg::{axpy, invert, nonzero, same, signed, zeros, Rref};
use super::{solve_antipode, verify_super_hopf_with, SignRule, SuperHopfError, SuperHopfPresentation, Vector};

/// One side of the correspondence: a Hopf superalgebra with a distinguished
/// group-like involution (`u` for an ordinary `𝓗`, `g` for a super `H`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AegPair {
    pub hopf: SuperHopfPresentation,
    pub element: Vector,
}

/// Forward for a purely even input, backward otherwise.
pub fn aeg_transform(input: &AegPair) -> Result<AegPair, SuperHopfError> {
    if input.hopf.parity.iter().all(|&p| p == 0) {
        aeg_forward(&input.hopf, &input.element)
    } else {
        aeg_backward(&input.hopf, &input.element)
    }
}

fn require_hopf(h: &SuperHopfPresentation) -> Result<(), SuperHopfError> {
    h.check_shape()?;
    let r = verify_super_hopf_with(h, SignRule::Super, Exec::default());
    if r.passed() {
        Ok(())
    } else {
        Err(SuperHopfError::Axioms(r.render(h).trim_end().to_string()))
    }
}

fn require_involution(h: &SuperHopfPresentation, u: &[CycNumber], name: &str) -> Result<(), SuperHopfError> {
    if u.len() != h.dim() || !h.is_group_like(u) {
        return Err(SuperHopfError::NotGroupLike(name.to_string()));
    }
    if !same(&h.product(u, u), &h.unit) {
        return Err(SuperHopfError::NotInvolution);
    }
    Ok(())
}

/// From an ordinary `𝓗` and a group-like `u` with `u² = 1` to the super `H`
/// graded by the adjoint action of `u`, with
/// `Δ_super(h) = Δ_0(h) + Σ h^(1)u ⊗ h^(2)` summed over `Δ_1(h)`, where `Δ_k`
/// collects the terms whose right factor has parity `k`.
pub fn aeg_forward(h: &SuperHopfPresentation, u: &[CycNumber]) -> Result<AegPair, SuperHopfError> {
    forward_with(h, u, Placement::Right)
}

/// Where `u` multiplies the left factor of `Δ_1(h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Placement {
    /// `h^(1) u ⊗ h^(2)`.
    Right,
    /// `(−1)^{|h|} u h^(1) ⊗ h^(2)`; not coassociative in general.
    #[cfg_attr(not(test), allow(dead_code))]
    SignedLeft,
}

pub(crate) fn forward_with(h: &SuperHopfPresentation, u: &[CycNumber], placement: Placement) -> Result<AegPair, SuperHopfError> {
    require_hopf(h)?;
    if h.parity.iter().any(|&p| p != 0) {
        return Err(SuperHopfError::Shape("forward direction needs a purely even Hopf algebra".into()));
    }
    require_involution(h, u, "u")?;
    let n = h.dim();
    let ad = |v: &Vector| h.product(&h.product(u, v), u);
    let half = CycNumber::from_rational(h.order, num_rational::BigRational::new(1.into(), 2.into()));

    // eigenbasis of Ad u, keeping basis vectors that already are eigenvectors
    let mut cols: Vec<Vector> = Vec::new();
    let mut parity = Vec::new();
    let homogeneous: Option<Vec<u8>> = (0..n)
        .map(|i| {
            let e = h.basis(i);
            let a = ad(&e);
            if same(&a, &e) {
                Some(0)
            } else if same(&a, &e.iter().map(CycNumber::neg).collect::<Vector>()) {
                Some(1)
            } else {
                None
            }
        })
        .collect();
    let labels = match homogeneous {
        Some(ps) => {
            cols = (0..n).map(|i| h.basis(i)).collect();
            parity = ps;
            h.labels.clone()
        }
        None => {
            let mut ech = Rref::new();
            for i in 0..n {
                let e = h.basis(i);
                let a = ad(&e);
                for (p, sign) in [(0u8, false), (1u8, true)] {
                    let mut v = e.clone();
                    axpy(&mut v, &signed(&CycNumber::one(h.order), sign), &a);
                    let v: Vector = v.iter().map(|c| c.mul(&half)).collect();
                    if ech.insert(&v) {
                        cols.push(v);
                        parity.push(p);
                    }
                }
            }
            if cols.len() != n {
                return Err(SuperHopfError::NotDiagonalizable);
            }
            (0..n).map(|k| format!("b{}", k + 1)).collect()
        }
    };
    let base = change_basis(h, &cols, labels, parity.clone()).ok_or(SuperHopfError::NotDiagonalizable)?;
    let u_new = base.coordinates(u);
    let mut out = SuperHopfPresentation {
        comult: vec![vec![zeros(h.order, n); n]; n],
        ..base.hopf.clone()
    };
    for a in 0..n {
        for (x, row) in base.hopf.comult[a].iter().enumerate() {
            for (y, c) in nonzero(row) {
                if parity[y] == 0 {
                    out.comult[a][x][y].add_assign(c);
                    continue;
                }
                let moved = match placement {
                    Placement::Right => out.product(&out.basis(x), &u_new),
                    Placement::SignedLeft => out
                        .product(&u_new, &out.basis(x))
                        .iter()
                        .map(|v| signed(v, parity[a] == 1))
                        .collect(),
                };
                for (x2, m) in nonzero(&moved) {
                    out.comult[a][x2][y].add_assign(&c.mul(m));
                }
            }
        }
    }
    out.antipode = solve_antipode(&out).ok_or_else(|| SuperHopfError::Axioms("no antipode".into()))?;
    Ok(AegPair { hopf: out, element: u_new })
}

/// Structure constants on a new basis given by its coordinate columns.
pub(crate) struct Rebased {
    pub hopf: SuperHopfPresentation,
    inv: Vec<Vector>,
}

impl Rebased {
    pub fn coordinates(&self, v: &[CycNumber]) -> Vector {
        let mut out = zeros(self.hopf.order, self.hopf.dim());
        for (i, c) in nonzero(v) {
            axpy(&mut out, c, &self.inv[i]);
        }
        out
    }
}

pub(crate) fn change_basis(
    h: &SuperHopfPresentation,
    cols: &[Vector],
    labels: Vec<String>,
    parity: Vec<u8>,
) -> Option<Rebased> {
    let n = h.dim();
    let inv = invert(cols, h.order)?;
    let coords = |v: &Vector| -> Vector {
        let mut out = zeros(h.order, n);
        for (i, c) in nonzero(v) {
            axpy(&mut out, c, &inv[i]);
        }
        out
    };
    let mut comult = vec![vec![zeros(h.order, n); n]; n];
    for (a, col) in cols.iter().enumerate() {
        for ((i, j), c) in h.coproduct(col) {
            for (x, s) in nonzero(&inv[i]) {
                axpy(&mut comult[a][x], &c.mul(s), &inv[j]);
            }
        }
    }
    let hopf = SuperHopfPresentation {
        order: h.order,
        labels,
        parity,
        mult: cols
            .iter()
            .map(|a| cols.iter().map(|b| coords(&h.product(a, b))).collect())
            .collect(),
        unit: coords(&h.unit),
        comult,
        counit: cols.iter().map(|a| h.counit_of(a)).collect(),
        antipode: cols.iter().map(|a| coords(&h.antipode_of(a))).collect(),
        group_likes: h.group_likes.iter().map(coords).collect(),
    };
    Some(Rebased { hopf, inv })
}

/// From a super `H` with a group-like `g`, `g² = 1`, implementing the parity
/// by conjugation, to `𝓗 = H^σ/(σg − 1)` on the basis `{b#1}`.
pub fn aeg_backward(h: &SuperHopfPresentation, g: &[CycNumber]) -> Result<AegPair, SuperHopfError> {
    require_hopf(h)?;
    require_involution(h, g, "g")?;
    if h.parity_of(g) != Some(0) {
        return Err(SuperHopfError::NotGroupLike("g (odd)".into()));
    }
    let n = h.dim();
    for b in 0..n {
        let e = h.basis(b);
        let conj = h.product(&h.product(g, &e), g);
        let expect: Vector = e.iter().map(|c| signed(c, h.parity[b] == 1)).collect();
        if !same(&conj, &expect) {
            return Err(SuperHopfError::Shape(format!(
                "conjugation by g does not give the parity of {}",
                h.labels[b]
            )));
        }
    }
    let hs = smash(h);
    let m = hs.dim();
    let lift1 = |v: &[CycNumber]| -> Vector {
        let mut out = zeros(h.order, m);
        out[..n].clone_from_slice(v);
        out
    };
    let u = lift1(g);
    let mut t = hs.product(&sigma(&hs), &u);
    axpy(&mut t, &CycNumber::from_integer(h.order, -1), &hs.unit);

    // columns reordered so that σ-columns are eliminated first
    let swap = |v: &Vector| -> Vector { v[n..].iter().chain(&v[..n]).cloned().collect() };
    let unswap = |v: &Vector| -> Vector { v[n..].iter().chain(&v[..n]).cloned().collect() };
    let mut ideal = Rref::new();
    for a in 0..m {
        let at = hs.product(&hs.basis(a), &t);
        for b in 0..m {
            ideal.insert(&swap(&hs.product(&at, &hs.basis(b))));
        }
    }
    if ideal.rank() != n || (0..n).any(|p| !ideal.rows.contains_key(&p)) {
        return Err(SuperHopfError::Shape("the ideal (σg − 1) does not have the basis b#1 as complement".into()));
    }
    let project = |v: &Vector| -> Vector { unswap(&ideal.reduce(&swap(v)))[..n].to_vec() };

    let mut out = SuperHopfPresentation {
        order: h.order,
        labels: h.labels.clone(),
        parity: vec![0; n],
        mult: (0..n)
            .map(|a| (0..n).map(|b| project(&hs.mult[a][b])).collect())
            .collect(),
        unit: project(&hs.unit),
        comult: vec![vec![zeros(h.order, n); n]; n],
        counit: hs.counit[..n].to_vec(),
        antipode: (0..n).map(|a| project(&hs.antipode[a])).collect(),
        group_likes: Vec::new(),
    };
    for a in 0..n {
        for ((x, y), c) in hs.coproduct(&hs.basis(a)) {
            let px = project(&hs.basis(x));
            let py = project(&hs.basis(y));
            for (i, s) in nonzero(&px) {
                axpy(&mut out.comult[a][i], &c.mul(s), &py);
            }
        }
    }
    for gl in &hs.group_likes {
        let v = project(gl);
        if !out.group_likes.contains(&v) {
            out.group_likes.push(v);
        }
    }
    Ok(AegPair {
        element: project(&u),
        hopf: out,
    })
}
