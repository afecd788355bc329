use std::fmt;

use super::braid::{apply_symmetrizer, SymmetrizerRoute};
use super::{block_size, braided_commutator, Exponents, NicholsConfig, NicholsError, TensorElement};
use crate::braiding::{connected_components, BraidingMatrix};
use crate::classify::{match_all, DisplayId, SuperTypeDescriptor};
use crate::scalars::{CycNumber, SpecializationMap, UnityOrder, UnityScalar};
use crate::superroots::Family;
use crate::weyl::{cartan_entry, explore, format_root, ExploreConfig};

/// An iterated braided commutator of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootVectorExpr {
    Leaf(usize),
    Bracket(Box<RootVectorExpr>, Box<RootVectorExpr>),
}

fn br(a: RootVectorExpr, b: RootVectorExpr) -> RootVectorExpr {
    RootVectorExpr::Bracket(Box::new(a), Box::new(b))
}

impl RootVectorExpr {
    pub fn degree(&self, theta: usize) -> Vec<i64> {
        let mut d = vec![0; theta];
        self.add_degree(&mut d);
        d
    }

    fn add_degree(&self, d: &mut [i64]) {
        match self {
            RootVectorExpr::Leaf(i) => d[*i] += 1,
            RootVectorExpr::Bracket(a, b) => {
                a.add_degree(d);
                b.add_degree(d);
            }
        }
    }

    pub fn map_leaves(&self, map: &[usize]) -> Self {
        match self {
            RootVectorExpr::Leaf(i) => RootVectorExpr::Leaf(map[*i]),
            RootVectorExpr::Bracket(a, b) => br(a.map_leaves(map), b.map_leaves(map)),
        }
    }

    pub fn expand(&self, b: &BraidingMatrix) -> Result<TensorElement, NicholsError> {
        let order = Exponents::of(b)?.order;
        match self {
            RootVectorExpr::Leaf(i) => {
                if *i >= b.theta() {
                    return Err(NicholsError::Letter {
                        letter: *i,
                        theta: b.theta(),
                    });
                }
                Ok(TensorElement::letter(b.theta(), order, *i))
            }
            RootVectorExpr::Bracket(x, y) => braided_commutator(&x.expand(b)?, &y.expand(b)?, b),
        }
    }
}

impl fmt::Display for RootVectorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootVectorExpr::Leaf(i) => write!(f, "x{}", i + 1),
            RootVectorExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Hyperletters of a classical family in display numbering, 1-based indices.
struct Letters {
    family: Family,
    theta: usize,
}

impl Letters {
    fn x(&self, i: usize) -> RootVectorExpr {
        RootVectorExpr::Leaf(i - 1)
    }

    fn u(&self, i: usize, j: usize) -> RootVectorExpr {
        let t = self.theta;
        if i == j {
            self.x(i)
        } else if self.family == Family::D && t >= 3 && i == t - 2 && j == t {
            br(br(self.x(t - 2), self.x(t)), self.x(t - 1))
        } else {
            br(self.x(i), self.u(i + 1, j))
        }
    }

    fn v(&self, i: usize, j: usize) -> RootVectorExpr {
        let t = self.theta;
        if j == t {
            br(self.u(i, t), self.x(t))
        } else {
            br(self.v(i, j + 1), self.x(j))
        }
    }

    fn w(&self, i: usize, j: usize) -> RootVectorExpr {
        let t = self.theta;
        if j == t - 1 {
            br(self.u(i, t), self.x(t - 1))
        } else {
            br(self.w(i, j + 1), self.x(j))
        }
    }

    fn w_tilde(&self, i: usize) -> RootVectorExpr {
        br(self.u(i, self.theta - 1), self.u(i, self.theta))
    }

    fn u_tilde(&self, i: usize) -> RootVectorExpr {
        let t = self.theta;
        if i == t - 2 {
            br(self.x(t - 2), self.x(t))
        } else {
            br(self.x(i), self.u_tilde(i + 1))
        }
    }

    fn z(&self, i: usize, j: usize) -> RootVectorExpr {
        let t = self.theta;
        if j == t - 2 {
            br(self.u(i, t), self.x(t - 2))
        } else {
            br(self.z(i, j + 1), self.x(j))
        }
    }

    fn z_tilde(&self, i: usize) -> RootVectorExpr {
        br(self.u(i, self.theta - 1), self.u_tilde(i))
    }

    fn all(&self) -> Vec<(String, RootVectorExpr)> {
        let t = self.theta;
        let mut out = Vec::new();
        for i in 1..=t {
            for j in i..=t {
                out.push((format!("u{i},{j}"), self.u(i, j)));
            }
        }
        match self.family {
            Family::B => {
                for i in 1..t {
                    for j in i + 1..=t {
                        out.push((format!("v{i},{j}"), self.v(i, j)));
                    }
                }
            }
            Family::C if t >= 2 => {
                for i in 1..t.saturating_sub(1) {
                    for j in i + 1..t {
                        out.push((format!("w{i},{j}"), self.w(i, j)));
                    }
                }
                for i in 1..t {
                    out.push((format!("w~{i}"), self.w_tilde(i)));
                }
            }
            Family::D if t >= 3 => {
                for i in 1..=t - 2 {
                    out.push((format!("u~{i}"), self.u_tilde(i)));
                }
                for i in 1..t - 2 {
                    for j in i + 1..=t - 2 {
                        out.push((format!("z{i},{j}"), self.z(i, j)));
                    }
                }
                for i in 1..=t - 2 {
                    out.push((format!("z~{i}"), self.z_tilde(i)));
                }
            }
            _ => {}
        }
        out
    }
}

/// Every hyperletter of a classical family of rank `theta`, named as `u1,3`,
/// `v1,2`, `w~1`, … (1-based), with leaves 0-based.
pub fn hyperletters(family: Family, theta: usize) -> Vec<(String, RootVectorExpr)> {
    Letters { family, theta }.all()
}

/// The hyperletter of degree `α` (display numbering).
pub fn root_vector_expr(family: Family, theta: usize, alpha: &[i64]) -> Result<RootVectorExpr, NicholsError> {
    hyperletters(family, theta)
        .into_iter()
        .find(|(_, e)| e.degree(theta) == alpha)
        .map(|(_, e)| e)
        .ok_or_else(|| NicholsError::NotARoot(format_root(alpha)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// `x_α^N`, root in input numbering.
    PowerRootVector { root: Vec<i64>, n: u64, expr: String },
    /// `(ad_c x_i)^{1−a_ij} x_j`.
    QuantumSerre { i: usize, j: usize, a: i64 },
    /// `[ad_c x_j ad_c x_k (x_l), x_k]_c`.
    A { j: usize, k: usize, l: usize },
    B1,
    B2,
    C1,
    C2,
    C3,
    D,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::PowerRootVector { root, n, expr } => write!(f, "power {} N={n} x={expr}", format_root(root)),
            RelationKind::QuantumSerre { i, j, a } => write!(f, "serre (ad x{})^{} x{}", i + 1, 1 - a, j + 1),
            RelationKind::A { j, k, l } => write!(f, "A [[x{},[x{},x{}]],x{}]", j + 1, k + 1, l + 1, k + 1),
            RelationKind::B1 => f.write_str("B1"),
            RelationKind::B2 => f.write_str("B2"),
            RelationKind::C1 => f.write_str("C1"),
            RelationKind::C2 => f.write_str("C2"),
            RelationKind::C3 => f.write_str("C3"),
            RelationKind::D => f.write_str("D"),
        }
    }
}

/// A defining relation in input numbering; `element` is `None` when its
/// degree or block exceeds the caps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub display: Option<DisplayId>,
    pub degree: Vec<i64>,
    pub element: Option<TensorElement>,
}

impl Relation {
    pub fn label(&self) -> String {
        match self.display {
            Some(d) => format!("[{d}] {} deg {}", self.kind, format_root(&self.degree)),
            None => format!("{} deg {}", self.kind, format_root(&self.degree)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RelationMode {
    #[default]
    Full,
    /// Reduced power-root-vector sets.
    Minimal,
}

fn total(d: &[i64]) -> usize {
    d.iter().sum::<i64>() as usize
}

fn power(e: &TensorElement, n: u64) -> TensorElement {
    let mut acc = e.clone();
    for _ in 1..n {
        acc = acc.mul(e);
    }
    acc
}

/// Whether a relation of this degree is expanded: within the degree cap and
/// with a symmetrizer block no larger than the block cap.
fn within(cfg: &NicholsConfig, degree: &[i64]) -> bool {
    let content: Vec<usize> = degree.iter().map(|&c| c as usize).collect();
    total(degree) <= cfg.degree_cap && block_size(&content) <= cfg.block_cap
}

fn primitive_cube_root(z: &UnityScalar) -> bool {
    z.unity_order() == UnityOrder::Finite(3)
}

/// Relations of the presentation theorem for a connected braiding of type
/// A–D matched by `d`, in the input numbering of `b`.
pub fn relations_for(
    b: &BraidingMatrix,
    d: &SuperTypeDescriptor,
    mode: RelationMode,
    cfg: &NicholsConfig,
) -> Result<Vec<Relation>, NicholsError> {
    if !matches!(d.family, Family::A | Family::B | Family::C | Family::D) {
        return Err(NicholsError::UnsupportedFamily(d.family.to_string()));
    }
    let ex = Exponents::of(b)?;
    let theta = b.theta();
    let rel = &d.relabeling;
    let bb = b.permuted(rel);
    let letters = Letters {
        family: d.family,
        theta,
    };
    let to_input = |alpha: &[i64]| -> Vec<i64> {
        let mut r = vec![0; theta];
        for (k, a) in alpha.iter().enumerate() {
            r[rel[k]] = *a;
        }
        r
    };
    let mut out = Vec::new();
    let mut push = |kind: RelationKind, expr: Option<RootVectorExpr>, n: u64, cfg: &NicholsConfig| -> Result<(), NicholsError> {
        let (degree, element) = match expr {
            Some(e) => {
                let e = e.map_leaves(rel);
                let deg: Vec<i64> = e.degree(theta).iter().map(|c| c * n as i64).collect();
                let el = if within(cfg, &deg) { Some(power(&e.expand(b)?, n)) } else { None };
                (deg, el)
            }
            None => (vec![0; theta], None),
        };
        out.push(Relation {
            kind,
            display: Some(d.display),
            degree,
            element,
        });
        Ok(())
    };

    let atlas = explore(
        &bb,
        None,
        &ExploreConfig {
            exec: cfg.exec,
            ..ExploreConfig::default()
        },
    );
    let roots = atlas.positive_roots(0).map_err(|e| NicholsError::Weyl(e.to_string()))?;
    let powers: Vec<(Vec<i64>, u64)> = match (mode, d.display) {
        (RelationMode::Minimal, DisplayId::B1) => {
            let mut v = vec![(vec![0, 1], 3)];
            for a in [vec![1, 0], vec![1, 2]] {
                if let UnityOrder::Finite(n) = bb.q_alpha(&a).unity_order() {
                    v.push((a, n));
                }
            }
            v
        }
        _ => roots
            .iter()
            .filter_map(|a| {
                let qa = bb.q_alpha(a);
                let n = qa.unity_order().finite()?;
                let keep = match mode {
                    RelationMode::Full => true,
                    RelationMode::Minimal => !qa.is_minus_one() || a.iter().sum::<i64>() == 1,
                };
                keep.then(|| (a.clone(), n))
            })
            .collect(),
    };
    for (a, n) in powers {
        let expr = root_vector_expr(d.family, theta, &a)?;
        let kind = RelationKind::PowerRootVector {
            root: to_input(&a),
            n,
            expr: expr.map_leaves(rel).to_string(),
        };
        push(kind, Some(expr), n, cfg)?;
    }

    let cap = 8 * theta;
    for i in 0..theta {
        for j in 0..theta {
            if i == j {
                continue;
            }
            let a = cartan_entry(b, i, j, cap).ok_or(NicholsError::UndefinedCartan { i, j })?;
            if b.q(i, i).pow(1 - a).is_one() {
                continue;
            }
            let mut e = RootVectorExpr::Leaf(j);
            for _ in 0..1 - a {
                e = br(RootVectorExpr::Leaf(i), e);
            }
            let inv = inverse(rel);
            push(RelationKind::QuantumSerre { i, j, a }, Some(e.map_leaves(&inv)), 1, cfg)?;
        }
    }

    for k in 0..theta {
        if !b.q(k, k).is_minus_one() {
            continue;
        }
        for j in 0..theta {
            for l in 0..theta {
                if j == k || l == k || j == l {
                    continue;
                }
                let ok = cartan_entry(b, k, j, cap) == Some(-1)
                    && cartan_entry(b, k, l, cap) == Some(-1)
                    && b.q(k, j).mul(b.q(j, k)).mul(b.q(k, l)).mul(b.q(l, k)).is_one()
                    && b.q(j, l).mul(b.q(l, j)).is_one();
                if ok {
                    let (xj, xk, xl) = (RootVectorExpr::Leaf(j), RootVectorExpr::Leaf(k), RootVectorExpr::Leaf(l));
                    let e = br(br(xj, br(xk.clone(), xl)), xk);
                    let inv = inverse(rel);
                    push(RelationKind::A { j, k, l }, Some(e.map_leaves(&inv)), 1, cfg)?;
                }
            }
        }
    }

    let n = theta;
    let q = |i: usize| bb.q(i - 1, i - 1).clone();
    match d.family {
        Family::B if n >= 2 && primitive_cube_root(&q(n)) && q(n - 1).is_minus_one() => {
            push(RelationKind::B1, Some(br(letters.u(n - 1, n), letters.v(n - 1, n))), 1, cfg)?;
            if n >= 3 {
                push(RelationKind::B2, Some(br(letters.v(n - 2, n), letters.u(n - 1, n))), 1, cfg)?;
            }
        }
        Family::C if n >= 3 => {
            if q(n - 2).is_minus_one() && q(n - 1).is_minus_one() {
                push(RelationKind::C1, Some(br(letters.w_tilde(n - 2), letters.x(n - 1))), 1, cfg)?;
            }
            if n >= 4 && q(n - 1).is_minus_one() && q(n - 2) != q(n - 1) {
                push(RelationKind::C2, Some(br(letters.w(n - 3, n - 2), letters.x(n - 1))), 1, cfg)?;
            }
            if primitive_cube_root(&q(n - 1)) {
                push(RelationKind::C3, Some(br(letters.w(n - 2, n - 1), letters.x(n - 1))), 1, cfg)?;
            }
        }
        Family::D if n >= 3 && q(n - 1).is_minus_one() && q(n).is_minus_one() => {
            let lhs = br(br(letters.x(n - 2), letters.x(n - 1)), letters.x(n)).map_leaves(rel);
            let u = letters.u(n - 2, n).map_leaves(rel);
            let deg = lhs.degree(theta);
            let element = if within(cfg, &deg) {
                let c = bb.q(n - 3, n - 2).mul(bb.q(n - 2, n - 3)).mul(bb.q(n - 2, n - 1));
                let c = CycNumber::root(ex.order, c.with_ambient(ex.order).expect("entry order").torsion_exp() as i64);
                Some(lhs.expand(b)?.add(&u.expand(b)?.scale(&c)))
            } else {
                None
            };
            out.push(Relation {
                kind: RelationKind::D,
                display: Some(d.display),
                degree: deg,
                element,
            });
        }
        _ => {}
    }
    Ok(out)
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &p) in perm.iter().enumerate() {
        inv[p] = k;
    }
    inv
}

/// Relations for every component and every matching display of each
/// component, plus `[x_i, x_j]_c` across components.
pub fn presentation(b: &BraidingMatrix, mode: RelationMode, cfg: &NicholsConfig) -> Result<Vec<Relation>, NicholsError> {
    let ex = Exponents::of(b)?;
    let theta = b.theta();
    let comps = connected_components(b);
    let mut out = Vec::new();
    for comp in &comps {
        let sub = b.submatrix(comp);
        let ds = match_all(&sub);
        let Some(first) = ds.first() else {
            return Err(NicholsError::NotSuperType);
        };
        let classical = |d: &&SuperTypeDescriptor| matches!(d.family, Family::A | Family::B | Family::C | Family::D);
        if !ds.iter().any(|d| classical(&d)) {
            return Err(NicholsError::UnsupportedFamily(first.family.to_string()));
        }
        for d in ds.iter().filter(classical) {
            for r in relations_for(&sub, d, mode, cfg)? {
                let kind = match r.kind {
                    RelationKind::PowerRootVector { root, n, expr } => {
                        let mut g = vec![0; theta];
                        for (k, a) in root.iter().enumerate() {
                            g[comp[k]] = *a;
                        }
                        RelationKind::PowerRootVector { root: g, n, expr: rename(&expr, comp) }
                    }
                    RelationKind::QuantumSerre { i, j, a } => RelationKind::QuantumSerre { i: comp[i], j: comp[j], a },
                    RelationKind::A { j, k, l } => RelationKind::A {
                        j: comp[j],
                        k: comp[k],
                        l: comp[l],
                    },
                    other => other,
                };
                let mut degree = vec![0; theta];
                for (k, a) in r.degree.iter().enumerate() {
                    degree[comp[k]] = *a;
                }
                out.push(Relation {
                    kind,
                    display: r.display,
                    degree,
                    element: r.element.map(|e| e.clone_in(ex.order).map_letters(comp, theta)),
                });
            }
        }
    }
    for (ci, c1) in comps.iter().enumerate() {
        for c2 in comps.iter().skip(ci + 1) {
            for &i in c1 {
                for &j in c2 {
                    for (x, y) in [(i, j), (j, i)] {
                        if b.q(x, x).is_one() {
                            continue;
                        }
                        let e = br(RootVectorExpr::Leaf(x), RootVectorExpr::Leaf(y));
                        let degree = e.degree(theta);
                        let element = if within(cfg, &degree) { Some(e.expand(b)?) } else { None };
                        out.push(Relation {
                            kind: RelationKind::QuantumSerre { i: x, j: y, a: 0 },
                            display: None,
                            degree,
                            element,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn rename(expr: &str, comp: &[usize]) -> String {
    let mut out = String::new();
    let mut chars = expr.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == 'x' {
            let mut num = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                num.push(*d);
                chars.next();
            }
            let k: usize = num.parse().expect("letter index");
            out.push_str(&(comp[k - 1] + 1).to_string());
        }
    }
    out
}

/// Outcome of a symmetrizer check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// `𝔖_n(r)` when it is nonzero.
    pub witness: Option<TensorElement>,
}

/// Whether `r` lies in the kernel of the quantum symmetrizer of its degree.
pub fn verify_relation(
    b: &BraidingMatrix,
    r: &TensorElement,
    specialization: Option<&SpecializationMap>,
    cfg: &NicholsConfig,
) -> Result<Verdict, NicholsError> {
    let b = match specialization {
        Some(m) => b.specialize(m).map_err(|_| NicholsError::NeedsSpecialization)?,
        None => b.clone(),
    };
    r.degree()?;
    let n = r.length().unwrap_or(0);
    if n > cfg.degree_cap {
        return Err(NicholsError::CapExceeded {
            what: "degree",
            got: n,
            cap: cfg.degree_cap,
        });
    }
    let image = apply_symmetrizer(&b, r, SymmetrizerRoute::InsertLast)?;
    Ok(if image.is_zero() {
        Verdict {
            holds: true,
            witness: None,
        }
    } else {
        Verdict {
            holds: false,
            witness: Some(image),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{match_family, realize};
    use crate::nichols::Word;

    fn z(n: u64, k: i64) -> UnityScalar {
        UnityScalar::root(n, k)
    }

    #[test]
    fn displayed_hyperletters() {
        assert_eq!(root_vector_expr(Family::A, 3, &[1, 1, 1]).unwrap().to_string(), "[x1,[x2,x3]]");
        let v = root_vector_expr(Family::B, 2, &[1, 2]).unwrap();
        assert_eq!(v.to_string(), "[[x1,x2],x2]");
        let w = root_vector_expr(Family::C, 3, &[2, 2, 1]).unwrap();
        assert_eq!(w.to_string(), "[[x1,x2],[x1,[x2,x3]]]");
        let u = Letters { family: Family::D, theta: 4 }.u(2, 4);
        assert_eq!(u.to_string(), "[[x2,x4],x3]");
        assert!(root_vector_expr(Family::A, 3, &[1, 0, 1]).is_err());
    }

    #[test]
    fn hyperletter_counts() {
        for t in 2..=6 {
            assert_eq!(hyperletters(Family::A, t).len(), t * (t + 1) / 2);
            assert_eq!(hyperletters(Family::B, t).len(), t * t);
        }
    }

    #[test]
    fn square_of_a_letter() {
        let cfg = NicholsConfig::default();
        let x2 = TensorElement::word(1, 2, Word(vec![0, 0]));
        let minus = BraidingMatrix::from_exponents(2, &[vec![1]]).unwrap();
        assert!(verify_relation(&minus, &x2, None, &cfg).unwrap().holds);
        let cube = BraidingMatrix::from_exponents(3, &[vec![1]]).unwrap();
        let v = verify_relation(&cube, &x2.clone_in(3), None, &cfg).unwrap();
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert_eq!(w.coeff(&Word(vec![0, 0])), CycNumber::one(3).add(&CycNumber::root(3, 1)));
        assert_eq!(w.terms().len(), 1);
    }

    #[test]
    fn cartan_a2_serre() {
        let b = realize(DisplayId::A, 2, &[false, false], &[z(5, 1)]).unwrap().to_braiding();
        let d = match_family(&b).unwrap();
        let rels = relations_for(&b, &d, RelationMode::Full, &NicholsConfig::default()).unwrap();
        let serre: Vec<_> = rels
            .iter()
            .filter(|r| matches!(r.kind, RelationKind::QuantumSerre { .. }))
            .collect();
        assert_eq!(serre.len(), 2);
        assert!(serre.iter().all(|r| matches!(r.kind, RelationKind::QuantumSerre { a: -1, .. })));
        for r in &rels {
            if let Some(e) = &r.element {
                assert!(verify_relation(&b, e, None, &NicholsConfig::default()).unwrap().holds, "{}", r.label());
            }
        }
    }

    #[test]
    fn b1_relation_at_rank_two() {
        let b = realize(DisplayId::B2, 2, &[true], &[z(3, 1)]).unwrap().to_braiding();
        let d = match_family(&b).unwrap();
        let rels = relations_for(&b, &d, RelationMode::Full, &NicholsConfig::default()).unwrap();
        assert!(rels.iter().any(|r| r.kind == RelationKind::B1));
    }

    #[test]
    fn minimal_b1_powers() {
        let b = realize(DisplayId::B1, 2, &[], &[z(5, 1), z(3, 1)]).unwrap().to_braiding();
        let d = match_family(&b).unwrap();
        assert_eq!(d.display, DisplayId::B1);
        let rels = relations_for(&b, &d, RelationMode::Minimal, &NicholsConfig::default()).unwrap();
        let mut powers: Vec<(Vec<i64>, u64)> = rels
            .iter()
            .filter_map(|r| match &r.kind {
                RelationKind::PowerRootVector { root, n, .. } => Some((root.clone(), *n)),
                _ => None,
            })
            .collect();
        powers.sort();
        let back = |a: [i64; 2]| {
            let mut r = vec![0; 2];
            r[d.relabeling[0]] = a[0];
            r[d.relabeling[1]] = a[1];
            r
        };
        let mut expect = vec![(back([0, 1]), 3), (back([1, 0]), 5), (back([1, 2]), 15)];
        expect.sort();
        assert_eq!(powers, expect);
    }
}
