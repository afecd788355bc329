//! Recognition of the connected diagonal braidings whose Nichols algebra has
//! a super root system, by matching generalized Dynkin diagrams against the
//! super families.

use std::collections::BTreeSet;
use std::fmt;

use crate::braiding::{connected_components, dynkin_of, BraidingMatrix, GeneralizedDynkinDiagram};
use crate::scalars::UnityScalar;
use crate::superroots::{
    build_classical, family_atlas, permutation_between, permutations_between, permute_roots, Family,
    ParityFunction,
};
use crate::weyl::{explore, verify_root_system, ExploreConfig, RootSet};

/// A simple chain read along `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleChainDescriptor {
    pub length: usize,
    /// `q = q_θθ² q_θ,θ-1 q_θ-1,θ` (the vertex label when `θ = 1`).
    pub q: UnityScalar,
    /// 1-based positions `i ≥ 2` with `q_i-1,i q_i,i-1 = q`.
    pub marked: Vec<usize>,
    /// Vertices of the input in chain order.
    pub order: Vec<usize>,
}

/// Which diagram of a family was matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DisplayId {
    A,
    B1,
    B2,
    B3,
    C,
    D1,
    D2,
    D21Chain,
    D21Triangle,
    F4(u8),
    G3(u8),
}

impl DisplayId {
    /// Every display in matching priority order.
    pub fn all() -> Vec<DisplayId> {
        let mut v = vec![
            DisplayId::A,
            DisplayId::B1,
            DisplayId::B2,
            DisplayId::B3,
            DisplayId::C,
            DisplayId::D1,
            DisplayId::D2,
            DisplayId::D21Chain,
            DisplayId::D21Triangle,
        ];
        v.extend((1..=6).map(DisplayId::F4));
        v.extend((1..=4).map(DisplayId::G3));
        v
    }

    pub fn family(self) -> Family {
        match self {
            DisplayId::A => Family::A,
            DisplayId::B1 | DisplayId::B2 | DisplayId::B3 => Family::B,
            DisplayId::C => Family::C,
            DisplayId::D1 | DisplayId::D2 => Family::D,
            DisplayId::D21Chain | DisplayId::D21Triangle => Family::D21,
            DisplayId::F4(_) => Family::F4,
            DisplayId::G3(_) => Family::G3,
        }
    }

    /// Ranks the display exists in; `None` means every rank `≥ min`.
    fn rank(self) -> (usize, Option<usize>) {
        match self {
            DisplayId::A => (1, None),
            DisplayId::B1 => (2, Some(2)),
            DisplayId::B2 | DisplayId::B3 | DisplayId::C => (2, None),
            DisplayId::D1 | DisplayId::D2 => (3, None),
            DisplayId::D21Chain | DisplayId::D21Triangle | DisplayId::G3(_) => (3, Some(3)),
            DisplayId::F4(_) => (4, Some(4)),
        }
    }

    pub fn admits_rank(self, theta: usize) -> bool {
        let (lo, hi) = self.rank();
        theta >= lo && hi.is_none_or(|h| theta == h)
    }

    /// Edges of the underlying graph at rank `theta`.
    fn graph(self, theta: usize) -> Vec<(usize, usize)> {
        let path = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self {
            DisplayId::D1 | DisplayId::D2 => {
                let mut e = path(theta - 1);
                e.push((theta - 3, theta - 1));
                if self == DisplayId::D2 {
                    e.push((theta - 2, theta - 1));
                }
                e
            }
            DisplayId::D21Triangle | DisplayId::G3(3) => vec![(0, 1), (0, 2), (1, 2)],
            DisplayId::F4(3) => vec![(0, 1), (0, 3), (1, 2), (1, 3)],
            DisplayId::F4(4) => vec![(0, 1), (1, 2), (1, 3), (2, 3)],
            _ => path(theta),
        }
    }
}

impl fmt::Display for DisplayId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DisplayId::A => f.write_str("A"),
            DisplayId::B1 => f.write_str("B1"),
            DisplayId::B2 => f.write_str("B2"),
            DisplayId::B3 => f.write_str("B3"),
            DisplayId::C => f.write_str("C"),
            DisplayId::D1 => f.write_str("D1"),
            DisplayId::D2 => f.write_str("D2"),
            DisplayId::D21Chain => f.write_str("D21-1"),
            DisplayId::D21Triangle => f.write_str("D21-2"),
            DisplayId::F4(k) => write!(f, "F4-{k}"),
            DisplayId::G3(k) => write!(f, "G3-{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperTypeDescriptor {
    pub family: Family,
    pub theta: usize,
    /// Named parameters: `q`, `zeta`, or `q`, `r`, `s`.
    pub params: Vec<(String, UnityScalar)>,
    /// Marked subset of the simple chain inside the diagram, if any.
    pub marked: Vec<usize>,
    pub display: DisplayId,
    /// Display vertex `k` is input vertex `relabeling[k]`.
    pub relabeling: Vec<usize>,
    /// Every display that matched, including `display`.
    pub matches: Vec<DisplayId>,
}

impl SuperTypeDescriptor {
    /// `FAMILY(θ; q=z^1)`, with literals relative to `ambient`.
    pub fn render(&self, ambient: u64) -> String {
        let mut parts: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", v.to_literal(ambient)))
            .collect();
        if !self.marked.is_empty() {
            let m: Vec<String> = self.marked.iter().map(usize::to_string).collect();
            parts.push(format!("marked={{{}}}", m.join(",")));
        }
        let mut s = format!("{}({}", self.family, self.theta);
        if !parts.is_empty() {
            s.push_str("; ");
            s.push_str(&parts.join(", "));
        }
        s.push(')');
        s
    }

    /// The descriptor without its relabeling, for comparisons across inputs.
    pub fn invariant_part(&self) -> (Family, usize, Vec<(String, UnityScalar)>, Vec<usize>, DisplayId, Vec<DisplayId>) {
        (
            self.family,
            self.theta,
            self.params.clone(),
            self.marked.clone(),
            self.display,
            self.matches.clone(),
        )
    }
}

fn one() -> UnityScalar {
    UnityScalar::one(1)
}

fn label(d: &GeneralizedDynkinDiagram, i: usize) -> &UnityScalar {
    &d.vertex_labels[i]
}

fn edge(d: &GeneralizedDynkinDiagram, i: usize, j: usize) -> UnityScalar {
    d.edge(i, j).cloned().unwrap_or_else(one)
}

/// `x^n ≠ 1`.
fn not_root(x: &UnityScalar, n: i64) -> bool {
    !x.pow(n).is_one()
}

fn primitive_cube_root(z: &UnityScalar) -> bool {
    z.unity_order().finite() == Some(3)
}

/// Simple-chain conditions on vertices `0..n` of `d`, returning `q` and the
/// marked positions. For `n = 1` there is no edge to read `q` from.
fn chain_param(d: &GeneralizedDynkinDiagram, n: usize) -> Option<(UnityScalar, Vec<usize>)> {
    if n < 2 {
        return None;
    }
    let end_ok = |i: usize, e: UnityScalar| label(d, i).is_minus_one() || label(d, i).mul(&e).is_one();
    if !end_ok(0, edge(d, 0, 1)) || !end_ok(n - 1, edge(d, n - 2, n - 1)) {
        return None;
    }
    for i in 1..n - 1 {
        let (a, b) = (edge(d, i - 1, i), edge(d, i, i + 1));
        let v = label(d, i);
        let ok = (v.is_minus_one() && a.mul(&b).is_one()) || (v.mul(&a).is_one() && v.mul(&b).is_one());
        if !ok {
            return None;
        }
    }
    let q = label(d, n - 1).pow(2).mul(&edge(d, n - 2, n - 1));
    let marked = (2..=n).filter(|&i| edge(d, i - 2, i - 1) == q).collect();
    Some((q, marked))
}

/// Whether vertices `0..n` form `C(n, p; …)`; returns the marked positions.
/// A single vertex is `C(1, p)` when its label is `p` or `−1`.
fn chain_is(d: &GeneralizedDynkinDiagram, n: usize, p: &UnityScalar) -> Option<Vec<usize>> {
    if n == 1 {
        let v = label(d, 0);
        return (v == p || v.is_minus_one()).then(Vec::new);
    }
    chain_param(d, n).filter(|(q, _)| q == p).map(|(_, m)| m)
}

type Params = (Vec<(String, UnityScalar)>, Vec<usize>);

fn q_only(q: UnityScalar) -> Params {
    (vec![("q".into(), q)], Vec::new())
}

/// Vertex label of a fixed display.
#[derive(Clone, Copy)]
enum L {
    /// `−1`
    M,
    /// `q^a`
    Q(i64),
    /// `−q^a`
    NegQ(i64),
}

/// Checks `d` (already in display numbering) against a display whose labels
/// are monomials in `q`, with `q² ≠ 1` and `q³ ≠ 1`.
fn fixed(d: &GeneralizedDynkinDiagram, q: UnityScalar, labels: &[L], edges: &[(usize, usize, i64)]) -> Option<Params> {
    let want = |l: &L| match *l {
        L::M => UnityScalar::minus_one(),
        L::Q(a) => q.pow(a),
        L::NegQ(a) => q.pow(a).neg(),
    };
    let ok = labels.iter().enumerate().all(|(i, l)| *label(d, i) == want(l))
        && edges.iter().all(|(i, j, a)| edge(d, *i, *j) == q.pow(*a))
        && not_root(&q, 2)
        && not_root(&q, 3);
    ok.then(|| q_only(q))
}

fn check_display(id: DisplayId, d: &GeneralizedDynkinDiagram) -> Option<Params> {
    let t = d.theta();
    let m1 = UnityScalar::minus_one();
    let v = |i: usize| label(d, i).clone();
    let e = |i: usize, j: usize| edge(d, i, j);
    match id {
        DisplayId::A => {
            if t == 1 {
                return (!v(0).is_one()).then(|| q_only(v(0)));
            }
            let (q, marked) = chain_param(d, t)?;
            not_root(&q, 2).then(|| (vec![("q".into(), q)], marked))
        }
        DisplayId::B1 => {
            let (q, z) = (v(0), v(1));
            let ok = primitive_cube_root(&z)
                && e(0, 1) == q.inv()
                && not_root(&q, 2)
                && !q.is_one()
                && q != z
                && q != z.pow(2);
            ok.then(|| (vec![("q".into(), q), ("zeta".into(), z)], Vec::new()))
        }
        DisplayId::B2 => {
            let q = v(t - 1);
            if e(t - 2, t - 1) != q.pow(-2) || !not_root(&q, 2) {
                return None;
            }
            let marked = chain_is(d, t - 1, &q.pow(2))?;
            Some((vec![("q".into(), q)], marked))
        }
        DisplayId::B3 => {
            let z = v(t - 1);
            if !primitive_cube_root(&z) || e(t - 2, t - 1) != z.neg() {
                return None;
            }
            let marked = chain_is(d, t - 1, &z.pow(2).neg())?;
            Some((vec![("zeta".into(), z)], marked))
        }
        DisplayId::C => {
            let mut cands: Vec<UnityScalar> = Vec::new();
            if let Some((p, _)) = chain_param(d, t - 1) {
                cands.push(p);
            }
            if t == 2 && !v(0).is_minus_one() {
                cands.push(v(0));
            }
            cands.extend(v(t - 1).square_roots());
            cands.into_iter().find_map(|q| {
                let ok = v(t - 1) == q.pow(2) && e(t - 2, t - 1) == q.pow(-2) && not_root(&q, 4);
                let marked = if ok { chain_is(d, t - 1, &q)? } else { return None };
                Some((vec![("q".into(), q)], marked))
            })
        }
        DisplayId::D1 => {
            let q = v(t - 1).inv();
            let ok = v(t - 2) == v(t - 1)
                && e(t - 3, t - 2) == q
                && e(t - 3, t - 1) == q
                && not_root(&q, 2);
            if !ok {
                return None;
            }
            let marked = chain_is(d, t - 2, &q.inv())?;
            Some((vec![("q".into(), q)], marked))
        }
        DisplayId::D2 => {
            let q = e(t - 3, t - 1).inv();
            let ok = e(t - 3, t - 2) == q.inv()
                && v(t - 2) == m1
                && v(t - 1) == m1
                && e(t - 2, t - 1) == q.pow(2)
                && not_root(&q, 2);
            if !ok {
                return None;
            }
            let marked = chain_is(d, t - 2, &q)?;
            Some((vec![("q".into(), q)], marked))
        }
        DisplayId::D21Chain => {
            let (q, r) = (v(0), v(2));
            let s = q.mul(&r).inv();
            let ok = e(0, 1) == q.inv() && v(1) == m1 && e(1, 2) == r.inv() && [&q, &r, &s].iter().all(|x| !x.is_one());
            ok.then(|| (vec![("q".into(), q), ("r".into(), r), ("s".into(), s)], Vec::new()))
        }
        DisplayId::D21Triangle => {
            let (q, r, s) = (e(0, 1), e(1, 2), e(0, 2));
            let ok = (0..3).all(|i| v(i) == m1)
                && q.mul(&r).mul(&s).is_one()
                && [&q, &r, &s].iter().all(|x| !x.is_one());
            ok.then(|| (vec![("q".into(), q), ("r".into(), r), ("s".into(), s)], Vec::new()))
        }
        DisplayId::F4(_) | DisplayId::G3(_) => {
            let q = match id {
                DisplayId::F4(1 | 5) | DisplayId::G3(1 | 3) => v(1),
                DisplayId::F4(2) | DisplayId::G3(2) => e(0, 1),
                DisplayId::F4(3) => v(3),
                DisplayId::F4(4) => e(1, 3),
                DisplayId::F4(_) => v(3).mul(&v(0)).inv(),
                _ => v(2).mul(&e(0, 1).inv()),
            };
            let (labels, edges) = fixed_shape(id);
            fixed(d, q, &labels, &edges)
        }
    }
}

/// Labels and edge exponents of the F(4) and G(3) displays.
fn fixed_shape(id: DisplayId) -> (Vec<L>, Vec<(usize, usize, i64)>) {
    use L::{NegQ, M, Q};
    match id {
        DisplayId::F4(1) => (vec![M, Q(1), Q(2), Q(2)], vec![(0, 1, -1), (1, 2, -2), (2, 3, -2)]),
        DisplayId::F4(2) => (vec![M, M, Q(2), Q(2)], vec![(0, 1, 1), (1, 2, -2), (2, 3, -2)]),
        DisplayId::F4(3) => (vec![M, M, Q(2), Q(1)], vec![(0, 1, 2), (0, 3, -1), (1, 2, -2), (1, 3, -1)]),
        DisplayId::F4(4) => (vec![Q(2), M, M, M], vec![(0, 1, -2), (1, 2, 2), (2, 3, -3), (1, 3, 1)]),
        DisplayId::F4(5) => (vec![Q(2), Q(1), M, Q(-3)], vec![(0, 1, -2), (1, 2, -1), (2, 3, 3)]),
        DisplayId::F4(_) => (vec![Q(2), Q(2), M, Q(-3)], vec![(0, 1, -2), (1, 2, -2), (2, 3, 3)]),
        DisplayId::G3(1) => (vec![M, Q(1), Q(3)], vec![(0, 1, -1), (1, 2, -3)]),
        DisplayId::G3(2) => (vec![M, M, Q(3)], vec![(0, 1, 1), (1, 2, -3)]),
        DisplayId::G3(3) => (vec![M, Q(1), M], vec![(0, 1, -1), (0, 2, 3), (1, 2, -2)]),
        DisplayId::G3(_) => (vec![NegQ(-1), M, Q(3)], vec![(0, 1, 2), (1, 2, -3)]),
        _ => unreachable!("not a fixed display"),
    }
}

/// All `perm` such that display edge `{a,b}` exists iff input edge
/// `{perm[a], perm[b]}` does, in lexicographic order.
fn graph_embeddings(edges: &[(usize, usize)], d: &GeneralizedDynkinDiagram) -> Vec<Vec<usize>> {
    let n = d.theta();
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in edges {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    if edges.len() != d.edge_labels.len() {
        return Vec::new();
    }
    fn go(adj: &[Vec<bool>], d: &GeneralizedDynkinDiagram, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let k = perm.len();
        if k == adj.len() {
            out.push(perm.clone());
            return;
        }
        let deg = adj[k].iter().filter(|x| **x).count();
        for c in 0..adj.len() {
            if used[c] || d.degree(c) != deg {
                continue;
            }
            if (0..k).all(|a| adj[a][k] == d.edge(perm[a], c).is_some()) {
                used[c] = true;
                perm.push(c);
                go(adj, d, perm, used, out);
                perm.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&adj, d, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Reads a connected path-shaped diagram as a simple chain, starting from its
/// lower-numbered end.
pub fn detect_simple_chain(b: &BraidingMatrix) -> Option<SimpleChainDescriptor> {
    let d = dynkin_of(b);
    let n = d.theta();
    if n == 1 {
        let q = d.vertex_labels[0].clone();
        return (!q.is_one()).then(|| SimpleChainDescriptor { length: 1, q, marked: Vec::new(), order: vec![0] });
    }
    if d.edge_labels.len() != n - 1 || (0..n).any(|i| d.degree(i) == 0 || d.degree(i) > 2) {
        return None;
    }
    let start = (0..n).find(|&i| d.degree(i) == 1)?;
    let mut order = vec![start];
    while order.len() < n {
        let last = *order.last().expect("non-empty");
        let next = d.neighbors(last).into_iter().find(|j| !order.contains(j))?;
        order.push(next);
    }
    let (q, marked) = chain_param(&d.permuted(&order), n)?;
    Some(SimpleChainDescriptor { length: n, q, marked, order })
}

/// Matches a connected diagram against every display, reporting the first
/// display in priority order that fits.
pub fn match_family(b: &BraidingMatrix) -> Option<SuperTypeDescriptor> {
    match_all(b).into_iter().next()
}

/// One descriptor per matching display, in priority order. Each carries its
/// own relabeling; `matches` lists all of them.
pub fn match_all(b: &BraidingMatrix) -> Vec<SuperTypeDescriptor> {
    let d = dynkin_of(b);
    let theta = d.theta();
    let mut found: Vec<(DisplayId, Params, Vec<usize>)> = Vec::new();
    for id in DisplayId::all().into_iter().filter(|id| id.admits_rank(theta)) {
        let mut best: Option<(Params, Vec<usize>)> = None;
        for perm in graph_embeddings(&id.graph(theta), &d) {
            if let Some(p) = check_display(id, &d.permuted(&perm)) {
                if best.as_ref().is_none_or(|(bp, _)| p < *bp) {
                    best = Some((p, perm));
                }
            }
        }
        if let Some((p, perm)) = best {
            found.push((id, p, perm));
        }
    }
    let matches: Vec<DisplayId> = found.iter().map(|(id, _, _)| *id).collect();
    found
        .into_iter()
        .map(|(display, (params, marked), relabeling)| SuperTypeDescriptor {
            family: display.family(),
            theta,
            params,
            marked,
            display,
            relabeling,
            matches: matches.clone(),
        })
        .collect()
}

/// Vertex labels and consecutive edge labels of `C(n, p; …)` whose vertex `i`
/// has label `−1` exactly when `odd[i]`.
fn chain_labels(p: &UnityScalar, odd: &[bool]) -> (Vec<UnityScalar>, Vec<UnityScalar>) {
    let n = odd.len();
    let m1 = UnityScalar::minus_one();
    if n == 1 {
        return (vec![if odd[0] { m1 } else { p.clone() }], Vec::new());
    }
    let mut edges = vec![one(); n - 1];
    edges[n - 2] = if odd[n - 1] { p.clone() } else { p.inv() };
    for i in (1..n - 1).rev() {
        edges[i - 1] = if odd[i] { edges[i].inv() } else { edges[i].clone() };
    }
    let labels = (0..n)
        .map(|i| if odd[i] { m1.clone() } else { edges[i.saturating_sub(1).min(n - 2)].inv() })
        .collect();
    (labels, edges)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RealizeError {
    #[error("display {0} does not exist in rank {1}")]
    Rank(DisplayId, usize),
    #[error("display {0} takes {1} parameters")]
    Params(DisplayId, usize),
    #[error("chain flags have length {got}, expected {want}")]
    Flags { got: usize, want: usize },
}

/// A diagram of the given display. `odd` marks the `−1` vertices of the simple
/// chain part (empty for displays without one); `params` are `q` (A, B2, C, D,
/// F(4), G(3)), `q, ζ` (B1), `ζ` (B3) or `q, r` (D(2,1;α), with `s = (qr)⁻¹`).
pub fn realize(id: DisplayId, theta: usize, odd: &[bool], params: &[UnityScalar]) -> Result<GeneralizedDynkinDiagram, RealizeError> {
    if !id.admits_rank(theta) {
        return Err(RealizeError::Rank(id, theta));
    }
    let want_params = match id {
        DisplayId::B1 | DisplayId::D21Chain | DisplayId::D21Triangle => 2,
        _ => 1,
    };
    if params.len() != want_params {
        return Err(RealizeError::Params(id, want_params));
    }
    let chain_len = match id {
        DisplayId::A => theta,
        DisplayId::B2 | DisplayId::B3 | DisplayId::C => theta - 1,
        DisplayId::D1 | DisplayId::D2 => theta - 2,
        _ => 0,
    };
    if odd.len() != chain_len {
        return Err(RealizeError::Flags { got: odd.len(), want: chain_len });
    }
    let q = params[0].clone();
    let m1 = UnityScalar::minus_one();
    let mut labels: Vec<UnityScalar> = Vec::new();
    let mut edges: Vec<(usize, usize, UnityScalar)> = Vec::new();
    let put_chain = |p: &UnityScalar, labels: &mut Vec<UnityScalar>, edges: &mut Vec<(usize, usize, UnityScalar)>| {
        let (l, e) = chain_labels(p, odd);
        labels.extend(l);
        edges.extend(e.into_iter().enumerate().map(|(i, x)| (i, i + 1, x)));
    };
    let t = theta;
    let pw = |a: i64| q.pow(a);
    match id {
        DisplayId::A => put_chain(&q, &mut labels, &mut edges),
        DisplayId::B1 => {
            labels = vec![q.clone(), params[1].clone()];
            edges = vec![(0, 1, q.inv())];
        }
        DisplayId::B2 => {
            put_chain(&pw(2), &mut labels, &mut edges);
            labels.push(q.clone());
            edges.push((t - 2, t - 1, pw(-2)));
        }
        DisplayId::B3 => {
            put_chain(&q.pow(2).neg(), &mut labels, &mut edges);
            labels.push(q.clone());
            edges.push((t - 2, t - 1, q.neg()));
        }
        DisplayId::C => {
            put_chain(&q, &mut labels, &mut edges);
            labels.push(pw(2));
            edges.push((t - 2, t - 1, pw(-2)));
        }
        DisplayId::D1 => {
            put_chain(&q.inv(), &mut labels, &mut edges);
            labels.extend([q.inv(), q.inv()]);
            edges.extend([(t - 3, t - 2, q.clone()), (t - 3, t - 1, q.clone())]);
        }
        DisplayId::D2 => {
            put_chain(&q, &mut labels, &mut edges);
            labels.extend([m1.clone(), m1.clone()]);
            edges.extend([(t - 3, t - 2, q.inv()), (t - 3, t - 1, q.inv()), (t - 2, t - 1, pw(2))]);
        }
        DisplayId::D21Chain => {
            let r = params[1].clone();
            labels = vec![q.clone(), m1.clone(), r.clone()];
            edges = vec![(0, 1, q.inv()), (1, 2, r.inv())];
        }
        DisplayId::D21Triangle => {
            let r = params[1].clone();
            let s = q.mul(&r).inv();
            labels = vec![m1.clone(); 3];
            edges = vec![(0, 1, q.clone()), (1, 2, r), (0, 2, s)];
        }
        DisplayId::F4(_) | DisplayId::G3(_) => {
            let (ls, es): (Vec<L>, Vec<(usize, usize, i64)>) = fixed_shape(id);
            labels = ls
                .iter()
                .map(|l| match *l {
                    L::M => m1.clone(),
                    L::Q(a) => pw(a),
                    L::NegQ(a) => pw(a).neg(),
                })
                .collect();
            edges = es.into_iter().map(|(i, j, a)| (i, j, pw(a))).collect();
        }
    }
    let edge_labels = edges
        .into_iter()
        .filter(|(_, _, e)| !e.is_one())
        .map(|(i, j, e)| ((i.min(j), i.max(j)), e))
        .collect();
    Ok(GeneralizedDynkinDiagram { vertex_labels: labels, edge_labels })
}

/// Outcome of comparing a match with the Weyl groupoid of the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCheck {
    /// Every root set of the groupoid is, after renumbering coordinates by
    /// `perm`, a root set of the family, and conversely.
    Agrees { objects: usize, root_sets: usize, perm: Vec<usize> },
    Mismatch(String),
    Skipped,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyConfig {
    pub cross_check: bool,
    pub explore: ExploreConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    /// Input vertices, sorted.
    pub vertices: Vec<usize>,
    pub descriptor: Option<SuperTypeDescriptor>,
    pub cross_check: CrossCheck,
}

impl ComponentReport {
    /// `component {1,2,3} : G(3)(3; q=z^1) via diagram G3-1`.
    pub fn render(&self, ambient: u64) -> String {
        let vs: Vec<String> = self.vertices.iter().map(|v| (v + 1).to_string()).collect();
        let head = format!("component {{{}}} : ", vs.join(","));
        let body = match &self.descriptor {
            Some(d) => format!("{} via diagram {}", d.render(ambient), d.display),
            None => "not super type".to_string(),
        };
        let tail = match &self.cross_check {
            CrossCheck::Mismatch(why) => format!(" [cross-check failed: {why}]"),
            _ => String::new(),
        };
        format!("{head}{body}{tail}")
    }
}

/// Matches each connected component; with `cross_check`, also explores the
/// Weyl groupoid of every matched component and compares its root sets with
/// the family's.
pub fn classify_braiding(b: &BraidingMatrix, cfg: &ClassifyConfig) -> Vec<ComponentReport> {
    let comps = connected_components(b);
    cfg.explore.exec.map(&comps, |vs| {
        let sub = b.submatrix(vs);
        let descriptor = match_family(&sub);
        let cross_check = match (&descriptor, cfg.cross_check) {
            (Some(d), true) => cross_check(&sub, d, &cfg.explore),
            _ => CrossCheck::Skipped,
        };
        ComponentReport {
            vertices: vs.clone(),
            descriptor,
            cross_check,
        }
    })
}

/// Explores the groupoid of `b` (one component), checks the root-system
/// axioms, and compares the collection of positive root sets with the
/// family's up to one renumbering of coordinates.
pub fn cross_check(b: &BraidingMatrix, d: &SuperTypeDescriptor, cfg: &ExploreConfig) -> CrossCheck {
    let atlas = explore(b, None, cfg);
    if !atlas.status.is_complete() {
        return CrossCheck::Mismatch(format!("groupoid exploration stopped: {:?}", atlas.status));
    }
    match verify_root_system(&atlas) {
        Ok(rep) if rep.passed() => {}
        Ok(rep) => return CrossCheck::Mismatch(format!("{}", rep.violations[0])),
        Err(e) => return CrossCheck::Mismatch(e.to_string()),
    }
    let weyl: BTreeSet<RootSet> = (0..atlas.objects.len())
        .map(|x| atlas.positive_roots(x).expect("complete atlas").into_iter().collect())
        .collect();
    let seed: RootSet = atlas.positive_roots(0).expect("complete atlas").into_iter().collect();
    let theta = b.theta();
    let start = if d.family.is_classical() {
        let found = (0..1u64 << theta).find_map(|bits| {
            let bs: Vec<u8> = (0..theta).map(|i| ((bits >> i) & 1) as u8).collect();
            let p = ParityFunction::from_bits(&bs);
            let obj = build_classical(d.family, theta, &p).ok()?;
            permutation_between(&seed, &obj.positive_roots).map(|_| p)
        });
        match found {
            Some(p) => Some(p),
            None => return CrossCheck::Mismatch("no displayed root set has the shape of the seed".into()),
        }
    } else {
        None
    };
    let family = match family_atlas(d.family, theta, start.as_ref(), cfg.object_cap) {
        Ok(f) => f,
        Err(e) => return CrossCheck::Mismatch(e.to_string()),
    };
    let fam: BTreeSet<RootSet> = family.into_iter().map(|o| o.positive_roots).collect();
    for target in &fam {
        for perm in permutations_between(&seed, target) {
            let moved: BTreeSet<RootSet> = weyl.iter().map(|s| permute_roots(s, &perm)).collect();
            if moved == fam {
                return CrossCheck::Agrees {
                    objects: atlas.objects.len(),
                    root_sets: weyl.len(),
                    perm,
                };
            }
        }
    }
    CrossCheck::Mismatch(format!(
        "groupoid has {} root sets, family has {}, no renumbering matches them",
        weyl.len(),
        fam.len()
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, k: i64) -> UnityScalar {
        UnityScalar::root(n, k)
    }

    fn upper(labels: &[UnityScalar], edges: &[(usize, usize, UnityScalar)]) -> BraidingMatrix {
        GeneralizedDynkinDiagram {
            vertex_labels: labels.to_vec(),
            edge_labels: edges.iter().map(|(i, j, e)| ((*i, *j), e.clone())).collect(),
        }
        .to_braiding()
    }

    #[test]
    fn chains() {
        let q = z(5, 1);
        let a2 = upper(&[q.clone(), q.clone()], &[(0, 1, q.inv())]);
        let c = detect_simple_chain(&a2).unwrap();
        assert_eq!((c.length, &c.q), (2, &q));
        let sup = upper(&[UnityScalar::minus_one(), q.clone()], &[(0, 1, q.inv())]);
        let c = detect_simple_chain(&sup).unwrap();
        assert_eq!(c.q, q);
        assert!(c.marked.is_empty());
        let e = q.inv();
        let star = upper(
            &[q.clone(), q.clone(), q.clone(), q.clone()],
            &[(0, 1, e.clone()), (0, 2, e.clone()), (0, 3, e)],
        );
        assert!(detect_simple_chain(&star).is_none());
    }

    #[test]
    fn b1_and_g3_examples() {
        let q = z(5, 1);
        let b = upper(&[q.clone(), z(3, 1)], &[(0, 1, q.inv())]);
        let d = match_family(&b).unwrap();
        assert_eq!((d.family, d.display), (Family::B, DisplayId::B1));
        let q = z(7, 1);
        let g = upper(
            &[UnityScalar::minus_one(), q.clone(), q.pow(3)],
            &[(0, 1, q.inv()), (1, 2, q.pow(-3))],
        );
        let d = match_family(&g).unwrap();
        assert_eq!((d.family, d.display), (Family::G3, DisplayId::G3(1)));
        assert_eq!(d.params, vec![("q".to_string(), q)]);
        assert_eq!(d.render(7), "G(3)(3; q=z^1)");
    }

    #[test]
    fn generic_pair_is_not_super() {
        let q = UnityScalar::generic("q");
        let b = upper(&[q.clone(), q], &[(0, 1, z(5, 1))]);
        assert!(match_family(&b).is_none());
    }

    #[test]
    fn block_sum() {
        let q = z(5, 1);
        let b2 = realize(DisplayId::B2, 2, &[false], std::slice::from_ref(&q)).unwrap();
        let mut labels = b2.vertex_labels.clone();
        labels.push(q.clone());
        let edges: Vec<(usize, usize, UnityScalar)> = b2.edge_labels.iter().map(|((i, j), e)| (*i, *j, e.clone())).collect();
        let b = upper(&labels, &edges);
        let cfg = ClassifyConfig { cross_check: true, ..Default::default() };
        let r = classify_braiding(&b, &cfg);
        assert_eq!(r.len(), 2);
        assert_eq!(r[0].descriptor.as_ref().unwrap().family, Family::B);
        assert_eq!(r[1].descriptor.as_ref().unwrap().family, Family::A);
        assert!(r.iter().all(|c| matches!(c.cross_check, CrossCheck::Agrees { .. })));
        assert_eq!(r[1].render(5), "component {3} : A(1; q=z^1) via diagram A");
    }

    #[test]
    fn cartan_e8_is_not_super() {
        let q = z(5, 1);
        let mut edges: Vec<(usize, usize, UnityScalar)> = (1..7).map(|i| (i - 1, i, q.inv())).collect();
        edges.push((2, 7, q.inv()));
        let b = upper(&vec![q.clone(); 8], &edges);
        let r = classify_braiding(&b, &ClassifyConfig::default());
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].render(5), "component {1,2,3,4,5,6,7,8} : not super type");
    }

    #[test]
    fn isolated_minus_ones() {
        let b = upper(&vec![UnityScalar::minus_one(); 3], &[]);
        let r = classify_braiding(&b, &ClassifyConfig::default());
        assert_eq!(r.len(), 3);
        assert!(r.iter().all(|c| c.descriptor.as_ref().unwrap().family == Family::A));
    }

    #[test]
    fn chain_realization_round_trips() {
        let q = z(7, 1);
        for bits in 0..16u32 {
            let odd: Vec<bool> = (0..4).map(|i| bits >> i & 1 == 1).collect();
            let d = realize(DisplayId::A, 4, &odd, std::slice::from_ref(&q)).unwrap();
            for (i, o) in odd.iter().enumerate() {
                assert_eq!(d.vertex_labels[i].is_minus_one(), *o);
            }
            let c = detect_simple_chain(&d.to_braiding()).unwrap();
            assert_eq!(c.q, q);
        }
        assert!(realize(DisplayId::F4(1), 3, &[], std::slice::from_ref(&q)).is_err());
        assert!(realize(DisplayId::C, 3, &[true], &[q]).is_err());
    }

    #[test]
    fn relabeling_keeps_descriptor() {
        let q = z(7, 1);
        let b = realize(DisplayId::F4(3), 4, &[], &[q]).unwrap().to_braiding();
        let base = match_family(&b).unwrap();
        for perm in [[3, 1, 0, 2], [2, 3, 1, 0]] {
            let moved = match_family(&b.permuted(&perm)).unwrap();
            assert_eq!(moved.invariant_part(), base.invariant_part());
            let back: Vec<usize> = moved.relabeling.iter().map(|&k| perm[k]).collect();
            assert_eq!(dynkin_of(&b).permuted(&back), dynkin_of(&b).permuted(&base.relabeling));
        }
    }
}
