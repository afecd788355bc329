use std::collections::BTreeMap;

use crate::scalars::UnityScalar;

use super::BraidingMatrix;

/// Vertices labeled `q_ii`, edges `{i,j}` labeled `q_ij q_ji` when that is not 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedDynkinDiagram {
    pub vertex_labels: Vec<UnityScalar>,
    pub edge_labels: BTreeMap<(usize, usize), UnityScalar>,
}

impl GeneralizedDynkinDiagram {
    pub fn theta(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&UnityScalar> {
        self.edge_labels.get(&(i.min(j), i.max(j)))
    }

    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.theta())
            .filter(|&j| j != i && self.edge(i, j).is_some())
            .collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).len()
    }

    /// New vertex `i` is old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.theta();
        let mut edge_labels = BTreeMap::new();
        for a in 0..n {
            for b in a + 1..n {
                if let Some(e) = self.edge(perm[a], perm[b]) {
                    edge_labels.insert((a, b), e.clone());
                }
            }
        }
        GeneralizedDynkinDiagram {
            vertex_labels: perm.iter().map(|&p| self.vertex_labels[p].clone()).collect(),
            edge_labels,
        }
    }

    /// All `perm` with `other.permuted(perm) == self`, in lexicographic order.
    pub fn isomorphisms_to(&self, other: &Self) -> Vec<Vec<usize>> {
        let n = self.theta();
        if n != other.theta() || self.edge_labels.len() != other.edge_labels.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(other, &mut perm, &mut used, &mut out, false);
        out
    }

    pub fn isomorphic(&self, other: &Self) -> Option<Vec<usize>> {
        let n = self.theta();
        if n != other.theta() || self.edge_labels.len() != other.edge_labels.len() {
            return None;
        }
        let mut out = Vec::new();
        let mut perm = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.extend(other, &mut perm, &mut used, &mut out, true);
        out.pop()
    }

    fn extend(
        &self,
        other: &Self,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        let k = perm.len();
        if k == self.theta() {
            out.push(perm.clone());
            return;
        }
        for cand in 0..self.theta() {
            if used[cand] || other.vertex_labels[cand] != self.vertex_labels[k] {
                continue;
            }
            let consistent = (0..k).all(|a| self.edge(a, k) == other.edge(perm[a], cand));
            if !consistent {
                continue;
            }
            used[cand] = true;
            perm.push(cand);
            self.extend(other, perm, used, out, first_only);
            perm.pop();
            used[cand] = false;
            if first_only && !out.is_empty() {
                return;
            }
        }
    }

    /// The upper-triangular braiding with this diagram: `q_ij` is the edge
    /// label for `i < j` and `q_ji = 1`.
    pub fn to_braiding(&self) -> BraidingMatrix {
        let n = self.theta();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Equal => self.vertex_labels[i].clone(),
                        std::cmp::Ordering::Less => self.edge(i, j).cloned().unwrap_or_else(|| UnityScalar::one(1)),
                        std::cmp::Ordering::Greater => UnityScalar::one(1),
                    })
                    .collect()
            })
            .collect();
        BraidingMatrix::new(entries).expect("non-empty square matrix")
    }

    pub fn to_dot(&self, ambient: u64) -> String {
        let mut s = String::from("graph dynkin {\n");
        for (i, l) in self.vertex_labels.iter().enumerate() {
            s.push_str(&format!("  v{} [label=\"{}: {}\"];\n", i + 1, i + 1, l.to_literal(ambient)));
        }
        for ((i, j), l) in &self.edge_labels {
            s.push_str(&format!("  v{} -- v{} [label=\"{}\"];\n", i + 1, j + 1, l.to_literal(ambient)));
        }
        s.push_str("}\n");
        s
    }
}

pub fn dynkin_of(b: &BraidingMatrix) -> GeneralizedDynkinDiagram {
    let n = b.theta();
    let mut edge_labels = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let e = b.q(i, j).mul(b.q(j, i));
            if !e.is_one() {
                edge_labels.insert((i, j), e);
            }
        }
    }
    GeneralizedDynkinDiagram {
        vertex_labels: (0..n).map(|i| b.q(i, i).clone()).collect(),
        edge_labels,
    }
}

/// Twist equivalence, decided by equality of generalized Dynkin diagrams.
pub fn twist_equivalent(a: &BraidingMatrix, b: &BraidingMatrix, up_to_relabeling: bool) -> bool {
    if a.theta() != b.theta() {
        return false;
    }
    let (da, db) = (dynkin_of(a), dynkin_of(b));
    if up_to_relabeling {
        da.isomorphic(&db).is_some()
    } else {
        da == db
    }
}

/// Connected components of the diagram, each sorted, ordered by least vertex.
pub fn connected_components(b: &BraidingMatrix) -> Vec<Vec<usize>> {
    let d = dynkin_of(b);
    let n = d.theta();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            for j in d.neighbors(comp[k]) {
                if !seen[j] {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
