use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::braiding::BraidingMatrix;
use crate::exec::Exec;
use crate::scalars::UnityScalar;

use super::{GroupoidObject, WeylError};

pub type RootSet = BTreeSet<Vec<i64>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExploreConfig {
    pub object_cap: usize,
    pub root_cap: usize,
    /// Search bound for Cartan entries; `None` means `8θ`.
    pub cartan_cap: Option<usize>,
    pub exec: Exec,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            object_cap: 10_000,
            root_cap: 10_000,
            cartan_cap: None,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtlasStatus {
    Complete,
    ObjectCapExceeded,
    RootCapExceeded,
    ReflectionUndefined { object: usize, i: usize, j: usize },
    /// Some collected root has coordinates of both signs.
    MixedSignRoot { object: usize },
}

impl AtlasStatus {
    pub fn is_complete(&self) -> bool {
        *self == AtlasStatus::Complete
    }
}

/// Objects reachable from the seed by reflections, one per generalized Dynkin
/// diagram (and parity), numbered in shortlex order of their discovery word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupoidAtlas {
    pub seed: BraidingMatrix,
    pub objects: Vec<GroupoidObject>,
    /// Discovery word (reflection indices, applied left to right) per object.
    pub paths: Vec<Vec<usize>>,
    /// `cartan[x][i][j]`.
    pub cartan: Vec<Vec<Vec<Option<i64>>>>,
    /// `(source, i, target)`.
    pub morphisms: Vec<(usize, usize, usize)>,
    pub status: AtlasStatus,
    /// Full (signed) root sets per object, in that object's simple-root
    /// coordinates; present only for complete atlases.
    pub roots: Option<Vec<RootSet>>,
    pub cartan_cap: usize,
}

impl GroupoidAtlas {
    pub fn theta(&self) -> usize {
        self.seed.theta()
    }

    pub fn target(&self, x: usize, i: usize) -> Option<usize> {
        self.morphisms
            .iter()
            .find(|(s, k, _)| *s == x && *k == i)
            .map(|(_, _, t)| *t)
    }

    /// Cartan row `i` of object `x` (only valid when every entry is defined).
    pub fn row(&self, x: usize, i: usize) -> Vec<i64> {
        self.cartan[x][i].iter().map(|a| a.expect("defined Cartan entry")).collect()
    }

    /// `Δ_+^X`, sorted.
    pub fn positive_roots(&self, x: usize) -> Result<Vec<Vec<i64>>, WeylError> {
        let roots = self.roots.as_ref().ok_or(WeylError::Incomplete)?;
        let set = roots.get(x).ok_or(WeylError::UnknownObject(x))?;
        Ok(set.iter().filter(|r| r.iter().all(|c| *c >= 0)).cloned().collect())
    }

    /// The object with the same generalized Dynkin diagram as `q`.
    pub fn object_index(&self, q: &BraidingMatrix) -> Option<usize> {
        let k = diagram_key(q, None);
        self.objects.iter().position(|o| diagram_key(&o.q, None) == k)
    }
}

/// `s_i(β) = β − ⟨row, β⟩ α_i` where `row = (a_i1, …, a_iθ)`.
pub fn apply_reflection(row: &[i64], i: usize, beta: &[i64]) -> Vec<i64> {
    let dot: i64 = row.iter().zip(beta).map(|(a, b)| a * b).sum();
    let mut out = beta.to_vec();
    out[i] -= dot;
    out
}

/// Diagonal entries, then `q_ij q_ji` for `i < j`, then the parity.
type Key = (Vec<UnityScalar>, Option<Vec<u8>>);

fn diagram_key(q: &BraidingMatrix, parity: Option<&Vec<u8>>) -> Key {
    let n = q.theta();
    let mut k: Vec<UnityScalar> = (0..n).map(|i| q.q(i, i).clone()).collect();
    for i in 0..n {
        for j in i + 1..n {
            k.push(q.q(i, j).mul(q.q(j, i)));
        }
    }
    (k, parity.cloned())
}

pub fn explore(seed: &BraidingMatrix, parity: Option<Vec<u8>>, cfg: &ExploreConfig) -> GroupoidAtlas {
    let theta = seed.theta();
    let cap = cfg.cartan_cap.unwrap_or(8 * theta);
    let first = GroupoidObject::seed(seed, parity);
    let mut objects = vec![first.clone()];
    let mut paths: Vec<Vec<usize>> = vec![vec![]];
    let mut index: HashMap<Key, usize> = HashMap::new();
    index.insert(diagram_key(&first.q, first.parity.as_ref()), 0);
    let mut cartan: Vec<Vec<Vec<Option<i64>>>> = Vec::new();
    let mut targets: Vec<Vec<Option<usize>>> = Vec::new();
    let mut status = AtlasStatus::Complete;
    let mut frontier = vec![0usize];

    while !frontier.is_empty() {
        let jobs: Vec<(usize, usize)> = frontier
            .iter()
            .flat_map(|&x| (0..theta).map(move |i| (x, i)))
            .collect();
        let snapshot = &objects;
        let results: Vec<(Vec<Option<i64>>, Result<GroupoidObject, WeylError>)> =
            cfg.exec.map(&jobs, |&(x, i)| {
                let o = &snapshot[x];
                (o.cartan_row(i, cap), o.reflect(seed, i, cap))
            });
        let mut next = Vec::new();
        for (&(x, i), (row, refl)) in jobs.iter().zip(results) {
            while cartan.len() <= x {
                cartan.push(vec![Vec::new(); theta]);
                targets.push(vec![None; theta]);
            }
            cartan[x][i] = row;
            let y = match refl {
                Ok(y) => y,
                Err(WeylError::UndefinedCartan { j, .. }) => {
                    if status.is_complete() {
                        status = AtlasStatus::ReflectionUndefined { object: x, i, j };
                    }
                    continue;
                }
                Err(_) => unreachable!("reflection preserves unimodularity"),
            };
            let key = diagram_key(&y.q, y.parity.as_ref());
            let t = match index.get(&key) {
                Some(&t) => t,
                None => {
                    if objects.len() >= cfg.object_cap {
                        if status.is_complete() {
                            status = AtlasStatus::ObjectCapExceeded;
                        }
                        continue;
                    }
                    let t = objects.len();
                    index.insert(key, t);
                    let mut p = paths[x].clone();
                    p.push(i);
                    paths.push(p);
                    objects.push(y);
                    next.push(t);
                    t
                }
            };
            targets[x][i] = Some(t);
        }
        if status == AtlasStatus::ObjectCapExceeded {
            break;
        }
        frontier = next;
    }
    while cartan.len() < objects.len() {
        let x = cartan.len();
        cartan.push((0..theta).map(|i| objects[x].cartan_row(i, cap)).collect());
        targets.push(vec![None; theta]);
    }
    let morphisms = targets
        .iter()
        .enumerate()
        .flat_map(|(x, ts)| ts.iter().enumerate().filter_map(move |(i, t)| t.map(|t| (x, i, t))))
        .collect();
    let mut atlas = GroupoidAtlas {
        seed: seed.clone(),
        objects,
        paths,
        cartan,
        morphisms,
        status,
        roots: None,
        cartan_cap: cap,
    };
    if atlas.status.is_complete() {
        match root_closure(&atlas, cfg.root_cap) {
            Ok(r) => atlas.roots = Some(r),
            Err(s) => atlas.status = s,
        }
    }
    atlas
}

/// Least family `R^X ⊇ {±α_j}` with `s_i(R^X) ⊆ R^{r_i X}`.
fn root_closure(atlas: &GroupoidAtlas, root_cap: usize) -> Result<Vec<RootSet>, AtlasStatus> {
    let theta = atlas.theta();
    let n = atlas.objects.len();
    let mut sets: Vec<RootSet> = (0..n)
        .map(|_| {
            (0..theta)
                .flat_map(|j| {
                    let mut e = vec![0i64; theta];
                    e[j] = 1;
                    let neg = e.iter().map(|c| -c).collect();
                    [e, neg]
                })
                .collect()
        })
        .collect();
    let mut queue: VecDeque<usize> = (0..n).collect();
    let mut queued = vec![true; n];
    while let Some(x) = queue.pop_front() {
        queued[x] = false;
        for i in 0..theta {
            let t = atlas.target(x, i).expect("complete atlas has every morphism");
            let row = atlas.row(x, i);
            let images: Vec<Vec<i64>> = sets[x].iter().map(|b| apply_reflection(&row, i, b)).collect();
            let mut grew = false;
            for img in images {
                let pos = img.iter().all(|c| *c >= 0);
                let neg = img.iter().all(|c| *c <= 0);
                if !pos && !neg {
                    return Err(AtlasStatus::MixedSignRoot { object: t });
                }
                grew |= sets[t].insert(img);
            }
            if sets[t].len() > 2 * root_cap {
                return Err(AtlasStatus::RootCapExceeded);
            }
            if grew && !queued[t] {
                queued[t] = true;
                queue.push_back(t);
            }
        }
    }
    Ok(sets)
}

/// `−max{k ≥ 0 : α_i + k α_j ∈ Δ}`.
pub fn cartan_from_roots(roots: &RootSet, i: usize, j: usize) -> i64 {
    if i == j {
        return 2;
    }
    let theta = roots.iter().next().map_or(0, Vec::len);
    let mut k = 0i64;
    loop {
        let mut v = vec![0i64; theta];
        v[i] = 1;
        v[j] = k + 1;
        if !roots.contains(&v) {
            return -k;
        }
        k += 1;
    }
}
