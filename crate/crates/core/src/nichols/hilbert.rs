use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::braid::{insert_last, GroupRingVec};
use super::{block_size, Exponents, NicholsConfig, NicholsError, Word};
use crate::braiding::BraidingMatrix;
use crate::scalars::CycNumber;

/// `dim 𝔅^d(V)` for every `Z^θ`-degree `d` up to a total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    pub theta: usize,
    pub max_degree: usize,
    /// Nonzero dimensions only.
    pub dims: BTreeMap<Vec<usize>, usize>,
    /// Some total degree `≤ max_degree` vanished, so the table is the whole algebra.
    pub exhausted: bool,
}

impl HilbertTable {
    pub fn dim(&self, d: &[usize]) -> usize {
        self.dims.get(d).copied().unwrap_or(0)
    }

    /// Dimensions by total degree `0..=max_degree`.
    pub fn by_total_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_degree + 1];
        for (d, n) in &self.dims {
            out[d.iter().sum::<usize>()] += n;
        }
        out
    }

    /// `dim 𝔅(V)` when the table is exhausted.
    pub fn total_dimension(&self) -> Option<usize> {
        self.exhausted.then(|| self.dims.values().sum())
    }
}

impl fmt::Display for HilbertTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: Vec<(&Vec<usize>, &usize)> = self.dims.iter().collect();
        rows.sort_by_key(|(d, _)| (d.iter().sum::<usize>(), Reverse(d.to_vec())));
        for (d, n) in rows {
            let s: Vec<String> = d.iter().map(usize::to_string).collect();
            writeln!(f, "({}) : {n}", s.join(","))?;
        }
        Ok(())
    }
}

/// Row echelon form over `Q(ζ_L)` for incremental independence tests.
struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, CycNumber>>,
}

impl<K: Ord + Clone> Echelon<K> {
    fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: BTreeMap<K, CycNumber>) -> bool {
        v.retain(|_, c| !c.is_zero());
        while let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            match self.rows.get(&k) {
                Some(row) => {
                    for (j, r) in row {
                        let t = c.mul(r);
                        let zero = match v.get_mut(j) {
                            Some(x) => {
                                x.sub_assign(&t);
                                x.is_zero()
                            }
                            None => {
                                v.insert(j.clone(), t.neg());
                                false
                            }
                        };
                        if zero {
                            v.remove(j);
                        }
                    }
                }
                None => {
                    let inv = c.inv().expect("nonzero pivot");
                    let row = v.into_iter().map(|(j, x)| (j, x.mul(&inv))).collect();
                    self.rows.insert(k, row);
                    return true;
                }
            }
        }
        false
    }
}

/// Exact rank of a matrix over `Q(ζ_L)`.
pub fn rank(m: &[Vec<CycNumber>]) -> usize {
    let mut e: Echelon<usize> = Echelon::new();
    m.iter()
        .filter(|row| e.insert(row.iter().cloned().enumerate().collect()))
        .count()
}

fn to_field(order: u64, v: &GroupRingVec) -> BTreeMap<Word, CycNumber> {
    v.iter()
        .map(|(w, g)| (w.clone(), CycNumber::from_root_counts(order, g)))
        .collect()
}

/// Graded dimensions of `𝔅(V)` up to `max_degree`, as ranks of the symmetrizer
/// blocks. Uses `im 𝔖_n = T_n(im 𝔖_{n−1} ⊗ V)`, so each block only sees a
/// spanning set of images built from the previous degree.
pub fn graded_dims(b: &BraidingMatrix, max_degree: usize, cfg: &NicholsConfig) -> Result<HilbertTable, NicholsError> {
    let ex = Exponents::of(b)?;
    if max_degree > cfg.degree_cap {
        return Err(NicholsError::CapExceeded {
            what: "degree",
            got: max_degree,
            cap: cfg.degree_cap,
        });
    }
    let theta = ex.theta();
    let mut unit = vec![0i64; ex.order as usize];
    unit[0] = 1;
    let mut prev: BTreeMap<Vec<usize>, Vec<GroupRingVec>> = BTreeMap::new();
    prev.insert(vec![0; theta], vec![GroupRingVec::from([(Word(Vec::new()), unit)])]);
    let mut dims = BTreeMap::new();
    dims.insert(vec![0; theta], 1);
    let mut exhausted = false;
    for n in 1..=max_degree {
        let contents: BTreeSet<Vec<usize>> = prev
            .keys()
            .flat_map(|d| {
                (0..theta).map(move |i| {
                    let mut e = d.clone();
                    e[i] += 1;
                    e
                })
            })
            .collect();
        let contents: Vec<Vec<usize>> = contents.into_iter().collect();
        for d in &contents {
            let size = block_size(d);
            if size > cfg.block_cap {
                return Err(NicholsError::CapExceeded {
                    what: "block dimension",
                    got: size,
                    cap: cfg.block_cap,
                });
            }
        }
        let bases = cfg.exec.map(&contents, |d| {
            let mut ech: Echelon<Word> = Echelon::new();
            let mut kept = Vec::new();
            for i in 0..theta {
                if d[i] == 0 {
                    continue;
                }
                let mut lower = d.clone();
                lower[i] -= 1;
                let Some(vs) = prev.get(&lower) else {
                    continue;
                };
                for v in vs {
                    let shifted: GroupRingVec = v
                        .iter()
                        .map(|(w, g)| {
                            let mut u = w.0.clone();
                            u.push(i as u8);
                            (Word(u), g.clone())
                        })
                        .collect();
                    let image = insert_last(&ex, n, &shifted);
                    if ech.insert(to_field(ex.order, &image)) {
                        kept.push(image);
                    }
                }
            }
            kept
        });
        prev = BTreeMap::new();
        for (d, basis) in contents.into_iter().zip(bases) {
            if !basis.is_empty() {
                dims.insert(d.clone(), basis.len());
                prev.insert(d, basis);
            }
        }
        if prev.is_empty() {
            exhausted = true;
            break;
        }
    }
    Ok(HilbertTable {
        theta,
        max_degree,
        dims,
        exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Exec;
    use crate::nichols::{block_words, symmetrizer, SymmetrizerRoute};

    fn cfg() -> NicholsConfig {
        NicholsConfig::default()
    }

    #[test]
    fn rank_one_lines() {
        let b = BraidingMatrix::from_exponents(2, &[vec![1]]).unwrap();
        let t = graded_dims(&b, 5, &cfg()).unwrap();
        assert_eq!(t.by_total_degree(), vec![1, 1, 0, 0, 0, 0]);
        assert_eq!(t.total_dimension(), Some(2));
        let b = BraidingMatrix::from_exponents(3, &[vec![1]]).unwrap();
        let t = graded_dims(&b, 5, &cfg()).unwrap();
        assert_eq!(t.by_total_degree(), vec![1, 1, 1, 0, 0, 0]);
        assert_eq!(t.total_dimension(), Some(3));
    }

    #[test]
    fn cube_root_kills_degree_three() {
        let b = BraidingMatrix::from_exponents(3, &[vec![1]]).unwrap();
        for route in [SymmetrizerRoute::Defining, SymmetrizerRoute::InsertLast] {
            let m = symmetrizer(&b, &[3], route, &cfg()).unwrap();
            assert_eq!(rank(&m), 0);
            let m = symmetrizer(&b, &[2], route, &cfg()).unwrap();
            assert_eq!(rank(&m), 1);
        }
    }

    #[test]
    fn incremental_ranks_match_full_blocks() {
        let b = BraidingMatrix::from_exponents(5, &[vec![1, 3], vec![1, 4]]).unwrap();
        let t = graded_dims(&b, 5, &cfg()).unwrap();
        for n in 1..=5 {
            for a in 0..=n {
                let d = vec![a, n - a];
                let m = symmetrizer(&b, &d, SymmetrizerRoute::Defining, &cfg()).unwrap();
                assert_eq!(rank(&m), t.dim(&d), "degree {d:?}");
            }
        }
        assert_eq!(block_words(&[1, 1]).len(), 2);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let b = BraidingMatrix::from_exponents(3, &[vec![2, 1, 0], vec![0, 2, 1], vec![0, 0, 2]]).unwrap();
        let seq = graded_dims(&b, 6, &NicholsConfig { exec: Exec::Sequential, ..cfg() }).unwrap();
        let par = graded_dims(&b, 6, &NicholsConfig { exec: Exec::Parallel, ..cfg() }).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn table_format() {
        let b = BraidingMatrix::from_exponents(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let t = graded_dims(&b, 3, &cfg()).unwrap();
        assert_eq!(t.to_string(), "(0,0) : 1\n(1,0) : 1\n(0,1) : 1\n(1,1) : 1\n");
        assert_eq!(t.total_dimension(), Some(4));
    }
}
