use std::collections::BTreeMap;

use num_integer::Integer;

use super::{block_size, Exponents, NicholsConfig, NicholsError, TensorElement, Word};
use crate::braiding::BraidingMatrix;
use crate::scalars::CycNumber;

/// How the quantum symmetrizer is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymmetrizerRoute {
    /// `Σ_{π ∈ S_n}` of the Matsumoto lifts.
    Defining,
    /// `𝔖_n = T_n (𝔖_{n−1} ⊗ id)`, `T_n` moving the last letter leftwards.
    InsertLast,
    /// `𝔖_n = (𝔖_{n−1} ⊗ id) T'_n`, `T'_n` moving one letter to the end.
    ExtractToEnd,
}

pub(crate) type GroupRingVec = BTreeMap<Word, Vec<i64>>;

/// `σ_k` (1-based) on a basis word: `σ_k(… a b …) = q_ab (… b a …)`.
pub fn braid_generator_action(b: &BraidingMatrix, k: usize, w: &Word) -> Result<TensorElement, NicholsError> {
    let ex = Exponents::of(b)?;
    let (w2, s) = sigma(&ex, k, w)?;
    let mut out = TensorElement::zero(ex.theta(), ex.order);
    out.add_term(w2, &CycNumber::root(ex.order, s as i64));
    Ok(out)
}

fn sigma(ex: &Exponents, k: usize, w: &Word) -> Result<(Word, u64), NicholsError> {
    if k == 0 || k >= w.len() {
        return Err(NicholsError::Position { k, len: w.len() });
    }
    let mut v = w.0.clone();
    let s = ex.get(v[k - 1], v[k]);
    v.swap(k - 1, k);
    Ok((Word(v), s))
}

/// The operator `σ_{i_1} ⋯ σ_{i_ℓ}` (rightmost applied first) on `e`.
pub fn apply_braid_word(b: &BraidingMatrix, word: &[usize], e: &TensorElement) -> Result<TensorElement, NicholsError> {
    let ex = Exponents::of(b)?;
    let order = ex.order.lcm(&e.order());
    let scale = (order / ex.order) as i64;
    let mut out = TensorElement::zero(ex.theta(), order);
    for (w, c) in e.terms() {
        let (w2, s) = braid_word_on(&ex, word, w)?;
        let c = c.embed(order).expect("order divides the lcm");
        out.add_term(w2, &c.mul_root(s as i64 * scale));
    }
    Ok(out)
}

fn braid_word_on(ex: &Exponents, word: &[usize], w: &Word) -> Result<(Word, u64), NicholsError> {
    let mut cur = w.clone();
    let mut total = 0;
    for &k in word.iter().rev() {
        let (n, s) = sigma(ex, k, &cur)?;
        cur = n;
        total = (total + s) % ex.order;
    }
    Ok((cur, total))
}

/// `π^{-1}(i) > π^{-1}(i+1)`: `s_{i+1} π` is shorter (0-based `i`).
fn left_descent(perm: &[usize], i: usize) -> bool {
    let pos = |v: usize| perm.iter().position(|&x| x == v).expect("permutation");
    pos(i) > pos(i + 1)
}

fn swap_values(perm: &[usize], i: usize) -> Vec<usize> {
    perm.iter()
        .map(|&x| if x == i { i + 1 } else if x == i + 1 { i } else { x })
        .collect()
}

/// The lexicographically least reduced word `[i_1, …, i_ℓ]` (1-based) with
/// `π = s_{i_1} ∘ ⋯ ∘ s_{i_ℓ}`, where `perm[i] = π(i)`.
pub fn matsumoto_lift(perm: &[usize]) -> Vec<usize> {
    let mut cur = perm.to_vec();
    let mut out = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| left_descent(&cur, i)) {
        out.push(i + 1);
        cur = swap_values(&cur, i);
    }
    out
}

/// Every reduced word of `π`.
pub fn all_reduced_words(perm: &[usize]) -> Vec<Vec<usize>> {
    let descents: Vec<usize> = (0..perm.len().saturating_sub(1)).filter(|&i| left_descent(perm, i)).collect();
    if descents.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in descents {
        for mut tail in all_reduced_words(&swap_values(perm, i)) {
            tail.insert(0, i + 1);
            out.push(tail);
        }
    }
    out
}

/// Words with the given letter multiplicities, in lexicographic order.
pub fn block_words(content: &[usize]) -> Vec<Word> {
    fn rec(content: &mut [usize], cur: &mut Vec<u8>, left: usize, out: &mut Vec<Word>) {
        if left == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..content.len() {
            if content[i] > 0 {
                content[i] -= 1;
                cur.push(i as u8);
                rec(content, cur, left - 1, out);
                cur.pop();
                content[i] += 1;
            }
        }
    }
    let mut c = content.to_vec();
    let mut out = Vec::new();
    rec(&mut c, &mut Vec::new(), content.iter().sum(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn add_rotated(acc: &mut GroupRingVec, w: Word, v: &[i64], s: u64) {
    let l = v.len();
    let slot = acc.entry(w).or_insert_with(|| vec![0; l]);
    for (k, c) in v.iter().enumerate() {
        if *c != 0 {
            slot[(k + s as usize) % l] += c;
        }
    }
}

/// `T_k ⊗ id`: the letter at 1-based position `k` moves to every position `j ≤ k`.
pub(crate) fn insert_last(ex: &Exponents, k: usize, input: &GroupRingVec) -> GroupRingVec {
    let mut out = GroupRingVec::new();
    for (w, v) in input {
        let a = w.0[k - 1];
        let mut s = 0u64;
        add_rotated(&mut out, w.clone(), v, 0);
        for j in (0..k - 1).rev() {
            s += ex.get(w.0[j], a);
            let mut u = w.0.clone();
            let x = u.remove(k - 1);
            u.insert(j, x);
            add_rotated(&mut out, Word(u), v, s % ex.order);
        }
    }
    out.retain(|_, v| v.iter().any(|c| *c != 0));
    out
}

/// `T'_k ⊗ id`: the letter at every position `j ≤ k` moves to position `k`.
fn extract_to_end(ex: &Exponents, k: usize, input: &GroupRingVec) -> GroupRingVec {
    let mut out = GroupRingVec::new();
    for (w, v) in input {
        for j in 0..k {
            let a = w.0[j];
            let s: u64 = w.0[j + 1..k].iter().map(|&t| ex.get(a, t)).sum();
            let mut u = w.0.clone();
            let x = u.remove(j);
            u.insert(k - 1, x);
            add_rotated(&mut out, Word(u), v, s % ex.order);
        }
    }
    out.retain(|_, v| v.iter().any(|c| *c != 0));
    out
}

pub(crate) fn symmetrize_group_ring(ex: &Exponents, route: SymmetrizerRoute, input: &GroupRingVec) -> GroupRingVec {
    let Some(n) = input.keys().next().map(Word::len) else {
        return GroupRingVec::new();
    };
    match route {
        SymmetrizerRoute::InsertLast => (2..=n).fold(input.clone(), |acc, k| insert_last(ex, k, &acc)),
        SymmetrizerRoute::ExtractToEnd => (2..=n).rev().fold(input.clone(), |acc, k| extract_to_end(ex, k, &acc)),
        SymmetrizerRoute::Defining => {
            let mut out = GroupRingVec::new();
            let words: Vec<Vec<usize>> = permutations(n).iter().map(|p| matsumoto_lift(p)).collect();
            for (w, v) in input {
                for bw in &words {
                    let (w2, s) = braid_word_on(ex, bw, w).expect("reduced word fits the length");
                    add_rotated(&mut out, w2, v, s);
                }
            }
            out.retain(|_, v| v.iter().any(|c| *c != 0));
            out
        }
    }
}

/// `𝔖_n` applied to a homogeneous element.
pub fn apply_symmetrizer(b: &BraidingMatrix, e: &TensorElement, route: SymmetrizerRoute) -> Result<TensorElement, NicholsError> {
    let ex = Exponents::of(b)?;
    let e = e.clone_in(ex.order);
    let (g, den) = e.to_group_ring();
    let out = symmetrize_group_ring(&ex, route, &g);
    Ok(TensorElement::from_group_ring(ex.theta(), ex.order, &out, &den))
}

/// Matrix of `𝔖_n` on the block of words with the given content, rows and
/// columns in lexicographic word order: entry `[r][c]` is the coefficient of
/// word `r` in `𝔖_n(word c)`.
pub fn symmetrizer(
    b: &BraidingMatrix,
    content: &[usize],
    route: SymmetrizerRoute,
    cfg: &NicholsConfig,
) -> Result<Vec<Vec<CycNumber>>, NicholsError> {
    let ex = Exponents::of(b)?;
    let n: usize = content.iter().sum();
    if n > cfg.degree_cap {
        return Err(NicholsError::CapExceeded {
            what: "degree",
            got: n,
            cap: cfg.degree_cap,
        });
    }
    let size = block_size(content);
    if size > cfg.block_cap {
        return Err(NicholsError::CapExceeded {
            what: "block dimension",
            got: size,
            cap: cfg.block_cap,
        });
    }
    let words = block_words(content);
    let index: BTreeMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let cols = cfg.exec.map(&words, |w| {
        let mut g = GroupRingVec::new();
        let mut unit = vec![0i64; ex.order as usize];
        unit[0] = 1;
        g.insert(w.clone(), unit);
        symmetrize_group_ring(&ex, route, &g)
    });
    let zero = CycNumber::zero(ex.order);
    let mut m = vec![vec![zero; words.len()]; words.len()];
    for (c, col) in cols.iter().enumerate() {
        for (w, v) in col {
            m[index[w]][c] = CycNumber::from_root_counts(ex.order, v);
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_braiding(rng: &mut ChaCha8Rng, theta: usize, order: u64) -> BraidingMatrix {
        let e: Vec<Vec<i64>> = (0..theta)
            .map(|_| (0..theta).map(|_| rng.gen_range(0..order as i64)).collect())
            .collect();
        BraidingMatrix::from_exponents(order, &e).unwrap()
    }

    #[test]
    fn coefficients_in_a_larger_field() {
        let b = BraidingMatrix::from_exponents(3, &[vec![1, 2], vec![0, 1]]).unwrap();
        let e = TensorElement::word(2, 6, Word(vec![0, 1]));
        let out = apply_braid_word(&b, &[1], &e).unwrap();
        let want = braid_generator_action(&b, 1, &Word(vec![0, 1])).unwrap();
        assert_eq!(out.order(), 6);
        let (w, c) = out.terms().iter().next().unwrap();
        let (w0, c0) = want.terms().iter().next().unwrap();
        assert_eq!(w, w0);
        assert!(c.sub(&c0.embed(6).unwrap()).is_zero());
    }

    fn all_words(theta: u8, n: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u8>| {
                    (0..theta).map(move |a| {
                        let mut v = w.clone();
                        v.push(a);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(Word).collect()
    }

    fn compose(word: &[usize], n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for &k in word.iter().rev() {
            p = p.iter().map(|&x| if x == k - 1 { k } else if x == k { k - 1 } else { x }).collect();
        }
        p
    }

    #[test]
    fn generator_examples() {
        let b = BraidingMatrix::from_exponents(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let e = braid_generator_action(&b, 1, &Word(vec![0, 1])).unwrap();
        assert_eq!(e.coeff(&Word(vec![1, 0])), CycNumber::root(5, 2));
        let e = braid_generator_action(&b, 1, &Word(vec![0, 0])).unwrap();
        assert_eq!(e.coeff(&Word(vec![0, 0])), CycNumber::root(5, 1));
        assert!(braid_generator_action(&b, 2, &Word(vec![0, 0])).is_err());
        assert!(braid_generator_action(&b, 0, &Word(vec![0, 0])).is_err());
    }

    #[test]
    fn braid_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..3 {
            let b = random_braiding(&mut rng, 3, 12);
            for n in 3..=5 {
                for w in all_words(3, n) {
                    let e = TensorElement::word(3, 12, w);
                    for k in 1..n - 1 {
                        let l = apply_braid_word(&b, &[k, k + 1, k], &e).unwrap();
                        let r = apply_braid_word(&b, &[k + 1, k, k + 1], &e).unwrap();
                        assert_eq!(l, r);
                    }
                    for k in 1..n {
                        for j in k + 2..n {
                            let l = apply_braid_word(&b, &[k, j], &e).unwrap();
                            let r = apply_braid_word(&b, &[j, k], &e).unwrap();
                            assert_eq!(l, r);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lifts() {
        assert!(matsumoto_lift(&[0, 1, 2]).is_empty());
        assert_eq!(matsumoto_lift(&[1, 0]), vec![1]);
        assert_eq!(matsumoto_lift(&[2, 1, 0]), vec![1, 2, 1]);
        let mut words = all_reduced_words(&[2, 1, 0]);
        words.sort();
        assert_eq!(words, vec![vec![1, 2, 1], vec![2, 1, 2]]);
        for n in 1..=4 {
            for p in permutations(n) {
                let w = matsumoto_lift(&p);
                assert_eq!(compose(&w, n), p);
                let all = all_reduced_words(&p);
                assert!(all.iter().all(|v| v.len() == w.len() && compose(v, n) == p));
                assert_eq!(all.iter().min(), Some(&w));
            }
        }
    }

    #[test]
    fn reduced_words_induce_one_operator() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let b = random_braiding(&mut rng, 3, 10);
        for n in 2..=4 {
            let words = all_words(3, n);
            for p in permutations(n) {
                let reduced = all_reduced_words(&p);
                for w in &words {
                    let e = TensorElement::word(3, 10, w.clone());
                    let first = apply_braid_word(&b, &reduced[0], &e).unwrap();
                    for r in &reduced[1..] {
                        assert_eq!(apply_braid_word(&b, r, &e).unwrap(), first);
                    }
                }
            }
        }
    }

    #[test]
    fn routes_agree_with_defining_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cfg = NicholsConfig::default();
        for _ in 0..4 {
            let theta = rng.gen_range(1..=3);
            let b = random_braiding(&mut rng, theta, 6);
            for n in 1..=4 {
                let mut content = vec![0; theta];
                for _ in 0..n {
                    content[rng.gen_range(0..theta)] += 1;
                }
                let d = symmetrizer(&b, &content, SymmetrizerRoute::Defining, &cfg).unwrap();
                for route in [SymmetrizerRoute::InsertLast, SymmetrizerRoute::ExtractToEnd] {
                    assert_eq!(symmetrizer(&b, &content, route, &cfg).unwrap(), d);
                }
            }
        }
    }

    #[test]
    fn degree_two_blocks() {
        let cfg = NicholsConfig::default();
        let b = BraidingMatrix::from_exponents(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let m = symmetrizer(&b, &[1, 1], SymmetrizerRoute::Defining, &cfg).unwrap();
        // columns (1,2), (2,1): 1 + c
        assert_eq!(m[0][0], CycNumber::one(5));
        assert_eq!(m[1][0], CycNumber::root(5, 2));
        assert_eq!(m[0][1], CycNumber::root(5, 3));
        assert_eq!(m[1][1], CycNumber::one(5));
        let minus = BraidingMatrix::from_exponents(2, &[vec![1]]).unwrap();
        let m = symmetrizer(&minus, &[2], SymmetrizerRoute::InsertLast, &cfg).unwrap();
        assert!(m[0][0].is_zero());
    }

    #[test]
    fn block_order_is_lexicographic() {
        let w = block_words(&[1, 2]);
        let s: Vec<String> = w.iter().map(|w| w.to_string()).collect();
        assert_eq!(s, vec!["(1,2,2)", "(2,1,2)", "(2,2,1)"]);
    }

    #[test]
    fn caps() {
        let b = BraidingMatrix::from_exponents(2, &[vec![1]]).unwrap();
        let cfg = NicholsConfig {
            degree_cap: 3,
            ..NicholsConfig::default()
        };
        assert!(matches!(
            symmetrizer(&b, &[4], SymmetrizerRoute::Defining, &cfg),
            Err(NicholsError::CapExceeded { .. })
        ));
    }
}
