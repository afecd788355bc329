use crate::exec::Exec;

use super::linalg::{nonzero, signed, zeros};
use super::{verify_super_hopf_with, SignRule, SuperHopfError, SuperHopfPresentation, Vector};

/// `H^σ = H # 𝕜⟨σ⟩`, purely even of dimension `2n`. Basis vector `i + n·k`
/// is `e_i # σ^k`.
pub fn bosonize(h: &SuperHopfPresentation) -> Result<SuperHopfPresentation, SuperHopfError> {
    h.check_shape()?;
    let report = verify_super_hopf_with(h, SignRule::Super, Exec::default());
    if !report.passed() {
        return Err(SuperHopfError::Axioms(report.render(h).trim_end().to_string()));
    }
    Ok(smash(h))
}

/// The smash product and coproduct, without checking the input.
pub(crate) fn smash(h: &SuperHopfPresentation) -> SuperHopfPresentation {
    let n = h.dim();
    let m = 2 * n;
    let p = |i: usize| h.parity[i] as usize;
    let lift = |v: &Vector, k: usize| -> Vector {
        let mut out = zeros(h.order, m);
        for (i, c) in nonzero(v) {
            out[i + n * k] = c.clone();
        }
        out
    };
    let mut labels = Vec::with_capacity(m);
    for suffix in ["1", "s"] {
        labels.extend(h.labels.iter().map(|l| format!("{l}#{suffix}")));
    }
    let mut mult = vec![vec![zeros(h.order, m); m]; m];
    let mut comult = vec![vec![zeros(h.order, m); m]; m];
    let mut antipode = vec![zeros(h.order, m); m];
    let mut counit = zeros(h.order, m);
    for k in 0..2 {
        for a in 0..n {
            let ak = a + n * k;
            // (a#σ^k)(b#σ^l) = (−1)^{k|b|} ab # σ^{k+l}
            for l in 0..2 {
                for b in 0..n {
                    let odd = k * p(b) % 2 == 1;
                    mult[ak][b + n * l] = lift(&h.mult[a][b], (k + l) % 2)
                        .iter()
                        .map(|c| signed(c, odd))
                        .collect();
                }
            }
            // Δ(c#σ^k) = c^(1)#σ^{|c^(2)|+k} ⊗ c^(2)#σ^k
            for (x, row) in h.comult[a].iter().enumerate() {
                for (y, c) in nonzero(row) {
                    comult[ak][x + n * ((p(y) + k) % 2)][y + n * k] = c.clone();
                }
            }
            counit[ak] = h.counit[a].clone();
            // S(a#σ^k) = (1#σ^{|a|+k})(S(a)#1) = (−1)^{(|a|+k)|a|} S(a)#σ^{|a|+k}
            let odd = (p(a) + k) * p(a) % 2 == 1;
            antipode[ak] = lift(&h.antipode[a], (p(a) + k) % 2)
                .iter()
                .map(|c| signed(c, odd))
                .collect();
        }
    }
    let mut group_likes: Vec<Vector> = vec![lift(&h.unit, 1)];
    for g in &h.group_likes {
        for k in 0..2 {
            let v = lift(g, k);
            if !group_likes.contains(&v) {
                group_likes.push(v);
            }
        }
    }
    SuperHopfPresentation {
        order: h.order,
        labels,
        parity: vec![0; m],
        mult,
        unit: lift(&h.unit, 0),
        comult,
        counit,
        antipode,
        group_likes,
    }
}

/// `1#σ` in `H^σ`.
pub(crate) fn sigma(hs: &SuperHopfPresentation) -> Vector {
    let n = hs.dim() / 2;
    let mut v = zeros(hs.order, hs.dim());
    for (i, c) in nonzero(&hs.unit[..n]) {
        v[i + n] = c.clone();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::CycNumber;
    use crate::superhopf::linalg::same;
    use crate::superhopf::{verify_super_hopf, zoo, Tensor2};

    fn one() -> CycNumber {
        CycNumber::one(2)
    }

    #[test]
    fn bosonized_zoo_is_hopf() {
        for h in [zoo::trivial(), zoo::group_algebra_z2(), zoo::exterior(), zoo::sweedler(), zoo::super_sweedler()] {
            let hs = bosonize(&h).unwrap();
            assert_eq!(hs.dim(), 2 * h.dim());
            assert!(hs.parity.iter().all(|&p| p == 0));
            let r = verify_super_hopf(&hs);
            assert!(r.passed(), "{}", r.render(&hs));
            for g in &hs.group_likes {
                assert!(hs.is_group_like(g));
            }
            assert_eq!(hs.group_likes.len(), 2 * h.group_likes.len());
        }
    }

    #[test]
    fn exterior_becomes_sweedler_type() {
        let hs = bosonize(&zoo::exterior()).unwrap();
        let i = |l: &str| hs.index(l).unwrap();
        let expect = Tensor2::from([((i("x#1"), i("1#1")), one()), ((i("1#s"), i("x#1")), one())]);
        assert_eq!(hs.coproduct(&hs.element("x#1").unwrap()), expect);
        // x#1 -> x, 1#s -> g, and g·x = −x#s
        assert!(!hs.permuted(&[i("1#1"), i("1#s"), i("x#1"), i("x#s")]).same_structure(&zoo::sweedler()));
        assert!(zoo::is_sweedler_on(&hs, [i("1#1"), i("1#s"), i("x#1"), i("x#s")]));
    }

    #[test]
    fn even_group_algebra_gives_klein_four() {
        let hs = bosonize(&zoo::group_algebra_z2()).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                // group law of Z/2 × Z/2 on indices (g-bit, σ-bit)
                let c = ((a % 2) ^ (b % 2)) + 2 * ((a / 2) ^ (b / 2));
                assert!(same(&hs.mult[a][b], &hs.basis(c)));
            }
            assert!(hs.is_group_like(&hs.basis(a)));
        }
    }

    #[test]
    fn sigma_implements_parity() {
        for h in [zoo::exterior(), zoo::super_sweedler()] {
            let hs = bosonize(&h).unwrap();
            let s = sigma(&hs);
            assert!(same(&hs.product(&s, &s), &hs.unit));
            let n = h.dim();
            for b in 0..n {
                let conj = hs.product(&hs.product(&s, &hs.basis(b)), &s);
                let expect: Vector = hs.basis(b).iter().map(|c| signed(c, h.parity[b] == 1)).collect();
                assert!(same(&conj, &expect));
            }
            let ss = hs.basis(hs.index("1#s").unwrap());
            assert!(same(&s, &ss));
        }
    }

    #[test]
    fn invalid_input_is_rejected() {
        let mut h = zoo::exterior();
        h.parity = vec![0, 0];
        assert!(matches!(bosonize(&h), Err(SuperHopfError::Axioms(_))));
    }
}
