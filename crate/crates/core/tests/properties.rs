use nichols::braiding::{
    braiding_from_yd_datum, dynkin_of, super_sign_transform, twist_equivalent, BraidingMatrix, YDDatum,
};
use nichols::classify::{match_family, realize, DisplayId};
use nichols::exec::Exec;
use nichols::nichols::{symmetrizer, NicholsConfig, SymmetrizerRoute};
use nichols::scalars::UnityScalar;
use nichols::weyl::{explore, verify_reflection_identities, verify_root_system, ExploreConfig};
use proptest::prelude::*;

fn matrix(theta: usize, order: u64) -> impl Strategy<Value = BraidingMatrix> {
    prop::collection::vec(prop::collection::vec(0..order as i64, theta), theta)
        .prop_map(move |e| BraidingMatrix::from_exponents(order, &e).unwrap())
}

/// A braiding and a few random twists of it.
fn twist_family() -> impl Strategy<Value = (BraidingMatrix, Vec<BraidingMatrix>)> {
    (matrix(3, 6), prop::collection::vec((0usize..3, 1usize..3, 0i64..12), 1..6)).prop_map(|(b, ts)| {
        let mut cur = b.clone();
        let mut out = Vec::new();
        for (i, d, k) in ts {
            cur = cur.twisted(i, (i + d) % 3, &UnityScalar::root(12, k));
            out.push(cur.clone());
        }
        (b, out)
    })
}

fn display_instance() -> impl Strategy<Value = BraidingMatrix> {
    let ids = vec![
        (DisplayId::A, 3),
        (DisplayId::A, 4),
        (DisplayId::B2, 3),
        (DisplayId::C, 3),
        (DisplayId::D1, 4),
        (DisplayId::D2, 4),
        (DisplayId::G3(2), 3),
        (DisplayId::F4(3), 4),
        (DisplayId::D21Triangle, 3),
    ];
    (prop::sample::select(ids), prop::sample::select(vec![5u64, 7]), any::<u8>()).prop_map(|((id, theta), n, bits)| {
        let flags = match id {
            DisplayId::A => theta,
            DisplayId::B2 | DisplayId::C => theta - 1,
            DisplayId::D1 | DisplayId::D2 => theta - 2,
            _ => 0,
        };
        let odd: Vec<bool> = (0..flags).map(|i| bits >> i & 1 == 1).collect();
        let params = match id {
            DisplayId::D21Triangle => vec![UnityScalar::root(n, 1), UnityScalar::root(n, 2)],
            _ => vec![UnityScalar::root(n, 1)],
        };
        realize(id, theta, &odd, &params).unwrap().to_braiding().with_ambient(2 * n)
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn twist_equivalence_is_an_equivalence((b, twists) in twist_family(), other in matrix(3, 6)) {
        let mut pool = twists;
        pool.push(b);
        pool.push(other);
        for x in &pool {
            prop_assert!(twist_equivalent(x, x, false));
            for y in &pool {
                prop_assert_eq!(twist_equivalent(x, y, false), twist_equivalent(y, x, false));
                for z in &pool {
                    if twist_equivalent(x, y, false) && twist_equivalent(y, z, false) {
                        prop_assert!(twist_equivalent(x, z, false));
                    }
                }
            }
        }
    }

    #[test]
    fn twists_are_equivalent_to_their_source((b, twists) in twist_family()) {
        for t in &twists {
            prop_assert!(twist_equivalent(&b, t, false));
        }
    }

    #[test]
    fn sign_transform_is_an_involution(b in matrix(3, 10), k in prop::collection::vec(0u8..2, 3)) {
        let twice = super_sign_transform(&super_sign_transform(&b, &k), &k);
        prop_assert_eq!(twice.entries(), b.entries());
    }

    #[test]
    fn transposed_datum_has_the_same_diagram(
        g in prop::collection::vec(prop::collection::vec(0i64..12, 2), 3),
        chi in prop::collection::vec(prop::collection::vec(0i64..12, 2), 3),
        parity in prop::collection::vec(0u8..2, 3),
    ) {
        let d = YDDatum::new(vec![4, 6], g, chi, parity).unwrap();
        let (b, k) = braiding_from_yd_datum(&d);
        let (bt, kt) = braiding_from_yd_datum(&d.transposed());
        prop_assert_eq!(&k, &kt);
        prop_assert_eq!(dynkin_of(&super_sign_transform(&b, &k)), dynkin_of(&super_sign_transform(&bt, &kt)));
    }

    #[test]
    fn degree_two_kernel_detects_minus_one(b in matrix(2, 12), i in 0usize..2) {
        let mut content = vec![0, 0];
        content[i] = 2;
        let m = symmetrizer(&b, &content, SymmetrizerRoute::InsertLast, &NicholsConfig::default()).unwrap();
        prop_assert_eq!(m[0][0].is_zero(), b.q(i, i).is_minus_one());
    }

    #[test]
    fn classification_survives_relabeling(b in display_instance(), perm in permutation(4)) {
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < b.theta()).collect();
        let d = match_family(&b).unwrap();
        let dp = match_family(&b.permuted(&perm)).unwrap();
        prop_assert_eq!(d.invariant_part(), dp.invariant_part());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn exploration_is_deterministic_and_sound(b in display_instance()) {
        let seq = explore(&b, None, &ExploreConfig { exec: Exec::Sequential, ..ExploreConfig::default() });
        let par = explore(&b, None, &ExploreConfig { exec: Exec::Parallel, ..ExploreConfig::default() });
        prop_assert_eq!(&seq, &par);
        prop_assert!(seq.status.is_complete());
        prop_assert!(verify_root_system(&seq).unwrap().passed());
        prop_assert!(verify_reflection_identities(&seq).passed());
    }
}
