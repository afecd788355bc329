use nichols::scalars::{
    specialize, CycNumber, SpecializationMap, UnityOrder, UnityScalar,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = UnityScalar> {
    (prop::sample::select(vec![1u64, 2, 3, 4, 5, 6, 10, 12]), -20i64..20, -3i64..=3, -3i64..=3).prop_map(|(n, a, eq, er)| {
        let mut s = UnityScalar::root(n, a);
        if eq != 0 {
            s = s.mul(&UnityScalar::generic("q").pow(eq));
        }
        if er != 0 {
            s = s.mul(&UnityScalar::generic("r").pow(er));
        }
        s
    })
}

fn torsion() -> impl Strategy<Value = UnityScalar> {
    (1u64..=12, -20i64..20).prop_map(|(n, a)| UnityScalar::root(n, a))
}

fn cyc(order: u64) -> impl Strategy<Value = CycNumber> {
    prop::collection::vec(-4i64..=4, order as usize).prop_map(move |c| CycNumber::from_root_counts(order, &c))
}

proptest! {
    #[test]
    fn group_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&UnityScalar::one(1)), a.clone());
        prop_assert!(a.mul(&a.inv()).is_one());
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn order_of_powers(s in torsion(), k in 0i64..40) {
        let n = s.unity_order().finite().unwrap();
        // gcd(0, n) = n covers k = 0
        let expect = n / (k as u64).gcd(&n);
        prop_assert_eq!(s.pow(k).unity_order(), UnityOrder::Finite(expect));
    }

    #[test]
    fn specialize_is_multiplicative(a in scalar(), b in scalar(), cq in 0i64..60, cr in 0i64..60) {
        let m = SpecializationMap::new(60).assign("q", cq).assign("r", cr);
        let lhs = specialize(&a.mul(&b), &m).unwrap();
        let rhs = specialize(&a, &m).unwrap().mul(&specialize(&b, &m).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse(a in cyc(12)) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn inverse_odd_order(a in cyc(15)) {
        prop_assume!(!a.is_zero());
        prop_assert!(a.inv().unwrap().mul(&a).is_one());
    }

    #[test]
    fn float_oracle(a in cyc(7), b in cyc(7), c in cyc(7)) {
        let e = a.mul(&b).add(&c.mul(&a)).sub(&b);
        let (ar, ai) = a.eval_f64();
        let (br, bi) = b.eval_f64();
        let (cr, ci) = c.eval_f64();
        let mul = |x: (f64, f64), y: (f64, f64)| (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        let ab = mul((ar, ai), (br, bi));
        let ca = mul((cr, ci), (ar, ai));
        let want = (ab.0 + ca.0 - br, ab.1 + ca.1 - bi);
        let got = e.eval_f64();
        prop_assert!((got.0 - want.0).abs() < 1e-9 && (got.1 - want.1).abs() < 1e-9);
    }

    #[test]
    fn field_distributive(a in cyc(12), b in cyc(12), c in cyc(12)) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

#[test]
fn rational_scaling() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let x = CycNumber::root(5, 2).scale(&half);
    assert_eq!(x.add(&x), CycNumber::root(5, 2));
}
