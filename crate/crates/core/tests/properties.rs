use artin_core::analytic::bounds::c_epsilon;
use artin_core::analytic::interval::Interval;
use artin_core::analytic::sums::{a0t_eval, A0tData, A0tMode};
use artin_core::{Cyclotomic, Limits, Perm};
use num_integer::Integer;
use proptest::prelude::*;

fn cyclotomic(e: u32, counts: Vec<i64>) -> Cyclotomic {
    let mut c = counts;
    c.resize(e as usize, 0);
    Cyclotomic::from_exponent_counts(e, &c)
}

fn elements(k: usize) -> impl Strategy<Value = Vec<Cyclotomic>> {
    (1u32..=60).prop_flat_map(move |e| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, e as usize), k)
            .prop_map(move |cs| cs.into_iter().map(|c| cyclotomic(e, c)).collect())
    })
}

fn element() -> impl Strategy<Value = Cyclotomic> {
    elements(1).prop_map(|mut v| v.pop().unwrap())
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((0..n as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(v in elements(3)) {
        let (a, b, c) = (v[0].clone(), v[1].clone(), v[2].clone());
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert!((a.clone() - a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inverse().unwrap(), Cyclotomic::one());
        }
    }

    #[test]
    fn galois_action_composes(v in elements(2), k in 1i64..200, l in 1i64..200) {
        let (a, b) = (v[0].clone(), v[1].clone());
        let e = (a.conductor() as i64).lcm(&(b.conductor() as i64));
        prop_assume!(k.gcd(&e) == 1 && l.gcd(&e) == 1);
        let (a, b) = (a.promote(e as u32), b.promote(e as u32));
        let kl = a.galois(k).unwrap().galois(l).unwrap();
        prop_assert_eq!(kl, a.galois(k * l).unwrap());
        prop_assert_eq!((a.clone() * b.clone()).galois(k).unwrap(), a.galois(k).unwrap() * b.galois(k).unwrap());
        prop_assert_eq!(a.conj(), a.galois(-1).unwrap());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn text_round_trip(a in element()) {
        prop_assert_eq!(Cyclotomic::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn permutation_group_axioms(x in perm(7), y in perm(7), z in perm(7)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inverse()).is_identity());
        prop_assert_eq!(x.pow(x.order() as i64), Perm::identity(7));
        prop_assert_eq!(x.conjugate_by(&y).order(), x.order());
    }

    #[test]
    fn c_epsilon_monotone(e1 in 1e-6f64..10.0, e2 in 1e-6f64..10.0, k1 in 1u64..1000, k2 in 1u64..1000) {
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        let (small, big) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
        prop_assert!(c_epsilon(lo, small).unwrap() <= c_epsilon(hi, small).unwrap());
        prop_assert!(c_epsilon(lo, big).unwrap() <= c_epsilon(lo, small).unwrap());
    }

    #[test]
    fn interval_ops_enclose_float_results(a in -1e6f64..1e6, b in -1e6f64..1e6, c in 1e-3f64..1e3) {
        let (x, y, z) = (Interval::point(a), Interval::point(b), Interval::point(c));
        prop_assert!((x + y).contains(a + b));
        prop_assert!((x - y).contains(a - b));
        prop_assert!((x * y).contains(a * b));
        prop_assert!((x / z).contains(a / c));
        prop_assert!(z.ln().contains(c.ln()));
        prop_assert!(z.sqrt().contains(c.sqrt()));
    }

    #[test]
    fn a0t_exact_below_prime_support_bound(
        h in 100u64..260,
        t in 1u32..=2,
        d in 1u32..=3,
        keep in prop::collection::vec(any::<bool>(), 60),
        weights in prop::collection::vec(0.0f64..=1.0, 60),
    ) {
        let primes: Vec<u64> = (2..=h).filter(|&n| (2..n).take_while(|q| q * q <= n).all(|q| n % q != 0)).collect();
        let coefficients: Vec<(u64, f64)> = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[i % keep.len()])
            .map(|(i, &p)| (p, weights[i % weights.len()]))
            .collect();
        let data = A0tData { h, t, d, n: 1, coefficients };
        let limits = Limits::default();
        let exact = a0t_eval(&data, A0tMode::ExactBruteforce, &limits).unwrap();
        let bound = a0t_eval(&data, A0tMode::PrimeSupportBound, &limits).unwrap();
        prop_assert!(exact.value.hi <= bound.intermediate[0].lo);
        prop_assert!(bound.intermediate[0].lo <= bound.intermediate[1].hi);
        prop_assert!(bound.intermediate[1].lo <= bound.value.hi);
    }
}
