use hyperbolic_clifford::hyperbolic::{clifford, hodge, hodge_inv};
use hyperbolic_clifford::random;
use hyperbolic_clifford::BaseSpace;
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn scaled(tol: f64, size: f64) -> f64 {
    tol * (1.0 + size)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = random::rng(seed);
        let s = BaseSpace::primal(n).unwrap();
        let (a, b, c) = (random::multivector(&mut r, s), random::multivector(&mut r, s), random::multivector(&mut r, s));
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        prop_assert!(left.distance(&right) <= scaled(TOL, left.max_abs()));
    }

    #[test]
    fn reversion_reverses_wedge_order(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = random::rng(seed);
        let s = BaseSpace::hyperbolic(n).unwrap();
        let (u, v) = (random::multivector(&mut r, s), random::multivector(&mut r, s));
        let left = u.wedge(&v).unwrap().reversion();
        let right = v.reversion().wedge(&u.reversion()).unwrap();
        prop_assert!(left.distance(&right) <= scaled(TOL, left.max_abs()));
    }

    #[test]
    fn unhodge_undoes_hodge(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = random::rng(seed);
        let u = random::multivector(&mut r, BaseSpace::hyperbolic(n).unwrap());
        let back = hodge_inv(&hodge(&u).unwrap()).unwrap();
        prop_assert!(back.distance(&u) <= scaled(TOL, u.max_abs()));
    }

    #[test]
    fn clifford_product_is_associative(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = random::rng(seed);
        let s = BaseSpace::hyperbolic(n).unwrap();
        let (a, b, c) = (random::multivector(&mut r, s), random::multivector(&mut r, s), random::multivector(&mut r, s));
        let left = clifford(&clifford(&a, &b).unwrap(), &c).unwrap();
        let right = clifford(&a, &clifford(&b, &c).unwrap()).unwrap();
        prop_assert!(left.distance(&right) <= scaled(TOL, left.max_abs()));
    }

    #[test]
    fn symbolic_partial_matches_central_difference(seed in any::<u64>(), n in 1usize..=3) {
        let mut r = random::rng(seed);
        let f = random::polynomial(&mut r, n);
        let p = random::chart_point(&mut r, n);
        let i = random::index(&mut r, n);
        let h = 1e-5;
        let (mut up, mut down) = (p.clone(), p.clone());
        up[i] += h;
        down[i] -= h;
        let numeric = (f.eval(&up) - f.eval(&down)) / (2.0 * h);
        let exact = f.partial(i).eval(&p);
        prop_assert!((numeric - exact).abs() <= 1e-7, "{} vs {}", numeric, exact);
    }
}
