//! Randomized invariants across the library.

use frusta::{
    apex_heights, build_general, find_params_for, gcd, integer_sqrt, three_squares_from_params,
    three_squares_subfamily, two_square_from_params, validate, volume, volume_via_apex,
    volume_via_offsets, FrustumError, GeneralSeed, Rational, ThreeSquaresParams, TwoSquareParams,
};
use proptest::prelude::*;

proptest! {
    #[test]
    fn gcd_divides_and_is_greatest(u in 0u64..1_000_000, v in 1u64..1_000_000, w in 1u64..1_000) {
        let g = gcd(u, v).unwrap();
        prop_assert_eq!(u % g, 0);
        prop_assert_eq!(v % g, 0);
        // Any common divisor divides the gcd.
        if u % w == 0 && v % w == 0 {
            prop_assert_eq!(g % w, 0);
        }
    }

    #[test]
    fn integer_sqrt_brackets(n in 0u64..=1_000_000_000_000) {
        let (root, exact) = integer_sqrt(n);
        prop_assert!(root * root <= n);
        prop_assert!((root + 1) * (root + 1) > n);
        prop_assert_eq!(exact, root * root == n);
    }

    #[test]
    fn rational_ring_laws(
        (an, ad) in (-1_000_000i64..1_000_000, 1i64..1_000_000),
        (bn, bd) in (-1_000_000i64..1_000_000, 1i64..1_000_000),
        (cn, cd) in (-1_000_000i64..1_000_000, 1i64..1_000_000),
    ) {
        let a = Rational::new(an, ad).unwrap();
        let b = Rational::new(bn, bd).unwrap();
        let c = Rational::new(cn, cd).unwrap();
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().add(&c).unwrap(),
            a.add(&b.add(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            a.mul(&b).unwrap().mul(&c).unwrap(),
            a.mul(&b.mul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn rational_reduction_round_trip(
        num in -100_000i64..100_000,
        den in 1i64..100_000,
        k in 1i64..1_000,
    ) {
        prop_assert_eq!(
            Rational::new(num * k, den * k).unwrap(),
            Rational::new(num, den).unwrap()
        );
    }

    #[test]
    fn three_squares_parametrization_is_sound(
        l in 1i64..=1_000,
        m in 1i64..=1_000,
        pick in 0usize..32,
    ) {
        let sum = l * l + m * m;
        let divisors: Vec<i64> = (1..).take_while(|n| n * n < sum).filter(|n| sum % n == 0).collect();
        let n = divisors[pick % divisors.len()];
        let params = ThreeSquaresParams::new(l, m, n).unwrap();
        let s = three_squares_from_params(&params).unwrap();
        prop_assert_eq!(s.t * s.t, s.x * s.x + s.y * s.y + s.z * s.z);
        prop_assert!(s.x >= 1 && s.y >= 1 && s.z >= 1);

        let sub = three_squares_subfamily(l, m).unwrap();
        prop_assert_eq!(sub.t * sub.t, sub.x * sub.x + sub.y * sub.y + sub.z * sub.z);
        // n = 1 instance of the full family.
        let base = three_squares_from_params(&ThreeSquaresParams::new(l, m, 1).unwrap()).unwrap();
        prop_assert_eq!(sub, base);
    }

    #[test]
    fn two_square_parametrization_is_sound(
        delta in 1i64..=1_000,
        m in 1i64..=1_000,
        n in 1i64..=1_000,
    ) {
        prop_assume!(gcd(m as u64, n as u64).unwrap() == 1);
        let s = two_square_from_params(&TwoSquareParams::new(delta, m, n).unwrap()).unwrap();
        prop_assert_eq!(
            s.z as i128 * s.z as i128,
            s.x as i128 * s.x as i128 + 2 * s.y as i128 * s.y as i128
        );
    }

    #[test]
    fn witness_reproduces_solution(l in 1i64..=60, m in 1i64..=60) {
        let s = three_squares_subfamily(l, m).unwrap();
        let w = find_params_for(&s).unwrap();
        prop_assert_eq!(w.solution().canonical(), s.canonical());
        // Lexicographic minimality within the witness search space.
        prop_assert!(w.params.l >= 1 && w.params.m >= 1 && w.params.n >= 1);
    }

    #[test]
    fn validate_is_total(
        a in any::<i64>(),
        b in any::<i64>(),
        c in any::<i64>(),
        d in any::<i64>(),
        h in any::<i64>(),
        t in any::<i64>(),
    ) {
        match validate(a, b, c, d, h, t) {
            Ok(report) => {
                // Degenerate tuples must fail a flag, not slip through.
                if a <= 0 || b <= 0 || c <= 0 || d <= 0 || h <= 0 || t <= 0 {
                    prop_assert!(!report.overall_valid());
                }
            }
            Err(FrustumError::Overflow { .. }) => {}
            Err(other) => prop_assert!(false, "unexpected error {other:?}"),
        }
    }

    #[test]
    fn width_depth_swap_symmetry(
        a in 1i64..200,
        b in 1i64..200,
        c in 1i64..50,
        d in 1i64..50,
        h in 1i64..50,
        t in 1i64..80,
    ) {
        let straight = validate(a, b, c, d, h, t).unwrap();
        let swapped = validate(b, a, d, c, h, t).unwrap();
        // Everything except the orientation convention is swap-invariant.
        prop_assert_eq!(straight.positivity, swapped.positivity);
        prop_assert_eq!(straight.shrink, swapped.shrink);
        prop_assert_eq!(straight.key_ratio, swapped.key_ratio);
        prop_assert_eq!(straight.even_gaps, swapped.even_gaps);
        prop_assert_eq!(straight.key_equation, swapped.key_equation);
        if straight.key_ratio {
            // Only the ratio ties the two orientations to the same solid;
            // without it the swapped volume is a different quantity.
            prop_assert_eq!(straight.offset_divisor, swapped.offset_divisor);
            prop_assert_eq!(straight.volume_integral, swapped.volume_integral);
        }
        // The offsets exchange roles.
        if let (Some(sq), Some(wq)) = (&straight.derived, &swapped.derived) {
            prop_assert_eq!((sq.x, sq.y), (wq.y, wq.x));
            prop_assert_eq!(sq.volume, wq.volume);
        }
        if straight.overall_valid() && a != b {
            prop_assert!(!swapped.overall_valid());
            prop_assert!(swapped.canonicalizable());
        }
    }

    #[test]
    fn apex_heights_are_consistent(
        top_gcd in 1i64..40,
        extra in 1i64..40,
        k1 in 1i64..40,
        k2 in 1i64..40,
        h in 1i64..1_000,
    ) {
        // Ratio-satisfying bases by construction.
        let base_gcd = top_gcd + extra;
        let (a, b) = (base_gcd * k1, base_gcd * k2);
        let (c, d) = (top_gcd * k1, top_gcd * k2);
        let (h1, h2) = apex_heights(a, c, h).unwrap();
        prop_assert_eq!(h1.sub(&h2).unwrap(), Rational::from_integer(h));
        // H1/H2 = b/d.
        prop_assert_eq!(
            h1.mul(&Rational::from_integer(d)).unwrap(),
            h2.mul(&Rational::from_integer(b)).unwrap()
        );
        prop_assert_eq!(
            volume(a, c, d, h).unwrap(),
            volume_via_apex(a, b, c, d, h).unwrap()
        );
    }

    #[test]
    fn volume_routes_agree_on_seeded_frusta(
        l in 1i64..=40,
        m in 1i64..=40,
        role in 0usize..3,
        k in 1i64..=12,
    ) {
        // A valid quadruple, one coordinate picked as the height.
        let quad = three_squares_subfamily(l, m).unwrap();
        let coords = [quad.x, quad.y, quad.z];
        let h = coords[role];
        let mut rest = [coords[(role + 1) % 3], coords[(role + 2) % 3]];
        rest.sort_unstable();
        let (x, y) = (rest[0], rest[1]);
        // Smallest admissible depth step keeps x | y*d.
        let step = x / gcd(x as u64, y as u64).unwrap() as i64;
        let d = k * step;

        let seed = GeneralSeed::new(x, y, h, quad.t, d).unwrap();
        let (f, q) = build_general(&seed).unwrap();
        let direct = volume(f.a(), f.c(), f.d(), f.height()).unwrap();
        prop_assert_eq!(direct, q.volume);
        prop_assert_eq!(volume_via_offsets(x, y, d, h).unwrap(), direct);
        prop_assert_eq!(
            volume_via_apex(f.a(), f.b(), f.c(), f.d(), f.height()).unwrap(),
            direct
        );
    }
}
