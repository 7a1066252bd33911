//! Desk-scale completeness certificates for the two parametrizations.
//!
//! The published general solutions are not re-proved here; instead every
//! brute-force solution within the tested bounds must be reproduced by the
//! parametric side, and any counterexample fails loudly.

use std::collections::HashSet;

use frusta::{
    enumerate_three_squares, enumerate_two_square, find_params_for, gcd,
    three_squares_subfamily, two_square_from_params, TwoSquareParams,
};

#[test]
fn every_three_squares_solution_has_a_witness() {
    for s in enumerate_three_squares(60).unwrap() {
        let w = find_params_for(&s).unwrap_or_else(|e| panic!("{e}"));
        assert_eq!(w.solution().canonical(), s.canonical(), "witness for {s}");
    }
}

#[test]
fn three_squares_parity_structure_and_no_equilateral() {
    for s in enumerate_three_squares(60).unwrap() {
        let evens = [s.x, s.y, s.z].iter().filter(|v| *v % 2 == 0).count();
        assert!(evens >= 2, "{s}");
        assert!(!(s.x == s.y && s.y == s.z), "{s}");
    }
}

#[test]
fn subfamily_is_contained_in_enumeration() {
    // Largest subfamily edge for l, m <= 30 is 30^2 + 30^2 + 1.
    let enumerated: HashSet<(i64, i64, i64, i64)> = enumerate_three_squares(1801)
        .unwrap()
        .into_iter()
        .map(|s| (s.x, s.y, s.z, s.t))
        .collect();
    for l in 1..=30 {
        for m in 1..=30 {
            let sub = three_squares_subfamily(l, m).unwrap().canonical();
            assert!(
                enumerated.contains(&(sub.x, sub.y, sub.z, sub.t)),
                "subfamily ({l}, {m}) missing: {sub}"
            );
        }
    }
}

#[test]
fn two_square_parameters_cover_enumeration() {
    let z_max = 200;
    let mut reachable: HashSet<(i64, i64, i64)> = HashSet::new();
    for delta in 1..=z_max {
        for m in 1.. {
            if delta * (m * m + 2) > z_max {
                break;
            }
            for n in 1.. {
                let z = delta * (m * m + 2 * n * n);
                if z > z_max {
                    break;
                }
                if gcd(m as u64, n as u64).unwrap() != 1 {
                    continue;
                }
                let s =
                    two_square_from_params(&TwoSquareParams::new(delta, m, n).unwrap()).unwrap();
                reachable.insert((s.x, s.y, s.z));
            }
        }
    }

    let enumerated = enumerate_two_square(z_max).unwrap();
    assert!(!enumerated.is_empty());
    for s in enumerated {
        assert!(
            reachable.contains(&(s.x, s.y, s.z)),
            "no (delta, m, n) reproduces {s}"
        );
    }
}
