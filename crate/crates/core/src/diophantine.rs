//! Parametric solvers and brute-force enumerators for the two quadratic
//! Diophantine equations behind integral frusta:
//!
//! * `t^2 = x^2 + y^2 + z^2`: every solution arises from positive
//!   parameters `(l, m, n)` with `n | l^2 + m^2` and `n^2 < l^2 + m^2` as
//!   `t = (l^2+m^2)/n + n`, `x = (l^2+m^2)/n - n`, `y = 2l`, `z = 2m`;
//! * `Z^2 = X^2 + 2Y^2`: every solution arises from positive `(delta, m, n)`
//!   with `gcd(m, n) = 1` as `X = delta*|m^2 - 2n^2|`, `Y = 2*delta*m*n`,
//!   `Z = delta*(m^2 + 2n^2)`.
//!
//! The enumerators search the raw cube and are deliberately independent of
//! the parametrizations; [`find_params_for`] certifies, instance by
//! instance, that the parametric family reaches everything the search finds.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::exactmath::{integer_sqrt, ExactMathError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiophantineError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("n = {n} does not divide l^2 + m^2 = {sum}")]
    NotADivisor { n: i64, sum: i64 },
    #[error("n = {n} is too large: n^2 must stay below l^2 + m^2 = {sum}")]
    DivisorTooLarge { n: i64, sum: i64 },
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },
    #[error("({x}, {y}, {z}, {t}) does not satisfy t^2 = x^2 + y^2 + z^2")]
    NotASolution { x: i64, y: i64, z: i64, t: i64 },
    #[error("x = y = z = {0} cannot occur in a solution")]
    EqualTriple(i64),
    #[error("no parametrization witness found for {0}; completeness violated at this instance")]
    NoWitness(ThreeSquaresSolution),
    #[error(transparent)]
    Math(#[from] ExactMathError),
}

fn checked_sq(v: i64, what: &'static str) -> Result<i64, DiophantineError> {
    v.checked_mul(v)
        .ok_or(DiophantineError::Math(ExactMathError::Overflow(what)))
}

fn checked_add(a: i64, b: i64) -> Result<i64, DiophantineError> {
    a.checked_add(b)
        .ok_or(DiophantineError::Math(ExactMathError::Overflow("l^2 + m^2")))
}

/// Positive quadruple with `t^2 = x^2 + y^2 + z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThreeSquaresSolution {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub t: i64,
}

impl ThreeSquaresSolution {
    pub fn new(x: i64, y: i64, z: i64, t: i64) -> Result<Self, DiophantineError> {
        if x < 1 || y < 1 || z < 1 || t < 1 {
            return Err(DiophantineError::NonPositive("every coordinate"));
        }
        let sum = x as i128 * x as i128 + y as i128 * y as i128 + z as i128 * z as i128;
        if t as i128 * t as i128 != sum {
            return Err(DiophantineError::NotASolution { x, y, z, t });
        }
        if x == y && y == z {
            return Err(DiophantineError::EqualTriple(x));
        }
        Ok(ThreeSquaresSolution { x, y, z, t })
    }

    /// The same solution with `x <= y <= z`.
    pub fn canonical(&self) -> Self {
        let mut coords = [self.x, self.y, self.z];
        coords.sort_unstable();
        ThreeSquaresSolution {
            x: coords[0],
            y: coords[1],
            z: coords[2],
            t: self.t,
        }
    }

    /// Sort key `(t, z, y, x)` used by the enumerator.
    pub fn sort_key(&self) -> [i64; 4] {
        [self.t, self.z, self.y, self.x]
    }
}

impl fmt::Display for ThreeSquaresSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.x, self.y, self.z, self.t)
    }
}

/// Parameters `(l, m, n)` with `n | l^2 + m^2` and `n^2 < l^2 + m^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreeSquaresParams {
    pub l: i64,
    pub m: i64,
    pub n: i64,
}

impl ThreeSquaresParams {
    pub fn new(l: i64, m: i64, n: i64) -> Result<Self, DiophantineError> {
        if l < 1 {
            return Err(DiophantineError::NonPositive("l"));
        }
        if m < 1 {
            return Err(DiophantineError::NonPositive("m"));
        }
        if n < 1 {
            return Err(DiophantineError::NonPositive("n"));
        }
        let sum = checked_add(checked_sq(l, "l^2 + m^2")?, checked_sq(m, "l^2 + m^2")?)?;
        if n as i128 * n as i128 >= sum as i128 {
            return Err(DiophantineError::DivisorTooLarge { n, sum });
        }
        if sum % n != 0 {
            return Err(DiophantineError::NotADivisor { n, sum });
        }
        Ok(ThreeSquaresParams { l, m, n })
    }
}

/// A parametrization certificate produced by [`find_params_for`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeSquaresWitness {
    pub params: ThreeSquaresParams,
    /// `permutation[k]` is the index into the input's `(x, y, z)` that the
    /// parametrization's k-th coordinate reproduces.
    pub permutation: [usize; 3],
}

impl ThreeSquaresWitness {
    /// The solution generated by the witness parameters, in parameter roles.
    pub fn solution(&self) -> ThreeSquaresSolution {
        three_squares_from_params(&self.params).expect("witness params were validated")
    }
}

/// Instantiates the three-squares parametrization.
pub fn three_squares_from_params(
    p: &ThreeSquaresParams,
) -> Result<ThreeSquaresSolution, DiophantineError> {
    let sum = checked_add(checked_sq(p.l, "l^2 + m^2")?, checked_sq(p.m, "l^2 + m^2")?)?;
    if p.n < 1 || sum % p.n != 0 {
        return Err(DiophantineError::NotADivisor { n: p.n, sum });
    }
    let quotient = sum / p.n;
    ThreeSquaresSolution::new(quotient - p.n, 2 * p.l, 2 * p.m, quotient + p.n)
}

/// The `n = 1` subfamily: `x = l^2 + m^2 - 1`, `y = 2l`, `z = 2m`,
/// `t = l^2 + m^2 + 1`.
pub fn three_squares_subfamily(l: i64, m: i64) -> Result<ThreeSquaresSolution, DiophantineError> {
    let params = ThreeSquaresParams::new(l, m, 1)?;
    three_squares_from_params(&params)
}

/// Every solution with `1 <= x <= y <= z` and `t <= t_max`, sorted by
/// `(t, z, y, x)`, found by direct search over the coordinate cube.
pub fn enumerate_three_squares(t_max: i64) -> Result<Vec<ThreeSquaresSolution>, DiophantineError> {
    if t_max < 3 {
        return Ok(Vec::new());
    }
    let limit = checked_sq(t_max, "t_max^2")? as u64;

    let x_max = (integer_sqrt(limit / 3).0 as i64).max(1);
    let sq = |v: i64| v as u64 * v as u64;
    let mut found: Vec<ThreeSquaresSolution> = (1..=x_max)
        .into_par_iter()
        .map(|x| {
            let mut local = Vec::new();
            let x_sq = sq(x);
            for y in x.. {
                let xy_sq = x_sq + sq(y);
                if xy_sq + sq(y) > limit {
                    break;
                }
                // The sum is monotone in z, so the candidate root only ever
                // moves forward; bumping it is O(1) amortized per step.
                let mut root = integer_sqrt(xy_sq + sq(y)).0;
                for z in y.. {
                    let sum = xy_sq + sq(z);
                    if sum > limit {
                        break;
                    }
                    while (root + 1) * (root + 1) <= sum {
                        root += 1;
                    }
                    if root * root == sum && !(x == y && y == z) {
                        local.push(ThreeSquaresSolution {
                            x,
                            y,
                            z,
                            t: root as i64,
                        });
                    }
                }
            }
            local
        })
        .flatten()
        .collect();
    found.sort_unstable_by_key(ThreeSquaresSolution::sort_key);
    Ok(found)
}

/// Finds the lexicographically least `(l, m, n)` (then least permutation)
/// reproducing `s` up to a permutation of `(x, y, z)`.
///
/// The search places each pair of even coordinates in the `(2l, 2m)` roles
/// and sweeps the divisors of `l^2 + m^2`. An error here means the
/// parametrization missed a real solution.
pub fn find_params_for(
    s: &ThreeSquaresSolution,
) -> Result<ThreeSquaresWitness, DiophantineError> {
    let coords = [s.x, s.y, s.z];
    let mut best: Option<(ThreeSquaresParams, [usize; 3])> = None;

    for idx_x in 0..3 {
        for idx_y in 0..3 {
            if idx_y == idx_x {
                continue;
            }
            let idx_z = 3 - idx_x - idx_y;
            if coords[idx_y] % 2 != 0 || coords[idx_z] % 2 != 0 {
                continue;
            }
            let l = coords[idx_y] / 2;
            let m = coords[idx_z] / 2;
            let sum = checked_add(checked_sq(l, "l^2 + m^2")?, checked_sq(m, "l^2 + m^2")?)?;
            let (root, exact) = integer_sqrt(sum as u64);
            let n_max = if exact { root as i64 - 1 } else { root as i64 };
            for n in 1..=n_max {
                if sum % n != 0 || sum / n - n != coords[idx_x] {
                    continue;
                }
                let candidate = (
                    ThreeSquaresParams { l, m, n },
                    [idx_x, idx_y, idx_z],
                );
                if best.is_none_or(|b| (candidate.0, candidate.1) < (b.0, b.1)) {
                    best = Some(candidate);
                }
            }
        }
    }

    best.map(|(params, permutation)| ThreeSquaresWitness {
        params,
        permutation,
    })
    .ok_or(DiophantineError::NoWitness(*s))
}

/// Positive triple with `Z^2 = X^2 + 2Y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoSquareSolution {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl TwoSquareSolution {
    pub fn new(x: i64, y: i64, z: i64) -> Result<Self, DiophantineError> {
        if x < 1 || y < 1 || z < 1 {
            return Err(DiophantineError::NonPositive("every coordinate"));
        }
        if z as i128 * z as i128 != x as i128 * x as i128 + 2 * y as i128 * y as i128 {
            return Err(DiophantineError::NotASolution { x, y, z, t: 0 });
        }
        Ok(TwoSquareSolution { x, y, z })
    }

    /// Sort key `(Z, Y, X)` used by the enumerator.
    pub fn sort_key(&self) -> [i64; 3] {
        [self.z, self.y, self.x]
    }
}

impl fmt::Display for TwoSquareSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Parameters `(delta, m, n)` with `gcd(m, n) = 1`, all positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSquareParams {
    pub delta: i64,
    pub m: i64,
    pub n: i64,
}

impl TwoSquareParams {
    pub fn new(delta: i64, m: i64, n: i64) -> Result<Self, DiophantineError> {
        if delta < 1 {
            return Err(DiophantineError::NonPositive("delta"));
        }
        if m < 1 {
            return Err(DiophantineError::NonPositive("m"));
        }
        if n < 1 {
            return Err(DiophantineError::NonPositive("n"));
        }
        if crate::exactmath::gcd(m as u64, n as u64)? != 1 {
            return Err(DiophantineError::NotCoprime { m, n });
        }
        Ok(TwoSquareParams { delta, m, n })
    }
}

/// Instantiates the `Z^2 = X^2 + 2Y^2` parametrization.
pub fn two_square_from_params(p: &TwoSquareParams) -> Result<TwoSquareSolution, DiophantineError> {
    let what = "two-square parametrization";
    let m_sq = checked_sq(p.m, what)?;
    let two_n_sq = checked_sq(p.n, what)?
        .checked_mul(2)
        .ok_or(DiophantineError::Math(ExactMathError::Overflow(what)))?;
    let mul = |a: i64, b: i64| {
        a.checked_mul(b)
            .ok_or(DiophantineError::Math(ExactMathError::Overflow(what)))
    };
    let x = mul(p.delta, (m_sq - two_n_sq).abs())?;
    let y = mul(2, mul(p.delta, mul(p.m, p.n)?)?)?;
    let z = mul(
        p.delta,
        m_sq.checked_add(two_n_sq)
            .ok_or(DiophantineError::Math(ExactMathError::Overflow(what)))?,
    )?;
    TwoSquareSolution::new(x, y, z)
}

/// Every positive solution with `Z <= z_max`, sorted by `(Z, Y, X)`.
pub fn enumerate_two_square(z_max: i64) -> Result<Vec<TwoSquareSolution>, DiophantineError> {
    let mut found = Vec::new();
    if z_max < 3 {
        return Ok(found);
    }
    checked_sq(z_max, "z_max^2")?;
    for z in 3..=z_max {
        let z_sq = (z * z) as u64;
        for y in 1.. {
            let two_y_sq = 2 * (y * y) as u64;
            if two_y_sq >= z_sq {
                break;
            }
            let (root, exact) = integer_sqrt(z_sq - two_y_sq);
            if exact && root >= 1 {
                found.push(TwoSquareSolution {
                    x: root as i64,
                    y,
                    z,
                });
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        let p = ThreeSquaresParams::new(1, 1, 1).unwrap();
        let s = three_squares_from_params(&p).unwrap();
        assert_eq!((s.x, s.y, s.z, s.t), (1, 2, 2, 3));

        let p = ThreeSquaresParams::new(1, 3, 2).unwrap();
        let s = three_squares_from_params(&p).unwrap();
        assert_eq!((s.x, s.y, s.z, s.t), (3, 2, 6, 7));

        assert_eq!(
            ThreeSquaresParams::new(2, 1, 5),
            Err(DiophantineError::DivisorTooLarge { n: 5, sum: 5 })
        );
    }

    #[test]
    fn subfamily_examples() {
        let s = three_squares_subfamily(1, 1).unwrap();
        assert_eq!((s.x, s.y, s.z, s.t), (1, 2, 2, 3));
        let s = three_squares_subfamily(3, 1).unwrap();
        assert_eq!((s.x, s.y, s.z, s.t), (9, 6, 2, 11));
        let s = three_squares_subfamily(2, 2).unwrap();
        assert_eq!((s.x, s.y, s.z, s.t), (7, 4, 4, 9));
    }

    #[test]
    fn enumerate_three_squares_examples() {
        let sols = enumerate_three_squares(3).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!((sols[0].x, sols[0].y, sols[0].z, sols[0].t), (1, 2, 2, 3));

        assert!(enumerate_three_squares(2).unwrap().is_empty());

        let sols = enumerate_three_squares(7).unwrap();
        assert!(sols
            .iter()
            .any(|s| (s.x, s.y, s.z, s.t) == (2, 3, 6, 7)));
        assert!(sols.iter().all(|s| s.t <= 7));
        // Canonical coordinate order and sort order hold throughout.
        assert!(sols.iter().all(|s| s.x <= s.y && s.y <= s.z));
        let mut sorted = sols.clone();
        sorted.sort_unstable_by_key(ThreeSquaresSolution::sort_key);
        assert_eq!(sols, sorted);
    }

    #[test]
    fn find_params_examples() {
        let s = ThreeSquaresSolution::new(2, 3, 6, 7).unwrap();
        let w = find_params_for(&s).unwrap();
        assert_eq!(w.params, ThreeSquaresParams { l: 1, m: 3, n: 2 });
        // The x-role lands on the odd coordinate 3.
        assert_eq!(w.permutation[0], 1);
        assert_eq!(w.solution().canonical(), s.canonical());

        let s = ThreeSquaresSolution::new(1, 2, 2, 3).unwrap();
        let w = find_params_for(&s).unwrap();
        assert_eq!(w.params, ThreeSquaresParams { l: 1, m: 1, n: 1 });

        // (4, 4, 2, 6) admits several witnesses; the lexicographically least
        // is (l, m, n) = (1, 2, 1), reproducing (4, 2, 4).
        let s = ThreeSquaresSolution::new(4, 4, 2, 6).unwrap();
        let w = find_params_for(&s).unwrap();
        assert_eq!(w.params, ThreeSquaresParams { l: 1, m: 2, n: 1 });
        assert_eq!(w.solution().canonical(), s.canonical());
    }

    #[test]
    fn two_square_params_examples() {
        let s = two_square_from_params(&TwoSquareParams::new(1, 1, 1).unwrap()).unwrap();
        assert_eq!((s.x, s.y, s.z), (1, 2, 3));
        let s = two_square_from_params(&TwoSquareParams::new(1, 1, 2).unwrap()).unwrap();
        assert_eq!((s.x, s.y, s.z), (7, 4, 9));
        let s = two_square_from_params(&TwoSquareParams::new(2, 1, 1).unwrap()).unwrap();
        assert_eq!((s.x, s.y, s.z), (2, 4, 6));
        assert_eq!(
            TwoSquareParams::new(1, 2, 2),
            Err(DiophantineError::NotCoprime { m: 2, n: 2 })
        );
    }

    #[test]
    fn enumerate_two_square_examples() {
        let sols = enumerate_two_square(3).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!((sols[0].x, sols[0].y, sols[0].z), (1, 2, 3));

        assert!(enumerate_two_square(2).unwrap().is_empty());

        let sols = enumerate_two_square(9).unwrap();
        let tuples: Vec<_> = sols.iter().map(|s| (s.x, s.y, s.z)).collect();
        assert_eq!(tuples, vec![(1, 2, 3), (2, 4, 6), (7, 4, 9), (3, 6, 9)]);
    }

    #[test]
    fn solution_constructors_reject_junk() {
        assert!(ThreeSquaresSolution::new(1, 2, 2, 4).is_err());
        assert!(ThreeSquaresSolution::new(0, 2, 2, 3).is_err());
        assert!(matches!(
            ThreeSquaresSolution::new(1, 1, 1, 2),
            Err(DiophantineError::NotASolution { .. })
        ));
        assert!(TwoSquareSolution::new(1, 2, 4).is_err());
    }
}
