//! Bounded exhaustive enumeration of integral frusta, plus the cross-check
//! harness that certifies the condition-driven generator against a literal
//! brute-force scan.
//!
//! Two independent routes produce the same set:
//!
//! * [`enumerate_integral`] is the condition-driven generator: it walks
//!   three-squares quadruples, assigns each coordinate the height role, and
//!   extends by every admissible top depth `d`.
//! * [`brute_force_oracle`] scans raw `(a, b, c, d, H, t)` tuples and keeps
//!   exactly those passing the literal definition: key ratio, even gaps, key
//!   equation, and an integer exact volume. It never touches the
//!   quadruple parametrization or the `3 | H*y*x` shortcut.
//!
//! [`cross_check`] diffs the two.

use rayon::prelude::*;
use thiserror::Error;

use crate::diophantine::{enumerate_three_squares, DiophantineError};
use crate::exactmath::integer_sqrt;
use crate::families::{build_general, FamilyError, GeneralSeed};
use crate::frustum::{integrality_criterion, volume, DerivedQuantities, Frustum, FrustumError};

/// Upper bound on candidate tuples a single search call may scan.
pub const WORK_LIMIT: u128 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(&'static str),
    #[error("bounds imply about {estimated} candidate tuples, above the work limit {limit}")]
    Capacity { estimated: u128, limit: u128 },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Frustum(#[from] FrustumError),
    #[error(transparent)]
    Diophantine(#[from] DiophantineError),
}

/// Edge-length bound `t_max` plus the top-depth cap `d_max`.
///
/// `d` is not bounded by `t`: any depth with `x | y*d` extends a quadruple,
/// so without a cap the integral family is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    t_max: i64,
    d_max: i64,
}

impl SearchBounds {
    /// Bounds with `d_max` defaulting to `t_max`.
    pub fn new(t_max: i64) -> Result<Self, SearchError> {
        Self::with_d_max(t_max, t_max)
    }

    pub fn with_d_max(t_max: i64, d_max: i64) -> Result<Self, SearchError> {
        if t_max < 1 {
            return Err(SearchError::InvalidBounds("t_max must be positive"));
        }
        if d_max < 1 {
            return Err(SearchError::InvalidBounds("d_max must be positive"));
        }
        Ok(SearchBounds { t_max, d_max })
    }

    pub fn t_max(&self) -> i64 {
        self.t_max
    }

    pub fn d_max(&self) -> i64 {
        self.d_max
    }
}

/// Frusta found on exactly one side of a cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MismatchSide {
    ConditionalOnly,
    OracleOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    /// The tuple `(a, b, c, d, H, t)`.
    pub tuple: [i64; 6],
    pub side: MismatchSide,
}

/// Outcome of diffing the conditional generator against the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub bounds: SearchBounds,
    pub count_conditional: usize,
    pub count_oracle: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrossCheckReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Every integral frustum with `t <= t_max` and `d <= d_max`, sorted by
/// `(t, a, b, c, d, H)`.
pub fn enumerate_integral(
    bounds: &SearchBounds,
) -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
    enumerate_conditional(bounds, true)
}

/// Like [`enumerate_integral`] but without the `3 | H*y*x` filter: every
/// geometrically valid frustum in bounds, integral or not.
pub fn enumerate_geometric(
    bounds: &SearchBounds,
) -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
    enumerate_conditional(bounds, false)
}

fn enumerate_conditional(
    bounds: &SearchBounds,
    mod3_filter: bool,
) -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
    let cube_estimate = (bounds.t_max as u128).pow(3) / 11 + 1;
    if cube_estimate > WORK_LIMIT {
        return Err(SearchError::Capacity {
            estimated: cube_estimate,
            limit: WORK_LIMIT,
        });
    }
    let quadruples = enumerate_three_squares(bounds.t_max)?;

    let extension_estimate = quadruples.len() as u128 * 3 * bounds.d_max as u128;
    if extension_estimate > WORK_LIMIT {
        return Err(SearchError::Capacity {
            estimated: extension_estimate,
            limit: WORK_LIMIT,
        });
    }

    let d_max = bounds.d_max;
    let per_quad: Vec<Vec<(Frustum, DerivedQuantities)>> = quadruples
        .par_iter()
        .map(|quad| -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
            let coords = [quad.x, quad.y, quad.z];
            let mut roles: Vec<(i64, i64, i64)> = Vec::with_capacity(3);
            for i in 0..3 {
                let h = coords[i];
                let mut rest = [coords[(i + 1) % 3], coords[(i + 2) % 3]];
                rest.sort_unstable();
                let role = (rest[0], rest[1], h);
                if !roles.contains(&role) {
                    roles.push(role);
                }
            }

            let mut local = Vec::new();
            for (x, y, h) in roles {
                if mod3_filter && !integrality_criterion(h, y, x) {
                    continue;
                }
                for d in 1..=d_max {
                    if (y as i128 * d as i128) % x as i128 != 0 {
                        continue;
                    }
                    let seed = GeneralSeed::new(x, y, h, quad.t, d)?;
                    local.push(build_general(&seed)?);
                }
            }
            Ok(local)
        })
        .collect::<Result<_, _>>()?;

    let mut found: Vec<(Frustum, DerivedQuantities)> = per_quad.into_iter().flatten().collect();
    found.sort_unstable_by_key(|(f, _)| f.sort_key());
    found.dedup_by_key(|(f, _)| f.as_array());
    Ok(found)
}

/// Exact number of `(a, b, c, d)` candidates the oracle scan will visit.
fn oracle_candidate_count(bounds: &SearchBounds) -> u128 {
    let t_gap = 2 * (bounds.t_max as u128).saturating_sub(1);
    let mut total: u128 = 0;
    for d in 1..=bounds.d_max as u128 {
        let mut gap_x = 2;
        while gap_x <= t_gap {
            let c_cap = d * t_gap / gap_x;
            if c_cap >= d {
                total = total.saturating_add((c_cap - d + 1) * (t_gap / 2));
            }
            gap_x += 2;
        }
    }
    total
}

/// Literal scan over raw six-tuples: keeps exactly those where the key
/// ratio, orderings, even gaps, key equation, and volume integrality all
/// hold. Same sort order as [`enumerate_integral`].
///
/// Loop caps follow from the conditions being filtered: the key equation
/// bounds both gaps by `2(t_max - 1)` and the key ratio bounds the top width
/// via `c*(b-d) = d*(a-c)`. Bounds implying more than [`WORK_LIMIT`]
/// candidates are refused.
pub fn brute_force_oracle(
    bounds: &SearchBounds,
) -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
    let estimated = oracle_candidate_count(bounds);
    if estimated > WORK_LIMIT {
        return Err(SearchError::Capacity {
            estimated,
            limit: WORK_LIMIT,
        });
    }

    let t_max = bounds.t_max;
    let t_limit = (t_max as u64) * (t_max as u64);
    let gap_cap = 2 * (t_max - 1).max(0);

    let per_depth: Vec<Vec<(Frustum, DerivedQuantities)>> = (1..=bounds.d_max)
        .into_par_iter()
        .map(|d| -> Result<Vec<(Frustum, DerivedQuantities)>, SearchError> {
            let mut local = Vec::new();
            for b in ((d + 2)..=(d + gap_cap)).step_by(2) {
                let gap_x = b - d;
                let c_cap = d * gap_cap / gap_x;
                for c in d..=c_cap {
                    for a in ((c + 2)..=(c + gap_cap)).step_by(2) {
                        if a < b || a as i128 * d as i128 != b as i128 * c as i128 {
                            continue;
                        }
                        let y = (a - c) / 2;
                        let x = gap_x / 2;
                        let base = (y as u64) * (y as u64) + (x as u64) * (x as u64);
                        for h in 1..t_max {
                            let sum = base + (h as u64) * (h as u64);
                            if sum > t_limit {
                                break;
                            }
                            let (root, exact) = integer_sqrt(sum);
                            if !exact {
                                continue;
                            }
                            if !volume(a, c, d, h)?.is_integer() {
                                continue;
                            }
                            let frustum = Frustum::new(a, b, c, d, h, root as i64)?;
                            local.push((frustum, frustum.derived()?));
                        }
                    }
                }
            }
            Ok(local)
        })
        .collect::<Result<_, _>>()?;

    let mut found: Vec<(Frustum, DerivedQuantities)> = per_depth.into_iter().flatten().collect();
    found.sort_unstable_by_key(|(f, _)| f.sort_key());
    found.dedup_by_key(|(f, _)| f.as_array());
    Ok(found)
}

/// Runs both enumerations and reports their symmetric difference.
pub fn cross_check(bounds: &SearchBounds) -> Result<CrossCheckReport, SearchError> {
    cross_check_impl(bounds, true)
}

pub(crate) fn cross_check_impl(
    bounds: &SearchBounds,
    mod3_filter: bool,
) -> Result<CrossCheckReport, SearchError> {
    let conditional = enumerate_conditional(bounds, mod3_filter)?;
    let oracle = brute_force_oracle(bounds)?;

    let left: Vec<[i64; 6]> = conditional.iter().map(|(f, _)| f.as_array()).collect();
    let right: Vec<[i64; 6]> = oracle.iter().map(|(f, _)| f.as_array()).collect();

    let mut mismatches = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < left.len() || j < right.len() {
        match (left.get(i), right.get(j)) {
            (Some(l), Some(r)) if l == r => {
                i += 1;
                j += 1;
            }
            (Some(l), Some(r)) if sort_key(l) < sort_key(r) => {
                mismatches.push(Mismatch {
                    tuple: *l,
                    side: MismatchSide::ConditionalOnly,
                });
                i += 1;
            }
            (Some(_), Some(r)) => {
                mismatches.push(Mismatch {
                    tuple: *r,
                    side: MismatchSide::OracleOnly,
                });
                j += 1;
            }
            (Some(l), None) => {
                mismatches.push(Mismatch {
                    tuple: *l,
                    side: MismatchSide::ConditionalOnly,
                });
                i += 1;
            }
            (None, Some(r)) => {
                mismatches.push(Mismatch {
                    tuple: *r,
                    side: MismatchSide::OracleOnly,
                });
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }

    Ok(CrossCheckReport {
        bounds: *bounds,
        count_conditional: conditional.len(),
        count_oracle: oracle.len(),
        mismatches,
    })
}

fn sort_key(tuple: &[i64; 6]) -> [i64; 6] {
    let [a, b, c, d, h, t] = *tuple;
    [t, a, b, c, d, h]
}
