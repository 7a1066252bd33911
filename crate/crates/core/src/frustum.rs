//! Regular truncated pyramids with rectangular bases.
//!
//! A candidate solid is the six-tuple `(a, b, c, d, H, t)`: bottom base
//! `a x b`, top base `c x d`, height `H`, lateral edge `t`. The geometric
//! conditions are
//!
//! * key ratio: `a*d = b*c` (similar triangles through the base centers),
//! * even gaps: `a-c` and `b-d` are even, with offsets `y = (a-c)/2` and
//!   `x = (b-d)/2`,
//! * key equation: `4t^2 = 4H^2 + (a-c)^2 + (b-d)^2`.
//!
//! The volume is always the exact rational `d*H*(a^2 + a*c + c^2) / (3c)`;
//! the solid is integral when that value reduces to an integer, which (given
//! the geometric conditions) happens exactly when `3 | H*y*x`.

use std::fmt;

use thiserror::Error;

use crate::exactmath::{add_wide, gcd, mul_wide, ExactMathError, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrustumError {
    #[error("arithmetic overflow while evaluating {condition}")]
    Overflow { condition: &'static str },
    #[error("candidate violates {condition}")]
    ConditionFailed { condition: &'static str },
    #[error("base ratio violated: {a}*{d} != {b}*{c}")]
    RatioViolation { a: i64, b: i64, c: i64, d: i64 },
    #[error("offset x = {x} does not divide y*d = {y}*{d}")]
    IndivisibleOffsets { x: i64, y: i64, d: i64 },
    #[error("dimensions out of range: {0}")]
    InvalidDimensions(&'static str),
}

impl From<ExactMathError> for FrustumError {
    fn from(err: ExactMathError) -> Self {
        match err {
            ExactMathError::Overflow(condition) => FrustumError::Overflow { condition },
            ExactMathError::ZeroDenominator => {
                FrustumError::InvalidDimensions("zero denominator")
            }
            ExactMathError::GcdOfZeros => FrustumError::InvalidDimensions("gcd of zeros"),
        }
    }
}

/// A geometrically valid regular truncated pyramid with rectangular bases.
///
/// Construction enforces every geometric condition; volume integrality is a
/// property reported through [`DerivedQuantities`], not an invariant of the
/// type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frustum {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    h: i64,
    t: i64,
}

/// Offsets, exact volume, and classification flags of a valid frustum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedQuantities {
    /// Half of `b - d`.
    pub x: i64,
    /// Half of `a - c`.
    pub y: i64,
    /// Exact volume `d*H*(a^2 + a*c + c^2) / (3c)`.
    pub volume: Rational,
    /// True iff the volume reduces to an integer.
    pub is_integral: bool,
    /// True iff both bases are squares (`a = b` and `c = d`).
    pub is_square: bool,
}

/// Lowest-terms decomposition of the base rectangle sides.
///
/// `a = N*k1`, `b = N*k2`, `c = M*k1`, `d = M*k2` with `gcd(k1, k2) = 1`,
/// where `N = gcd(a, b)` and `M = gcd(c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioDecomposition {
    pub base_gcd: i64,
    pub top_gcd: i64,
    pub k1: i64,
    pub k2: i64,
}

/// Per-condition diagnostics for an arbitrary six-tuple of integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    /// The candidate `(a, b, c, d, H, t)` these flags describe.
    pub candidate: [i64; 6],
    /// All six lengths are at least 1.
    pub positivity: bool,
    /// `a >= b` and `c >= d`.
    pub ordering: bool,
    /// `a > c` and `b > d`.
    pub shrink: bool,
    /// `a*d = b*c`.
    pub key_ratio: bool,
    /// `a - c` and `b - d` are both even.
    pub even_gaps: bool,
    /// `4t^2 = 4H^2 + (a-c)^2 + (b-d)^2`.
    pub key_equation: bool,
    /// `x` divides `y*d`.
    pub offset_divisor: bool,
    /// The exact volume is an integer.
    pub volume_integral: bool,
    /// Present when the base geometry is consistent enough to define
    /// offsets and volume.
    pub derived: Option<DerivedQuantities>,
}

impl ValidationReport {
    /// Conjunction of the geometric flags (everything except volume
    /// integrality).
    pub fn overall_valid(&self) -> bool {
        self.positivity
            && self.ordering
            && self.shrink
            && self.key_ratio
            && self.even_gaps
            && self.key_equation
            && self.offset_divisor
    }

    /// Geometric validity plus an integer volume.
    pub fn overall_integral(&self) -> bool {
        self.overall_valid() && self.volume_integral
    }

    /// True when only the orientation convention failed: swapping width and
    /// depth (`a <-> b`, `c <-> d`) yields a canonically ordered tuple that
    /// passes every geometric condition.
    pub fn canonicalizable(&self) -> bool {
        let [a, b, c, d, _, _] = self.candidate;
        !self.ordering
            && b >= a
            && d >= c
            && self.positivity
            && self.shrink
            && self.key_ratio
            && self.even_gaps
            && self.key_equation
    }

    /// Condition labels with their pass/fail state, in evaluation order.
    pub fn conditions(&self) -> [(&'static str, bool); 8] {
        [
            ("positivity", self.positivity),
            ("ordering", self.ordering),
            ("shrink", self.shrink),
            ("key ratio", self.key_ratio),
            ("even gaps", self.even_gaps),
            ("key equation", self.key_equation),
            ("offset divisibility", self.offset_divisor),
            ("volume integrality", self.volume_integral),
        ]
    }
}

/// Tests whether `3 | H*y*x`.
///
/// Given the geometric conditions (offsets defined, `x | y*d`), the volume
/// is an integer exactly when this returns true.
pub fn integrality_criterion(h: i64, y: i64, x: i64) -> bool {
    h % 3 == 0 || y % 3 == 0 || x % 3 == 0
}

/// Evaluates every condition on an arbitrary candidate tuple.
pub fn validate(
    a: i64,
    b: i64,
    c: i64,
    d: i64,
    h: i64,
    t: i64,
) -> Result<ValidationReport, FrustumError> {
    let candidate = [a, b, c, d, h, t];
    let positivity = candidate.iter().all(|&v| v >= 1);
    let ordering = a >= b && c >= d;
    let shrink = a > c && b > d;

    let (aw, bw, cw, dw, hw, tw) = (
        a as i128, b as i128, c as i128, d as i128, h as i128, t as i128,
    );
    let key_ratio = aw * dw == bw * cw;
    let gap_y = aw - cw;
    let gap_x = bw - dw;
    let even_gaps = gap_y % 2 == 0 && gap_x % 2 == 0;

    let key_equation = {
        let lhs = mul_wide(4, mul_wide(tw, tw, "key equation")?, "key equation")?;
        let h_term = mul_wide(4, mul_wide(hw, hw, "key equation")?, "key equation")?;
        let y_term = mul_wide(gap_y, gap_y, "key equation")?;
        let x_term = mul_wide(gap_x, gap_x, "key equation")?;
        lhs == add_wide(h_term, add_wide(y_term, x_term, "key equation")?, "key equation")?
    };

    let offsets = if shrink && even_gaps {
        Some((gap_x / 2, gap_y / 2))
    } else {
        None
    };
    let offset_divisor = match offsets {
        Some((x, y)) => x >= 1 && (y * dw) % x == 0,
        None => false,
    };

    let vol = if positivity && shrink {
        Some(volume(a, c, d, h)?)
    } else {
        None
    };
    let volume_integral = vol.is_some_and(|v| v.is_integer());

    let derived = match (offsets, vol) {
        (Some((x, y)), Some(volume)) if positivity && ordering && key_ratio => {
            Some(DerivedQuantities {
                x: x as i64,
                y: y as i64,
                volume,
                is_integral: volume.is_integer(),
                is_square: a == b && c == d,
            })
        }
        _ => None,
    };

    Ok(ValidationReport {
        candidate,
        positivity,
        ordering,
        shrink,
        key_ratio,
        even_gaps,
        key_equation,
        offset_divisor,
        volume_integral,
        derived,
    })
}

/// Exact volume `d*H*(a^2 + a*c + c^2) / (3c)`.
pub fn volume(a: i64, c: i64, d: i64, h: i64) -> Result<Rational, FrustumError> {
    if !(a > c && c >= 1 && d >= 1 && h >= 1) {
        return Err(FrustumError::InvalidDimensions(
            "volume requires a > c >= 1, d >= 1, H >= 1",
        ));
    }
    let (aw, cw) = (a as i128, c as i128);
    let sum = add_wide(
        add_wide(mul_wide(aw, aw, "volume")?, mul_wide(aw, cw, "volume")?, "volume")?,
        mul_wide(cw, cw, "volume")?,
        "volume",
    )?;
    let num = mul_wide(mul_wide(d as i128, h as i128, "volume")?, sum, "volume")?;
    Ok(Rational::from_wide(num, 3 * cw)?)
}

/// Exact volume expressed through the offsets:
/// `H*y*[(2x+d)^2 + d*(2x+d) + d^2] / (3x)`.
///
/// Agrees with [`volume`] applied to `(c + 2y, c, d, H)` where `c = y*d/x`.
pub fn volume_via_offsets(x: i64, y: i64, d: i64, h: i64) -> Result<Rational, FrustumError> {
    if !(x >= 1 && y >= x && d >= 1 && h >= 1) {
        return Err(FrustumError::InvalidDimensions(
            "offset volume requires y >= x >= 1, d >= 1, H >= 1",
        ));
    }
    if (y as i128 * d as i128) % x as i128 != 0 {
        return Err(FrustumError::IndivisibleOffsets { x, y, d });
    }
    let what = "offset volume";
    let (xw, dw) = (x as i128, d as i128);
    let base = add_wide(2 * xw, dw, what)?;
    let sum = add_wide(
        add_wide(mul_wide(base, base, what)?, mul_wide(dw, base, what)?, what)?,
        mul_wide(dw, dw, what)?,
        what,
    )?;
    let num = mul_wide(mul_wide(h as i128, y as i128, what)?, sum, what)?;
    Ok(Rational::from_wide(num, 3 * xw)?)
}

/// Heights of the full pyramid and of the cut-off top pyramid:
/// `H1 = H*a/(a-c)` and `H2 = H*c/(a-c)`, with `H1 - H2 = H` exactly.
pub fn apex_heights(a: i64, c: i64, h: i64) -> Result<(Rational, Rational), FrustumError> {
    if !(a > c && c >= 1 && h >= 1) {
        return Err(FrustumError::InvalidDimensions(
            "apex heights require a > c >= 1, H >= 1",
        ));
    }
    let gap = a as i128 - c as i128;
    let h1 = Rational::from_wide(mul_wide(h as i128, a as i128, "apex height")?, gap)?;
    let h2 = Rational::from_wide(mul_wide(h as i128, c as i128, "apex height")?, gap)?;
    Ok((h1, h2))
}

/// Exact volume as the difference of the two pyramids:
/// `(H1*a*b - H2*c*d) / 3`.
pub fn volume_via_apex(a: i64, b: i64, c: i64, d: i64, h: i64) -> Result<Rational, FrustumError> {
    if a as i128 * d as i128 != b as i128 * c as i128 {
        return Err(FrustumError::RatioViolation { a, b, c, d });
    }
    if !(b >= 1 && d >= 1) {
        return Err(FrustumError::InvalidDimensions(
            "apex volume requires b >= 1, d >= 1",
        ));
    }
    let (h1, h2) = apex_heights(a, c, h)?;
    let what = "apex volume";
    let bottom = Rational::from_wide(mul_wide(a as i128, b as i128, what)?, 1)?;
    let top = Rational::from_wide(mul_wide(c as i128, d as i128, what)?, 1)?;
    let third = Rational::new(1, 3)?;
    Ok(h1.mul(&bottom)?.sub(&h2.mul(&top)?)?.mul(&third)?)
}

/// Lowest-terms decomposition of base sides satisfying the key ratio.
pub fn decompose(a: i64, b: i64, c: i64, d: i64) -> Result<RatioDecomposition, FrustumError> {
    if !(a >= 1 && b >= 1 && c >= 1 && d >= 1) {
        return Err(FrustumError::InvalidDimensions(
            "decomposition requires positive sides",
        ));
    }
    if a as i128 * d as i128 != b as i128 * c as i128 {
        return Err(FrustumError::RatioViolation { a, b, c, d });
    }
    let base_gcd = gcd(a as u64, b as u64)? as i64;
    let top_gcd = gcd(c as u64, d as u64)? as i64;
    let k1 = a / base_gcd;
    let k2 = b / base_gcd;
    if c != top_gcd * k1 || d != top_gcd * k2 {
        return Err(FrustumError::RatioViolation { a, b, c, d });
    }
    Ok(RatioDecomposition {
        base_gcd,
        top_gcd,
        k1,
        k2,
    })
}

impl Frustum {
    /// Builds a frustum from a candidate tuple, requiring every geometric
    /// condition to hold (volume integrality is not required).
    pub fn new(a: i64, b: i64, c: i64, d: i64, h: i64, t: i64) -> Result<Self, FrustumError> {
        let report = validate(a, b, c, d, h, t)?;
        if let Some((condition, _)) = report
            .conditions()
            .into_iter()
            .take(7)
            .find(|(_, pass)| !pass)
        {
            return Err(FrustumError::ConditionFailed { condition });
        }
        Ok(Frustum { a, b, c, d, h, t })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn height(&self) -> i64 {
        self.h
    }

    pub fn edge(&self) -> i64 {
        self.t
    }

    /// The tuple `(a, b, c, d, H, t)` as an array.
    pub fn as_array(&self) -> [i64; 6] {
        [self.a, self.b, self.c, self.d, self.h, self.t]
    }

    /// Sort key `(t, a, b, c, d, H)` used by the enumeration modules.
    pub fn sort_key(&self) -> [i64; 6] {
        [self.t, self.a, self.b, self.c, self.d, self.h]
    }

    pub fn derived(&self) -> Result<DerivedQuantities, FrustumError> {
        let volume = volume(self.a, self.c, self.d, self.h)?;
        Ok(DerivedQuantities {
            x: (self.b - self.d) / 2,
            y: (self.a - self.c) / 2,
            volume,
            is_integral: volume.is_integer(),
            is_square: self.a == self.b && self.c == self.d,
        })
    }

    pub fn decomposition(&self) -> Result<RatioDecomposition, FrustumError> {
        decompose(self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Frustum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}, {}, {})",
            self.a, self.b, self.c, self.d, self.h, self.t
        )
    }
}
