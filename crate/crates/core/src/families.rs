//! Constructors for the parametric families of integral frusta.
//!
//! * [`build_general`] assembles a frustum from a seed `(x, y, H, t, d)`
//!   satisfying `t^2 = H^2 + y^2 + x^2`, `y >= x`, `x | y*d`: the top base is
//!   `c = y*d/x` by `d`, the bottom `a = c + 2y` by `b = d + 2x`.
//! * [`build_prop2`] instantiates the three-parameter family of non-square
//!   integral frusta built on the `n = 1` subfamily of the three-squares
//!   parametrization.
//! * [`build_prop3`] instantiates the four-parameter square-base family from
//!   the `Z^2 = X^2 + 2Y^2` parametrization. As written the family contains
//!   members with fractional volume (seed `(c, D, m, n) = (1, 1, 1, 1)`
//!   gives volume 31/3), so the integrality flag is computed, never assumed.

use thiserror::Error;

use crate::exactmath::{gcd, ExactMathError};
use crate::frustum::{DerivedQuantities, Frustum, FrustumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("offset order violated: y = {y} < x = {x}")]
    OffsetOrder { x: i64, y: i64 },
    #[error("quadruple condition violated: t^2 != H^2 + y^2 + x^2 for (x, y, H, t) = ({x}, {y}, {h}, {t})")]
    QuadrupleCondition { x: i64, y: i64, h: i64, t: i64 },
    #[error("offset x = {x} does not divide y*d = {y}*{d}")]
    IndivisibleOffsets { x: i64, y: i64, d: i64 },
    #[error("l = {l} is too small: v = (l^2 - 1)/m must be positive")]
    LTooSmall { l: i64 },
    #[error("m = {m} is not in 1 <= m < l = {l}")]
    MNotBelowL { l: i64, m: i64 },
    #[error("m = {m} does not divide l^2 - 1 = {value}")]
    NotADivisor { m: i64, value: i64 },
    #[error("l*(m + v) = {l}*({m} + {v}) is not divisible by 3")]
    ModThreeViolation { l: i64, m: i64, v: i64 },
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },
    #[error(transparent)]
    Frustum(#[from] FrustumError),
    #[error(transparent)]
    Math(#[from] ExactMathError),
}

fn require_positive(value: i64, name: &'static str) -> Result<(), FamilyError> {
    if value < 1 {
        Err(FamilyError::NonPositive(name))
    } else {
        Ok(())
    }
}

fn checked_mul(a: i64, b: i64, what: &'static str) -> Result<i64, FamilyError> {
    a.checked_mul(b)
        .ok_or(FamilyError::Math(ExactMathError::Overflow(what)))
}

fn checked_add(a: i64, b: i64, what: &'static str) -> Result<i64, FamilyError> {
    a.checked_add(b)
        .ok_or(FamilyError::Math(ExactMathError::Overflow(what)))
}

/// Seed for the general family: offsets, height, edge, and top depth.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralSeed {
    pub x: i64,
    pub y: i64,
    pub h: i64,
    pub t: i64,
    pub d: i64,
}

impl GeneralSeed {
    pub fn new(x: i64, y: i64, h: i64, t: i64, d: i64) -> Result<Self, FamilyError> {
        require_positive(x, "x")?;
        require_positive(y, "y")?;
        require_positive(h, "H")?;
        require_positive(t, "t")?;
        require_positive(d, "d")?;
        if y < x {
            return Err(FamilyError::OffsetOrder { x, y });
        }
        let sum =
            h as i128 * h as i128 + y as i128 * y as i128 + x as i128 * x as i128;
        if t as i128 * t as i128 != sum {
            return Err(FamilyError::QuadrupleCondition { x, y, h, t });
        }
        if (y as i128 * d as i128) % x as i128 != 0 {
            return Err(FamilyError::IndivisibleOffsets { x, y, d });
        }
        Ok(GeneralSeed { x, y, h, t, d })
    }
}

/// Builds the frustum `(c + 2y, d + 2x, c, d, H, t)` with `c = y*d/x`.
pub fn build_general(seed: &GeneralSeed) -> Result<(Frustum, DerivedQuantities), FamilyError> {
    let c = i64::try_from(seed.y as i128 * seed.d as i128 / seed.x as i128)
        .map_err(|_| FamilyError::Math(ExactMathError::Overflow("top base c = y*d/x")))?;
    let a = checked_add(c, checked_mul(2, seed.y, "a = c + 2y")?, "a = c + 2y")?;
    let b = checked_add(seed.d, checked_mul(2, seed.x, "b = d + 2x")?, "b = d + 2x")?;
    let frustum = Frustum::new(a, b, c, seed.d, seed.h, seed.t)?;
    let derived = frustum.derived()?;
    Ok((frustum, derived))
}

/// Which branch of the mod-3 dichotomy an admissible `(l, m)` pair falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModThreeBranch {
    /// `3 | l`, which forces `3 | m + v` while `3` divides neither `m` nor `v`.
    DividesL,
    /// `3` does not divide `l`, which forces `3 | m` and `3 | v`.
    DividesMAndV,
}

/// Outcome of the admissibility test for the three-parameter family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop2Admissibility {
    pub admissible: bool,
    /// `(l^2 - 1) / m` when `m` divides `l^2 - 1` with a positive quotient.
    pub v: Option<i64>,
    /// Dichotomy branch; present exactly when the pair is admissible.
    pub branch: Option<ModThreeBranch>,
}

/// Decides whether `(l, m)` seeds the three-parameter family.
pub fn prop2_admissible(l: i64, m: i64) -> Prop2Admissibility {
    let mut out = Prop2Admissibility {
        admissible: false,
        v: None,
        branch: None,
    };
    if l < 2 || m < 1 {
        return out;
    }
    let value = match l.checked_mul(l) {
        Some(sq) => sq - 1,
        None => return out,
    };
    if value % m != 0 {
        return out;
    }
    let v = value / m;
    if v < 1 {
        return out;
    }
    out.v = Some(v);
    if m >= l {
        return out;
    }
    if (m as i128 + v as i128) % 3 != 0 && l % 3 != 0 {
        return out;
    }
    // l*(m + v) = 0 (mod 3) holds; classify the branch.
    out.admissible = true;
    out.branch = Some(if l % 3 == 0 {
        ModThreeBranch::DividesL
    } else {
        ModThreeBranch::DividesMAndV
    });
    out
}

/// Seed for the three-parameter non-square family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop2Seed {
    l: i64,
    m: i64,
    scale: i64,
    v: i64,
}

impl Prop2Seed {
    /// Validates `m | l^2 - 1` (with positive quotient `v`), `1 <= m < l`,
    /// and `l*(m + v) = 0 (mod 3)`. `scale` is the family's `D` parameter.
    pub fn new(l: i64, m: i64, scale: i64) -> Result<Self, FamilyError> {
        require_positive(m, "m")?;
        require_positive(scale, "D")?;
        if l < 2 {
            return Err(FamilyError::LTooSmall { l });
        }
        if m >= l {
            return Err(FamilyError::MNotBelowL { l, m });
        }
        let value = checked_mul(l, l, "l^2 - 1")? - 1;
        if value % m != 0 {
            return Err(FamilyError::NotADivisor { m, value });
        }
        let v = value / m;
        if ((m as i128 + v as i128) * l as i128) % 3 != 0 {
            return Err(FamilyError::ModThreeViolation { l, m, v });
        }
        Ok(Prop2Seed { l, m, scale, v })
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// The derived quotient `v = (l^2 - 1) / m`.
    pub fn v(&self) -> i64 {
        self.v
    }
}

/// Builds the non-square integral frustum
/// `(2l(D+2), 2m(D+2), 2lD, 2mD, l^2+m^2-1, l^2+m^2+1)`.
pub fn build_prop2(seed: &Prop2Seed) -> Result<(Frustum, DerivedQuantities), FamilyError> {
    let (l, m, scale) = (seed.l, seed.m, seed.scale);
    let c = checked_mul(2, checked_mul(l, scale, "c = 2lD")?, "c = 2lD")?;
    let d = checked_mul(2, checked_mul(m, scale, "d = 2mD")?, "d = 2mD")?;
    let a = checked_add(c, checked_mul(4, l, "a = c + 4l")?, "a = c + 4l")?;
    let b = checked_add(d, checked_mul(4, m, "b = d + 4m")?, "b = d + 4m")?;
    let l_sq = checked_mul(l, l, "l^2 + m^2")?;
    let m_sq = checked_mul(m, m, "l^2 + m^2")?;
    let sum = checked_add(l_sq, m_sq, "l^2 + m^2")?;
    let frustum = Frustum::new(a, b, c, d, sum - 1, sum + 1)?;
    let derived = frustum.derived()?;
    Ok((frustum, derived))
}

/// Seed for the four-parameter square-base family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop3Seed {
    pub c: i64,
    pub scale: i64,
    pub m: i64,
    pub n: i64,
}

impl Prop3Seed {
    /// Validates positivity and `gcd(m, n) = 1`. `scale` is the family's
    /// `D` parameter.
    pub fn new(c: i64, scale: i64, m: i64, n: i64) -> Result<Self, FamilyError> {
        require_positive(c, "c")?;
        require_positive(scale, "D")?;
        require_positive(m, "m")?;
        require_positive(n, "n")?;
        if gcd(m as u64, n as u64)? != 1 {
            return Err(FamilyError::NotCoprime { m, n });
        }
        Ok(Prop3Seed { c, scale, m, n })
    }
}

/// Builds the square-base frustum `(c + 4Dmn, c + 4Dmn, c, c, H, t)` with
/// `H = D*|m^2 - 2n^2|` and `t = D*(m^2 + 2n^2)`.
///
/// The integrality flag in the result is computed from the exact volume;
/// the family as parametrized also produces non-integral members.
pub fn build_prop3(seed: &Prop3Seed) -> Result<(Frustum, DerivedQuantities), FamilyError> {
    let what = "square-base family";
    let m_sq = checked_mul(seed.m, seed.m, what)?;
    let two_n_sq = checked_mul(2, checked_mul(seed.n, seed.n, what)?, what)?;
    // m^2 = 2n^2 is impossible for positive integers, so the height is
    // positive.
    let h = checked_mul(seed.scale, (m_sq - two_n_sq).abs(), what)?;
    let t = checked_mul(seed.scale, checked_add(m_sq, two_n_sq, what)?, what)?;
    let offset = checked_mul(2, checked_mul(seed.scale, checked_mul(seed.m, seed.n, what)?, what)?, what)?;
    let a = checked_add(seed.c, checked_mul(2, offset, what)?, what)?;
    let frustum = Frustum::new(a, a, seed.c, seed.c, h, t)?;
    let derived = frustum.derived()?;
    Ok((frustum, derived))
}
