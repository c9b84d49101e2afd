//! Dimension counts and excess-moduli functions attached to a wall.

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{canonical_class, DivClass, SurfaceGeom};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
pub enum FormulaError {
    #[error("{zeta} + c1 is not divisible by 3")]
    Congruence { zeta: DivClass },
    #[error("value {0} is not an integer")]
    NonIntegral(String),
    #[error("xi = {xi} rejected: {reason}")]
    XiRejected { xi: DivClass, reason: &'static str },
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn to_int(v: Rational) -> Result<i64, FormulaError> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(FormulaError::NonIntegral(crate::rational::format_rational(
            &v,
        )))
    }
}

/// Expected dimension `6c2 − 2c1² − 8` of rank-3 moduli.
pub fn moduli_dim(c1: DivClass, c2: i64, g: SurfaceGeom) -> i64 {
    6 * c2 - 2 * c1.square(g) - 8
}

/// `d_ζ = −(3c2 − c1²)/3 + 2 + ζ²/6 + K·ζ/2`.
///
/// Depends on `c1` only through `c1²`, so the same function serves the
/// dual count with `−c1`.
pub fn d_zeta(zeta: DivClass, c1: DivClass, c2: i64, g: SurfaceGeom) -> Rational {
    let k = canonical_class(g);
    -frac(3 * c2 - c1.square(g), 3) + q(2) + frac(zeta.square(g), 6) + frac(k.dot(&zeta, g), 2)
}

/// `F2 = (η + 2c1)/3`, the first Chern class of the rank-2 piece.
pub fn eta_refinement(eta: DivClass, c1: DivClass) -> Option<DivClass> {
    (eta + 2 * c1).div_exact(3)
}

/// Lower bound on `ξ²`: `c1(V2)² − 4c2(V2) ≥ −(4c2 − 4F2·c1 + 3F2²)`.
pub fn xi_square_floor(f2: DivClass, c1: DivClass, c2: i64, g: SurfaceGeom) -> i64 {
    -(4 * c2 - 4 * f2.dot(&c1, g) + 3 * f2.square(g))
}

/// Checks that `ξ = 2F1 − F2` is an admissible refinement for `η`.
pub fn check_xi(
    xi: DivClass,
    eta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Result<DivClass, FormulaError> {
    let reject = |reason| FormulaError::XiRejected { xi, reason };
    let f2 = eta_refinement(eta, c1).ok_or(reject("eta + 2c1 is not divisible by 3"))?;
    let f1 = (xi + f2)
        .div_exact(2)
        .ok_or(reject("xi + F2 is not divisible by 2"))?;
    let sq = xi.square(g);
    if sq >= 0 {
        return Err(reject("xi^2 must be negative"));
    }
    if sq < xi_square_floor(f2, c1, c2, g) {
        return Err(reject(
            "xi^2 below c1(V2)^2 - 4c2(V2) for every admissible c2(V2)",
        ));
    }
    Ok(f1)
}

/// All admissible `ξ` for `η`, with the sign of `η` (negative on `L1`,
/// positive on `L2`). Sorted by `(|x|, |y|)`.
pub fn admissible_xis(eta: DivClass, c1: DivClass, c2: i64, g: SurfaceGeom) -> Vec<DivClass> {
    let Some(f2) = eta_refinement(eta, c1) else {
        return Vec::new();
    };
    let floor = xi_square_floor(f2, c1, c2, g);
    if floor >= 0 {
        return Vec::new();
    }
    let m = -floor;
    let s = eta.a.signum();
    let e = g.e();
    let mut out = Vec::new();
    // −ξ² = x(ex + 2y) ≤ M with x, y ≥ 1 bounds both coordinates by M
    for x in 1..=m {
        if x * (e * x + 2) > m {
            break;
        }
        for y in 1..=m {
            if x * (e * x + 2 * y) > m {
                break;
            }
            let xi = DivClass::new(s * x, -s * y);
            if (xi + f2).is_divisible_by(2) {
                out.push(xi);
            }
        }
    }
    out
}

/// `d*_η = −2(3c2 − c1²)/3 + 3 + ξ²/4 + ξ·K/2 + η²/12 + η·K/2`.
pub fn d_eta_star(
    xi: DivClass,
    eta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Result<Rational, FormulaError> {
    check_xi(xi, eta, c1, c2, g)?;
    Ok(d_eta_star_unchecked(xi, eta, c1, c2, g))
}

pub(crate) fn d_eta_star_unchecked(
    xi: DivClass,
    eta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Rational {
    let k = canonical_class(g);
    -frac(2 * (3 * c2 - c1.square(g)), 3)
        + q(3)
        + frac(xi.square(g), 4)
        + frac(xi.dot(&k, g), 2)
        + frac(eta.square(g), 12)
        + frac(eta.dot(&k, g), 2)
}

/// `d*_η` for every admissible `ξ`.
pub fn d_eta_star_auto(
    eta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Vec<(DivClass, Rational)> {
    admissible_xis(eta, c1, c2, g)
        .into_iter()
        .map(|xi| (xi, d_eta_star_unchecked(xi, eta, c1, c2, g)))
        .collect()
}

/// Dimension of the extension space for a line subbundle with `ζ = 3F − c1`:
/// `(3c2 − c1²)/3 − 2 − ζ²/6 + K·ζ/2`.
pub fn ext_dim_case_a(
    zeta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Result<i64, FormulaError> {
    if !(zeta + c1).is_divisible_by(3) {
        return Err(FormulaError::Congruence { zeta });
    }
    let k = canonical_class(g);
    let v =
        frac(3 * c2 - c1.square(g), 3) - q(2) - frac(zeta.square(g), 6) + frac(k.dot(&zeta, g), 2);
    to_int(v)
}

fn xi_quadratic(xi: DivClass, g: SurfaceGeom) -> i64 {
    let twice = xi.dot(&(xi - canonical_class(g)), g);
    debug_assert!(twice % 2 == 0);
    twice / 2
}

/// `ℓ(Z1) − 1 − ξ(ξ − K)/2`.
pub fn ext_dim_2_18(xi: DivClass, len_z1: i64, g: SurfaceGeom) -> i64 {
    len_z1 - 1 - xi_quadratic(xi, g)
}

/// Moduli count of the rank-2 piece: `3ℓ(Z1) − 2 − ξ(ξ − K)/2`.
pub fn moduli_bound_2_18(xi: DivClass, len_z1: i64, g: SurfaceGeom) -> i64 {
    3 * len_z1 - 2 - xi_quadratic(xi, g)
}

/// `2c2 − 5c1²/9 − c2(V2) − 2 + K·η/2 − η²/18 + c1·η/9`.
pub fn ext_dim_2_19(eta: DivClass, c1: DivClass, c2: i64, c2_v2: i64, g: SurfaceGeom) -> Rational {
    let k = canonical_class(g);
    q(2 * c2) - frac(5 * c1.square(g), 9) - q(c2_v2) - q(2) + frac(k.dot(&eta, g), 2)
        - frac(eta.square(g), 18)
        + frac(c1.dot(&eta, g), 9)
}

/// Moduli count bound `4c2(W) − c1(W)² − 3` for a rank-2 sheaf `W`.
pub fn moduli_of_w_bound(c1_w: DivClass, c2_w: i64, g: SurfaceGeom) -> i64 {
    4 * c2_w - c1_w.square(g) - 3
}

/// Strictly semistable sheaves off the walls need `c1 ≡ 0 (mod r)`.
pub fn strictly_semistable_possible(r: u32, c1: DivClass) -> bool {
    c1.is_divisible_by(i64::from(r))
}
