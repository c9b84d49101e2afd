//! Intersection theory on `Num(F_e) = Zσ ⊕ Zf`.
//!
//! The rational ruled surface `F_e` has a section `σ` with `σ² = −e` and a
//! fiber class `f` with `σ·f = 1`, `f² = 0`. Everything here is a pure
//! function of integer coordinates, so it is exact and thread-safe.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("{0} is not ample on F_{1}")]
    NotAmple(DivClass, i64),
    #[error("invalid divisor class {0:?}: expected \"a*s+b*f\" or \"a,b\"")]
    Parse(String),
}

/// The Hirzebruch surface `F_e`, identified by `e = −σ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceGeom {
    e: u32,
}

impl SurfaceGeom {
    pub const fn new(e: u32) -> Self {
        SurfaceGeom { e }
    }

    #[inline]
    pub fn e(&self) -> i64 {
        i64::from(self.e)
    }

    /// Lower end of the open interval of ample slopes.
    pub fn cone_boundary_slope(&self) -> Rational {
        Rational::from_integer(self.e())
    }
}

/// A numerical divisor class `a·σ + b·f`.
///
/// Serializes as the JSON pair `[a, b]`; `Display`/`FromStr` use `"a*s+b*f"`.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct DivClass {
    pub a: i64,
    pub b: i64,
}

impl DivClass {
    pub const ZERO: DivClass = DivClass { a: 0, b: 0 };
    pub const SIGMA: DivClass = DivClass { a: 1, b: 0 };
    pub const FIBER: DivClass = DivClass { a: 0, b: 1 };
    /// `σ + f`, the pull-back of a line under `F_1 → P²`.
    pub const SIGMA_PLUS_FIBER: DivClass = DivClass { a: 1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        DivClass { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    #[inline]
    pub fn dot(&self, other: &DivClass, g: SurfaceGeom) -> i64 {
        intersect(*self, *other, g)
    }

    #[inline]
    pub fn square(&self, g: SurfaceGeom) -> i64 {
        intersect(*self, *self, g)
    }

    /// Both coordinates divisible by `r`.
    pub fn is_divisible_by(&self, r: i64) -> bool {
        self.a % r == 0 && self.b % r == 0
    }

    /// `self / r` when the quotient is integral.
    pub fn div_exact(&self, r: i64) -> Option<DivClass> {
        self.is_divisible_by(r)
            .then(|| DivClass::new(self.a / r, self.b / r))
    }

    /// Swaps the roles of `σ` and `f`; an isometry only when `e = 0`.
    pub fn swapped(&self) -> DivClass {
        DivClass::new(self.b, self.a)
    }
}

impl From<[i64; 2]> for DivClass {
    fn from([a, b]: [i64; 2]) -> Self {
        DivClass { a, b }
    }
}

impl From<DivClass> for [i64; 2] {
    fn from(d: DivClass) -> Self {
        [d.a, d.b]
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        DivClass::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass::new(-self.a, -self.b)
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: DivClass) -> DivClass {
        DivClass::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}*s-{}*f", self.a, -self.b)
        } else {
            write!(f, "{}*s+{}*f", self.a, self.b)
        }
    }
}

impl FromStr for DivClass {
    type Err = LatticeError;

    /// Accepts `"a*s+b*f"`, `"a*s-b*f"`, `"a*s+-b*f"` and the pair form `"a,b"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LatticeError::Parse(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some((a, b)) = t.split_once(',') {
            return Ok(DivClass::new(
                a.parse().map_err(|_| err())?,
                b.parse().map_err(|_| err())?,
            ));
        }
        let rest = t.strip_suffix("*f").ok_or_else(err)?;
        let (a, b) = rest.split_once("*s").ok_or_else(err)?;
        let b = b.strip_prefix('+').unwrap_or(b);
        Ok(DivClass::new(
            a.parse().map_err(|_| err())?,
            b.parse().map_err(|_| err())?,
        ))
    }
}

/// The bilinear intersection form: `−e·a₁a₂ + a₁b₂ + a₂b₁`.
#[inline]
pub fn intersect(d1: DivClass, d2: DivClass, g: SurfaceGeom) -> i64 {
    -g.e() * d1.a * d2.a + d1.a * d2.b + d2.a * d1.b
}

/// `K_X = −2σ − (2 + e)f`.
pub fn canonical_class(g: SurfaceGeom) -> DivClass {
    DivClass::new(-2, -(2 + g.e()))
}

/// Ample iff `a > 0` and `b > e·a`.
pub fn is_ample(d: DivClass, g: SurfaceGeom) -> bool {
    d.a > 0 && d.b > g.e() * d.a
}

/// Membership in the effective cone spanned by `σ` and `f` (zero included).
pub fn is_effective(d: DivClass) -> bool {
    d.a >= 0 && d.b >= 0
}

/// `χ(O_X(D)) = 1 + D·(D − K)/2` on a rational surface.
pub fn euler_char(d: DivClass, g: SurfaceGeom) -> i64 {
    let twice = intersect(d, d - canonical_class(g), g);
    debug_assert!(twice % 2 == 0, "D·(D−K) must be even");
    1 + twice / 2
}

/// An ample class, together with its reduced slope `r_L = b/a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Polarization {
    class: DivClass,
    #[serde(with = "crate::rational::pq")]
    slope: Rational,
}

impl Polarization {
    pub fn new(class: DivClass, g: SurfaceGeom) -> Result<Self, LatticeError> {
        if !is_ample(class, g) {
            return Err(LatticeError::NotAmple(class, g.e()));
        }
        Ok(Polarization {
            class,
            slope: Rational::new(class.b, class.a),
        })
    }

    /// The primitive ample class with the given slope.
    pub fn from_slope(slope: Rational, g: SurfaceGeom) -> Result<Self, LatticeError> {
        Polarization::new(DivClass::new(*slope.denom(), *slope.numer()), g)
    }

    pub fn class(&self) -> DivClass {
        self.class
    }

    pub fn slope(&self) -> Rational {
        self.slope
    }
}

/// `r_L = y/x` for `L = xσ + yf`.
pub fn slope(l: &Polarization) -> Rational {
    l.slope
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const S: DivClass = DivClass::SIGMA;
    const F: DivClass = DivClass::FIBER;

    #[test]
    fn intersection_examples() {
        assert_eq!(intersect(S, S, SurfaceGeom::new(1)), -1);
        assert_eq!(intersect(F, F, SurfaceGeom::new(3)), 0);
        let g = SurfaceGeom::new(2);
        assert_eq!(canonical_class(g).square(g), 8);
    }

    #[test]
    fn canonical_class_examples() {
        assert_eq!(canonical_class(SurfaceGeom::new(1)), DivClass::new(-2, -3));
        assert_eq!(canonical_class(SurfaceGeom::new(0)), DivClass::new(-2, -2));
        for e in 0..=10 {
            let g = SurfaceGeom::new(e);
            assert_eq!(canonical_class(g).square(g), 8, "e = {e}");
        }
    }

    #[test]
    fn ampleness() {
        assert!(is_ample(S + 2 * F, SurfaceGeom::new(1)));
        assert!(!is_ample(S + F, SurfaceGeom::new(1)));
        assert!(!is_ample(F, SurfaceGeom::new(0)));
        assert!(is_ample(S + F, SurfaceGeom::new(0)));
    }

    #[test]
    fn slopes() {
        let g = SurfaceGeom::new(1);
        let l = |a, b| Polarization::new(DivClass::new(a, b), g).unwrap();
        assert_eq!(slope(&l(1, 3)), Rational::from_integer(3));
        assert_eq!(slope(&l(2, 6)), Rational::from_integer(3));
        assert_eq!(slope(&l(3, 5)), Rational::new(5, 3));
        assert!(Polarization::new(S + F, g).is_err());
        let p = Polarization::from_slope(Rational::new(7, 2), g).unwrap();
        assert_eq!(p.class(), DivClass::new(2, 7));
    }

    #[test]
    fn euler_characteristic() {
        for e in 0..5 {
            let g = SurfaceGeom::new(e);
            assert_eq!(euler_char(DivClass::ZERO, g), 1);
            // Serre symmetry D ↦ K − D
            assert_eq!(euler_char(canonical_class(g), g), 1);
        }
        let g = SurfaceGeom::new(1);
        let d = S - 2 * F;
        // hand expansion: D² = −5, D·K = 3
        assert_eq!(d.square(g), -5);
        assert_eq!(d.dot(&canonical_class(g), g), 3);
        assert_eq!(euler_char(d, g), -3);
    }

    #[test]
    fn string_forms() {
        assert_eq!((2 * S - 4 * F).to_string(), "2*s-4*f");
        assert_eq!((S + F).to_string(), "1*s+1*f");
        for s in ["2*s-4*f", "2*s+-4*f", "2,-4", " 2 * s - 4 * f "] {
            assert_eq!(s.parse::<DivClass>().unwrap(), DivClass::new(2, -4), "{s}");
        }
        assert!("2*s".parse::<DivClass>().is_err());
        assert_eq!(
            serde_json::to_string(&DivClass::new(2, -4)).unwrap(),
            "[2,-4]"
        );
    }

    #[test]
    fn hodge_index_on_grid() {
        for e in 0..4 {
            let g = SurfaceGeom::new(e);
            let ls: Vec<DivClass> = (1..6)
                .flat_map(|a| (1..8).map(move |k| DivClass::new(a, e as i64 * a + k)))
                .collect();
            for a in -30..=30 {
                for b in -30..=30 {
                    let d = DivClass::new(a, b);
                    if ls.iter().any(|l| d.dot(l, g) == 0) {
                        let sq = d.square(g);
                        assert!(sq < 0 || (sq == 0 && d.is_zero()), "{d} on F_{e}");
                    }
                }
            }
        }
    }

    fn class() -> impl Strategy<Value = DivClass> {
        (-50i64..50, -50i64..50).prop_map(|(a, b)| DivClass::new(a, b))
    }

    proptest! {
        #[test]
        fn intersect_symmetric_bilinear(d1 in class(), d2 in class(), d3 in class(),
                                        k in -5i64..5, e in 0u32..10) {
            let g = SurfaceGeom::new(e);
            prop_assert_eq!(intersect(d1, d2, g), intersect(d2, d1, g));
            prop_assert_eq!(intersect(d1 + k * d2, d3, g),
                            intersect(d1, d3, g) + k * intersect(d2, d3, g));
        }

        #[test]
        fn riemann_roch_parity(d in class(), e in 0u32..10) {
            let g = SurfaceGeom::new(e);
            prop_assert_eq!(intersect(d, d - canonical_class(g), g).rem_euclid(2), 0);
        }

        #[test]
        fn slope_scale_invariant(a in 1i64..20, extra in 1i64..20, k in 1i64..5, e in 0u32..5) {
            let g = SurfaceGeom::new(e);
            let l = DivClass::new(a, e as i64 * a + extra);
            let s1 = Polarization::new(l, g).unwrap().slope();
            let s2 = Polarization::new(k * l, g).unwrap().slope();
            prop_assert_eq!(s1, s2);
        }
    }
}
