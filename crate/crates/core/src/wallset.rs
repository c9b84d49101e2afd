//! Walls of type `(r; c1, c2)` on `F_e`.
//!
//! A wall is the trace on the ample cone of `ζ⊥` for a class `ζ = rF − i·c1`
//! with `−B_i ≤ ζ² < 0`. Since the Picard rank is two, a wall is a single
//! slope, `e + y/x` for `ζ = xσ − yf`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::{intersect, DivClass, Polarization, SurfaceGeom};
use crate::rational::Rational;

/// Why a type has no walls at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NoWalls {
    /// `2r·c2 − (r−1)·c1² ≤ 0`; the value is carried along.
    HypothesisFails(i64),
    /// Only ranks `2..` carry walls.
    RankTooSmall(u32),
}

impl fmt::Display for NoWalls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NoWalls::HypothesisFails(v) => {
                write!(
                    f,
                    "no walls (hypothesis fails: 2r*c2 - (r-1)*c1^2 = {v} <= 0)"
                )
            }
            NoWalls::RankTooSmall(r) => write!(f, "no walls (rank {r} < 2)"),
        }
    }
}

impl std::error::Error for NoWalls {}

/// `(i, F)` with `ζ = rF − i·c1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub i: i64,
    #[serde(rename = "F")]
    pub f: DivClass,
}

/// A wall in canonical orientation (`x > 0`, `y > 0`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    pub zeta: DivClass,
    pub zeta_sq: i64,
    #[serde(with = "crate::rational::pq")]
    pub critical_slope: Rational,
    pub witnesses: Vec<Witness>,
}

impl Wall {
    pub fn witness(&self, i: i64) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.i == i)
    }

    /// `x` and `y` of `ζ = xσ − yf`.
    pub fn xy(&self) -> (i64, i64) {
        (self.zeta.a, -self.zeta.b)
    }
}

/// Which of `±ζ` is negative on `L1` and positive on `L2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// `+ζ`: `L2` lies above the wall.
    Positive,
    /// `−ζ`: `L2` lies below the wall.
    Negative,
}

impl Orientation {
    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }
}

/// Result of [`enumerate_walls`]: a sorted wall list, or the reason there is none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSet {
    pub walls: Vec<Wall>,
    pub no_walls: Option<NoWalls>,
}

impl WallSet {
    pub fn iter(&self) -> std::slice::Iter<'_, Wall> {
        self.walls.iter()
    }

    pub fn len(&self) -> usize {
        self.walls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }

    pub fn find(&self, zeta: DivClass) -> Option<&Wall> {
        self.walls.iter().find(|w| w.zeta == zeta)
    }
}

impl<'a> IntoIterator for &'a WallSet {
    type Item = &'a Wall;
    type IntoIter = std::slice::Iter<'a, Wall>;
    fn into_iter(self) -> Self::IntoIter {
        self.walls.iter()
    }
}

/// `2r·c2 − (r−1)·c1²`, which must be positive for walls to exist.
pub fn standing_discriminant(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> i64 {
    let r = i64::from(r);
    2 * r * c2 - (r - 1) * c1.square(g)
}

/// `B_i = i(r−i)·(2r·c2 − (r−1)·c1²)`; walls with witness `i` satisfy `−B_i ≤ ζ² < 0`.
pub fn discriminant_bound(
    r: u32,
    i: i64,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Result<i64, NoWalls> {
    if r < 2 {
        return Err(NoWalls::RankTooSmall(r));
    }
    assert!(
        0 < i && i < i64::from(r),
        "witness index {i} outside 0 < i < {r}"
    );
    let disc = standing_discriminant(r, c1, c2, g);
    if disc <= 0 {
        return Err(NoWalls::HypothesisFails(disc));
    }
    Ok(i * (i64::from(r) - i) * disc)
}

/// The two-sided bound `−B_i ≤ ζ² < 0`.
pub fn chern_admissible(
    zeta: DivClass,
    r: u32,
    i: i64,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> bool {
    let r64 = i64::from(r);
    if r < 2 || i <= 0 || i >= r64 {
        return false;
    }
    let sq = zeta.square(g);
    let bound = i * (r64 - i) * standing_discriminant(r, c1, c2, g);
    -bound <= sq && sq < 0
}

/// Critical slope `e + y/x` of `ζ = xσ − yf`.
pub fn critical_slope(zeta: DivClass, g: SurfaceGeom) -> Rational {
    Rational::from_integer(g.e()) + Rational::new(-zeta.b, zeta.a)
}

/// Every wall of type `(r; c1, c2)`, canonically oriented, witnesses merged,
/// sorted by critical slope and then by `(x, y)`.
pub fn enumerate_walls(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> WallSet {
    let r64 = i64::from(r);
    let e = g.e();
    let mut found: BTreeMap<(i64, i64), Vec<Witness>> = BTreeMap::new();

    for i in 1..r64.max(1) {
        let bound = match discriminant_bound(r, i, c1, c2, g) {
            Ok(b) => b,
            Err(reason) => {
                return WallSet {
                    walls: Vec::new(),
                    no_walls: Some(reason),
                }
            }
        };
        // ζ² = −x(ex + 2y) and y ≥ 1 give x(e + 2) ≤ x(ex + 2) ≤ B.
        let x_max = bound / (e + 2);
        // ζ + i·c1 ≡ 0 (mod r) fixes x mod r and y mod r.
        let x0 = (-i * c1.a).rem_euclid(r64);
        let y0 = (i * c1.b).rem_euclid(r64);
        let mut x = if x0 == 0 { r64 } else { x0 };
        while x <= x_max {
            // x(ex + 2y) ≤ B  ⇔  y ≤ (B/x − ex)/2
            let y_max = (bound / x - e * x) / 2;
            let mut y = if y0 == 0 { r64 } else { y0 };
            while y <= y_max {
                let zeta = DivClass::new(x, -y);
                debug_assert!(chern_admissible(zeta, r, i, c1, c2, g));
                let f = DivClass::new((x + i * c1.a) / r64, (-y + i * c1.b) / r64);
                found.entry((x, y)).or_default().push(Witness { i, f });
                y += r64;
            }
            x += r64;
        }
    }

    let mut walls: Vec<Wall> = found
        .into_iter()
        .map(|((x, y), mut witnesses)| {
            witnesses.sort();
            let zeta = DivClass::new(x, -y);
            Wall {
                zeta,
                zeta_sq: intersect(zeta, zeta, g),
                critical_slope: critical_slope(zeta, g),
                witnesses,
            }
        })
        .collect();
    walls.sort_by(|p, q| {
        p.critical_slope
            .cmp(&q.critical_slope)
            .then_with(|| p.xy().cmp(&q.xy()))
    });
    WallSet {
        walls,
        no_walls: None,
    }
}

/// Walls strictly between `slope(L1)` and `slope(L2)`, each with the sign that
/// makes `ζ·L1 < 0 < ζ·L2`.
pub fn separating_walls(
    r: u32,
    c1: DivClass,
    c2: i64,
    l1: &Polarization,
    l2: &Polarization,
    g: SurfaceGeom,
) -> Vec<(Wall, Orientation)> {
    separating_in(&enumerate_walls(r, c1, c2, g), l1, l2, g)
}

/// [`separating_walls`] over an already enumerated wall set.
pub fn separating_in(
    walls: &WallSet,
    l1: &Polarization,
    l2: &Polarization,
    g: SurfaceGeom,
) -> Vec<(Wall, Orientation)> {
    let (s1, s2) = (l1.slope(), l2.slope());
    let (lo, hi) = if s1 <= s2 { (s1, s2) } else { (s2, s1) };
    walls
        .iter()
        .filter(|w| lo < w.critical_slope && w.critical_slope < hi)
        .map(|w| {
            let orient = if w.zeta.dot(&l2.class(), g) > 0 {
                Orientation::Positive
            } else {
                Orientation::Negative
            };
            debug_assert!(orient.sign() * w.zeta.dot(&l1.class(), g) < 0);
            (w.clone(), orient)
        })
        .collect()
}
