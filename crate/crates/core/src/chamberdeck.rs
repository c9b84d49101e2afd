//! Chambers of a wall type as open slope intervals.
//!
//! `Num(F_e) ⊗ R` is a plane, so the ample cone is the ray of slopes
//! `(e, ∞)` (or `(0, ∞)` when `e = 0`) and each wall is a point on it.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::lattice::{DivClass, Polarization, SurfaceGeom};
use crate::rational::{format_rational, Rational};
use crate::wallset::{enumerate_walls, Wall, WallSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    ConeBoundary,
    Finite(Rational),
    Infinity,
}

impl Endpoint {
    pub fn finite(&self) -> Option<Rational> {
        match self {
            Endpoint::Finite(r) => Some(*r),
            _ => None,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::ConeBoundary => f.write_str("CONE_BOUNDARY"),
            Endpoint::Finite(r) => f.write_str(&format_rational(r)),
            Endpoint::Infinity => f.write_str("INFINITY"),
        }
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Open interval `(lo, hi)` of slopes free of critical slopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Chamber {
    #[serde(skip)]
    pub index: usize,
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_walls: Vec<DivClass>,
    pub hi_walls: Vec<DivClass>,
}

impl Chamber {
    pub fn contains(&self, s: Rational) -> bool {
        let above_lo = match self.lo {
            Endpoint::Finite(lo) => s > lo,
            _ => true,
        };
        let below_hi = match self.hi {
            Endpoint::Finite(hi) => s < hi,
            _ => true,
        };
        above_lo && below_hi
    }

    /// A rational slope strictly inside the chamber.
    pub fn sample_slope(&self, g: SurfaceGeom) -> Rational {
        let one = Rational::from_integer(1);
        let lo = self.lo.finite().unwrap_or_else(|| g.cone_boundary_slope());
        match self.hi {
            Endpoint::Finite(hi) => (lo + hi) / Rational::from_integer(2),
            _ => lo + one,
        }
    }
}

/// A critical slope shared by two adjacent chambers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    #[serde(serialize_with = "ser_pq")]
    pub slope: Rational,
    pub walls: Vec<Wall>,
    /// Index of the chamber below the face; the one above is `below + 1`.
    pub below: usize,
}

fn ser_pq<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    crate::rational::pq::serialize(r, s)
}

/// Where a polarization sits relative to the walls.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location<'a> {
    Chamber(&'a Chamber),
    Wall(&'a Face),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polarization with slope {} lies on a wall", format_rational(.slope))]
pub struct OnWall {
    pub slope: Rational,
}

/// The full decomposition for one wall type.
#[derive(Debug, Clone, Serialize)]
pub struct ChamberDeck {
    #[serde(skip)]
    pub geom: SurfaceGeom,
    #[serde(skip)]
    pub walls: WallSet,
    pub chambers: Vec<Chamber>,
    pub faces: Vec<Face>,
}

impl ChamberDeck {
    pub fn from_walls(walls: WallSet, g: SurfaceGeom) -> Self {
        // group walls by critical slope; enumerate_walls already sorted them
        let mut groups: Vec<(Rational, Vec<Wall>)> = Vec::new();
        for w in walls.iter() {
            match groups.last_mut() {
                Some((s, ws)) if *s == w.critical_slope => ws.push(w.clone()),
                _ => groups.push((w.critical_slope, vec![w.clone()])),
            }
        }

        let mut chambers = Vec::with_capacity(groups.len() + 1);
        let mut faces = Vec::with_capacity(groups.len());
        let mut lo = Endpoint::ConeBoundary;
        let mut lo_walls = Vec::new();
        for (k, (s, ws)) in groups.into_iter().enumerate() {
            let zetas: Vec<DivClass> = ws.iter().map(|w| w.zeta).collect();
            chambers.push(Chamber {
                index: k,
                lo,
                hi: Endpoint::Finite(s),
                lo_walls: std::mem::take(&mut lo_walls),
                hi_walls: zetas.clone(),
            });
            faces.push(Face {
                slope: s,
                walls: ws,
                below: k,
            });
            lo = Endpoint::Finite(s);
            lo_walls = zetas;
        }
        chambers.push(Chamber {
            index: chambers.len(),
            lo,
            hi: Endpoint::Infinity,
            lo_walls,
            hi_walls: Vec::new(),
        });
        ChamberDeck {
            geom: g,
            walls,
            chambers,
            faces,
        }
    }

    pub fn locate_slope(&self, s: Rational) -> Location<'_> {
        // faces are sorted by slope
        match self.faces.binary_search_by(|f| f.slope.cmp(&s)) {
            Ok(k) => Location::Wall(&self.faces[k]),
            Err(k) => Location::Chamber(&self.chambers[k]),
        }
    }

    pub fn locate(&self, l: &Polarization) -> Location<'_> {
        self.locate_slope(l.slope())
    }

    pub fn chamber_of(&self, l: &Polarization) -> Result<&Chamber, OnWall> {
        match self.locate(l) {
            Location::Chamber(c) => Ok(c),
            Location::Wall(f) => Err(OnWall { slope: f.slope }),
        }
    }

    pub fn same_chamber(&self, l1: &Polarization, l2: &Polarization) -> Result<bool, OnWall> {
        Ok(self.chamber_of(l1)?.index == self.chamber_of(l2)?.index)
    }

    /// The two chambers sharing `face`.
    pub fn sides(&self, face: &Face) -> (&Chamber, &Chamber) {
        (&self.chambers[face.below], &self.chambers[face.below + 1])
    }
}

/// Chamber decomposition for type `(r; c1, c2)`; a single chamber when there are no walls.
pub fn chambers(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> ChamberDeck {
    ChamberDeck::from_walls(enumerate_walls(r, c1, c2, g), g)
}

pub fn locate<'a>(l: &Polarization, deck: &'a ChamberDeck) -> Location<'a> {
    deck.locate(l)
}

pub fn faces(deck: &ChamberDeck) -> &[Face] {
    &deck.faces
}

pub fn same_chamber(
    l1: &Polarization,
    l2: &Polarization,
    r: u32,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Result<bool, OnWall> {
    chambers(r, c1, c2, g).same_chamber(l1, l2)
}
