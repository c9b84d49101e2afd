//! Walls, chambers and moduli verdicts for rank-3 bundles on Hirzebruch surfaces.
//!
//! All arithmetic is exact: integer lattice coordinates and `Ratio<i64>` slopes.

pub mod chamberdeck;
pub mod lattice;
pub mod moduli;
pub mod oracle;
pub mod rational;
pub mod wallset;

pub use chamberdeck::{
    chambers, faces, locate, same_chamber, Chamber, ChamberDeck, Endpoint, Face, Location, OnWall,
};
pub use lattice::{
    canonical_class, euler_char, intersect, is_ample, is_effective, slope, DivClass, LatticeError,
    Polarization, SurfaceGeom,
};
pub use moduli::{
    classify, classify_p2, solve_extension_case, Case, ExtensionDatum, ModuliVerdict, PlaneC1,
    Rationality, Status,
};
pub use rational::{format_rational, parse_rational, Rational};
pub use wallset::{
    chern_admissible, critical_slope, discriminant_bound, enumerate_walls, separating_walls,
    NoWalls, Orientation, Wall, WallSet, Witness,
};
