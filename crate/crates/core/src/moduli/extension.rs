//! Chern-level solutions for the four ways a bundle can be destabilized
//! when `L` crosses a single wall.
//!
//! * `a`: `0 → O(F) → V → W → 0`, `W` rank 2, `0 → W → W** → Q → 0`.
//! * `b`: `0 → V1 → V → I_Z(c1 − F) → 0`, `V1` rank 2.
//! * `c`: `0 → V2 → V → I_Z2(c1 − F2) → 0` and `0 → O(F1) → V2 → I_Z1(F2 − F1) → 0`.
//! * `d`: `0 → O(F1) → V → W → 0` with `W = V/O(F1)` semistable on the wall.
//!
//! `L1` is taken just across the wall from `L2`, so every sign condition at
//! `L1` is decided by the class's value at the critical slope and, on a tie,
//! by the side from which the slope is approached.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{DivClass, Polarization, SurfaceGeom};
use crate::moduli::discrepancy::{admissible_xis, d_eta_star_unchecked, d_zeta};
use crate::rational::Rational;
use crate::wallset::Wall;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    A,
    B,
    C,
    D,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A, Case::B, Case::C, Case::D];

    /// Witness index the oriented class must carry.
    fn witness(self) -> i64 {
        match self {
            Case::A | Case::D => 1,
            Case::B | Case::C => 2,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::A => "a",
            Case::B => "b",
            Case::C => "c",
            Case::D => "d",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Case {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "a" => Ok(Case::A),
            "b" => Ok(Case::B),
            "c" => Ok(Case::C),
            "d" => Ok(Case::D),
            _ => Err(format!("unknown case {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Lengths {
    pub z: i64,
    pub z1: i64,
    pub z2: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionDatum {
    pub case: Case,
    /// `±ζ`, positive on `L2`.
    pub oriented: DivClass,
    /// `F` for cases a and b, `F1` for c and d.
    pub f1: DivClass,
    /// `F2` in case c.
    pub f2: Option<DivClass>,
    /// `c1` of the rank-2 piece: `W`, `V1`, `V2` or `V/O(F1)`.
    pub rank2_c1: DivClass,
    /// `c2` of the rank-2 piece (of `W**` in cases a and d).
    pub c2_sub: i64,
    pub lengths: Lengths,
    /// `W** = O(E) ⊕ O(E)` when the rank-2 discriminant vanishes.
    pub split: Option<(DivClass, DivClass)>,
    /// `d_ζ` or `d*_η` for the datum; `None` in case d without admissible `ξ`.
    #[serde(serialize_with = "ser_opt_pq")]
    pub excess: Option<Rational>,
}

fn ser_opt_pq<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => crate::rational::pq::serialize(r, s),
        None => s.serialize_none(),
    }
}

/// Case-independent shape of the bundle an extension datum describes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Underlying {
    /// Line subbundle `O(line)` with rank-2 quotient.
    LineSub {
        line: DivClass,
        quotient_c1: DivClass,
        quotient_c2: i64,
        len: i64,
        split: Option<(DivClass, DivClass)>,
    },
    /// Rank-2 subsheaf with torsion-free rank-1 quotient.
    RankTwoSub {
        sub_c1: DivClass,
        sub_c2: i64,
        quotient: DivClass,
        len: i64,
    },
}

impl ExtensionDatum {
    pub fn underlying(&self, c1: DivClass) -> Underlying {
        match self.case {
            Case::A | Case::D => Underlying::LineSub {
                line: self.f1,
                quotient_c1: self.rank2_c1,
                quotient_c2: self.c2_sub,
                len: self.lengths.q,
                split: self.split,
            },
            Case::B => Underlying::RankTwoSub {
                sub_c1: self.rank2_c1,
                sub_c2: self.c2_sub,
                quotient: c1 - self.rank2_c1,
                len: self.lengths.z,
            },
            Case::C => Underlying::RankTwoSub {
                sub_c1: self.rank2_c1,
                sub_c2: self.c2_sub,
                quotient: c1 - self.rank2_c1,
                len: self.lengths.z2,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("L2 lies on the wall {0}")]
    OnWall(DivClass),
    #[error("case {case} needs witness i = {needed} on {oriented}, which the wall does not carry")]
    MissingWitness {
        case: Case,
        oriented: DivClass,
        needed: i64,
    },
}

/// `X·(σ + s f)` for a rational slope `s`.
fn value_at(x: DivClass, s: Rational, g: SurfaceGeom) -> Rational {
    Rational::from_integer(x.a) * (s - g.cone_boundary_slope()) + Rational::from_integer(x.b)
}

fn sign(r: Rational) -> i64 {
    if r > Rational::from_integer(0) {
        1
    } else if r < Rational::from_integer(0) {
        -1
    } else {
        0
    }
}

/// Sign of `X·L1` for `L1` infinitesimally close to the wall at `s0`, on the
/// side opposite to `L2` (`above = true` when `L2` is above the wall).
fn sign_across(x: DivClass, s0: Rational, l2_above: bool, g: SurfaceGeom) -> i64 {
    match sign(value_at(x, s0, g)) {
        0 if l2_above => -x.a.signum(),
        0 => x.a.signum(),
        s => s,
    }
}

/// Necessary conditions for a rank-2 sheaf with Chern classes `(c1, c2)` to
/// be semistable at slope `s`: Bogomolov, and the slope bound for `c1 = ±σ + bf`
/// (and its mirror `±f + aσ` when `e = 0`).
pub fn rank2_semistable_possible(c1: DivClass, c2: i64, s: Rational, g: SurfaceGeom) -> bool {
    if 4 * c2 < c1.square(g) {
        return false;
    }
    let int = Rational::from_integer;
    if c1.a.abs() == 1 {
        let b = c1.a * c1.b;
        if s > g.cone_boundary_slope() + int(2 * c2 - b) {
            return false;
        }
    }
    if g.e() == 0 && c1.b.abs() == 1 {
        let a = c1.b * c1.a;
        if s.recip() > int(2 * c2 - a) {
            return false;
        }
    }
    true
}

struct Frame {
    oriented: DivClass,
    s0: Rational,
    l2_above: bool,
}

fn frame(
    wall: &Wall,
    case: Case,
    l2: &Polarization,
    g: SurfaceGeom,
) -> Result<Frame, ExtensionError> {
    let v = wall.zeta.dot(&l2.class(), g);
    if v == 0 {
        return Err(ExtensionError::OnWall(wall.zeta));
    }
    let positive = v > 0;
    let oriented = if positive { wall.zeta } else { -wall.zeta };
    let needed = case.witness();
    // −ζ carries witness r − i exactly when ζ carries i
    let on_wall = if positive { needed } else { 3 - needed };
    if wall.witness(on_wall).is_none() {
        return Err(ExtensionError::MissingWitness {
            case,
            oriented,
            needed,
        });
    }
    Ok(Frame {
        oriented,
        s0: wall.critical_slope,
        l2_above: positive,
    })
}

/// Line subbundle `O(F)` with rank-2 quotient `W`, `W**` semistable at slope `s`.
#[allow(clippy::too_many_arguments)]
fn line_sub_data(
    case: Case,
    oriented: DivClass,
    f: DivClass,
    c1: DivClass,
    c2: i64,
    s: Rational,
    excess: Option<Rational>,
    g: SurfaceGeom,
) -> Vec<ExtensionDatum> {
    let c1_w = c1 - f;
    let c2_w = c2 - f.dot(&c1_w, g);
    let mut out = Vec::new();
    // c2(W**) = c2(W) − ℓ(Q); Bogomolov on W** bounds ℓ(Q) from above
    for lq in 0.. {
        let c2_ss = c2_w - lq;
        if 4 * c2_ss < c1_w.square(g) {
            break;
        }
        if !rank2_semistable_possible(c1_w, c2_ss, s, g) {
            continue;
        }
        let split = if 4 * c2_ss == c1_w.square(g) {
            // no stable sheaves with vanishing discriminant; a semistable one
            // with a destabilizing O(E), (2E − c1(W))·L = 0, is forced to 2E = c1(W)
            match c1_w.div_exact(2) {
                Some(h) => Some((h, h)),
                None => continue,
            }
        } else {
            None
        };
        out.push(ExtensionDatum {
            case,
            oriented,
            f1: f,
            f2: None,
            rank2_c1: c1_w,
            c2_sub: c2_ss,
            lengths: Lengths {
                q: lq,
                ..Lengths::default()
            },
            split,
            excess,
        });
    }
    out
}

/// All Chern-level solutions of `case` across `wall`, with `L2` on the side
/// where the destabilizing class is positive. Loops are bounded by Bogomolov
/// on the rank-2 piece and by nonnegativity of the cycle lengths.
pub fn solve_extension_case(
    wall: &Wall,
    case: Case,
    c1: DivClass,
    c2: i64,
    l2: &Polarization,
    g: SurfaceGeom,
) -> Result<Vec<ExtensionDatum>, ExtensionError> {
    let fr = frame(wall, case, l2, g)?;
    let zeta = fr.oriented;
    let s2 = l2.slope();
    let data = match case {
        Case::A => {
            let f = (zeta + c1).div_exact(3).expect("witness i = 1");
            let excess = Some(d_zeta(zeta, c1, c2, g));
            line_sub_data(case, zeta, f, c1, c2, s2, excess, g)
        }
        Case::D => {
            let f1 = (zeta + c1).div_exact(3).expect("witness i = 1");
            // V/O(F1) has slope c1·L0/3 on the wall, so it is L0-semistable
            let excess = admissible_xis(zeta, -c1, c2, g)
                .into_iter()
                .filter(|xi| {
                    xi.dot(&l2.class(), g) > 0 && sign_across(*xi, fr.s0, fr.l2_above, g) < 0
                })
                .map(|xi| d_eta_star_unchecked(xi, zeta, -c1, c2, g))
                .max();
            line_sub_data(case, zeta, f1, c1, c2, fr.s0, excess, g)
        }
        Case::B => {
            let f = (zeta + 2 * c1).div_exact(3).expect("witness i = 2");
            let base = c2 - f.dot(&(c1 - f), g);
            let excess = Some(d_zeta(zeta, -c1, c2, g));
            let mut out = Vec::new();
            for lz in 0.. {
                let c2_v1 = base - lz;
                if 4 * c2_v1 < f.square(g) {
                    break;
                }
                if !rank2_semistable_possible(f, c2_v1, s2, g) {
                    continue;
                }
                out.push(ExtensionDatum {
                    case,
                    oriented: zeta,
                    f1: f,
                    f2: None,
                    rank2_c1: f,
                    c2_sub: c2_v1,
                    lengths: Lengths {
                        z: lz,
                        ..Lengths::default()
                    },
                    split: None,
                    excess,
                });
            }
            out
        }
        Case::C => {
            let f2 = (zeta + 2 * c1).div_exact(3).expect("witness i = 2");
            let rest = f2.dot(&(c1 - f2), g);
            let mut out = Vec::new();
            for xi in admissible_xis(zeta, c1, c2, g) {
                if xi.dot(&l2.class(), g) <= 0 || sign_across(xi, fr.s0, fr.l2_above, g) >= 0 {
                    continue;
                }
                let f1 = (xi + f2).div_exact(2).expect("admissible parity");
                // filtration at L2: μ(V2/O(F1)) >= μ(V/V2); equality is the split-quotient
                // degeneration where both pieces are the same line bundle
                if (2 * f2 - f1 - c1).dot(&l2.class(), g) < 0 {
                    continue;
                }
                let excess = Some(d_eta_star_unchecked(xi, zeta, c1, c2, g));
                for lz1 in 0.. {
                    let c2_v2 = f1.dot(&(f2 - f1), g) + lz1;
                    let lz2 = c2 - c2_v2 - rest;
                    if lz2 < 0 {
                        break;
                    }
                    // V2 has slope c1·L0/3 on the wall, so it is L0-semistable
                    if !rank2_semistable_possible(f2, c2_v2, fr.s0, g) {
                        continue;
                    }
                    out.push(ExtensionDatum {
                        case,
                        oriented: zeta,
                        f1,
                        f2: Some(f2),
                        rank2_c1: f2,
                        c2_sub: c2_v2,
                        lengths: Lengths {
                            z1: lz1,
                            z2: lz2,
                            ..Lengths::default()
                        },
                        split: None,
                        excess,
                    });
                }
            }
            out
        }
    };
    Ok(data)
}
