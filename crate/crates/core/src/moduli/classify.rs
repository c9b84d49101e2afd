//! Emptiness, dimension and rationality verdicts for `c1 ∈ {0, σ + f}`,
//! and for `P²` through the blow-up `F_1 → P²`.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chamberdeck::{chambers, Location};
use crate::lattice::{DivClass, Polarization, SurfaceGeom};
use crate::moduli::discrepancy::moduli_dim;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Empty,
    Nonempty,
    /// `L` lies on a wall; the verdict is that of the adjacent chambers.
    BoundaryEmbedded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rationality {
    Rational,
    Unirational,
    Unstated,
}

/// Which classification clause produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    TrivialEmpty,
    TrivialNonempty,
    EvenSmallC2,
    EvenUpper,
    EvenLower,
    EvenInterior,
    OddSmallC2,
    OddUpper,
    OddLower,
    OddInterior,
    PlaneTrivial,
    PlaneLine,
}

impl Clause {
    pub fn tag(self) -> &'static str {
        match self {
            Clause::TrivialEmpty => "Thm3.1(i)",
            Clause::TrivialNonempty => "Thm3.1(ii)",
            Clause::EvenSmallC2 => "Thm3.2(i)",
            Clause::EvenUpper => "Thm3.2(ii)-upper-threshold",
            Clause::EvenLower => "Thm3.2(ii)-lower-threshold",
            Clause::EvenInterior => "Thm3.2(ii)",
            Clause::OddSmallC2 => "Thm3.4(i)",
            Clause::OddUpper => "Thm3.4(ii)-upper-threshold",
            Clause::OddLower => "Thm3.4(ii)-lower-threshold",
            Clause::OddInterior => "Thm3.4(ii)",
            Clause::PlaneTrivial => "Thm3.8-c1=0",
            Clause::PlaneLine => "Thm3.8-c1=L",
        }
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Clause {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuliVerdict {
    pub status: Status,
    pub dimension: Option<i64>,
    pub smooth: bool,
    pub irreducible: bool,
    pub rationality: Rationality,
    pub provenance: Clause,
}

impl ModuliVerdict {
    fn empty(provenance: Clause) -> Self {
        ModuliVerdict {
            status: Status::Empty,
            dimension: None,
            smooth: false,
            irreducible: false,
            rationality: Rationality::Unstated,
            provenance,
        }
    }

    fn nonempty(dimension: i64, rationality: Rationality, provenance: Clause) -> Self {
        ModuliVerdict {
            status: Status::Nonempty,
            dimension: Some(dimension),
            smooth: true,
            irreducible: true,
            rationality,
            provenance,
        }
    }

    /// True for both chamber and on-wall nonempty verdicts.
    pub fn is_nonempty(&self) -> bool {
        self.status != Status::Empty
    }

    /// Same verdict with the on-wall marker dropped.
    pub fn off_wall(&self) -> ModuliVerdict {
        let mut v = self.clone();
        if v.status == Status::BoundaryEmbedded {
            v.status = Status::Nonempty;
        }
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("classification is only available for c1 = 0 or c1 = s+f, got {0}")]
    UnsupportedC1(DivClass),
}

/// Open interval of slopes on which `M_L(3; σ+f, c2)` is nonempty, as
/// `(k, 2/k, e + k/2)` with `k = 3c2 − 2` (even) or `3c2 − 5` (odd).
pub fn nonempty_range(c2: i64, g: SurfaceGeom) -> Option<(i64, Rational, Rational)> {
    let k = if c2 % 2 == 0 {
        if c2 < 2 {
            return None;
        }
        3 * c2 - 2
    } else {
        if c2 < 3 {
            return None;
        }
        3 * c2 - 5
    };
    Some((
        k,
        Rational::new(2, k),
        g.cone_boundary_slope() + Rational::new(k, 2),
    ))
}

fn classify_slope(
    c1: DivClass,
    c2: i64,
    r: Rational,
    g: SurfaceGeom,
) -> Result<ModuliVerdict, ClassifyError> {
    if c1 == DivClass::ZERO {
        return Ok(if c2 <= 2 {
            ModuliVerdict::empty(Clause::TrivialEmpty)
        } else {
            ModuliVerdict::nonempty(
                moduli_dim(c1, c2, g),
                Rationality::Unirational,
                Clause::TrivialNonempty,
            )
        });
    }
    if c1 != DivClass::SIGMA_PLUS_FIBER {
        return Err(ClassifyError::UnsupportedC1(c1));
    }
    let even = c2 % 2 == 0;
    let (small, upper, lower, interior, rationality) = if even {
        (
            Clause::EvenSmallC2,
            Clause::EvenUpper,
            Clause::EvenLower,
            Clause::EvenInterior,
            Rationality::Unirational,
        )
    } else {
        (
            Clause::OddSmallC2,
            Clause::OddUpper,
            Clause::OddLower,
            Clause::OddInterior,
            Rationality::Rational,
        )
    };
    let Some((_, lo, hi)) = nonempty_range(c2, g) else {
        return Ok(ModuliVerdict::empty(small));
    };
    Ok(if r >= hi {
        ModuliVerdict::empty(upper)
    } else if r <= lo {
        ModuliVerdict::empty(lower)
    } else {
        let dim = moduli_dim(c1, c2, g);
        debug_assert_eq!(dim, 6 * c2 + 2 * g.e() - 12);
        ModuliVerdict::nonempty(dim, rationality, interior)
    })
}

/// Verdict for `M_L(3; c1, c2)` with `c1 ∈ {0, σ + f}`.
///
/// An `L` on a wall of type `(3; c1, c2)` gets `BoundaryEmbedded` when the
/// space is nonempty; the data are those of the neighbouring chambers.
pub fn classify(
    c1: DivClass,
    c2: i64,
    l: &Polarization,
    g: SurfaceGeom,
) -> Result<ModuliVerdict, ClassifyError> {
    let mut v = classify_slope(c1, c2, l.slope(), g)?;
    if v.status == Status::Nonempty {
        let deck = chambers(3, c1, c2, g);
        if let Location::Wall(_) = deck.locate(l) {
            v.status = Status::BoundaryEmbedded;
        }
    }
    Ok(v)
}

/// `c1` on `P²`: zero or the class of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PlaneC1 {
    Zero,
    Line,
}

impl PlaneC1 {
    /// Pull-back to `F_1`.
    pub fn pullback(self) -> DivClass {
        match self {
            PlaneC1::Zero => DivClass::ZERO,
            PlaneC1::Line => DivClass::SIGMA_PLUS_FIBER,
        }
    }
}

/// `L_n = n(σ + f) − σ` on `F_1`, slope `n/(n − 1)`, for the smallest `n ≥ 2`
/// putting it below every wall of type `(3; c1, c2)`.
pub fn plane_polarization(c1: PlaneC1, c2: i64) -> (i64, Polarization) {
    let g = SurfaceGeom::new(1);
    let deck = chambers(3, c1.pullback(), c2, g);
    let first = deck.faces.first().map(|f| f.slope);
    // slope n/(n−1) = 1 + 1/(n−1) decreases to 1; below s iff n − 1 > 1/(s − 1)
    let n = match first {
        None => 2,
        Some(s) => {
            let gap = s - Rational::from_integer(1);
            let t = (Rational::from_integer(1) / gap).floor().to_integer();
            (t + 2).max(2)
        }
    };
    let class = n * DivClass::SIGMA_PLUS_FIBER - DivClass::SIGMA;
    let l = Polarization::new(class, g).expect("L_n is ample for n >= 2");
    debug_assert!(first.is_none_or(|s| l.slope() < s));
    (n, l)
}

/// Verdict for `M(3; c1, c2)` on `P²` via `F_1`.
pub fn classify_p2(c1: PlaneC1, c2: i64) -> ModuliVerdict {
    let g = SurfaceGeom::new(1);
    let (_, l) = plane_polarization(c1, c2);
    let mut v = classify(c1.pullback(), c2, &l, g).expect("pull-backs are supported");
    v.provenance = match c1 {
        PlaneC1::Zero => Clause::PlaneTrivial,
        PlaneC1::Line => Clause::PlaneLine,
    };
    if v.is_nonempty() && c1 == PlaneC1::Line {
        debug_assert_eq!(v.dimension, Some(6 * c2 - 10));
    }
    v
}

/// Generic extension `0 → O(sub) → V → O(q1) ⊕ O(q2) → 0` for `c1 = σ + f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionShape {
    pub sub: DivClass,
    pub quotient: (DivClass, DivClass),
}

pub fn generic_extension_shape(c2: i64) -> Option<ExtensionShape> {
    let sub = DivClass::new(1, 1 - c2);
    let f = DivClass::FIBER;
    let quotient = if c2 % 2 == 0 {
        if c2 < 2 {
            return None;
        }
        ((c2 / 2) * f, (c2 / 2) * f)
    } else {
        if c2 < 3 {
            return None;
        }
        (((c2 - 1) / 2) * f, ((c2 + 1) / 2) * f)
    };
    Some(ExtensionShape { sub, quotient })
}
