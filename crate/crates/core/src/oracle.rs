//! Brute-force verifiers.
//!
//! [`scan_walls`] never touches the wall enumerator: it walks a square box
//! and tests each class against the definition directly, and the sign-law
//! checks run on top of that scan. The enumerator only appears as the thing
//! being compared against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chamberdeck::{Chamber, ChamberDeck};
use crate::lattice::{euler_char, DivClass, Polarization, SurfaceGeom};
use crate::moduli::discrepancy::d_eta_star_unchecked;
use crate::moduli::{classify, d_zeta, moduli_dim};
use crate::rational::{format_rational, Rational};
use crate::wallset::{enumerate_walls, separating_in, Wall, WallSet, Witness};

type Found = (i64, i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("box {given} is below the provable bound {needed}")]
pub struct BoxTooSmall {
    pub given: i64,
    pub needed: i64,
}

fn bounds(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> Vec<(i64, i64)> {
    let r = i64::from(r);
    let c1_sq = -g.e() * c1.a * c1.a + 2 * c1.a * c1.b;
    let core = 2 * r * c2 - (r - 1) * c1_sq;
    if core <= 0 {
        return Vec::new();
    }
    (1..r).map(|i| (i, i * (r - i) * core)).collect()
}

/// Smallest box [`scan_walls`] accepts: `⌊max B_i / 2⌋`.
pub fn required_box(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> i64 {
    bounds(r, c1, c2, g)
        .iter()
        .map(|&(_, b)| b / 2)
        .max()
        .unwrap_or(0)
}

/// Walls found by testing every `(x, y)` with `|x|, |y| ≤ box`.
pub fn scan_walls(
    r: u32,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
    box_: i64,
) -> Result<Vec<Wall>, BoxTooSmall> {
    let needed = required_box(r, c1, c2, g);
    if box_ < needed {
        return Err(BoxTooSmall {
            given: box_,
            needed,
        });
    }
    let e = g.e();
    let r64 = i64::from(r);
    let bs = bounds(r, c1, c2, g);
    // (a, b) -> witnesses as (i, F.a, F.b)
    let mut found: BTreeMap<(i64, i64), BTreeSet<Found>> = BTreeMap::new();
    for p in -box_..=box_ {
        for q in -box_..=box_ {
            // ζ·f = p and ζ·(σ + ef) = q: the wall meets the ample cone iff they differ in sign
            if p * q >= 0 {
                continue;
            }
            let sq = -e * p * p + 2 * p * q;
            for &(i, b) in &bs {
                let ok = (p + i * c1.a).rem_euclid(r64) == 0
                    && (q + i * c1.b).rem_euclid(r64) == 0
                    && -b <= sq
                    && sq < 0;
                if !ok {
                    continue;
                }
                let (key, j) = if p > 0 {
                    ((p, q), i)
                } else {
                    ((-p, -q), r64 - i)
                };
                let f = ((key.0 + j * c1.a) / r64, (key.1 + j * c1.b) / r64);
                found.entry(key).or_default().insert((j, f.0, f.1));
            }
        }
    }
    let mut walls: Vec<Wall> = found
        .into_iter()
        .map(|((p, q), ws)| {
            let zeta = DivClass::new(p, q);
            Wall {
                zeta,
                zeta_sq: -e * p * p + 2 * p * q,
                critical_slope: Rational::from_integer(e) + Rational::new(-q, p),
                witnesses: ws
                    .into_iter()
                    .map(|(i, a, b)| Witness {
                        i,
                        f: DivClass::new(a, b),
                    })
                    .collect(),
            }
        })
        .collect();
    walls.sort_by(|u, v| {
        u.critical_slope
            .cmp(&v.critical_slope)
            .then((u.zeta.a, -u.zeta.b).cmp(&(v.zeta.a, -v.zeta.b)))
    });
    Ok(walls)
}

/// Scan with the provable box.
pub fn scan_walls_auto(r: u32, c1: DivClass, c2: i64, g: SurfaceGeom) -> Vec<Wall> {
    scan_walls(r, c1, c2, g, required_box(r, c1, c2, g)).expect("box is the provable bound")
}

/// Extension dimension of the line-subbundle case via Riemann-Roch on the
/// Serre-dual side: `−χ(W ⊗ O(K − F))` with `F = (ζ + c1)/3`.
pub fn ext_case_a_via_euler_char(
    zeta: DivClass,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
) -> Option<i64> {
    let f = (zeta + c1).div_exact(3)?;
    let k = crate::lattice::canonical_class(g);
    let c1_w = c1 - f;
    let c2_w = c2 - f.dot(&c1_w, g);
    let d = k - f;
    Some(-(euler_char(d, g) + euler_char(c1_w + d, g) - c2_w))
}

/// Same route for the rank-2 piece: `−χ(V2 ⊗ O(D) ⊗ I_Z2)` with `D = K + c1 − 2F2`.
pub fn ext_2_19_via_euler_char(
    eta: DivClass,
    c1: DivClass,
    c2: i64,
    c2_v2: i64,
    g: SurfaceGeom,
) -> Option<i64> {
    let f2 = (eta + 2 * c1).div_exact(3)?;
    let k = crate::lattice::canonical_class(g);
    let d = k + c1 - 2 * f2;
    let len_z2 = c2 - c2_v2 - f2.dot(&(c1 - f2), g);
    Some(-(euler_char(d, g) + euler_char(f2 + d, g) - c2_v2 - 2 * len_z2))
}

/// Classes `D` with `|a|, |b| ≤ radius`, orthogonal to one of `ls`, violating
/// `D² < 0 or D = 0`.
pub fn hodge_index_violations(g: SurfaceGeom, radius: i64, ls: &[DivClass]) -> Vec<DivClass> {
    let mut bad = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            let d = DivClass::new(a, b);
            if d.is_zero() || !ls.iter().any(|l| d.dot(l, g) == 0) {
                continue;
            }
            if d.square(g) >= 0 {
                bad.push(d);
            }
        }
    }
    bad
}

/// The four excess-count sign laws, one per destabilization case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignLaw {
    LineSub,
    RankTwoSub,
    Flag,
    DualFlag,
}

impl SignLaw {
    pub const ALL: [SignLaw; 4] = [
        SignLaw::LineSub,
        SignLaw::RankTwoSub,
        SignLaw::Flag,
        SignLaw::DualFlag,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SignLaw::LineSub => "2.6",
            SignLaw::RankTwoSub => "2.11",
            SignLaw::Flag => "2.21",
            SignLaw::DualFlag => "2.29",
        }
    }
}

impl fmt::Display for SignLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for SignLaw {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignLaw::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| format!("unknown sign law {s:?}"))
    }
}

impl Serialize for SignLaw {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

fn ser_pq<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignLawFailure {
    pub e: u32,
    pub c2: i64,
    pub c1: DivClass,
    pub class: DivClass,
    pub xi: Option<DivClass>,
    #[serde(serialize_with = "ser_pq")]
    pub value: Rational,
    pub reason: &'static str,
}

/// Classes with vanishing (cases a, b) or nonnegative (cases c, d) excess in one cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityCell {
    pub e: u32,
    pub c2: i64,
    pub c1: DivClass,
    pub found: Vec<DivClass>,
    pub listed: Vec<DivClass>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignLawReport {
    pub lemma: SignLaw,
    pub e_max: u32,
    pub c2_max: i64,
    pub checked: usize,
    pub failures: Vec<SignLawFailure>,
    pub equality: Vec<EqualityCell>,
    pub pass: bool,
}

impl fmt::Display for SignLawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "sign law {}: e <= {}, c2 <= {}, {} values checked, {} failures",
            self.lemma,
            self.e_max,
            self.c2_max,
            self.checked,
            self.failures.len()
        )?;
        for x in &self.failures {
            let xi = x.xi.map(|v| format!(" xi={v}")).unwrap_or_default();
            writeln!(
                f,
                "FAIL e={} c2={} c1={} class={}{xi} value={} ({})",
                x.e,
                x.c2,
                x.c1,
                x.class,
                format_rational(&x.value),
                x.reason
            )?;
        }
        for c in self.equality.iter().filter(|c| !c.found.is_empty()) {
            let list = |v: &[DivClass]| {
                v.iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(
                f,
                "equality e={} c2={} c1={}: found [{}] listed [{}]",
                c.e,
                c.c2,
                c.c1,
                list(&c.found),
                list(&c.listed)
            )?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// `(σ-coefficient, f-coefficient)` closed-form classes.
fn threshold_twins(k: i64, lead: i64, e: u32) -> Vec<DivClass> {
    let mut v = vec![DivClass::new(lead, -k)];
    if e == 0 {
        v.push(DivClass::new(-k, lead));
    }
    v
}

fn listed(law: SignLaw, c2: i64, e: u32) -> Vec<DivClass> {
    let halves = |ks: &[i64]| -> Vec<DivClass> {
        ks.iter()
            .filter(|k| *k % 2 == 0 && **k > 0)
            .flat_map(|k| threshold_twins(k / 2, 1, e))
            .collect()
    };
    match law {
        SignLaw::LineSub | SignLaw::DualFlag => threshold_twins(3 * c2 - 2, 2, e),
        SignLaw::RankTwoSub => halves(&[3 * c2 - 5]),
        SignLaw::Flag => halves(&[3 * c2 - 2, 3 * c2 - 5]),
    }
}

/// Oriented classes `±ζ` carrying witness `i` with respect to `c1`.
fn oriented(walls: &[Wall], i: i64) -> Vec<DivClass> {
    let mut out = Vec::new();
    for w in walls {
        if w.witness(i).is_some() {
            out.push(w.zeta);
        }
        if w.witness(3 - i).is_some() {
            out.push(-w.zeta);
        }
    }
    out
}

fn crit(z: DivClass, g: SurfaceGeom) -> Rational {
    Rational::from_integer(g.e()) + Rational::new(-z.b, z.a)
}

/// Realizability of a rank-2 subsheaf class `F = (ζ + 2c1)/3` for `c1 = σ + f`:
/// the rank-2 slope bound at `L2` beyond the wall, and a nonempty `L1` side.
fn rank_two_realizable(z: DivClass, c1: DivClass, c2: i64, g: SurfaceGeom) -> bool {
    let int = Rational::from_integer;
    let f = (z + 2 * c1).div_exact(3).expect("witness i = 2");
    let m = c2 - f.dot(&(c1 - f), g);
    let cr = crit(z, g);
    if z.a > 0 {
        if f.a == 1 && cr >= g.cone_boundary_slope() + int(2 * m - f.b) {
            return false;
        }
    } else {
        if moduli_dim(c1, c2, g) < 0 {
            return false;
        }
        if g.e() == 0 && f.b == 1 && cr.recip() >= int(2 * m - f.a) {
            return false;
        }
    }
    true
}

/// The flag case's rank-2 piece must be semistable on the wall, which caps
/// the critical slope of `η` when its leading coefficient is one.
fn flag_realizable(z: DivClass, c2: i64, g: SurfaceGeom) -> bool {
    let cap = Rational::new(3 * c2 + 1, 2);
    let cr = crit(z, g);
    if z.a == 1 && cr >= g.cone_boundary_slope() + cap {
        return false;
    }
    if g.e() == 0 && z.a < 0 && z.b == 1 && cr.recip() >= cap {
        return false;
    }
    true
}

/// Exhaustive check of one sign law over `e ≤ e_max`, `1 ≤ c2 ≤ c2_max`,
/// `c1 ∈ {0, σ + f}`.
pub fn verify_sign_law(law: SignLaw, e_max: u32, c2_max: i64) -> SignLawReport {
    let zero = Rational::from_integer(0);
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut equality = Vec::new();
    for e in 0..=e_max {
        let g = SurfaceGeom::new(e);
        for c2 in 1..=c2_max {
            for c1 in [DivClass::ZERO, DivClass::SIGMA_PLUS_FIBER] {
                let trivial = c1.is_zero();
                let list = if trivial {
                    Vec::new()
                } else {
                    listed(law, c2, e)
                };
                let mut found = BTreeSet::new();
                let mut fail = |class, xi, value, reason| {
                    failures.push(SignLawFailure {
                        e,
                        c2,
                        c1,
                        class,
                        xi,
                        value,
                        reason,
                    })
                };
                match law {
                    SignLaw::LineSub | SignLaw::RankTwoSub => {
                        let i = if law == SignLaw::LineSub { 1 } else { 2 };
                        let walls = scan_walls_auto(3, c1, c2, g);
                        for z in oriented(&walls, i) {
                            if law == SignLaw::RankTwoSub
                                && !trivial
                                && !rank_two_realizable(z, c1, c2, g)
                            {
                                continue;
                            }
                            let d = d_zeta(z, c1, c2, g);
                            checked += 1;
                            if trivial && d >= zero {
                                fail(z, None, d, "excess must be negative for c1 = 0");
                            } else if d > zero {
                                fail(z, None, d, "excess must be nonpositive");
                            } else if d == zero {
                                found.insert(z);
                                if !list.contains(&z) {
                                    fail(z, None, d, "vanishing excess off the listed classes");
                                }
                            }
                        }
                    }
                    SignLaw::Flag | SignLaw::DualFlag => {
                        let cc = if law == SignLaw::Flag { c1 } else { -c1 };
                        let walls = scan_walls_auto(3, cc, c2, g);
                        for z in oriented(&walls, 2) {
                            if law == SignLaw::Flag && !trivial && !flag_realizable(z, c2, g) {
                                continue;
                            }
                            for xi in crate::moduli::admissible_xis(z, cc, c2, g) {
                                let d = d_eta_star_unchecked(xi, z, cc, c2, g);
                                checked += 1;
                                if d < zero {
                                    continue;
                                }
                                found.insert(z);
                                if !list.contains(&z) {
                                    fail(
                                        z,
                                        Some(xi),
                                        d,
                                        "nonnegative excess off the exceptional classes",
                                    );
                                }
                            }
                        }
                    }
                }
                let found: Vec<DivClass> = found.into_iter().collect();
                if matches!(law, SignLaw::LineSub | SignLaw::RankTwoSub) && !trivial {
                    // every listed class that is a realizable wall class must attain zero
                    let realizable = {
                        let i = if law == SignLaw::LineSub { 1 } else { 2 };
                        let walls = scan_walls_auto(3, c1, c2, g);
                        oriented(&walls, i)
                            .into_iter()
                            .filter(|z| {
                                law == SignLaw::LineSub || rank_two_realizable(*z, c1, c2, g)
                            })
                            .collect::<BTreeSet<_>>()
                    };
                    for z in list.iter().filter(|z| realizable.contains(z)) {
                        if !found.contains(z) {
                            failures.push(SignLawFailure {
                                e,
                                c2,
                                c1,
                                class: *z,
                                xi: None,
                                value: d_zeta(*z, c1, c2, g),
                                reason: "listed class does not attain zero",
                            });
                        }
                    }
                }
                equality.push(EqualityCell {
                    e,
                    c2,
                    c1,
                    found,
                    listed: list,
                });
            }
        }
    }
    let pass = failures.is_empty();
    SignLawReport {
        lemma: law,
        e_max,
        c2_max,
        checked,
        failures,
        equality,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    pub rank: u32,
    pub c1: DivClass,
    pub c2: i64,
    pub e: u32,
    pub seed: u64,
    pub samples: usize,
    pub same_chamber_pairs: usize,
    pub mismatches: Vec<String>,
    pub pass: bool,
}

/// A random ample slope off every wall, up to a few units past the last wall.
pub fn random_off_wall_slope(deck: &ChamberDeck, rng: &mut impl Rng) -> Rational {
    let k = rng.gen_range(0..deck.chambers.len());
    random_slope_in(&deck.chambers[k], deck.geom, rng)
}

/// A random slope strictly inside `ch`; unbounded chambers are cut four units long.
pub fn random_slope_in(ch: &Chamber, g: SurfaceGeom, rng: &mut impl Rng) -> Rational {
    let lo = ch.lo.finite().unwrap_or_else(|| g.cone_boundary_slope());
    let hi = ch.hi.finite().unwrap_or(lo + Rational::from_integer(4));
    let den = rng.gen_range(2..=64i64);
    let t = rng.gen_range(1..den);
    lo + (hi - lo) * Rational::new(t, den)
}

/// Random pairs of off-wall polarizations: separating walls vanish exactly on
/// same-chamber pairs, and (rank 3, supported `c1`) the verdict is constant on chambers.
pub fn verify_chamber_invariance(
    r: u32,
    c1: DivClass,
    c2: i64,
    g: SurfaceGeom,
    samples: usize,
    seed: u64,
) -> InvarianceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let deck = crate::chamberdeck::chambers(r, c1, c2, g);
    let walls: &WallSet = &deck.walls;
    let mut mismatches = Vec::new();
    let mut same_pairs = 0;
    for n in 0..samples {
        // every other pair is drawn from a single chamber so verdicts get compared
        let (s1, s2) = if n % 2 == 0 {
            (
                random_off_wall_slope(&deck, &mut rng),
                random_off_wall_slope(&deck, &mut rng),
            )
        } else {
            let ch = &deck.chambers[rng.gen_range(0..deck.chambers.len())];
            (
                random_slope_in(ch, g, &mut rng),
                random_slope_in(ch, g, &mut rng),
            )
        };
        let l1 = Polarization::from_slope(s1, g).expect("sampled slopes are ample");
        let l2 = Polarization::from_slope(s2, g).expect("sampled slopes are ample");
        let same = deck
            .same_chamber(&l1, &l2)
            .expect("sampled slopes are off every wall");
        let separated = !separating_in(walls, &l1, &l2, g).is_empty();
        let (p1, p2) = (format_rational(&s1), format_rational(&s2));
        if same == separated {
            mismatches.push(format!(
                "slopes {p1}, {p2}: same_chamber={same} but separated={separated}"
            ));
        }
        if same {
            same_pairs += 1;
            if r == 3 {
                if let (Ok(v1), Ok(v2)) = (classify(c1, c2, &l1, g), classify(c1, c2, &l2, g)) {
                    if v1 != v2 {
                        mismatches.push(format!(
                            "slopes {p1}, {p2}: verdicts differ inside one chamber"
                        ));
                    }
                }
            }
        }
    }
    let pass = mismatches.is_empty();
    InvarianceReport {
        rank: r,
        c1,
        c2,
        e: g.e() as u32,
        seed,
        samples,
        same_chamber_pairs: same_pairs,
        mismatches,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallMismatch {
    pub rank: u32,
    pub c1: DivClass,
    pub c2: i64,
    pub e: u32,
    pub enumerated: usize,
    pub scanned: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WallOracleReport {
    pub e_max: u32,
    pub c2_max: i64,
    pub cells: usize,
    pub walls: usize,
    pub mismatches: Vec<WallMismatch>,
    pub pass: bool,
}

impl fmt::Display for WallOracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "wall scan vs enumerator: e <= {}, c2 <= {}, {} cells, {} walls",
            self.e_max, self.c2_max, self.cells, self.walls
        )?;
        for m in &self.mismatches {
            writeln!(
                f,
                "  FAIL rank {} c1 {} c2 {} e {}: enumerated {}, scanned {}",
                m.rank, m.c1, m.c2, m.e, m.enumerated, m.scanned
            )?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Compare the box scan with the enumerator for ranks 2 and 3, `c1 ∈ {0, σ+f}`.
pub fn verify_wall_oracle(e_max: u32, c2_max: i64) -> WallOracleReport {
    let mut cells = 0;
    let mut total = 0;
    let mut mismatches = Vec::new();
    for e in 0..=e_max {
        let g = SurfaceGeom::new(e);
        for r in [2u32, 3] {
            for c1 in [DivClass::ZERO, DivClass::SIGMA_PLUS_FIBER] {
                for c2 in 0..=c2_max {
                    cells += 1;
                    let fast = enumerate_walls(r, c1, c2, g).walls;
                    let slow = scan_walls_auto(r, c1, c2, g);
                    total += fast.len();
                    if fast != slow {
                        mismatches.push(WallMismatch {
                            rank: r,
                            c1,
                            c2,
                            e,
                            enumerated: fast.len(),
                            scanned: slow.len(),
                        });
                    }
                }
            }
        }
    }
    let pass = mismatches.is_empty();
    WallOracleReport {
        e_max,
        c2_max,
        cells,
        walls: total,
        mismatches,
        pass,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceGridReport {
    pub e_max: u32,
    pub c2_max: i64,
    pub seed: u64,
    pub samples: usize,
    pub cells: Vec<InvarianceReport>,
    pub pass: bool,
}

impl fmt::Display for InvarianceGridReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: usize = self.cells.iter().map(|c| c.samples).sum();
        writeln!(
            f,
            "chamber invariance: e <= {}, c2 <= {}, seed {}, {} cells, {} pairs",
            self.e_max,
            self.c2_max,
            self.seed,
            self.cells.len(),
            pairs
        )?;
        for c in self.cells.iter().filter(|c| !c.pass) {
            for m in &c.mismatches {
                writeln!(
                    f,
                    "  FAIL rank {} c1 {} c2 {} e {}: {m}",
                    c.rank, c.c1, c.c2, c.e
                )?;
            }
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// [`verify_chamber_invariance`] over a grid; each cell gets its own seed
/// derived from `seed` and the cell position.
pub fn verify_invariance_grid(
    e_max: u32,
    c2_max: i64,
    samples: usize,
    seed: u64,
) -> InvarianceGridReport {
    let mut cells = Vec::new();
    let mut k = 0u64;
    for e in 0..=e_max {
        let g = SurfaceGeom::new(e);
        for r in [2u32, 3] {
            for c1 in [DivClass::ZERO, DivClass::SIGMA_PLUS_FIBER] {
                for c2 in 0..=c2_max {
                    cells.push(verify_chamber_invariance(
                        r,
                        c1,
                        c2,
                        g,
                        samples,
                        seed.wrapping_add(k),
                    ));
                    k += 1;
                }
            }
        }
    }
    let pass = cells.iter().all(|c| c.pass);
    InvarianceGridReport {
        e_max,
        c2_max,
        seed,
        samples,
        cells,
        pass,
    }
}
