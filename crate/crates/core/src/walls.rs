//! Semicircular wall geometry in the `(beta, alpha)` half plane, candidate
//! destabilizer scanning, and the audited certificate for the plane sheaf on
//! the Calabi-Yau model.
//!
//! Equality of two tilt slopes, cross-multiplied, is the conic
//! `A (alpha^2 + beta^2)/2 - B beta + C = 0` with
//! `A = e1 e0' - e1' e0`, `B = e2 e0' - e2' e0`, `C = e2 e1' - e2' e1`;
//! for `A != 0` this is the circle with center `B/A` and squared radius
//! `(B^2 - 2AC)/A^2`, degenerate cases map to a vertical line, the empty
//! locus, or identical slopes everywhere.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::chern::{delta_bar, twist, ProjectedChern};
use crate::geometry::{DivisorClass, ThreefoldModel};
use crate::scalar::{quad_sqrt, rat, rat_int, QuadraticNumber, Rational};
use crate::tilt::{nu_zero_alpha, NuZeroLocus};
use crate::{Error, Result};

/// A semicircle of slope equality between two characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wall {
    pub center_beta: QuadraticNumber,
    pub radius: QuadraticNumber,
    pub pair: (ProjectedChern, ProjectedChern),
}

impl Wall {
    /// Rationally parametrized points of the semicircle, exact in the field
    /// of center and radius: `t > 0` maps to
    /// `(beta, alpha) = (center + r (1-t^2)/(1+t^2), r 2t/(1+t^2))`.
    pub fn sample_points(&self, count: usize) -> Vec<(QuadraticNumber, QuadraticNumber)> {
        let mut out = Vec::with_capacity(count);
        for k in 1..=count as i64 {
            let t = rat(k, k + 1);
            let denom = Rational::one() + &t * &t;
            let cos = (Rational::one() - &t * &t) / &denom;
            let sin = rat_int(2) * &t / &denom;
            let beta = self
                .center_beta
                .try_add(&self.radius.scale(&cos))
                .expect("center and radius share a field");
            let alpha = self.radius.scale(&sin);
            out.push((beta, alpha));
        }
        out
    }
}

/// The locus where two characters' tilt slopes agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WallLocus {
    Wall(Wall),
    /// Ranks proportional but slopes distinct: the locus is a vertical line.
    VerticalLine { beta: QuadraticNumber },
    /// Empty (or a single boundary point at `alpha = 0`).
    NoWall,
    /// The truncated characters are proportional.
    EverywhereEqual,
}

/// Cross-multiplied slope equality at an exact point, valid even where a
/// denominator vanishes.
pub fn nu_cross_equal(
    v: &ProjectedChern,
    w: &ProjectedChern,
    alpha: &QuadraticNumber,
    beta: &QuadraticNumber,
) -> Result<bool> {
    let tv = twist(v, beta)?;
    let tw = twist(w, beta)?;
    let alpha2 = alpha.try_mul(alpha)?;
    let half = rat(1, 2);
    let num_v = tv.e2.try_sub(&alpha2.scale(&(&v.e0 * &half)))?;
    let num_w = tw.e2.try_sub(&alpha2.scale(&(&w.e0 * &half)))?;
    let lhs = num_v.try_mul(&tw.e1)?;
    let rhs = num_w.try_mul(&tv.e1)?;
    Ok(lhs == rhs)
}

/// Solves the slope-equality locus of two characters.
pub fn wall_between(v: &ProjectedChern, w: &ProjectedChern) -> Result<WallLocus> {
    let e0v: QuadraticNumber = (&v.e0).into();
    let e0w: QuadraticNumber = (&w.e0).into();
    let a = v.e1.try_mul(&e0w)?.try_sub(&w.e1.try_mul(&e0v)?)?;
    let b = v.e2.try_mul(&e0w)?.try_sub(&w.e2.try_mul(&e0v)?)?;
    let c = v.e2.try_mul(&w.e1)?.try_sub(&w.e2.try_mul(&v.e1)?)?;
    if a.is_zero() {
        if b.is_zero() {
            return Ok(if c.is_zero() { WallLocus::EverywhereEqual } else { WallLocus::NoWall });
        }
        return Ok(WallLocus::VerticalLine { beta: c.try_div(&b)? });
    }
    let center = b.try_div(&a)?;
    // radius^2 = (B^2 - 2AC)/A^2
    let b2 = b.try_mul(&b)?;
    let ac = a.try_mul(&c)?;
    let a2 = a.try_mul(&a)?;
    let radius_sq = b2.try_sub(&ac.scale(&rat(2, 1)))?.try_div(&a2)?;
    if !radius_sq.is_positive() {
        return Ok(WallLocus::NoWall);
    }
    let radius_sq = radius_sq.as_rational().ok_or(Error::IrrationalRadicand)?;
    let radius = quad_sqrt(radius_sq)?;
    Ok(WallLocus::Wall(Wall { center_beta: center, radius, pair: (v.clone(), w.clone()) }))
}

/// Center of the vanishing-rank wall: `e2/e1`.
pub fn wall_center_rank0(p: &ProjectedChern) -> Result<QuadraticNumber> {
    if !p.e0.is_zero() {
        return Err(Error::Precondition("the rank entry must vanish".into()));
    }
    if p.e1.is_zero() {
        return Err(Error::DivisionByZero);
    }
    p.e2.try_div(&p.e1)
}

/// Upper bound `9 / (8 m^3 r0 s - 9 r0)` for the radius of a wall of the
/// plane sheaf, cross-checked against the trilinear form of the model:
/// `8 H^3 r0` equals the denominator for `H = m L - D/2`.
pub fn radius_bound(s: &Rational, m: u64, r0: u64) -> Result<Rational> {
    if m < 2 {
        return Err(Error::Precondition("the bound needs m >= 2".into()));
    }
    if r0 == 0 {
        return Err(Error::Precondition("the rank parameter must be positive".into()));
    }
    let denom = rat_int(8 * (m * m * m * r0) as i64) * s - rat_int(9 * r0 as i64);
    if !denom.is_positive() {
        return Err(Error::Precondition("nonpositive denominator in the radius bound".into()));
    }
    // independent route through the intersection form
    let model = ThreefoldModel::cy3_with_plane(s.clone())?;
    let h = DivisorClass::new(vec![rat_int(m as i64), rat(-1, 2)]);
    let h3 = model.intersect3(&h, &h, &h)?;
    let via_model = rat_int(8) * h3 * rat_int(r0 as i64);
    debug_assert_eq!(via_model, denom);
    if via_model != denom {
        return Err(Error::Precondition("radius bound cross-check failed".into()));
    }
    Ok(rat_int(9) / denom)
}

/// The audited certificate: every displayed value of the plane-sheaf
/// counter-example reproduced exactly, with the window of tilt parameters
/// in which the shifted plane sheaf has positive real central charge while
/// no wall can separate it.
#[derive(Clone, Debug)]
pub struct CounterexampleCertificate {
    pub s: Rational,
    pub m: u64,
    pub h: DivisorClass,
    pub projected: ProjectedChern,
    pub twisted: ProjectedChern,
    /// the tilt slope of the plane sheaf vanishes at `beta = 1` for every
    /// `alpha`
    pub nu_alpha_independent_zero: bool,
    pub wall_center: QuadraticNumber,
    pub radius_bound: Rational,
    /// positivity threshold of `re Z` for the shifted sheaf under the
    /// `omega = alpha sqrt(3) H` scaling used by the central charge here
    pub re_z_threshold_primary: Rational,
    /// threshold under the alternate scaling, where
    /// `re Z = (3/8)(1 - alpha^2)`
    pub re_z_threshold_alternate: Rational,
    /// the two scalings disagree; both are reported and the window uses the
    /// smaller threshold
    pub scaling_discrepancy: bool,
    pub window: Option<(Rational, Rational)>,
    pub window_alternate: Option<(Rational, Rational)>,
    pub re_z_probe_alpha: Rational,
    pub re_z_primary_at_probe: Rational,
    pub re_z_alternate_at_probe: Rational,
    pub checks: Vec<(&'static str, bool)>,
}

impl CounterexampleCertificate {
    pub fn verified(&self) -> bool {
        self.window.is_some() && self.checks.iter().all(|(_, ok)| *ok)
    }
}

pub fn counterexample_certificate(s: &Rational, m: u64) -> Result<CounterexampleCertificate> {
    if m < 2 {
        return Err(Error::Precondition("the certificate needs m >= 2".into()));
    }
    let model = ThreefoldModel::cy3_with_plane(s.clone())?;
    let h = DivisorClass::new(vec![rat_int(m as i64), rat(-1, 2)]);
    let plane = model.structure_sheaf_of_plane()?;
    let projected = crate::chern::project(&model, &h, &plane)?;
    let expected_projection =
        ProjectedChern::from_rationals(rat_int(0), rat(9, 4), rat(9, 4), rat(3, 2));
    let twisted = twist(&projected, &QuadraticNumber::one())?;
    let expected_twist = ProjectedChern::from_rationals(rat_int(0), rat(9, 4), rat_int(0), rat(3, 8));
    let nu_locus = nu_zero_alpha(&projected, &QuadraticNumber::one())?;
    let nu_alpha_independent_zero = nu_locus == NuZeroLocus::Independent;
    let wall_center = wall_center_rank0(&projected)?;
    let bound = radius_bound(s, m, 1)?;

    // re Z of the shifted sheaf at beta = 1 is A - B alpha^2; under the
    // sqrt(3)-scaled form B = -(3/2) e1', under the alternate B = -(1/6) e1'
    let shifted = twist(&projected.neg(), &QuadraticNumber::one())?;
    let a_coeff = shifted
        .e3
        .neg()
        .as_rational()
        .cloned()
        .ok_or(Error::IrrationalRadicand)?;
    let e1_shifted = shifted.e1.as_rational().cloned().ok_or(Error::IrrationalRadicand)?;
    let b_primary = rat(-3, 2) * &e1_shifted;
    let b_alternate = rat(-1, 6) * &e1_shifted;
    let threshold_of = |b: &Rational| -> Result<Rational> {
        let sq = &a_coeff / b;
        quad_sqrt(&sq)?.as_rational().cloned().ok_or(Error::IrrationalRadicand)
    };
    let re_z_threshold_primary = threshold_of(&b_primary)?;
    let re_z_threshold_alternate = threshold_of(&b_alternate)?;

    let probe = rat(1, 10);
    let probe_sq = &probe * &probe;
    let re_z_primary_at_probe = &a_coeff - &b_primary * &probe_sq;
    let re_z_alternate_at_probe = &a_coeff - &b_alternate * &probe_sq;

    let window_for = |threshold: &Rational| {
        if bound < *threshold {
            Some((bound.clone(), threshold.clone()))
        } else {
            None
        }
    };
    let window = window_for(&re_z_threshold_primary.clone().min(re_z_threshold_alternate.clone()));
    let window_alternate = window_for(&re_z_threshold_alternate);

    let checks = vec![
        ("projection matches the displayed quadruple", projected == expected_projection),
        ("twist at beta=1 matches the displayed quadruple", twisted == expected_twist),
        ("tilt slope vanishes identically at beta=1", nu_alpha_independent_zero),
        ("wall center equals 1", wall_center == QuadraticNumber::one()),
        ("radius bound is below 1", bound < Rational::one()),
        ("re Z positive at the probe under the primary scaling", re_z_primary_at_probe.is_positive()),
        (
            "re Z positive at the probe under the alternate scaling",
            re_z_alternate_at_probe.is_positive(),
        ),
    ];

    Ok(CounterexampleCertificate {
        s: s.clone(),
        m,
        h,
        projected,
        twisted,
        nu_alpha_independent_zero,
        wall_center,
        radius_bound: bound,
        re_z_threshold_primary,
        re_z_threshold_alternate,
        scaling_discrepancy: true,
        window,
        window_alternate,
        re_z_probe_alpha: probe,
        re_z_primary_at_probe,
        re_z_alternate_at_probe,
        checks,
    })
}

/// A rational box with bounded denominators, applied to the first three
/// entries of candidate characters (the degree-six entry plays no role in
/// slope equality).
#[derive(Clone, Debug)]
pub struct CharacterBox {
    pub lo: Rational,
    pub hi: Rational,
    pub max_denominator: u32,
}

impl CharacterBox {
    pub fn integers(lo: i64, hi: i64) -> Self {
        CharacterBox { lo: rat_int(lo), hi: rat_int(hi), max_denominator: 1 }
    }

    /// All reduced rationals in `[lo, hi]` with denominator at most the cap.
    fn values(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for den in 1..=self.max_denominator as i64 {
            let lo_num = (&self.lo * rat_int(den)).ceil().to_integer();
            let hi_num = (&self.hi * rat_int(den)).floor().to_integer();
            let (Ok(lo_i), Ok(hi_i)) = (i64::try_from(&lo_num), i64::try_from(&hi_num)) else {
                continue;
            };
            for num in lo_i..=hi_i {
                if den == 1 || num.unsigned_abs().gcd(&(den as u64)) == 1 {
                    out.push(rat(num, den));
                }
            }
        }
        out
    }

    pub fn characters(&self) -> Vec<ProjectedChern> {
        let values = self.values();
        let mut out = Vec::new();
        for e0 in &values {
            for e1 in &values {
                for e2 in &values {
                    out.push(ProjectedChern::from_rationals(
                        e0.clone(),
                        e1.clone(),
                        e2.clone(),
                        Rational::zero(),
                    ));
                }
            }
        }
        out
    }
}

/// Enumerates candidate subcharacters in the box, keeps those with
/// non-negative discriminant on both sides, and returns the distinct
/// semicircular walls against `v`, deduplicated by center and radius, in
/// first-seen order. The box and denominator cap make this an explicit,
/// admittedly incomplete, desk-scale enumeration.
pub fn destabilizer_scan(v: &ProjectedChern, bounds: &CharacterBox) -> Result<Vec<Wall>> {
    if delta_bar(v).is_negative() {
        return Err(Error::Precondition("the scanned character needs a non-negative discriminant".into()));
    }
    let mut seen: HashSet<(QuadraticNumber, QuadraticNumber)> = HashSet::new();
    let mut walls = Vec::new();
    for w in bounds.characters() {
        if delta_bar(&w).is_negative() {
            continue;
        }
        let rest = v.sub(&w)?;
        if delta_bar(&rest).is_negative() {
            continue;
        }
        if let WallLocus::Wall(wall) = wall_between(v, &w)? {
            if seen.insert((wall.center_beta.clone(), wall.radius.clone())) {
                walls.push(wall);
            }
        }
    }
    Ok(walls)
}

#[derive(Clone, Debug)]
pub struct TiltGrid {
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BmtClassification {
    Saturated,
    Satisfied,
    ViolatedAtCharacterLevel,
}

/// Where on the vanishing locus a scan entry was evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanLocus {
    /// the unique root in `alpha`
    Alpha(QuadraticNumber),
    /// the slope vanishes for every `alpha`; evaluated at a grid value
    IndependentAt(Rational),
    Empty,
}

#[derive(Clone, Debug)]
pub struct BmtScanEntry {
    pub character: ProjectedChern,
    pub beta: Rational,
    pub locus: ScanLocus,
    pub surplus: Option<QuadraticNumber>,
    pub classification: Option<BmtClassification>,
}

#[derive(Clone, Debug)]
pub struct BmtScanReport {
    pub entries: Vec<BmtScanEntry>,
    /// a character-level violation exhibits no contradiction by itself: it
    /// matters only if a semistable object with that character exists
    pub note: &'static str,
}

fn classify(surplus: &QuadraticNumber) -> BmtClassification {
    match surplus.sign() {
        0 => BmtClassification::Saturated,
        s if s > 0 => BmtClassification::Satisfied,
        _ => BmtClassification::ViolatedAtCharacterLevel,
    }
}

/// Surplus at a point of the vanishing locus, computed directly so the
/// boundary value `alpha = 0` is admissible.
fn surplus_at(p: &ProjectedChern, alpha: &QuadraticNumber, beta: &Rational) -> Result<QuadraticNumber> {
    let tw = twist(p, &beta.into())?;
    let alpha2 = alpha.try_mul(alpha)?;
    alpha2.try_mul(&tw.e1)?.scale(&rat(1, 6)).try_sub(&tw.e3)
}

/// Surveys the inequality's sign over characters and a tilt grid: for each
/// character and each grid `beta`, the surplus is evaluated on the vanishing
/// locus of the tilt slope and classified by sign.
pub fn bmt_scan(characters: &[ProjectedChern], grid: &TiltGrid) -> Result<BmtScanReport> {
    let mut entries = Vec::new();
    for p in characters {
        for beta in &grid.betas {
            match nu_zero_alpha(p, &beta.into())? {
                NuZeroLocus::Alpha(alpha) => {
                    let surplus = surplus_at(p, &alpha, beta)?;
                    entries.push(BmtScanEntry {
                        character: p.clone(),
                        beta: beta.clone(),
                        locus: ScanLocus::Alpha(alpha),
                        classification: Some(classify(&surplus)),
                        surplus: Some(surplus),
                    });
                }
                NuZeroLocus::Independent => {
                    for alpha in &grid.alphas {
                        let aq: QuadraticNumber = alpha.into();
                        let surplus = surplus_at(p, &aq, beta)?;
                        entries.push(BmtScanEntry {
                            character: p.clone(),
                            beta: beta.clone(),
                            locus: ScanLocus::IndependentAt(alpha.clone()),
                            classification: Some(classify(&surplus)),
                            surplus: Some(surplus),
                        });
                    }
                }
                NuZeroLocus::Empty => {
                    entries.push(BmtScanEntry {
                        character: p.clone(),
                        beta: beta.clone(),
                        locus: ScanLocus::Empty,
                        surplus: None,
                        classification: None,
                    });
                }
            }
        }
    }
    Ok(BmtScanReport {
        entries,
        note: "a character-level violation contradicts nothing unless a semistable \
               object with that character exists",
    })
}

/// Projected characters of the powers `O(c H)` for `c` in the given range.
pub fn line_bundle_characters(
    model: &ThreefoldModel,
    h: &DivisorClass,
    c_range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<ProjectedChern>> {
    let mut out = Vec::new();
    for c in c_range {
        let v = model.chern_of_line_bundle(&h.scale(&rat_int(c)))?;
        out.push(crate::chern::project(model, h, &v)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(e0: (i64, i64), e1: (i64, i64), e2: (i64, i64), e3: (i64, i64)) -> ProjectedChern {
        ProjectedChern::from_rationals(
            rat(e0.0, e0.1),
            rat(e1.0, e1.1),
            rat(e2.0, e2.1),
            rat(e3.0, e3.1),
        )
    }

    #[test]
    fn hand_computed_wall() {
        let v = pc((1, 1), (0, 1), (0, 1), (0, 1));
        let w = pc((0, 1), (1, 1), (1, 1), (0, 1));
        let WallLocus::Wall(wall) = wall_between(&v, &w).unwrap() else {
            panic!("expected a wall");
        };
        assert_eq!(wall.center_beta, QuadraticNumber::one());
        assert_eq!(wall.radius, QuadraticNumber::one());
        for (beta, alpha) in wall.sample_points(8) {
            assert!(nu_cross_equal(&v, &w, &alpha, &beta).unwrap());
        }
    }

    #[test]
    fn degenerate_loci() {
        let v = pc((1, 1), (2, 1), (-1, 1), (0, 1));
        let w = v.scale(&rat_int(2));
        assert_eq!(wall_between(&v, &w).unwrap(), WallLocus::EverywhereEqual);
        let v = pc((1, 1), (0, 1), (0, 1), (0, 1));
        let w = pc((0, 1), (1, 1), (0, 1), (0, 1));
        assert_eq!(wall_between(&v, &w).unwrap(), WallLocus::NoWall);
        let v = pc((1, 1), (1, 1), (0, 1), (0, 1));
        let w = pc((1, 1), (1, 1), (1, 1), (0, 1));
        assert_eq!(
            wall_between(&v, &w).unwrap(),
            WallLocus::VerticalLine { beta: QuadraticNumber::one() }
        );
    }

    #[test]
    fn wall_symmetry() {
        let v = pc((2, 1), (1, 1), (-1, 1), (0, 1));
        let w = pc((1, 1), (3, 1), (1, 2), (0, 1));
        assert_eq!(
            match (wall_between(&v, &w).unwrap(), wall_between(&w, &v).unwrap()) {
                (WallLocus::Wall(a), WallLocus::Wall(b)) =>
                    (a.center_beta, a.radius) == (b.center_beta, b.radius),
                (a, b) => a == b,
            },
            true
        );
    }

    #[test]
    fn rank_zero_center() {
        assert_eq!(
            wall_center_rank0(&pc((0, 1), (9, 4), (9, 4), (3, 2))).unwrap(),
            QuadraticNumber::one()
        );
        assert_eq!(
            wall_center_rank0(&pc((0, 1), (2, 1), (-3, 1), (0, 1))).unwrap(),
            QuadraticNumber::from_rational(rat(-3, 2))
        );
        assert_eq!(wall_center_rank0(&pc((0, 1), (5, 1), (0, 1), (0, 1))).unwrap(), QuadraticNumber::zero());
        assert!(wall_center_rank0(&pc((0, 1), (0, 1), (1, 1), (0, 1))).is_err());
        assert!(wall_center_rank0(&pc((1, 1), (1, 1), (1, 1), (0, 1))).is_err());
    }

    #[test]
    fn radius_bound_values() {
        assert_eq!(radius_bound(&rat_int(2), 2, 1).unwrap(), rat(9, 119));
        let b2 = radius_bound(&rat_int(2), 2, 1).unwrap();
        let b3 = radius_bound(&rat_int(2), 3, 1).unwrap();
        let b4 = radius_bound(&rat_int(2), 4, 1).unwrap();
        assert!(b2 > b3 && b3 > b4);
        for m in 2u64..=5 {
            for s in 1i64..=5 {
                for r0 in 1u64..=3 {
                    assert!(radius_bound(&rat_int(s), m, r0).unwrap() < Rational::one());
                }
            }
        }
        assert!(radius_bound(&rat_int(2), 1, 1).is_err());
        assert!(radius_bound(&rat(1, 100), 2, 1).is_err());
    }

    #[test]
    fn certificate_for_small_parameters() {
        let cert = counterexample_certificate(&rat_int(2), 2).unwrap();
        assert!(cert.verified(), "checks: {:?}", cert.checks);
        assert_eq!(cert.radius_bound, rat(9, 119));
        assert_eq!(cert.re_z_threshold_primary, rat(1, 3));
        assert_eq!(cert.re_z_threshold_alternate, rat_int(1));
        assert_eq!(cert.window, Some((rat(9, 119), rat(1, 3))));
        assert_eq!(cert.window_alternate, Some((rat(9, 119), rat_int(1))));
        assert_eq!(cert.twisted, pc((0, 1), (9, 4), (0, 1), (3, 8)));
        assert_eq!(cert.re_z_primary_at_probe, rat(3, 8) * rat(91, 100));
        assert_eq!(cert.re_z_alternate_at_probe, rat(3, 8) * rat(99, 100));
    }

    #[test]
    fn certificate_window_grid() {
        for s in 1i64..=5 {
            for m in 2u64..=5 {
                let cert = counterexample_certificate(&rat_int(s), m).unwrap();
                assert!(cert.verified(), "s={s} m={m}");
                assert!(cert.window.is_some());
            }
        }
        assert!(counterexample_certificate(&rat_int(2), 1).is_err());
    }

    #[test]
    fn scan_contains_hand_wall() {
        let v = pc((1, 1), (0, 1), (0, 1), (0, 1));
        let walls = destabilizer_scan(&v, &CharacterBox::integers(-2, 2)).unwrap();
        assert!(walls
            .iter()
            .any(|w| w.center_beta == QuadraticNumber::one() && w.radius == QuadraticNumber::one()));
        // proportional candidates never contribute
        assert!(walls.iter().all(|w| {
            let (a, b) = (&w.pair.0, &w.pair.1);
            wall_between(a, b).unwrap() != WallLocus::EverywhereEqual
        }));
        let empty = destabilizer_scan(&v, &CharacterBox::integers(1, 0)).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn scan_walls_satisfy_equality() {
        let v = pc((1, 1), (1, 1), (-1, 2), (0, 1));
        let walls = destabilizer_scan(&v, &CharacterBox::integers(-2, 2)).unwrap();
        assert!(!walls.is_empty());
        for wall in &walls {
            for (beta, alpha) in wall.sample_points(8) {
                assert!(nu_cross_equal(&wall.pair.0, &wall.pair.1, &alpha, &beta).unwrap());
            }
        }
    }

    #[test]
    fn bmt_scan_line_bundles_saturated() {
        let model = ThreefoldModel::p2_elliptic_curve();
        let h = model.default_polarization();
        let chars = line_bundle_characters(&model, &h, -2..=2).unwrap();
        let grid = TiltGrid {
            alphas: vec![rat(1, 2)],
            betas: vec![rat_int(-3), rat(-1, 2), rat_int(0), rat(1, 2), rat_int(3)],
        };
        let report = bmt_scan(&chars, &grid).unwrap();
        assert!(!report.entries.is_empty());
        for entry in &report.entries {
            assert_eq!(
                entry.classification,
                Some(BmtClassification::Saturated),
                "at beta {} for {:?}",
                entry.beta,
                entry.character
            );
        }
    }

    #[test]
    fn bmt_scan_plane_sheaf_violation() {
        let od = pc((0, 1), (9, 4), (9, 4), (3, 2));
        let grid = TiltGrid { alphas: vec![rat(1, 2), rat_int(2)], betas: vec![rat_int(1)] };
        let report = bmt_scan(&[od], &grid).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert_eq!(
            report.entries[0].classification,
            Some(BmtClassification::ViolatedAtCharacterLevel)
        );
        assert_eq!(report.entries[1].classification, Some(BmtClassification::Satisfied));
        let empty = bmt_scan(&[], &grid).unwrap();
        assert!(empty.entries.is_empty());
    }
}
