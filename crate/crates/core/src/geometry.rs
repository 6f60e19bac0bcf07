//! Intersection-ring models of the four threefolds.
//!
//! Each model fixes a small divisor basis, the symmetric trilinear form on
//! it, cone data, and (for the three product models) the Künneth bookkeeping
//! needed for cohomological pullback actions and Riemann-Roch:
//!
//! * `P1xS(d)` — a product of a line with an abelian surface, tracked on the
//!   polarization slice `{h, l}` with `h^2 = 0`, `l^3 = 0`, `h.l^2 = 2d`;
//! * `P2xC` — plane times elliptic curve, basis `{h, f}`, `h^2.f = 1`;
//! * `P1xP1xC` — basis `{h1, h2, f}`, `h1.h2.f = 1`;
//! * `CY3WithPlane(s)` — a Calabi-Yau threefold containing a plane `D`,
//!   basis `{L, D}` with `L^3 = s`, `L^2.D = L.D^2 = 0`, `D^3 = 9`.
//!
//! On the Calabi-Yau model the nef cone is not modeled: ampleness is an
//! axiom for the designated family `m*L - D/2` (integer `m >= 2`) and every
//! other class is rejected as undecidable. Its effective cone is taken to be
//! spanned by `L` and `D`. No Todd class is modeled there, so Euler
//! characteristics on it are only available as differences along equal
//! low-degree character data.

use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::scalar::{format_rational, rat, rat_int, Rational};
use crate::{Error, Result};

/// A divisor class as rational coordinates in a model's generator basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    pub coeffs: Vec<Rational>,
}

impl DivisorClass {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        DivisorClass { coeffs }
    }

    pub fn zero(rank: usize) -> Self {
        DivisorClass { coeffs: vec![Rational::zero(); rank] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        DivisorClass::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        DivisorClass::new(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Self {
        DivisorClass::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        DivisorClass::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }
}

/// Graded Chern data of a complex: rank, first Chern class, the pairing
/// values of `ch2` against each basis divisor, and the degree-six number.
///
/// `ch2` is stored as the functional `g -> g.ch2` on the divisor basis, not
/// as coordinates in an `H^4` basis; every formula downstream consumes only
/// such pairings, and the product models can convert back and forth because
/// their pairing matrices are invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohVector {
    pub ch0: Rational,
    pub ch1: DivisorClass,
    pub ch2: Vec<Rational>,
    pub ch3: Rational,
}

impl CohVector {
    pub fn zero(rank: usize) -> Self {
        CohVector {
            ch0: Rational::zero(),
            ch1: DivisorClass::zero(rank),
            ch2: vec![Rational::zero(); rank],
            ch3: Rational::zero(),
        }
    }

    pub fn neg(&self) -> Self {
        CohVector {
            ch0: -&self.ch0,
            ch1: self.ch1.neg(),
            ch2: self.ch2.iter().map(|v| -v).collect(),
            ch3: -&self.ch3,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        CohVector {
            ch0: &self.ch0 + &other.ch0,
            ch1: self.ch1.add(&other.ch1),
            ch2: self.ch2.iter().zip(&other.ch2).map(|(a, b)| a + b).collect(),
            ch3: &self.ch3 + &other.ch3,
        }
    }
}

/// Which of the four threefolds a model describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// `P1 x S`, `S` an abelian surface with polarization square `2d`.
    P1xS { d: u64 },
    P2xC,
    P1xP1xC,
    /// Calabi-Yau threefold containing a plane, with `L^3 = s`.
    Cy3WithPlane { s: Rational },
}

impl ModelKind {
    pub fn name(&self) -> &'static str {
        match self {
            ModelKind::P1xS { .. } => "P1xS",
            ModelKind::P2xC => "P2xC",
            ModelKind::P1xP1xC => "P1xP1xC",
            ModelKind::Cy3WithPlane { .. } => "CY3WithPlane",
        }
    }
}

/// The toric factor of a product model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToricFactor {
    P1,
    P2,
    P1xP1,
}

impl ToricFactor {
    pub fn name(&self) -> &'static str {
        match self {
            ToricFactor::P1 => "P1",
            ToricFactor::P2 => "P2",
            ToricFactor::P1xP1 => "P1xP1",
        }
    }

    pub fn dim(&self) -> u32 {
        match self {
            ToricFactor::P1 => 1,
            ToricFactor::P2 | ToricFactor::P1xP1 => 2,
        }
    }

    pub fn picard_rank(&self) -> usize {
        match self {
            ToricFactor::P1 | ToricFactor::P2 => 1,
            ToricFactor::P1xP1 => 2,
        }
    }

    /// Number of torus-invariant divisors in each Picard coordinate's class.
    pub fn rays_per_coordinate(&self) -> &'static [u64] {
        match self {
            ToricFactor::P1 => &[2],
            ToricFactor::P2 => &[3],
            ToricFactor::P1xP1 => &[2, 2],
        }
    }

    pub fn total_rays(&self) -> u64 {
        self.rays_per_coordinate().iter().sum()
    }
}

/// Künneth data for the middle cohomology of a product model: the pairing
/// matrix between divisor generators and an `H^4` basis, together with the
/// exponents by which the pullback along `(toric degree a) x (multiplication
/// by b)` scales each basis element.
#[derive(Clone, Debug)]
struct MiddleCohomology {
    /// `pairing[i][j] = generator_i . basis_j`
    pairing: Vec<Vec<Rational>>,
    pairing_inv: Vec<Vec<Rational>>,
    /// `(ta, tb)`: basis_j scales by `a^ta * b^tb`
    weights: Vec<(u32, u32)>,
}

/// Product-model bookkeeping: which generators come from the toric factor
/// (in Picard-coordinate order) and which from the abelian factor.
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub factor: ToricFactor,
    pub toric_indices: Vec<usize>,
    pub abelian_index: usize,
}

#[derive(Clone, Debug)]
pub struct ThreefoldModel {
    kind: ModelKind,
    names: Vec<&'static str>,
    /// Fully symmetric trilinear form, flat-indexed `(i*n + j)*n + k`.
    triple: Vec<Rational>,
    product: Option<ProductStructure>,
    /// `(ta, tb)` pullback exponents per generator (product models).
    divisor_weights: Vec<(u32, u32)>,
    /// pullback exponents of the top class
    top_weight: (u32, u32),
    middle: Option<MiddleCohomology>,
    /// Todd data: `td1` as a divisor class and `td2` as a pairing functional.
    todd: Option<(DivisorClass, Vec<Rational>)>,
    canonical: DivisorClass,
}

fn invert_matrix(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m.to_vec();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero()).expect("pairing matrix is invertible");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    let t = &a[col][j] * &f;
                    a[r][j] -= t;
                    let t = &inv[col][j] * &f;
                    inv[r][j] -= t;
                }
            }
        }
    }
    inv
}

fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(Rational::zero(), |acc, t| acc + t))
        .collect()
}

impl ThreefoldModel {
    /// `P1 x S` on the polarization slice, `l^2 = 2d` on the abelian surface.
    pub fn p1_abelian_surface(d: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("polarization parameter d must be positive".into()));
        }
        let names = vec!["h", "l"];
        let mut triple = vec![Rational::zero(); 8];
        let two_d = rat_int(2 * d as i64);
        // h.l.l = 2d in every argument order
        for (i, j, k) in [(0, 1, 1), (1, 0, 1), (1, 1, 0)] {
            triple[(i * 2 + j) * 2 + k] = two_d.clone();
        }
        let pairing = vec![
            // rows h, l against basis {h.l, l^2}
            vec![Rational::zero(), two_d.clone()],
            vec![two_d, Rational::zero()],
        ];
        let pairing_inv = invert_matrix(&pairing);
        Ok(ThreefoldModel {
            kind: ModelKind::P1xS { d },
            names,
            triple,
            product: Some(ProductStructure {
                factor: ToricFactor::P1,
                toric_indices: vec![0],
                abelian_index: 1,
            }),
            divisor_weights: vec![(1, 0), (0, 2)],
            top_weight: (1, 4),
            middle: Some(MiddleCohomology { pairing, pairing_inv, weights: vec![(1, 2), (0, 4)] }),
            todd: Some((
                DivisorClass::new(vec![Rational::one(), Rational::zero()]),
                vec![Rational::zero(), Rational::zero()],
            )),
            canonical: DivisorClass::new(vec![rat_int(-2), Rational::zero()]),
        })
    }

    pub fn p2_elliptic_curve() -> Self {
        let names = vec!["h", "f"];
        let mut triple = vec![Rational::zero(); 8];
        for (i, j, k) in [(0, 0, 1), (0, 1, 0), (1, 0, 0)] {
            triple[(i * 2 + j) * 2 + k] = Rational::one();
        }
        let pairing = vec![
            // rows h, f against basis {h^2, h.f}
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ];
        let pairing_inv = invert_matrix(&pairing);
        ThreefoldModel {
            kind: ModelKind::P2xC,
            names,
            triple,
            product: Some(ProductStructure {
                factor: ToricFactor::P2,
                toric_indices: vec![0],
                abelian_index: 1,
            }),
            divisor_weights: vec![(1, 0), (0, 2)],
            top_weight: (2, 2),
            middle: Some(MiddleCohomology { pairing, pairing_inv, weights: vec![(2, 0), (1, 2)] }),
            todd: Some((
                DivisorClass::new(vec![rat(3, 2), Rational::zero()]),
                vec![Rational::zero(), Rational::one()],
            )),
            canonical: DivisorClass::new(vec![rat_int(-3), Rational::zero()]),
        }
    }

    pub fn p1_p1_elliptic_curve() -> Self {
        let names = vec!["h1", "h2", "f"];
        let mut triple = vec![Rational::zero(); 27];
        for perm in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
            triple[(perm.0 * 3 + perm.1) * 3 + perm.2] = Rational::one();
        }
        let pairing = vec![
            // rows h1, h2, f against basis {h1.h2, h1.f, h2.f}
            vec![Rational::zero(), Rational::zero(), Rational::one()],
            vec![Rational::zero(), Rational::one(), Rational::zero()],
            vec![Rational::one(), Rational::zero(), Rational::zero()],
        ];
        let pairing_inv = invert_matrix(&pairing);
        ThreefoldModel {
            kind: ModelKind::P1xP1xC,
            names,
            triple,
            product: Some(ProductStructure {
                factor: ToricFactor::P1xP1,
                toric_indices: vec![0, 1],
                abelian_index: 2,
            }),
            divisor_weights: vec![(1, 0), (1, 0), (0, 2)],
            top_weight: (2, 2),
            middle: Some(MiddleCohomology {
                pairing,
                pairing_inv,
                weights: vec![(2, 0), (1, 2), (1, 2)],
            }),
            todd: Some((
                DivisorClass::new(vec![Rational::one(), Rational::one(), Rational::zero()]),
                vec![Rational::zero(), Rational::zero(), Rational::one()],
            )),
            canonical: DivisorClass::new(vec![rat_int(-2), rat_int(-2), Rational::zero()]),
        }
    }

    /// Calabi-Yau threefold containing a plane `D`, with `L^3 = s`.
    pub fn cy3_with_plane(s: Rational) -> Result<Self> {
        if !s.is_positive() {
            return Err(Error::InvalidParameter("the degree parameter s must be positive".into()));
        }
        let names = vec!["L", "D"];
        let mut triple = vec![Rational::zero(); 8];
        triple[0] = s.clone(); // L^3
        triple[7] = rat_int(9); // D^3
        Ok(ThreefoldModel {
            kind: ModelKind::Cy3WithPlane { s },
            names,
            triple,
            product: None,
            divisor_weights: vec![],
            top_weight: (0, 0),
            middle: None,
            todd: None,
            canonical: DivisorClass::zero(2),
        })
    }

    pub fn from_kind(kind: &ModelKind) -> Result<Self> {
        match kind {
            ModelKind::P1xS { d } => Self::p1_abelian_surface(*d),
            ModelKind::P2xC => Ok(Self::p2_elliptic_curve()),
            ModelKind::P1xP1xC => Ok(Self::p1_p1_elliptic_curve()),
            ModelKind::Cy3WithPlane { s } => Self::cy3_with_plane(s.clone()),
        }
    }

    pub fn kind(&self) -> &ModelKind {
        &self.kind
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[&'static str] {
        &self.names
    }

    pub fn generator(&self, index: usize) -> DivisorClass {
        let mut d = DivisorClass::zero(self.rank());
        d.coeffs[index] = Rational::one();
        d
    }

    pub fn generator_by_name(&self, name: &str) -> Option<DivisorClass> {
        self.names.iter().position(|n| *n == name).map(|i| self.generator(i))
    }

    pub fn product_structure(&self) -> Option<&ProductStructure> {
        self.product.as_ref()
    }

    pub fn is_product(&self) -> bool {
        self.product.is_some()
    }

    fn check_rank(&self, d: &DivisorClass) -> Result<()> {
        if d.coeffs.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: d.coeffs.len() });
        }
        Ok(())
    }

    /// The default polarization: the sum of the generators on product models
    /// and `2L - D/2` on the Calabi-Yau model.
    pub fn default_polarization(&self) -> DivisorClass {
        match self.kind {
            ModelKind::Cy3WithPlane { .. } => DivisorClass::new(vec![rat_int(2), rat(-1, 2)]),
            _ => DivisorClass::new(vec![Rational::one(); self.rank()]),
        }
    }

    /// Symmetric trilinear intersection number of three divisor classes.
    pub fn intersect3(&self, a: &DivisorClass, b: &DivisorClass, c: &DivisorClass) -> Result<Rational> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        self.check_rank(c)?;
        let n = self.rank();
        let mut acc = Rational::zero();
        for i in 0..n {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if b.coeffs[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    let t = &self.triple[(i * n + j) * n + k];
                    if t.is_zero() || c.coeffs[k].is_zero() {
                        continue;
                    }
                    acc += &a.coeffs[i] * &b.coeffs[j] * &c.coeffs[k] * t;
                }
            }
        }
        Ok(acc)
    }

    /// Detects membership of the designated ample family `m*L - D/2`,
    /// integer `m >= 2`, on the Calabi-Yau model.
    fn cy_designated_ample(&self, d: &DivisorClass) -> bool {
        let m = &d.coeffs[0];
        m.denom().is_one() && *m >= rat_int(2) && d.coeffs[1] == rat(-1, 2)
    }

    /// On product models, ample means strictly positive coordinates. On the
    /// Calabi-Yau model only the designated family is decidable.
    pub fn is_ample(&self, d: &DivisorClass) -> Result<bool> {
        self.check_rank(d)?;
        match self.kind {
            ModelKind::Cy3WithPlane { .. } => {
                if self.cy_designated_ample(d) {
                    Ok(true)
                } else {
                    Err(Error::AmplenessUndecidable)
                }
            }
            _ => Ok(d.coeffs.iter().all(|c| c.is_positive())),
        }
    }

    pub fn is_nef(&self, d: &DivisorClass) -> Result<bool> {
        self.check_rank(d)?;
        match self.kind {
            ModelKind::Cy3WithPlane { .. } => {
                Err(Error::UnsupportedModel("nef cone not modeled for the Calabi-Yau kind"))
            }
            _ => Ok(d.coeffs.iter().all(|c| !c.is_negative())),
        }
    }

    /// Effective cone test: non-negative coordinates. On the Calabi-Yau model
    /// the effective cone is taken to be spanned by `L` and `D`.
    pub fn is_effective(&self, d: &DivisorClass) -> Result<bool> {
        self.check_rank(d)?;
        Ok(d.coeffs.iter().all(|c| !c.is_negative()))
    }

    pub fn effective_generators(&self) -> Vec<DivisorClass> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    /// Whether `H.E^2 >= 0` for every effective divisor `E`, decided on the
    /// extreme rays of the effective cone together with their pairwise sums.
    /// The quadratic form `E -> H.E^2` restricted to a two-dimensional face
    /// with non-negative values at the rays can only dip negative inside if
    /// the mixed term does, which the sum of the two rays detects.
    pub fn check_negative_divisor_hypothesis(&self, h: &DivisorClass) -> Result<bool> {
        if !self.is_ample(h)? {
            return Err(Error::NotAmple);
        }
        let gens = self.effective_generators();
        let mut samples: Vec<DivisorClass> = gens.clone();
        for i in 0..gens.len() {
            for j in (i + 1)..gens.len() {
                samples.push(gens[i].add(&gens[j]));
            }
        }
        for e in &samples {
            if self.intersect3(h, e, e)?.is_negative() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Chern character of a line bundle: `(1, D, D^2/2, D^3/6)`, with the
    /// middle term stored as the functional `g -> g.D^2/2`.
    pub fn chern_of_line_bundle(&self, d: &DivisorClass) -> Result<CohVector> {
        self.check_rank(d)?;
        let half = rat(1, 2);
        let ch2 = (0..self.rank())
            .map(|i| self.intersect3(&self.generator(i), d, d).map(|v| v * &half))
            .collect::<Result<Vec<_>>>()?;
        let ch3 = self.intersect3(d, d, d)? * rat(1, 6);
        Ok(CohVector { ch0: Rational::one(), ch1: d.clone(), ch2, ch3 })
    }

    /// Chern character of the structure sheaf of the plane on the Calabi-Yau
    /// model: `1 - exp(-D) = (0, D, -D^2/2, D^3/6)`.
    pub fn structure_sheaf_of_plane(&self) -> Result<CohVector> {
        if !matches!(self.kind, ModelKind::Cy3WithPlane { .. }) {
            return Err(Error::UnsupportedModel("the plane lives on the Calabi-Yau kind"));
        }
        let d = self.generator(1);
        let minus_half = rat(-1, 2);
        let ch2 = (0..self.rank())
            .map(|i| self.intersect3(&self.generator(i), &d, &d).map(|v| v * &minus_half))
            .collect::<Result<Vec<_>>>()?;
        let ch3 = self.intersect3(&d, &d, &d)? * rat(1, 6);
        Ok(CohVector { ch0: Rational::zero(), ch1: d, ch2, ch3 })
    }

    /// Cohomology action of the pullback along toric degree `a` times
    /// multiplication by `b` on the abelian factor. Product models only.
    pub fn frob_action(&self, a: u64, b: u64, v: &CohVector) -> Result<CohVector> {
        let middle = self
            .middle
            .as_ref()
            .ok_or(Error::UnsupportedModel("pullback action needs a product model"))?;
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter("pullback degrees must be positive".into()));
        }
        self.check_rank(&v.ch1)?;
        if v.ch2.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: v.ch2.len() });
        }
        let weight = |ta: u32, tb: u32| {
            rat_int((a as i64).pow(ta)) * rat_int((b as i64).pow(tb))
        };
        let ch1 = DivisorClass::new(
            v.ch1
                .coeffs
                .iter()
                .zip(&self.divisor_weights)
                .map(|(c, (ta, tb))| c * weight(*ta, *tb))
                .collect(),
        );
        // convert the ch2 functional to basis coordinates, scale, convert back
        let coords = mat_vec(&middle.pairing_inv, &v.ch2);
        let scaled: Vec<Rational> = coords
            .iter()
            .zip(&middle.weights)
            .map(|(c, (ta, tb))| c * weight(*ta, *tb))
            .collect();
        let ch2 = mat_vec(&middle.pairing, &scaled);
        let ch3 = &v.ch3 * weight(self.top_weight.0, self.top_weight.1);
        Ok(CohVector { ch0: v.ch0.clone(), ch1, ch2, ch3 })
    }

    /// Riemann-Roch Euler characteristic against the pulled-back Todd class
    /// of the toric factor (the abelian factor contributes nothing).
    pub fn euler_char(&self, v: &CohVector) -> Result<Rational> {
        let (td1, td2) = self.todd.as_ref().ok_or(Error::ToddUnavailable)?;
        self.check_rank(&v.ch1)?;
        let mut chi = v.ch3.clone();
        for (c2, t1) in v.ch2.iter().zip(&td1.coeffs) {
            chi += c2 * t1;
        }
        for (c1, t2) in v.ch1.coeffs.iter().zip(td2) {
            chi += c1 * t2;
        }
        Ok(chi)
    }

    /// Difference of Euler characteristics of two characters with equal rank
    /// and first Chern class. This is the only Riemann-Roch information the
    /// Calabi-Yau model exposes: the unknown Todd pairings cancel.
    pub fn euler_char_difference(&self, v: &CohVector, w: &CohVector) -> Result<Rational> {
        if self.todd.is_some() {
            return Ok(self.euler_char(v)? - self.euler_char(w)?);
        }
        if v.ch0 != w.ch0 || v.ch1 != w.ch1 {
            return Err(Error::Precondition(
                "Euler characteristic differences on this model need equal ch0 and ch1".into(),
            ));
        }
        Ok(&v.ch3 - &w.ch3)
    }

    /// Coefficients of `m -> chi(pullback along (m^2, m) of v)`. Under that
    /// pullback every degree-`2k` class scales by `m^{2k}`, so the polynomial
    /// is even with leading coefficient `ch3(v)` and zero constant term.
    pub fn euler_polynomial(&self, v: &CohVector) -> Result<Polynomial> {
        let (td1, td2) = self.todd.as_ref().ok_or(Error::ToddUnavailable)?;
        self.check_rank(&v.ch1)?;
        let mut deg4 = Rational::zero();
        for (c2, t1) in v.ch2.iter().zip(&td1.coeffs) {
            deg4 += c2 * t1;
        }
        let mut deg2 = Rational::zero();
        for (c1, t2) in v.ch1.coeffs.iter().zip(td2) {
            deg2 += c1 * t2;
        }
        Ok(Polynomial::from_coeffs([(6, v.ch3.clone()), (4, deg4), (2, deg2)]))
    }

    /// Canonical divisor: minus the sum of the pulled-back torus-invariant
    /// divisors on product models, zero on the Calabi-Yau model.
    pub fn canonical_divisor(&self) -> DivisorClass {
        self.canonical.clone()
    }

    /// Parse a divisor either as `name:coeff` pairs (`"h:1,f:-2"`) or as an
    /// algebraic sum (`"h+f"`, `"2L-1/2*D"`).
    pub fn parse_divisor(&self, text: &str) -> Result<DivisorClass> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = |msg: &str| Error::ParseScalar(format!("{msg}: {text}"));
        let mut coeffs = vec![Rational::zero(); self.rank()];
        if t.contains(':') {
            for part in t.split(',') {
                let (name, val) = part.split_once(':').ok_or_else(|| bad("expected name:coeff"))?;
                let idx = self
                    .names
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| bad("unknown generator"))?;
                coeffs[idx] = crate::scalar::parse_rational(val)?;
            }
            return Ok(DivisorClass::new(coeffs));
        }
        // algebraic sum of signed terms
        let mut terms: Vec<(usize, String)> = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > 0 && !t[..i].ends_with('/') && !t[..i].ends_with('*') {
                terms.push((start, t[start..i].to_string()));
                start = i;
            }
        }
        terms.push((start, t[start..].to_string()));
        for (_, term) in terms {
            if term.is_empty() || term == "+" || term == "-" {
                return Err(bad("dangling sign"));
            }
            // longest generator name that terminates the term
            let Some((idx, name)) = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, n)| term.ends_with(**n))
                .max_by_key(|(_, n)| n.len())
                .map(|(i, n)| (i, *n))
            else {
                return Err(bad("term names no generator"));
            };
            let head = &term[..term.len() - name.len()];
            let head = head.strip_suffix('*').unwrap_or(head);
            let coeff = match head {
                "" | "+" => Rational::one(),
                "-" => -Rational::one(),
                other => crate::scalar::parse_rational(other)?,
            };
            coeffs[idx] += coeff;
        }
        Ok(DivisorClass::new(coeffs))
    }

    pub fn format_divisor(&self, d: &DivisorClass) -> String {
        let parts: Vec<String> = d
            .coeffs
            .iter()
            .zip(&self.names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| format!("{n}:{}", format_rational(c)))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(",")
        }
    }
}
