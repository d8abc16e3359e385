//! Polynomial maps of bounded degree.
//!
//! A map is stored as one Mahler table per value of the domain's finite part:
//! `f(t, x) = Σ_j α_{t,j} Π C(xᵢ, jᵢ)` with `x` the free coordinates. A purely
//! finite domain therefore carries a plain value table, and a purely free one
//! a single Mahler table. Because the binomials form a basis of integer-valued
//! polynomials, the true degree in the free directions is read off the support.

mod domain;
mod ops;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::algebra::{CommMonoid, Coords, FgAbelianGroup, MonoidElement};
use crate::binomial::{binomial, box_below, cube, multi_indices_upto, sign};
use crate::error::{Error, Result};

pub use domain::{Domain, Point};
pub use ops::{closed_form_extension, compose, extend_over_group_completion, extension_via_quotient, factor_through_quotient, project, Extension};

/// Mahler coefficients keyed by multi-index.
pub type Mahler = BTreeMap<Vec<usize>, Coords>;

/// A degree bound; `ZeroMap` is the bound `−1` satisfied only by the zero map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DegreeBound {
    ZeroMap,
    AtMost(usize),
}

impl DegreeBound {
    pub fn from_i64(n: i64) -> Result<Self> {
        match n {
            -1 => Ok(DegreeBound::ZeroMap),
            n if n >= 0 => Ok(DegreeBound::AtMost(n as usize)),
            _ => Err(Error::Parse(format!("degree {} is below -1", n))),
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            DegreeBound::ZeroMap => -1,
            DegreeBound::AtMost(n) => n as i64,
        }
    }

    /// The bound after one difference.
    pub fn decrement(self) -> Self {
        match self {
            DegreeBound::ZeroMap | DegreeBound::AtMost(0) => DegreeBound::ZeroMap,
            DegreeBound::AtMost(n) => DegreeBound::AtMost(n - 1),
        }
    }

    /// Bound for a composite `g ∘ f`.
    pub fn compose(outer: Self, inner: Self) -> Self {
        match (outer, inner) {
            (DegreeBound::ZeroMap, _) => DegreeBound::ZeroMap,
            (DegreeBound::AtMost(0), _) => DegreeBound::AtMost(0),
            (DegreeBound::AtMost(_), DegreeBound::ZeroMap) => DegreeBound::AtMost(0),
            (DegreeBound::AtMost(a), DegreeBound::AtMost(b)) => DegreeBound::AtMost(a * b),
        }
    }

    /// Bound for a pointwise product.
    pub fn product(a: Self, b: Self) -> Self {
        match (a, b) {
            (DegreeBound::AtMost(x), DegreeBound::AtMost(y)) => DegreeBound::AtMost(x + y),
            _ => DegreeBound::ZeroMap,
        }
    }

    /// Number of difference operators that must kill a map of this degree.
    pub fn order(self) -> usize {
        (self.as_i64() + 1) as usize
    }
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i64())
    }
}

/// A nonvanishing iterated difference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeWitness {
    pub bound: DegreeBound,
    pub directions: Vec<String>,
    pub at: String,
    pub value: Coords,
}

impl fmt::Display for DegreeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.value.iter().map(|x| x.to_string()).collect();
        if self.directions.is_empty() {
            write!(f, "f{} = ({}) is not zero", self.at, v.join(","))
        } else {
            write!(
                f,
                "D[{}] f{} = ({}) is not zero, so degree > {}",
                self.directions.join(" "),
                self.at,
                v.join(","),
                self.bound
            )
        }
    }
}

/// A translation the map fails to be invariant under.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantWitness {
    pub at: String,
    pub relation: String,
    pub shifted: Coords,
    pub original: Coords,
}

impl fmt::Display for InvariantWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |c: &Coords| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "f({} + {}) = ({}) but f{} = ({})", self.at, self.relation, s(&self.shifted), self.at, s(&self.original))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateMethod {
    /// Every generator tuple and every point of a finite domain was checked.
    Exhaustive,
    /// Mahler support lies in degree `≤ n` on a free domain.
    MahlerSupport,
    /// Box checks whose side reaches the Mahler degree of every slice.
    Grid { side: usize },
    /// Box checks only; evidence, not proof.
    Box { side: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCertificate {
    pub bound: DegreeBound,
    pub method: CertificateMethod,
    /// Number of iterated differences evaluated.
    pub checks: usize,
}

impl DegreeCertificate {
    pub fn is_genuine(&self) -> bool {
        !matches!(self.method, CertificateMethod::Box { .. })
    }
}

/// A polynomial map from a monoid or group into a finitely generated abelian
/// group, with a declared degree bound that is either certified or not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMap {
    domain: Domain,
    codomain: FgAbelianGroup,
    degree: DegreeBound,
    certified: bool,
    slices: Vec<Mahler>,
}

impl PolyMap {
    /// General constructor: one Mahler table per finite-part value.
    pub fn from_slices(domain: Domain, codomain: FgAbelianGroup, degree: DegreeBound, slices: Vec<Mahler>) -> Result<Self> {
        let count = domain.finite_count()?;
        if slices.len() != count {
            return Err(Error::Dimension(format!("{} slices for a finite part of size {}", slices.len(), count)));
        }
        let k = domain.free_rank();
        let mut clean = Vec::with_capacity(count);
        for s in slices {
            let mut out = Mahler::new();
            for (j, c) in s {
                if j.len() != k {
                    return Err(Error::Dimension(format!("multi-index of length {} on free rank {}", j.len(), k)));
                }
                let c = codomain.normalize(c)?;
                if !codomain.is_zero(&c) {
                    out.insert(j, c);
                }
            }
            clean.push(out);
        }
        Ok(PolyMap { domain, codomain, degree, certified: false, slices: clean })
    }

    /// A map on a free domain from its Mahler coefficients.
    pub fn from_mahler(domain: Domain, codomain: FgAbelianGroup, degree: DegreeBound, mahler: Mahler) -> Result<Self> {
        Self::from_slices(domain, codomain, degree, vec![mahler])
    }

    /// A map on `ℕᵏ` or `Zᵏ` into `Z` from integer Mahler coefficients.
    pub fn integer_mahler(domain: Domain, degree: DegreeBound, coeffs: &[(Vec<usize>, i64)]) -> Result<Self> {
        let m = coeffs.iter().map(|(j, c)| (j.clone(), vec![BigInt::from(*c)])).collect();
        Self::from_mahler(domain, FgAbelianGroup::integers(), degree, m)
    }

    /// A map on a finite domain from its table of values.
    pub fn from_table(domain: Domain, codomain: FgAbelianGroup, degree: DegreeBound, values: Vec<Coords>) -> Result<Self> {
        if domain.free_rank() != 0 {
            return Err(Error::Unsupported("value tables need a finite domain".into()));
        }
        let slices = values.into_iter().map(|v| Mahler::from([(Vec::new(), v)])).collect();
        Self::from_slices(domain, codomain, degree, slices)
    }

    /// Fits a map from its values on `finite part × {x ≥ 0 : |x| ≤ side}`.
    ///
    /// The result reproduces `f` exactly whenever `f` has degree at most `side`
    /// in the free directions.
    pub fn fit(
        domain: Domain,
        codomain: FgAbelianGroup,
        degree: DegreeBound,
        side: usize,
        f: &dyn Fn(&Point) -> Result<Coords>,
    ) -> Result<Self> {
        let k = domain.free_rank();
        let grid = multi_indices_upto(k, side);
        let mut slices = Vec::new();
        for t in 0..domain.finite_count()? {
            let mut values: HashMap<&[usize], Coords> = HashMap::with_capacity(grid.len());
            for l in &grid {
                let p = Point { finite: t, free: l.iter().map(|&x| BigInt::from(x)).collect() };
                values.insert(l, codomain.normalize(f(&p)?)?);
            }
            let mut slice = Mahler::new();
            for j in &grid {
                let mut acc = codomain.zero();
                for l in box_below(j) {
                    let w: BigInt = sign(j.iter().zip(&l).map(|(a, b)| a - b).sum())
                        * j.iter().zip(&l).map(|(&a, &b)| binomial(&BigInt::from(a), b)).product::<BigInt>();
                    acc = codomain.add(&acc, &codomain.scale(&w, &values[l.as_slice()])?)?;
                }
                slice.insert(j.clone(), acc);
            }
            slices.push(slice);
        }
        Self::from_slices(domain, codomain, degree, slices)
    }

    pub fn constant(domain: Domain, codomain: FgAbelianGroup, value: Coords) -> Result<Self> {
        let k = domain.free_rank();
        let count = domain.finite_count()?;
        let slices = vec![Mahler::from([(vec![0; k], value)]); count];
        let mut f = Self::from_slices(domain, codomain, DegreeBound::AtMost(0), slices)?;
        f.certified = true;
        Ok(f)
    }

    pub fn zero(domain: Domain, codomain: FgAbelianGroup) -> Result<Self> {
        let count = domain.finite_count()?;
        let mut f = Self::from_slices(domain, codomain, DegreeBound::ZeroMap, vec![Mahler::new(); count])?;
        f.certified = true;
        Ok(f)
    }

    /// The identity of a group, as a degree-one map into itself.
    pub fn identity(group: FgAbelianGroup) -> Result<Self> {
        let domain = Domain::Group(group.clone());
        let d = domain.clone();
        let mut f = Self::fit(domain, group, DegreeBound::AtMost(1), 1, &|p| d.coords_of(p))?;
        f.certified = true;
        Ok(f)
    }

    /// `x ↦ C(x, i)` on `Z`, certified of degree `i`.
    pub fn binomial_map(domain: Domain, i: usize) -> Result<Self> {
        let k = domain.free_rank();
        if k != 1 || domain.finite_count()? != 1 {
            return Err(Error::Unsupported("binomial maps live on N or Z".into()));
        }
        let mut f = Self::integer_mahler(domain, DegreeBound::AtMost(i), &[(vec![i], 1)])?;
        f.certified = true;
        Ok(f)
    }

    pub fn domain(&self) -> &Domain {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbelianGroup {
        &self.codomain
    }

    pub fn degree(&self) -> DegreeBound {
        self.degree
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    pub fn slices(&self) -> &[Mahler] {
        &self.slices
    }

    /// The single Mahler table of a map on a free domain.
    pub fn mahler(&self) -> Option<&Mahler> {
        if self.slices.len() == 1 {
            Some(&self.slices[0])
        } else {
            None
        }
    }

    /// Largest total degree in the stored support (`ZeroMap` if none).
    pub fn mahler_degree(&self) -> DegreeBound {
        self.slices
            .iter()
            .flat_map(|s| s.keys())
            .map(|j| j.iter().sum::<usize>())
            .max()
            .map_or(DegreeBound::ZeroMap, DegreeBound::AtMost)
    }

    fn mahler_side(&self) -> usize {
        self.mahler_degree().as_i64().max(0) as usize
    }

    fn is_purely_free(&self) -> bool {
        self.slices.len() == 1 && !matches!(self.domain, Domain::Monoid(CommMonoid::Finite(_)))
    }

    /// Replaces the declared bound by the exact degree on a free domain.
    pub fn with_exact_degree(mut self) -> Self {
        if self.is_purely_free() {
            self.degree = self.mahler_degree();
            self.certified = true;
        }
        self
    }

    /// Marks the declared bound as certified after a genuine check.
    pub fn certify(mut self) -> Result<Self> {
        let side = self.mahler_side().max(self.degree.order());
        let cert = self.verify_degree(self.degree, side)?;
        debug_assert!(cert.is_genuine());
        self.certified = true;
        Ok(self)
    }

    pub(crate) fn assume_certified(mut self) -> Self {
        self.certified = true;
        self
    }

    pub fn evaluate(&self, p: &Point) -> Result<Coords> {
        self.domain.check(p)?;
        let mut acc = self.codomain.zero();
        for (j, c) in &self.slices[p.finite] {
            let w: BigInt = p.free.iter().zip(j).map(|(x, &ji)| binomial(x, ji)).product();
            if !w.is_zero() {
                for (a, ci) in acc.iter_mut().zip(c) {
                    *a += &w * ci;
                }
            }
        }
        self.codomain.normalize(acc)
    }

    pub fn evaluate_element(&self, e: &MonoidElement) -> Result<Coords> {
        self.evaluate(&self.domain.point_of_element(e)?)
    }

    /// Evaluation at a point of `ℕᵏ` or `Zᵏ` given by machine integers.
    pub fn evaluate_i64(&self, x: &[i64]) -> Result<Coords> {
        self.evaluate(&Point::from_i64(x))
    }

    /// Scalar value of a `Z`-valued map.
    pub fn evaluate_int(&self, x: &[i64]) -> Result<BigInt> {
        let v = self.evaluate_i64(x)?;
        if v.len() != 1 {
            return Err(Error::Dimension("scalar evaluation of a vector-valued map".into()));
        }
        Ok(v.into_iter().next().unwrap())
    }

    /// `D_y f : x ↦ f(x + y) − f(x)`.
    pub fn cross_difference(&self, y: &Point) -> Result<PolyMap> {
        self.domain.check(y)?;
        let mut slices = Vec::with_capacity(self.slices.len());
        for t in 0..self.slices.len() {
            let moved = self.domain.add(&Point { finite: t, free: vec![BigInt::zero(); y.free.len()] }, &Point { finite: y.finite, free: vec![BigInt::zero(); y.free.len()] })?;
            let mut s = shift_mahler(&self.slices[moved.finite], &y.free);
            for (j, c) in &self.slices[t] {
                let e = s.entry(j.clone()).or_insert_with(|| self.codomain.zero());
                *e = e.iter().zip(c).map(|(a, b)| a - b).collect();
            }
            slices.push(s);
        }
        let mut out = PolyMap::from_slices(self.domain.clone(), self.codomain.clone(), self.degree.decrement(), slices)?;
        out.certified = self.certified;
        Ok(out)
    }

    /// `D_{y₀}⋯D_{y_r} f(x)` for a multiset of directions given with multiplicities.
    pub fn iterated_difference(&self, directions: &[(Point, usize)], x: &Point) -> Result<Coords> {
        // multiples[g][m] = m·y_g
        let mut multiples: Vec<Vec<Point>> = Vec::with_capacity(directions.len());
        for (y, c) in directions {
            let mut row = vec![self.domain.zero()];
            for _ in 0..*c {
                let next = self.domain.add(row.last().unwrap(), y)?;
                row.push(next);
            }
            multiples.push(row);
        }
        let counts: Vec<usize> = directions.iter().map(|(_, c)| *c).collect();
        let mut acc = self.codomain.zero();
        for l in box_below(&counts) {
            let mut p = x.clone();
            let mut w = BigInt::one();
            for (g, (&lg, &cg)) in l.iter().zip(&counts).enumerate() {
                p = self.domain.add(&p, &multiples[g][lg])?;
                w *= sign(cg - lg) * binomial(&BigInt::from(cg), lg);
            }
            let v = self.evaluate(&p)?;
            for (a, vi) in acc.iter_mut().zip(&v) {
                *a += &w * vi;
            }
        }
        self.codomain.normalize(acc)
    }

    /// Checks that all `(n+1)`-fold differences along generators vanish.
    ///
    /// Finite parts are covered exhaustively and free coordinates over
    /// `[0, side]ᵏ`. The certificate is genuine when the domain is finite, when
    /// the Mahler support of a free domain already lies in degree `≤ n`, or when
    /// `side` reaches the Mahler degree of every slice: a polynomial of degree
    /// `≤ D` vanishing on `{x ≥ 0 : |x| ≤ D}` vanishes identically.
    pub fn verify_degree(&self, bound: DegreeBound, side: usize) -> Result<DegreeCertificate> {
        let k = self.domain.free_rank();
        let full_side = self.mahler_side();
        if self.is_purely_free() {
            let too_high = self.slices[0].keys().any(|j| (j.iter().sum::<usize>() as i64) > bound.as_i64());
            if too_high {
                // search where a witness is guaranteed to exist
                self.search_differences(bound, side.max(full_side))?;
                unreachable!("a Mahler coefficient above the bound always yields a witness");
            }
        }
        let checks = self.search_differences(bound, side)?;
        let method = if k == 0 {
            CertificateMethod::Exhaustive
        } else if self.is_purely_free() {
            CertificateMethod::MahlerSupport
        } else if side >= full_side {
            CertificateMethod::Grid { side }
        } else {
            CertificateMethod::Box { side }
        };
        let _ = k;
        Ok(DegreeCertificate { bound, method, checks })
    }

    fn search_differences(&self, bound: DegreeBound, side: usize) -> Result<usize> {
        let k = self.domain.free_rank();
        let gens = self.domain.generators();
        let order = bound.order();
        let points = cube(k, 0, side as i64);
        let mut checks = 0usize;
        let combos = multiplicity_vectors(gens.len(), order);
        for counts in &combos {
            let dirs: Vec<(Point, usize)> =
                gens.iter().zip(counts).filter(|(_, &c)| c > 0).map(|(g, &c)| (g.clone(), c)).collect();
            for t in 0..self.domain.finite_count()? {
                for x in &points {
                    let p = Point { finite: t, free: x.iter().map(|&v| BigInt::from(v)).collect() };
                    let v = self.iterated_difference(&dirs, &p)?;
                    checks += 1;
                    if !self.codomain.is_zero(&v) {
                        let mut directions = Vec::new();
                        for (g, c) in &dirs {
                            for _ in 0..*c {
                                directions.push(self.domain.show(g));
                            }
                        }
                        let w = DegreeWitness { bound, directions, at: format!("({})", self.domain.show(&p)), value: v };
                        return Err(Error::DegreeCounterexample(Box::new(w)));
                    }
                }
            }
        }
        Ok(checks)
    }

    fn check_compatible(&self, other: &PolyMap) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::IncompatibleDomains(format!("{} vs {}", self.domain, other.domain)));
        }
        if self.codomain != other.codomain {
            return Err(Error::IncompatibleDomains(format!("codomains {} vs {}", self.codomain, other.codomain)));
        }
        Ok(())
    }

    fn combine(&self, other: &PolyMap, sign: i64) -> Result<PolyMap> {
        self.check_compatible(other)?;
        let s = BigInt::from(sign);
        let slices = self
            .slices
            .iter()
            .zip(&other.slices)
            .map(|(a, b)| {
                let mut out = a.clone();
                for (j, c) in b {
                    let e = out.entry(j.clone()).or_insert_with(|| self.codomain.zero());
                    *e = e.iter().zip(c).map(|(x, y)| x + &s * y).collect();
                }
                out
            })
            .collect();
        let mut f = PolyMap::from_slices(self.domain.clone(), self.codomain.clone(), self.degree.max(other.degree), slices)?;
        f.certified = self.certified && other.certified;
        Ok(f)
    }

    pub fn add(&self, other: &PolyMap) -> Result<PolyMap> {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &PolyMap) -> Result<PolyMap> {
        self.combine(other, -1)
    }

    pub fn scale(&self, c: &BigInt) -> Result<PolyMap> {
        let slices = self
            .slices
            .iter()
            .map(|s| s.iter().map(|(j, v)| (j.clone(), v.iter().map(|x| x * c).collect())).collect())
            .collect();
        let mut f = PolyMap::from_slices(self.domain.clone(), self.codomain.clone(), self.degree, slices)?;
        f.certified = self.certified;
        Ok(f)
    }

    /// Pointwise product of maps into a cyclic group (`Z` or `Z/d`).
    pub fn mul(&self, other: &PolyMap) -> Result<PolyMap> {
        self.check_compatible(other)?;
        if self.codomain.coord_len() != 1 {
            return Err(Error::Unsupported("pointwise products need a cyclic codomain".into()));
        }
        let side = self.mahler_side() + other.mahler_side();
        let (a, b) = (self, other);
        let cod = self.codomain.clone();
        let mut f = PolyMap::fit(self.domain.clone(), cod.clone(), DegreeBound::product(a.degree, b.degree), side, &|p| {
            Ok(vec![&a.evaluate(p)?[0] * &b.evaluate(p)?[0]])
        })?;
        f.certified = a.certified && b.certified;
        Ok(f)
    }

    /// `k`-fold pointwise power.
    pub fn pow(&self, k: usize) -> Result<PolyMap> {
        let mut acc = PolyMap::constant(self.domain.clone(), self.codomain.clone(), vec![BigInt::one()])?;
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// `f / d` for a `Z`-valued map all of whose values are divisible by `d`.
    ///
    /// Values are divisible exactly when the Mahler coefficients are, and the
    /// first offending coefficient `α_j` (in degree order) gives
    /// `f(j) ≡ α_j (mod d)`, which is reported.
    pub fn div_exact(&self, d: &BigInt) -> Result<PolyMap> {
        if self.codomain != FgAbelianGroup::integers() {
            return Err(Error::Unsupported("exact division needs integer values".into()));
        }
        if d.is_zero() {
            return Err(Error::NotDivisible("division by zero".into()));
        }
        let mut slices = Vec::with_capacity(self.slices.len());
        for (t, s) in self.slices.iter().enumerate() {
            let mut keys: Vec<&Vec<usize>> = s.keys().collect();
            keys.sort_by_key(|j| (j.iter().sum::<usize>(), (*j).clone()));
            for j in keys {
                if !s[j][0].is_multiple_of(d) {
                    let p = Point { finite: t, free: j.iter().map(|&x| BigInt::from(x)).collect() };
                    let v = self.evaluate(&p)?;
                    return Err(Error::NotDivisible(format!("f{} = {} is not divisible by {}", self.domain.show(&p), v[0], d)));
                }
            }
            slices.push(s.iter().map(|(j, c)| (j.clone(), vec![&c[0] / d])).collect());
        }
        let mut f = PolyMap::from_slices(self.domain.clone(), self.codomain.clone(), self.degree, slices)?;
        f.certified = self.certified;
        Ok(f)
    }

    /// Pointwise equality, decided on the grid that determines both maps.
    pub fn agrees_with(&self, other: &PolyMap) -> Result<bool> {
        let diff = self.sub(other)?;
        Ok(diff.slices.iter().all(|s| s.is_empty()))
    }

    /// Whether the map is identically zero.
    pub fn is_zero(&self) -> bool {
        self.slices.iter().all(|s| s.is_empty())
    }
}

/// `x ↦ f(x + c)` on one Mahler table, via `C(x+c, j) = Σ_l C(c, j−l) C(x, l)`.
fn shift_mahler(s: &Mahler, c: &[BigInt]) -> Mahler {
    let mut out = Mahler::new();
    for (j, v) in s {
        for l in box_below(j) {
            let w: BigInt = c.iter().zip(j.iter().zip(&l)).map(|(ci, (&a, &b))| binomial(ci, a - b)).product();
            if w.is_zero() {
                continue;
            }
            let e = out.entry(l).or_insert_with(|| vec![BigInt::zero(); v.len()]);
            for (x, y) in e.iter_mut().zip(v) {
                *x += &w * y;
            }
        }
    }
    out
}

/// Vectors of `n` nonnegative integers summing to `total`.
fn multiplicity_vectors(n: usize, total: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    crate::binomial::multi_indices_exact(n, total)
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.certified { "certified" } else { "unverified" };
        writeln!(f, "{} -> {}, degree <= {} ({})", self.domain, self.codomain, self.degree, status)?;
        for (t, s) in self.slices.iter().enumerate() {
            for (j, c) in s {
                let idx: Vec<String> = j.iter().map(|x| x.to_string()).collect();
                let v: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                if self.slices.len() > 1 {
                    write!(f, "  [{}] ", t)?;
                } else {
                    write!(f, "  ")?;
                }
                writeln!(f, "C(x;{}) * ({})", idx.join(","), v.join(","))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2() -> PolyMap {
        PolyMap::binomial_map(Domain::naturals(), 2).unwrap()
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn difference_of_binomial_is_identity() {
        let d = binom2().cross_difference(&Point::from_i64(&[1])).unwrap();
        for x in 0..=10 {
            assert_eq!(d.evaluate_int(&[x]).unwrap(), int(x));
        }
        assert_eq!(d.degree(), DegreeBound::AtMost(1));
    }

    #[test]
    fn difference_of_constant_vanishes() {
        let c = PolyMap::constant(Domain::naturals(), FgAbelianGroup::integers(), vec![int(7)]).unwrap();
        let d = c.cross_difference(&Point::from_i64(&[3])).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.degree(), DegreeBound::ZeroMap);
    }

    #[test]
    fn difference_of_linear_on_integers_is_constant() {
        let id = PolyMap::identity(FgAbelianGroup::integers()).unwrap();
        let d = id.cross_difference(&Point::from_i64(&[3])).unwrap();
        for x in -5..=5 {
            assert_eq!(d.evaluate_int(&[x]).unwrap(), int(3));
        }
    }

    #[test]
    fn binomial_degree_checks() {
        let f = binom2();
        assert!(f.verify_degree(DegreeBound::AtMost(2), 4).unwrap().is_genuine());
        match f.verify_degree(DegreeBound::AtMost(1), 4) {
            Err(Error::DegreeCounterexample(w)) => assert_eq!(w.value, vec![int(1)]),
            other => panic!("expected counterexample, got {:?}", other),
        }
    }

    #[test]
    fn exponential_is_not_polynomial() {
        let f = PolyMap::fit(Domain::naturals(), FgAbelianGroup::integers(), DegreeBound::AtMost(3), 8, &|p| {
            Ok(vec![BigInt::from(2).pow(num_traits::ToPrimitive::to_u32(&p.free[0]).unwrap())])
        })
        .unwrap();
        // oracle: D₁⁴ 2ˣ = 2ˣ directly
        let direct: i64 = (0..=4).map(|l| (if (4 - l) % 2 == 0 { 1 } else { -1 }) * [1, 4, 6, 4, 1][l] * (1i64 << l)).sum();
        assert_eq!(direct, 1);
        assert!(matches!(f.verify_degree(DegreeBound::AtMost(3), 8), Err(Error::DegreeCounterexample(_))));
    }

    #[test]
    fn finite_table_degree() {
        // x ↦ x mod 2 from Z/4 to Z/2 is additive
        let m = CommMonoid::cyclic_group(4).unwrap();
        let values = (0..4).map(|i| vec![int(i % 2)]).collect();
        let f = PolyMap::from_table(Domain::Monoid(m), FgAbelianGroup::cyclic(2), DegreeBound::AtMost(1), values).unwrap();
        let c = f.verify_degree(DegreeBound::AtMost(1), 0).unwrap();
        assert_eq!(c.method, CertificateMethod::Exhaustive);
        assert!(f.verify_degree(DegreeBound::AtMost(0), 0).is_err());
    }

    #[test]
    fn mixed_domain_difference_and_degree() {
        // f(t, x) = x·[t = 1] on Z/2 ⊕ Z: iterated torsion differences give (−2)ʳ·x up to sign
        let g = FgAbelianGroup::from_invariants(1, vec![int(2)]).unwrap();
        let d = Domain::Group(g);
        let f = PolyMap::from_slices(
            d.clone(),
            FgAbelianGroup::integers(),
            DegreeBound::AtMost(2),
            vec![Mahler::new(), Mahler::from([(vec![1], vec![int(1)])])],
        )
        .unwrap();
        assert!(f.verify_degree(DegreeBound::AtMost(2), 2).is_err());
        // f(t, x) = x is linear
        let lin = PolyMap::from_slices(
            d,
            FgAbelianGroup::integers(),
            DegreeBound::AtMost(1),
            vec![Mahler::from([(vec![1], vec![int(1)])]); 2],
        )
        .unwrap();
        let c = lin.verify_degree(DegreeBound::AtMost(1), 1).unwrap();
        assert_eq!(c.method, CertificateMethod::Grid { side: 1 });
    }

    #[test]
    fn div_exact_reports_offender() {
        let sq = PolyMap::identity(FgAbelianGroup::integers()).unwrap().pow(2).unwrap();
        let half = sq.sub(&PolyMap::identity(FgAbelianGroup::integers()).unwrap()).unwrap().div_exact(&int(2)).unwrap();
        for x in -6..=6 {
            assert_eq!(half.evaluate_int(&[x]).unwrap(), int((x * x - x) / 2));
        }
        assert!(matches!(sq.div_exact(&int(2)), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn degree_bound_arithmetic() {
        assert_eq!(DegreeBound::compose(DegreeBound::AtMost(2), DegreeBound::AtMost(3)), DegreeBound::AtMost(6));
        assert_eq!(DegreeBound::compose(DegreeBound::AtMost(0), DegreeBound::AtMost(3)), DegreeBound::AtMost(0));
        assert_eq!(DegreeBound::AtMost(0).decrement(), DegreeBound::ZeroMap);
        assert_eq!(DegreeBound::from_i64(-1).unwrap(), DegreeBound::ZeroMap);
        assert!(DegreeBound::from_i64(-2).is_err());
    }
}
