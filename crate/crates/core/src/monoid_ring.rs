//! Monoid rings `R[M]` modulo powers of the augmentation ideal.
//!
//! A map `f: M → A` has degree `≤ n` exactly when its linear extension
//! `Z[M] → A` kills `I^{n+1}`, so `R[M]/I^{n+1}` is the universal target for
//! degree-`n` maps. Every monoid element becomes a unit there because `m − 1`
//! is nilpotent.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{is_prime, CommMonoid, Coords, FgAbelianGroup, MonoidElement};
use crate::binomial::{binomial, multi_indices_upto};
use crate::error::{Error, Result};

/// Coefficients: `Z` or `Z/m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientRing {
    Integers,
    Mod(u64),
}

impl CoefficientRing {
    pub fn modulo(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Ring(format!("modulus must be at least 2, got {}", m)));
        }
        Ok(CoefficientRing::Mod(m))
    }

    pub fn modulus(&self) -> Option<BigInt> {
        match self {
            CoefficientRing::Integers => None,
            CoefficientRing::Mod(m) => Some(BigInt::from(*m)),
        }
    }

    pub fn is_prime_field(&self) -> bool {
        matches!(self, CoefficientRing::Mod(p) if is_prime(*p))
    }

    pub fn reduce(&self, x: BigInt) -> BigInt {
        use num_integer::Integer;
        match self {
            CoefficientRing::Integers => x,
            CoefficientRing::Mod(m) => x.mod_floor(&BigInt::from(*m)),
        }
    }
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => write!(f, "Z"),
            CoefficientRing::Mod(m) => write!(f, "Z/{}", m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Basis {
    /// Monomials `t^j = Π (xᵢ − 1)^{jᵢ}` with `|j| ≤ n`, degree-lex.
    Shifted(Vec<Vec<usize>>),
    /// Ambient basis is the monoid elements; the quotient basis comes from SNF.
    Elements,
}

/// `R[M]/I^{n+1}` with an explicit additive basis and structure constants.
///
/// Elements are coordinate vectors in [`Self::group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidAlgebraQuotient {
    monoid: CommMonoid,
    degree: usize,
    coeffs: CoefficientRing,
    basis: Basis,
    group: FgAbelianGroup,
    labels: Vec<String>,
    /// structure[i][j] = b_i · b_j
    structure: Vec<Vec<Coords>>,
    unit: Coords,
}

pub type QuotientElement = Coords;

/// Builds `R[M]/I^{n+1}`.
///
/// Free monoids are handled symbolically in the shifted variables
/// `tᵢ = xᵢ − 1`, deleting monomials of degree `> n`. For finite monoids
/// `I^{n+1}` is spanned by `g·(m₀−1)⋯(mₙ−1)` with `g` ranging over all
/// elements and `mᵢ` over a generating set; the quotient is read off the Smith
/// form of those relations.
pub fn aug_ideal_power_quotient(monoid: &CommMonoid, n: usize, coeffs: CoefficientRing) -> Result<MonoidAlgebraQuotient> {
    if let CoefficientRing::Mod(m) = coeffs {
        CoefficientRing::modulo(m)?;
    }
    match monoid {
        CommMonoid::Free { rank } => Ok(free_quotient(monoid.clone(), *rank, n, coeffs)),
        CommMonoid::Finite(fm) => {
            let size = fm.size();
            let gens = fm.generating_set();
            let mut rels: Vec<Vec<BigInt>> = Vec::new();
            // products (m₀−1)⋯(mₙ−1) over multisets of generators
            for combo in multisets(gens.len(), n + 1) {
                let mut prod = unit_vec(size, fm.identity());
                for &gi in &combo {
                    let mut shift = vec![BigInt::zero(); size];
                    shift[gens[gi]] += 1;
                    shift[fm.identity()] -= 1;
                    prod = convolve(fm, &prod, &shift);
                }
                for g in 0..size {
                    rels.push(convolve(fm, &unit_vec(size, g), &prod));
                }
            }
            let group = FgAbelianGroup::from_relation_rows(size, rels, coeffs.modulus());
            let lifts: Vec<Vec<BigInt>> = (0..group.coord_len()).map(|i| group.basis_lift(i)).collect();
            let labels = lifts.iter().map(|l| element_label(l)).collect();
            let mut structure = Vec::with_capacity(lifts.len());
            for a in &lifts {
                let mut row = Vec::with_capacity(lifts.len());
                for b in &lifts {
                    row.push(group.reduce(&convolve(fm, a, b))?);
                }
                structure.push(row);
            }
            let unit = group.reduce(&unit_vec(size, fm.identity()))?;
            Ok(MonoidAlgebraQuotient {
                monoid: monoid.clone(),
                degree: n,
                coeffs,
                basis: Basis::Elements,
                group,
                labels,
                structure,
                unit,
            })
        }
    }
}

fn free_quotient(monoid: CommMonoid, k: usize, n: usize, coeffs: CoefficientRing) -> MonoidAlgebraQuotient {
    let monomials = multi_indices_upto(k, n);
    let len = monomials.len();
    let group = match coeffs {
        CoefficientRing::Integers => FgAbelianGroup::free(len),
        CoefficientRing::Mod(m) => FgAbelianGroup::from_invariants(0, vec![BigInt::from(m); len]).expect("equal factors divide"),
    };
    let index_of = |j: &[usize]| monomials.iter().position(|x| x.as_slice() == j);
    let mut structure = vec![vec![group.zero(); len]; len];
    for (a, ja) in monomials.iter().enumerate() {
        for (b, jb) in monomials.iter().enumerate() {
            let sum: Vec<usize> = ja.iter().zip(jb).map(|(x, y)| x + y).collect();
            if let Some(c) = index_of(&sum) {
                structure[a][b][c] = BigInt::one();
            }
        }
    }
    let labels = monomials.iter().map(|j| monomial_label(j)).collect();
    let unit = group.generator(0);
    MonoidAlgebraQuotient {
        monoid,
        degree: n,
        coeffs,
        basis: Basis::Shifted(monomials),
        group,
        labels,
        structure,
        unit,
    }
}

/// `R_n V = F_p[V]/I^{n+1}` for `V = (F_p)ᵏ`.
pub fn passi_functor(k: usize, n: usize, p: u64, cap: usize) -> Result<MonoidAlgebraQuotient> {
    if !is_prime(p) {
        return Err(Error::Ring(format!("{} is not prime", p)));
    }
    let v = CommMonoid::elementary_abelian(p as usize, k, cap)?;
    aug_ideal_power_quotient(&v, n, CoefficientRing::Mod(p))
}

impl MonoidAlgebraQuotient {
    pub fn monoid(&self) -> &CommMonoid {
        &self.monoid
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> CoefficientRing {
        self.coeffs
    }

    /// The additive group; quotient elements are its coordinate vectors.
    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dimension(&self) -> usize {
        self.group.coord_len()
    }

    pub fn structure_constants(&self) -> &[Vec<Coords>] {
        &self.structure
    }

    pub fn one(&self) -> QuotientElement {
        self.unit.clone()
    }

    pub fn zero(&self) -> QuotientElement {
        self.group.zero()
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Result<QuotientElement> {
        self.group.add(a, b)
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Result<QuotientElement> {
        self.group.sub(a, b)
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Result<QuotientElement> {
        let mut acc = vec![BigInt::zero(); self.dimension()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, s) in acc.iter_mut().zip(&self.structure[i][j]) {
                    if !s.is_zero() {
                        *o += &xy * s;
                    }
                }
            }
        }
        self.group.normalize(acc)
    }

    pub fn pow(&self, a: &[BigInt], e: usize) -> Result<QuotientElement> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// The class of a monoid element.
    pub fn class_of(&self, m: &MonoidElement) -> Result<QuotientElement> {
        self.monoid.check(m)?;
        match (&self.basis, m) {
            (Basis::Shifted(monomials), MonoidElement::Free(a)) => {
                // x^a = Π (1 + tᵢ)^{aᵢ}, truncated
                let coords = monomials
                    .iter()
                    .map(|j| j.iter().zip(a).map(|(&ji, &ai)| binomial(&BigInt::from(ai), ji)).product())
                    .collect();
                self.group.normalize(coords)
            }
            (Basis::Elements, MonoidElement::Finite(i)) => {
                let size = self.monoid.size().expect("finite");
                self.group.reduce(&unit_vec(size, *i))
            }
            _ => unreachable!("basis kind follows the monoid variant"),
        }
    }

    /// The inverse of `[m]`, as `Σ_{k=0}^{n} (1 − [m])ᵏ`.
    pub fn invert_monoid_element(&self, m: &MonoidElement) -> Result<QuotientElement> {
        let x = self.class_of(m)?;
        let one_minus = self.sub(&self.one(), &x)?;
        let mut acc = self.zero();
        let mut term = self.one();
        for _ in 0..=self.degree {
            acc = self.add(&acc, &term)?;
            term = self.mul(&term, &one_minus)?;
        }
        Ok(acc)
    }

    /// Sum of monoid coefficients; well defined because `I^{n+1} ⊆ I`.
    pub fn augmentation(&self, a: &[BigInt]) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc += c * self.augmentation_of_basis(i);
            }
        }
        Ok(self.coeffs.reduce(acc))
    }

    fn augmentation_of_basis(&self, i: usize) -> BigInt {
        match &self.basis {
            Basis::Shifted(monomials) => {
                if monomials[i].iter().all(|&x| x == 0) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }
            Basis::Elements => self.group.basis_lift(i).iter().sum(),
        }
    }

    /// Values `f̄(bᵢ)` of the linear extension of `f: M → A` on the basis.
    ///
    /// Only meaningful when `f` has degree `≤ n`; then `f̄` kills `I^{n+1}` and
    /// the values determine `f̄` on the quotient.
    pub fn linearize(
        &self,
        codomain: &FgAbelianGroup,
        f: &dyn Fn(&MonoidElement) -> Result<Coords>,
    ) -> Result<Vec<Coords>> {
        match &self.basis {
            Basis::Shifted(monomials) => monomials
                .iter()
                .map(|j| {
                    // f̄(t^j) = Σ_{l ≤ j} (−1)^{|j−l|} Π C(jᵢ, lᵢ) f(l)
                    let mut acc = codomain.zero();
                    for l in crate::binomial::box_below(j) {
                        let sign_odd = j.iter().zip(&l).map(|(a, b)| a - b).sum::<usize>() % 2 == 1;
                        let c: BigInt = j.iter().zip(&l).map(|(&a, &b)| binomial(&BigInt::from(a), b)).product();
                        let c = if sign_odd { -c } else { c };
                        let v = f(&MonoidElement::Free(l.iter().map(|&x| x as u64).collect()))?;
                        acc = codomain.add(&acc, &codomain.scale(&c, &v)?)?;
                    }
                    Ok(acc)
                })
                .collect(),
            Basis::Elements => {
                let size = self.monoid.size().expect("finite");
                let values: Vec<Coords> = (0..size).map(|i| f(&MonoidElement::Finite(i))).collect::<Result<_>>()?;
                (0..self.dimension())
                    .map(|i| {
                        let mut acc = codomain.zero();
                        for (c, v) in self.group.basis_lift(i).iter().zip(&values) {
                            if !c.is_zero() {
                                acc = codomain.add(&acc, &codomain.scale(c, v)?)?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect()
            }
        }
    }

    /// Applies a linear map given by its values on the basis.
    pub fn apply_linear(&self, codomain: &FgAbelianGroup, images: &[Coords], a: &[BigInt]) -> Result<Coords> {
        let mut acc = codomain.zero();
        for (c, img) in a.iter().zip(images) {
            if !c.is_zero() {
                acc = codomain.add(&acc, &codomain.scale(c, img)?)?;
            }
        }
        Ok(acc)
    }

    /// Matrix (rows = this basis) of the natural surjection onto a quotient
    /// of the same monoid ring with smaller degree bound.
    pub fn surjection_to(&self, lower: &MonoidAlgebraQuotient) -> Result<Vec<Coords>> {
        if lower.monoid != self.monoid || lower.coeffs != self.coeffs || lower.degree > self.degree {
            return Err(Error::IncompatibleDomains("surjection needs the same monoid and a smaller degree".into()));
        }
        match (&self.basis, &lower.basis) {
            (Basis::Shifted(hi), Basis::Shifted(lo)) => Ok(hi
                .iter()
                .map(|j| {
                    let mut c = lower.zero();
                    if let Some(pos) = lo.iter().position(|x| x == j) {
                        c[pos] = BigInt::one();
                    }
                    c
                })
                .collect()),
            _ => (0..self.dimension()).map(|i| lower.group.reduce(&self.group.basis_lift(i))).collect(),
        }
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

fn convolve(m: &crate::algebra::FiniteMonoid, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); m.size()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[m.add(i, j)] += x * y;
            }
        }
    }
    out
}

/// Non-decreasing index sequences of length `len` drawn from `0..n`.
pub(crate) fn multisets(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i, n, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, len, &mut Vec::new(), &mut out);
    out
}

fn monomial_label(j: &[usize]) -> String {
    let parts: Vec<String> = j
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            let var = if j.len() == 1 { "t".to_string() } else { format!("t{}", i + 1) };
            if e == 1 {
                var
            } else {
                format!("{}^{}", var, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

fn element_label(lift: &[BigInt]) -> String {
    let mut s = String::new();
    for (i, c) in lift.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let mag = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { "-" } else { "+" });
        }
        if !mag.is_one() {
            s.push_str(&format!("{}", mag));
        }
        s.push_str(&format!("[{}]", i));
    }
    if s.is_empty() {
        "0".to_string()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntMatrix;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn naturals_degree_two_has_rank_three() {
        let q = aug_ideal_power_quotient(&CommMonoid::naturals(), 2, CoefficientRing::Integers).unwrap();
        assert_eq!(q.basis_labels(), &["1", "t", "t^2"]);
        assert_eq!(q.group().describe(), "Z^3");
        // oracle: the span of x^a (a = 0..2) modulo x^g(x-1)^3 inside a window of
        // monomials x^0..x^5, computed from the explicit relation matrix
        let rels = IntMatrix::from_i64(&[&[-1, 3, -3, 1, 0, 0], &[0, -1, 3, -3, 1, 0], &[0, 0, -1, 3, -3, 1]]);
        let oracle = FgAbelianGroup::from_relations(6, &rels);
        assert_eq!(oracle.describe(), "Z^3");
    }

    #[test]
    fn z2_degree_one_is_z_plus_z2() {
        let m = CommMonoid::cyclic_group(2).unwrap();
        let q = aug_ideal_power_quotient(&m, 1, CoefficientRing::Integers).unwrap();
        assert_eq!(q.group().describe(), "Z + Z/2");
        // oracle: relations g·(x−1)² = ±(2[0] − 2[1]); SNF gives diag(2, 0)
        let snf = crate::algebra::smith_normal_form(&IntMatrix::from_i64(&[&[2, -2], &[-2, 2]]));
        assert_eq!(snf.invariant_factors(), vec![b(2)]);
        // t = [1] − [0] has order exactly two
        let t = q.sub(&q.class_of(&MonoidElement::Finite(1)).unwrap(), &q.one()).unwrap();
        assert!(!q.group().is_zero(&t));
        assert!(q.group().is_zero(&q.group().scale(&b(2), &t).unwrap()));
    }

    #[test]
    fn degree_zero_is_the_coefficient_ring() {
        let q = aug_ideal_power_quotient(&CommMonoid::naturals(), 0, CoefficientRing::Integers).unwrap();
        assert_eq!(q.group().describe(), "Z");
        let q = aug_ideal_power_quotient(&CommMonoid::naturals(), 0, CoefficientRing::Mod(5)).unwrap();
        assert_eq!(q.group().describe(), "Z/5");
        let q = aug_ideal_power_quotient(&CommMonoid::cyclic_group(3).unwrap(), 0, CoefficientRing::Integers).unwrap();
        assert_eq!(q.group().describe(), "Z");
    }

    #[test]
    fn inverse_of_generator_over_naturals() {
        let q = aug_ideal_power_quotient(&CommMonoid::naturals(), 1, CoefficientRing::Integers).unwrap();
        let x = MonoidElement::Free(vec![1]);
        let inv = q.invert_monoid_element(&x).unwrap();
        // 2 − x = 2·1 − (1 + t) = 1 − t
        assert_eq!(inv, vec![b(1), b(-1)]);
        assert_eq!(q.mul(&inv, &q.class_of(&x).unwrap()).unwrap(), q.one());
        assert_eq!(q.invert_monoid_element(&MonoidElement::Free(vec![0])).unwrap(), q.one());
    }

    #[test]
    fn involution_is_its_own_inverse() {
        let m = CommMonoid::cyclic_group(2).unwrap();
        let q = aug_ideal_power_quotient(&m, 1, CoefficientRing::Integers).unwrap();
        let x = MonoidElement::Finite(1);
        assert_eq!(q.invert_monoid_element(&x).unwrap(), q.class_of(&x).unwrap());
    }

    #[test]
    fn passi_dimensions_small() {
        assert_eq!(passi_functor(1, 1, 2, 64).unwrap().dimension(), 2);
        assert_eq!(passi_functor(2, 1, 2, 64).unwrap().dimension(), 3);
        assert_eq!(passi_functor(2, 0, 3, 64).unwrap().dimension(), 1);
        assert!(matches!(passi_functor(4, 1, 3, 64), Err(Error::TooLarge { .. })));
        assert!(passi_functor(1, 1, 4, 64).is_err());
    }

    #[test]
    fn nilpotence_and_units_exhaustive_on_finite() {
        let m = CommMonoid::cyclic_group(6).unwrap();
        for n in 0..4 {
            let q = aug_ideal_power_quotient(&m, n, CoefficientRing::Integers).unwrap();
            for e in m.elements().unwrap() {
                let x = q.class_of(&e).unwrap();
                let t = q.sub(&x, &q.one()).unwrap();
                assert!(q.group().is_zero(&q.pow(&t, n + 1).unwrap()));
                let inv = q.invert_monoid_element(&e).unwrap();
                assert_eq!(q.mul(&inv, &x).unwrap(), q.one());
            }
        }
    }

    #[test]
    fn surjection_is_multiplicative_on_basis() {
        let m = CommMonoid::cyclic_group(4).unwrap();
        let hi = aug_ideal_power_quotient(&m, 2, CoefficientRing::Integers).unwrap();
        let lo = aug_ideal_power_quotient(&m, 1, CoefficientRing::Integers).unwrap();
        let s = hi.surjection_to(&lo).unwrap();
        let proj = |a: &[BigInt]| hi.apply_linear(lo.group(), &s, a).unwrap();
        for i in 0..hi.dimension() {
            for j in 0..hi.dimension() {
                let (bi, bj) = (hi.group().generator(i), hi.group().generator(j));
                let lhs = proj(&hi.mul(&bi, &bj).unwrap());
                let rhs = lo.mul(&proj(&bi), &proj(&bj)).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        assert_eq!(proj(&hi.one()), lo.one());
    }

    #[test]
    fn augmentation_of_classes_is_one() {
        let m = CommMonoid::cyclic_group(3).unwrap();
        let q = aug_ideal_power_quotient(&m, 2, CoefficientRing::Integers).unwrap();
        for e in m.elements().unwrap() {
            assert_eq!(q.augmentation(&q.class_of(&e).unwrap()).unwrap(), b(1));
        }
    }
}
