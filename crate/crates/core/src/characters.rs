//! Characters of homogeneous polynomial functors as symmetric polynomials in
//! the torus weights, stored in the monomial symmetric basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::simplicial::PolynomialFunctor;

/// A homogeneous symmetric polynomial `Σ c_λ m_λ`, keyed by partitions
/// written in descending order without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymmetricPolynomial {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

fn is_partition(lambda: &[usize]) -> bool {
    lambda.iter().all(|&x| x > 0) && lambda.windows(2).all(|w| w[0] >= w[1])
}

/// `λ` sorted descending with zeros removed.
fn partition_of(exponents: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = exponents.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Partitions of `n` with at most `len` parts, in descending lexicographic order.
pub fn partitions(n: usize, len: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == len {
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            go(n - part, part, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, len, &mut Vec::new(), &mut out);
    out
}

/// Distinct rearrangements of `v`, in lexicographic order.
fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // next_permutation
    loop {
        let Some(i) = (0..cur.len().saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..cur.len()).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

fn padded(lambda: &[usize], n: usize) -> Vec<usize> {
    let mut v = lambda.to_vec();
    v.resize(n, 0);
    v
}

impl SymmetricPolynomial {
    pub fn new(nvars: usize, degree: usize, coeffs: BTreeMap<Vec<usize>, BigInt>) -> Result<Self> {
        let mut clean = BTreeMap::new();
        for (lambda, c) in coeffs {
            if !is_partition(&lambda) {
                return Err(Error::Parse(format!("{:?} is not a descending partition", lambda)));
            }
            if lambda.iter().sum::<usize>() != degree {
                return Err(Error::Dimension(format!("{:?} does not have degree {}", lambda, degree)));
            }
            if lambda.len() > nvars {
                return Err(Error::Dimension(format!("{:?} needs more than {} variables", lambda, nvars)));
            }
            if !c.is_zero() {
                clean.insert(lambda, c);
            }
        }
        Ok(SymmetricPolynomial { nvars, degree, coeffs: clean })
    }

    pub fn zero(nvars: usize, degree: usize) -> Self {
        SymmetricPolynomial { nvars, degree, coeffs: BTreeMap::new() }
    }

    /// `m_λ`.
    pub fn monomial(nvars: usize, lambda: &[usize]) -> Result<Self> {
        let degree = lambda.iter().sum();
        Self::new(nvars, degree, BTreeMap::from([(partition_of(lambda), BigInt::one())]))
    }

    /// `p_k = m_(k)`.
    pub fn power_sum(nvars: usize, k: usize) -> Self {
        Self::monomial(nvars, &[k]).expect("single part")
    }

    /// `e_k = m_(1ᵏ)`, zero when `k > nvars`.
    pub fn elementary(nvars: usize, k: usize) -> Self {
        Self::monomial(nvars, &vec![1; k]).unwrap_or_else(|_| Self::zero(nvars, k))
    }

    /// `h_k = Σ_λ m_λ` over all partitions of `k`.
    pub fn complete(nvars: usize, k: usize) -> Self {
        let coeffs = partitions(k, nvars).into_iter().map(|l| (l, BigInt::one())).collect();
        SymmetricPolynomial { nvars, degree: k, coeffs }
    }

    /// Reads a dense polynomial `exponents ↦ coefficient`; fails unless it is
    /// symmetric and homogeneous of the given degree.
    pub fn from_dense(nvars: usize, degree: usize, dense: &BTreeMap<Vec<usize>, BigInt>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (e, c) in dense {
            if e.len() != nvars || e.iter().sum::<usize>() != degree {
                return Err(Error::Dimension(format!("exponent {:?} outside {} variables of degree {}", e, nvars, degree)));
            }
            if !c.is_zero() {
                coeffs.entry(partition_of(e)).or_insert_with(|| c.clone());
            }
        }
        let s = SymmetricPolynomial { nvars, degree, coeffs };
        let zero = BigInt::zero();
        let restored = s.to_dense();
        let nonzero: BTreeMap<&Vec<usize>, &BigInt> = dense.iter().filter(|(_, c)| !c.is_zero()).collect();
        if restored.len() != nonzero.len() || restored.iter().any(|(e, c)| nonzero.get(e).copied().unwrap_or(&zero) != c) {
            return Err(Error::Unsupported("polynomial is not symmetric".into()));
        }
        Ok(s)
    }

    /// Every monomial written out in `nvars` variables.
    pub fn to_dense(&self) -> BTreeMap<Vec<usize>, BigInt> {
        let mut out = BTreeMap::new();
        for (lambda, c) in &self.coeffs {
            for e in distinct_permutations(&padded(lambda, self.nvars)) {
                out.insert(e, c.clone());
            }
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<usize>, BigInt> {
        &self.coeffs
    }

    /// Coefficient of `m_λ`.
    pub fn coefficient(&self, lambda: &[usize]) -> BigInt {
        self.coeffs.get(&partition_of(lambda)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars || self.degree != other.degree {
            return Err(Error::Dimension(format!(
                "degree {} in {} variables against degree {} in {} variables",
                self.degree, self.nvars, other.degree, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut coeffs = self.coeffs.clone();
        for (l, c) in &other.coeffs {
            *coeffs.entry(l.clone()).or_default() += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SymmetricPolynomial { nvars: self.nvars, degree: self.degree, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|(l, x)| (l.clone(), x * c)).filter(|(_, x)| !x.is_zero()).collect();
        SymmetricPolynomial { nvars: self.nvars, degree: self.degree, coeffs }
    }

    /// Product in the monomial basis: the coefficient of `m_ν` in `m_λ m_μ`
    /// counts rearrangements `α` of `λ` with `ν − α` a rearrangement of `μ`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::Dimension(format!("{} variables against {}", self.nvars, other.nvars)));
        }
        let n = self.nvars;
        let mut table: BTreeMap<(Vec<usize>, Vec<usize>), BTreeMap<Vec<usize>, BigInt>> = BTreeMap::new();
        let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (lambda, a) in &self.coeffs {
            for (mu, b) in &other.coeffs {
                let product = table.entry((lambda.clone(), mu.clone())).or_insert_with(|| monomial_product(lambda, mu, n));
                for (nu, k) in product.iter() {
                    *coeffs.entry(nu.clone()).or_default() += a * b * k;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SymmetricPolynomial { nvars: n, degree: self.degree + other.degree, coeffs })
    }

    pub fn pow(&self, e: usize) -> Result<Self> {
        let mut acc = SymmetricPolynomial::monomial(self.nvars, &[])?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Sets the last variable to zero.
    pub fn restrict(&self) -> Result<Self> {
        if self.nvars == 0 {
            return Err(Error::Dimension("no variable to drop".into()));
        }
        let n = self.nvars - 1;
        let coeffs = self.coeffs.iter().filter(|(l, _)| l.len() <= n).map(|(l, c)| (l.clone(), c.clone())).collect();
        Ok(SymmetricPolynomial { nvars: n, degree: self.degree, coeffs })
    }

    /// Value at an integer point.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::Dimension(format!("{} values for {} variables", point.len(), self.nvars)));
        }
        let mut acc = BigInt::zero();
        for (e, c) in self.to_dense() {
            let mut term = c;
            for (x, k) in point.iter().zip(e) {
                term *= num_traits::pow(x.clone(), k);
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Coefficients reduced into `[0, m)`.
    pub fn reduce_mod(&self, m: &BigInt) -> Self {
        let coeffs = self.coeffs.iter().map(|(l, c)| (l.clone(), c.mod_floor(m))).filter(|(_, c)| !c.is_zero()).collect();
        SymmetricPolynomial { nvars: self.nvars, degree: self.degree, coeffs }
    }
}

fn monomial_product(lambda: &[usize], mu: &[usize], n: usize) -> BTreeMap<Vec<usize>, BigInt> {
    let mu_p = padded(mu, n);
    let alphas = distinct_permutations(&padded(lambda, n));
    let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for alpha in &alphas {
        let nu = partition_of(&alpha.iter().zip(&mu_p).map(|(a, b)| a + b).collect::<Vec<_>>());
        if out.contains_key(&nu) {
            continue;
        }
        let nu_p = padded(&nu, n);
        let count = alphas
            .iter()
            .filter(|a| {
                a.iter().zip(&nu_p).all(|(x, y)| x <= y)
                    && partition_of(&nu_p.iter().zip(a.iter()).map(|(y, x)| y - x).collect::<Vec<_>>()) == mu
            })
            .count();
        out.insert(nu, BigInt::from(count));
    }
    out
}

impl fmt::Display for SymmetricPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        // largest partitions first
        for (i, (lambda, c)) in self.coeffs.iter().rev().enumerate() {
            let m = format!("m({})", lambda.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
            let abs = c.abs();
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            if abs.is_one() {
                write!(f, "{}{}", sep, m)?;
            } else {
                write!(f, "{}{}*{}", sep, abs, m)?;
            }
        }
        Ok(())
    }
}

/// The character of `F(kⁿ)` under the diagonal torus.
pub fn character(functor: &dyn PolynomialFunctor, nvars: usize, p: usize) -> Result<SymmetricPolynomial> {
    if nvars < p {
        return Err(Error::Unsupported(format!("characters of degree {} need at least {} variables, got {}", p, p, nvars)));
    }
    if !functor.is_homogeneous() || functor.degree() != p {
        return Err(Error::FunctorSpec(format!("{} is not homogeneous of degree {}", functor.spec(), p)));
    }
    let mut coeffs: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for w in functor.torus_weights(nvars) {
        if w.iter().sum::<usize>() != p {
            return Err(Error::FunctorSpec(format!("{} has a weight of degree other than {}", functor.spec(), p)));
        }
        // one representative per orbit suffices
        if w.windows(2).all(|x| x[0] >= x[1]) {
            *coeffs.entry(partition_of(&w)).or_default() += 1;
        }
    }
    SymmetricPolynomial::new(nvars, p, coeffs)
}

/// Outcome of dividing a difference of characters by `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Divisibility {
    Quotient(SymmetricPolynomial),
    Counterexample { partition: Vec<usize>, coefficient: BigInt },
}

/// `(a − b)/p`, or the first monomial whose coefficient is not divisible.
pub fn check_divisibility(a: &SymmetricPolynomial, b: &SymmetricPolynomial, p: u64) -> Result<Divisibility> {
    if p == 0 {
        return Err(Error::Ring("division by zero".into()));
    }
    let diff = a.sub(b)?;
    let pb = BigInt::from(p);
    let mut coeffs = BTreeMap::new();
    for (lambda, c) in &diff.coeffs {
        let (q, r) = c.div_rem(&pb);
        if !r.is_zero() {
            return Ok(Divisibility::Counterexample { partition: lambda.clone(), coefficient: c.clone() });
        }
        coeffs.insert(lambda.clone(), q);
    }
    Ok(Divisibility::Quotient(SymmetricPolynomial { nvars: a.nvars, degree: a.degree, coeffs }))
}

/// A polynomial in the elementary symmetric functions: each key lists the
/// indices `i` of a product `e_{i₁}⋯e_{i_r}`, in descending order.
pub type ElementaryPolynomial = BTreeMap<Vec<usize>, BigInt>;

fn e_mul(a: &ElementaryPolynomial, b: &ElementaryPolynomial) -> ElementaryPolynomial {
    let mut out: ElementaryPolynomial = BTreeMap::new();
    for (x, c) in a {
        for (y, d) in b {
            let mut key: Vec<usize> = x.iter().chain(y).copied().collect();
            key.sort_unstable_by(|u, v| v.cmp(u));
            *out.entry(key).or_default() += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `p₁, …, p_k` written in the elementary basis, from
/// `p_k = Σ_{i<k} (−1)^{i−1} e_i p_{k−i} + (−1)^{k−1} k e_k`.
pub fn power_sums_in_elementary(k: usize) -> Vec<ElementaryPolynomial> {
    let mut ps: Vec<ElementaryPolynomial> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut acc: ElementaryPolynomial = BTreeMap::new();
        for i in 1..m {
            let ei = BTreeMap::from([(vec![i], BigInt::one())]);
            let sign = if (i - 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            for (key, c) in e_mul(&ei, &ps[m - i - 1]) {
                *acc.entry(key).or_default() += sign.clone() * c;
            }
        }
        let sign = if (m - 1) % 2 == 0 { 1 } else { -1 };
        *acc.entry(vec![m]).or_default() += BigInt::from(sign * m as i64);
        acc.retain(|_, c| !c.is_zero());
        ps.push(acc);
    }
    ps
}

/// Substitutes `e_i = m_(1ⁱ)` in `nvars` variables.
pub fn expand_elementary(poly: &ElementaryPolynomial, nvars: usize, degree: usize) -> Result<SymmetricPolynomial> {
    let mut acc = SymmetricPolynomial::zero(nvars, degree);
    for (key, c) in poly {
        let mut term = SymmetricPolynomial::monomial(nvars, &[])?;
        for &i in key {
            term = term.mul(&SymmetricPolynomial::elementary(nvars, i))?;
        }
        if term.degree != degree {
            return Err(Error::Dimension(format!("term {:?} has degree {}", key, term.degree)));
        }
        acc = acc.add(&term.scale(c))?;
    }
    Ok(acc)
}

/// Values of `e₁, …, e_k` from values of `p₁, …, p_k`.
pub fn newton_convert(power_sums: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::one()];
    for k in 1..=power_sums.len() {
        let mut acc = BigRational::zero();
        for i in 1..=k {
            let term = &e[k - i] * &power_sums[i - 1];
            if (i - 1) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    e.split_off(1)
}

/// Values of `p₁, …, p_k` from values of `e₁, …, e_k`.
pub fn newton_convert_inverse(elementary: &[BigRational]) -> Vec<BigRational> {
    let mut p: Vec<BigRational> = Vec::with_capacity(elementary.len());
    for k in 1..=elementary.len() {
        let mut acc = BigRational::zero();
        for i in 1..k {
            let term = &elementary[i - 1] * &p[k - i - 1];
            if (i - 1) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let last = &elementary[k - 1] * BigRational::from_integer(BigInt::from(k));
        if (k - 1) % 2 == 0 {
            acc += last;
        } else {
            acc -= last;
        }
        p.push(acc);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{Ext, FrobeniusTwist, Sym, Tensor};

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Dense product of linear forms, independent of the monomial basis.
    fn dense_power_of_sum(n: usize, p: usize) -> BTreeMap<Vec<usize>, BigInt> {
        let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::from([(vec![0; n], int(1))]);
        for _ in 0..p {
            let mut next = BTreeMap::new();
            for (e, c) in &acc {
                for i in 0..n {
                    let mut f = e.clone();
                    f[i] += 1;
                    *next.entry(f).or_insert_with(BigInt::zero) += c;
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn frobenius_in_two_variables() {
        let c = character(&FrobeniusTwist(2), 2, 2).unwrap();
        let dense = c.to_dense();
        assert_eq!(dense.len(), 2);
        assert_eq!(dense[&vec![2, 0]], int(1));
        assert_eq!(dense[&vec![0, 2]], int(1));
        assert_eq!(c.to_string(), "m(2)");
    }

    #[test]
    fn tensor_square_in_two_variables() {
        let c = character(&Tensor(2), 2, 2).unwrap();
        let dense = c.to_dense();
        assert_eq!(dense[&vec![2, 0]], int(1));
        assert_eq!(dense[&vec![1, 1]], int(2));
        assert_eq!(dense[&vec![0, 2]], int(1));
        assert_eq!(c.to_string(), "m(2) + 2*m(1,1)");
    }

    #[test]
    fn exterior_square_is_elementary() {
        let c = character(&Ext(2), 2, 2).unwrap();
        assert_eq!(c, SymmetricPolynomial::elementary(2, 2));
        assert_eq!(c.to_string(), "m(1,1)");
    }

    #[test]
    fn standard_characters() {
        for p in [2usize, 3, 5] {
            for n in p..=p + 2 {
                assert_eq!(character(&Sym(p), n, p).unwrap(), SymmetricPolynomial::complete(n, p));
                assert_eq!(character(&Ext(p), n, p).unwrap(), SymmetricPolynomial::elementary(n, p));
                assert_eq!(character(&FrobeniusTwist(p as u64), n, p).unwrap(), SymmetricPolynomial::power_sum(n, p));
                let dense = SymmetricPolynomial::from_dense(n, p, &dense_power_of_sum(n, p)).unwrap();
                assert_eq!(character(&Tensor(p), n, p).unwrap(), dense);
            }
        }
    }

    #[test]
    fn character_preconditions() {
        assert!(character(&Tensor(3), 2, 3).is_err());
        assert!(character(&Tensor(2), 3, 3).is_err());
    }

    #[test]
    fn tensor_minus_twist_over_two() {
        let a = character(&Tensor(2), 2, 2).unwrap();
        let b = character(&FrobeniusTwist(2), 2, 2).unwrap();
        let Divisibility::Quotient(q) = check_divisibility(&a, &b, 2).unwrap() else { panic!() };
        assert_eq!(q, SymmetricPolynomial::elementary(2, 2));
        assert_eq!(q.to_string(), "m(1,1)");
        let Divisibility::Quotient(z) = check_divisibility(&a, &a, 2).unwrap() else { panic!() };
        assert!(z.is_zero());
    }

    #[test]
    fn tensor_minus_twist_over_three() {
        let a = character(&Tensor(3), 3, 3).unwrap();
        let b = character(&FrobeniusTwist(3), 3, 3).unwrap();
        let Divisibility::Quotient(q) = check_divisibility(&a, &b, 3).unwrap() else { panic!() };
        // multinomials 3!/(2!1!) = 3 and 3! = 6
        assert_eq!(q.coefficient(&[2, 1]), int(1));
        assert_eq!(q.coefficient(&[1, 1, 1]), int(2));
        assert_eq!(q.coefficient(&[3]), int(0));
    }

    #[test]
    fn divisibility_counterexample() {
        let a = character(&Sym(2), 2, 2).unwrap();
        let b = character(&FrobeniusTwist(2), 2, 2).unwrap();
        assert_eq!(
            check_divisibility(&a, &b, 2).unwrap(),
            Divisibility::Counterexample { partition: vec![1, 1], coefficient: int(1) }
        );
    }

    #[test]
    fn newton_identities_in_three_variables() {
        let ps = power_sums_in_elementary(3);
        assert_eq!(ps[0], BTreeMap::from([(vec![1], int(1))]));
        assert_eq!(ps[1], BTreeMap::from([(vec![1, 1], int(1)), (vec![2], int(-2))]));
        assert_eq!(ps[2], BTreeMap::from([(vec![1, 1, 1], int(1)), (vec![2, 1], int(-3)), (vec![3], int(3))]));
        for (k, p) in ps.iter().enumerate() {
            // oracle: expand the e's densely and compare with m_(k)
            let expanded = expand_elementary(p, 3, k + 1).unwrap();
            assert_eq!(expanded, SymmetricPolynomial::power_sum(3, k + 1));
        }
    }

    #[test]
    fn newton_numeric_roundtrip() {
        let xs = [int(2), int(-1), int(5)];
        let p: Vec<BigRational> = (1..=3)
            .map(|k| BigRational::from_integer(SymmetricPolynomial::power_sum(3, k).evaluate(&xs).unwrap()))
            .collect();
        let e = newton_convert(&p);
        for k in 1..=3 {
            let direct = SymmetricPolynomial::elementary(3, k).evaluate(&xs).unwrap();
            assert_eq!(e[k - 1], BigRational::from_integer(direct));
        }
        assert_eq!(newton_convert_inverse(&e), p);
    }

    #[test]
    fn monomial_products() {
        // m(1)·m(1) = m(2) + 2m(1,1) in two variables
        let m1 = SymmetricPolynomial::monomial(2, &[1]).unwrap();
        assert_eq!(m1.mul(&m1).unwrap(), character(&Tensor(2), 2, 2).unwrap());
        // in one variable the m(1,1) term disappears
        let x = SymmetricPolynomial::monomial(1, &[1]).unwrap();
        assert_eq!(x.mul(&x).unwrap(), SymmetricPolynomial::power_sum(1, 2));
    }

    #[test]
    fn dense_rejects_asymmetric() {
        let dense = BTreeMap::from([(vec![2, 0], int(1))]);
        assert!(SymmetricPolynomial::from_dense(2, 2, &dense).is_err());
    }

    #[test]
    fn partitions_are_listed() {
        assert_eq!(partitions(4, 4).len(), 5);
        assert_eq!(partitions(4, 2), vec![vec![4], vec![3, 1], vec![2, 2]]);
        assert_eq!(distinct_permutations(&[1, 0, 1]).len(), 3);
    }
}
