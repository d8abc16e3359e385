//! Polynomial functors on free modules, applied to matrices.
//!
//! Bases: tensor powers use index tuples in lexicographic order (Kronecker
//! factors left to right), symmetric powers use non-decreasing tuples and
//! exterior powers strictly increasing tuples, both lexicographic.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::linalg;
use crate::algebra::IntMatrix;
use crate::binomial::binomial_u;
use crate::error::{Error, Result};
use crate::monoid_ring::CoefficientRing;

/// A polynomial functor `F` on finitely generated free modules.
pub trait PolynomialFunctor: fmt::Debug + Send + Sync {
    /// Canonical spec string such as `sym:2`.
    fn spec(&self) -> String;

    /// Degree as a polynomial functor.
    fn degree(&self) -> usize;

    /// `rank F(Rᵐ)`.
    fn output_rank(&self, m: usize) -> usize;

    /// `F(a)` for `a: Rᵐ → Rⁿ` given as an `n × m` matrix.
    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix>;

    /// Exponent vectors of the diagonal torus on the basis of `F(Rⁿ)`.
    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>>;

    fn check_ring(&self, ring: CoefficientRing) -> Result<()> {
        linalg::check_ring(ring)
    }

    /// Whether all torus weights share one total degree.
    fn is_homogeneous(&self) -> bool {
        true
    }
}

pub type FunctorRef = Arc<dyn PolynomialFunctor>;

/// Expands `Π_r a·e_{i_r}` over the nonzero column entries and hands every
/// resulting row tuple, with its coefficient, to `emit`.
fn expand_columns(a: &IntMatrix, cols: &[usize], emit: &mut dyn FnMut(&[usize], &BigInt)) {
    let nz: Vec<Vec<(usize, BigInt)>> = cols
        .iter()
        .map(|&c| (0..a.rows()).filter(|&r| !a[(r, c)].is_zero()).map(|r| (r, a[(r, c)].clone())).collect())
        .collect();
    fn go(nz: &[Vec<(usize, BigInt)>], depth: usize, rows: &mut Vec<usize>, coef: BigInt, emit: &mut dyn FnMut(&[usize], &BigInt)) {
        if depth == nz.len() {
            emit(rows, &coef);
            return;
        }
        for (r, v) in &nz[depth] {
            rows.push(*r);
            go(nz, depth + 1, rows, &coef * v, emit);
            rows.pop();
        }
    }
    go(&nz, 0, &mut Vec::with_capacity(cols.len()), BigInt::one(), emit);
}

/// Non-decreasing (`strict = false`) or increasing tuples of length `d` in `0..m`.
pub(crate) fn sorted_tuples(m: usize, d: usize, strict: bool) -> Vec<Vec<usize>> {
    fn go(m: usize, d: usize, start: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            go(m, d, if strict { i + 1 } else { i }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, d, 0, strict, &mut Vec::new(), &mut out);
    out
}

fn tuple_weights(tuples: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    tuples
        .iter()
        .map(|t| {
            let mut w = vec![0; n];
            for &i in t {
                w[i] += 1;
            }
            w
        })
        .collect()
}

/// `Symᵈ`.
#[derive(Clone, Debug)]
pub struct Sym(pub usize);

impl PolynomialFunctor for Sym {
    fn spec(&self) -> String {
        format!("sym:{}", self.0)
    }

    fn degree(&self) -> usize {
        self.0
    }

    fn output_rank(&self, m: usize) -> usize {
        if m == 0 {
            return usize::from(self.0 == 0);
        }
        binomial_u(m + self.0 - 1, self.0)
    }

    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix> {
        let src = sorted_tuples(a.cols(), self.0, false);
        let dst = sorted_tuples(a.rows(), self.0, false);
        let index: BTreeMap<&[usize], usize> = dst.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut out = IntMatrix::zeros(dst.len(), src.len());
        for (c, cols) in src.iter().enumerate() {
            expand_columns(a, cols, &mut |rows, coef| {
                let mut key = rows.to_vec();
                key.sort_unstable();
                out[(index[key.as_slice()], c)] += coef;
            });
        }
        Ok(linalg::reduce(ring, out))
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        tuple_weights(&sorted_tuples(n, self.0, false), n)
    }
}

/// `Λᵈ`.
#[derive(Clone, Debug)]
pub struct Ext(pub usize);

impl PolynomialFunctor for Ext {
    fn spec(&self) -> String {
        format!("ext:{}", self.0)
    }

    fn degree(&self) -> usize {
        self.0
    }

    fn output_rank(&self, m: usize) -> usize {
        binomial_u(m, self.0)
    }

    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix> {
        let src = sorted_tuples(a.cols(), self.0, true);
        let dst = sorted_tuples(a.rows(), self.0, true);
        let index: BTreeMap<&[usize], usize> = dst.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
        let mut out = IntMatrix::zeros(dst.len(), src.len());
        for (c, cols) in src.iter().enumerate() {
            expand_columns(a, cols, &mut |rows, coef| {
                if let Some((key, odd)) = sort_with_sign(rows) {
                    let e = &mut out[(index[key.as_slice()], c)];
                    if odd {
                        *e -= coef;
                    } else {
                        *e += coef;
                    }
                }
            });
        }
        Ok(linalg::reduce(ring, out))
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        tuple_weights(&sorted_tuples(n, self.0, true), n)
    }
}

/// Sorted copy and parity of the sorting permutation; `None` on repeats.
fn sort_with_sign(rows: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = rows.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, odd))
    }
}

/// `⊗ᵈ`.
#[derive(Clone, Debug)]
pub struct Tensor(pub usize);

impl PolynomialFunctor for Tensor {
    fn spec(&self) -> String {
        format!("tensor:{}", self.0)
    }

    fn degree(&self) -> usize {
        self.0
    }

    fn output_rank(&self, m: usize) -> usize {
        m.pow(self.0 as u32)
    }

    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix> {
        let mut out = IntMatrix::identity(1);
        for _ in 0..self.0 {
            out = linalg::reduce(ring, out.kronecker(a));
        }
        Ok(out)
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        let mut tuples = vec![Vec::new()];
        for _ in 0..self.0 {
            tuples = tuples
                .into_iter()
                .flat_map(|t: Vec<usize>| {
                    (0..n).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
        }
        tuple_weights(&tuples, n)
    }
}

/// Frobenius twist over `F_p`: linear maps are twisted entrywise by `x ↦ xᵖ`,
/// which is the identity on the prime field, while the torus acts through
/// `p`-th powers of its characters.
#[derive(Clone, Debug)]
pub struct FrobeniusTwist(pub u64);

impl PolynomialFunctor for FrobeniusTwist {
    fn spec(&self) -> String {
        format!("frobenius:{}", self.0)
    }

    fn degree(&self) -> usize {
        self.0 as usize
    }

    fn output_rank(&self, m: usize) -> usize {
        m
    }

    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix> {
        self.check_ring(ring)?;
        let p = BigInt::from(self.0);
        Ok(a.map_entries(|x| num_integer::Integer::mod_floor(&num_traits::pow(x.clone(), self.0 as usize), &p)))
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = self.0 as usize;
                w
            })
            .collect()
    }

    fn check_ring(&self, ring: CoefficientRing) -> Result<()> {
        match ring {
            CoefficientRing::Mod(p) if p == self.0 => Ok(()),
            _ => Err(Error::FunctorSpec(format!("frobenius:{} needs coefficients Z/{}, got {}", self.0, self.0, ring))),
        }
    }
}

/// The constant functor with value `Rᶜ`.
#[derive(Clone, Debug)]
pub struct Constant(pub usize);

impl PolynomialFunctor for Constant {
    fn spec(&self) -> String {
        format!("const:{}", self.0)
    }

    fn degree(&self) -> usize {
        0
    }

    fn output_rank(&self, _m: usize) -> usize {
        self.0
    }

    fn apply(&self, _a: &IntMatrix, _ring: CoefficientRing) -> Result<IntMatrix> {
        Ok(IntMatrix::identity(self.0))
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        vec![vec![0; n]; self.0]
    }
}

/// `F ⊕ G`.
#[derive(Clone, Debug)]
pub struct DirectSum(pub FunctorRef, pub FunctorRef);

impl PolynomialFunctor for DirectSum {
    fn spec(&self) -> String {
        format!("sum({},{})", self.0.spec(), self.1.spec())
    }

    fn degree(&self) -> usize {
        self.0.degree().max(self.1.degree())
    }

    fn output_rank(&self, m: usize) -> usize {
        self.0.output_rank(m) + self.1.output_rank(m)
    }

    fn apply(&self, a: &IntMatrix, ring: CoefficientRing) -> Result<IntMatrix> {
        Ok(IntMatrix::block_diag(&[self.0.apply(a, ring)?, self.1.apply(a, ring)?]))
    }

    fn torus_weights(&self, n: usize) -> Vec<Vec<usize>> {
        let mut w = self.0.torus_weights(n);
        w.extend(self.1.torus_weights(n));
        w
    }

    fn check_ring(&self, ring: CoefficientRing) -> Result<()> {
        self.0.check_ring(ring)?;
        self.1.check_ring(ring)
    }

    fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous() && self.1.is_homogeneous() && (self.0.degree() == self.1.degree())
    }
}

type Constructor = fn(u64) -> Result<FunctorRef>;

/// Functors registered by name and built from spec strings like `sym:2`,
/// `frobenius:3` or `sum(ext:2,const:1)`.
#[derive(Clone)]
pub struct FunctorRegistry {
    constructors: BTreeMap<&'static str, Constructor>,
}

fn positive(kind: &str, d: u64) -> Result<usize> {
    if d == 0 {
        return Err(Error::FunctorSpec(format!("{}:0 (degree must be at least 1)", kind)));
    }
    Ok(d as usize)
}

impl Default for FunctorRegistry {
    fn default() -> Self {
        let mut r = FunctorRegistry { constructors: BTreeMap::new() };
        r.register("sym", |d| Ok(Arc::new(Sym(positive("sym", d)?))));
        r.register("ext", |d| Ok(Arc::new(Ext(positive("ext", d)?))));
        r.register("tensor", |d| Ok(Arc::new(Tensor(positive("tensor", d)?))));
        r.register("frobenius", |p| {
            if !crate::algebra::is_prime(p) {
                return Err(Error::FunctorSpec(format!("frobenius:{} (not a prime)", p)));
            }
            Ok(Arc::new(FrobeniusTwist(p)))
        });
        r.register("twist", |p| {
            if !crate::algebra::is_prime(p) {
                return Err(Error::FunctorSpec(format!("twist:{} (not a prime)", p)));
            }
            Ok(Arc::new(FrobeniusTwist(p)))
        });
        r.register("const", |c| Ok(Arc::new(Constant(c as usize))));
        r
    }
}

impl FunctorRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn register(&mut self, name: &'static str, make: Constructor) {
        self.constructors.insert(name, make);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.constructors.keys().copied().collect()
    }

    pub fn parse(&self, spec: &str) -> Result<FunctorRef> {
        let s = spec.trim();
        if let Some(inner) = s.strip_prefix("sum(").and_then(|r| r.strip_suffix(')')) {
            let (a, b) = split_top_level(inner).ok_or_else(|| Error::FunctorSpec(spec.to_string()))?;
            return Ok(Arc::new(DirectSum(self.parse(a)?, self.parse(b)?)));
        }
        let (name, arg) = s.split_once(':').ok_or_else(|| Error::FunctorSpec(spec.to_string()))?;
        let make = self.constructors.get(name.trim()).ok_or_else(|| Error::FunctorSpec(spec.to_string()))?;
        let arg: u64 = arg.trim().parse().map_err(|_| Error::FunctorSpec(spec.to_string()))?;
        make(arg)
    }
}

/// Splits `a,b` at the comma not nested in parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}
