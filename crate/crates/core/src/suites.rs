//! Named verification suites. Each one reproduces a family of checks from
//! scratch and reports how many passed; criteria 1 to 10 map one-to-one to
//! suites.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{CommMonoid, FgAbelianGroup, IntMatrix, MonoidElement, DEFAULT_FINITE_CAP};
use crate::binomial::{binomial, binomial_u, cube, multi_indices_upto};
use crate::characters::{character, check_divisibility, Divisibility};
use crate::error::{Error, Result};
use crate::k0::{fermat_quotient, lambda_and_adams};
use crate::monoid_ring::{aug_ideal_power_quotient, passi_functor, CoefficientRing};
use crate::polymap::{
    closed_form_extension, extend_over_group_completion, extension_via_quotient, DegreeBound, Domain, PolyMap,
};
use crate::simplicial::{
    cech_nerve, apply_functor_levelwise, dold_kan_roundtrip, euler_class, is_n_skeletal, linalg, ChainComplex, Ext,
    FrobeniusTwist, FunctorRef, Sym, Tensor,
};

pub const DEFAULT_SEED: u64 = 0x5E_ED0F_D01D;

/// Parameters shared by all suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub finite_cap: usize,
    pub box_side: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { finite_cap: DEFAULT_FINITE_CAP, box_side: 6, seed: DEFAULT_SEED }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub criterion: Option<usize>,
    pub checks: usize,
    pub failures: Vec<String>,
    pub summary: String,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{} {}: {} checks, {} failures; {}", status, self.name, self.checks, self.failures.len(), self.summary)
    }
}

/// Collects check outcomes for one suite run.
pub struct Tally {
    checks: usize,
    failures: Vec<String>,
}

impl Default for Tally {
    fn default() -> Self {
        Self::new()
    }
}

impl Tally {
    pub fn new() -> Self {
        Tally { checks: 0, failures: Vec::new() }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    /// Records `Ok(true)` as a pass and anything else as a failure.
    pub fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {}", what(), e));
            }
        }
    }
}

pub trait Suite: Send + Sync {
    fn name(&self) -> &'static str;

    /// Acceptance criterion reproduced by the suite.
    fn criterion(&self) -> Option<usize>;

    fn description(&self) -> &'static str;

    /// Wall-clock budget.
    fn budget(&self) -> Duration;

    fn run_checks(&self, config: &SuiteConfig, tally: &mut Tally) -> Result<String>;

    fn run(&self, config: &SuiteConfig) -> SuiteReport {
        let start = Instant::now();
        let mut tally = Tally::new();
        let summary = match self.run_checks(config, &mut tally) {
            Ok(s) => s,
            Err(e) => {
                tally.failures.push(format!("aborted: {}", e));
                "aborted".to_string()
            }
        };
        SuiteReport {
            name: self.name().to_string(),
            criterion: self.criterion(),
            checks: tally.checks,
            failures: tally.failures,
            summary,
            elapsed: start.elapsed(),
        }
    }
}

pub type SuiteRef = Arc<dyn Suite>;

#[derive(Clone)]
pub struct SuiteRegistry {
    suites: BTreeMap<&'static str, SuiteRef>,
}

impl Default for SuiteRegistry {
    fn default() -> Self {
        let mut r = SuiteRegistry { suites: BTreeMap::new() };
        r.register(Arc::new(Passi));
        r.register(Arc::new(QuotientRing));
        r.register(Arc::new(ClosedForm));
        r.register(Arc::new(FrobeniusCharacter));
        r.register(Arc::new(Fermat));
        r.register(Arc::new(DoldKan));
        r.register(Arc::new(Skeletal));
        r.register(Arc::new(K0Identify));
        r.register(Arc::new(Lambda));
        r.register(Arc::new(Rnv));
        r
    }
}

impl SuiteRegistry {
    pub fn register(&mut self, suite: SuiteRef) {
        self.suites.insert(suite.name(), suite);
    }

    pub fn get(&self, name: &str) -> Result<SuiteRef> {
        self.suites
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Unsupported(format!("unknown suite `{}`; known: {}", name, self.names().join(", "))))
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.suites.keys().copied().collect()
    }

    /// Suites ordered by criterion number, uncategorized ones last by name.
    pub fn ordered(&self) -> Vec<SuiteRef> {
        let mut v: Vec<SuiteRef> = self.suites.values().cloned().collect();
        v.sort_by_key(|s| (s.criterion().unwrap_or(usize::MAX), s.name()));
        v
    }

    pub fn by_criterion(&self, n: usize) -> Option<SuiteRef> {
        self.suites.values().find(|s| s.criterion() == Some(n)).cloned()
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rng(config: &SuiteConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

struct Passi;

impl Suite for Passi {
    fn name(&self) -> &'static str {
        "passi"
    }
    fn criterion(&self) -> Option<usize> {
        Some(1)
    }
    fn description(&self) -> &'static str {
        "binomial maps on N extend to Z as C(x, i), uniquely"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(1)
    }
    fn run_checks(&self, _config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        for i in 0..=4 {
            let f = PolyMap::binomial_map(Domain::naturals(), i)?;
            let ext = extend_over_group_completion(&f)?;
            for x in -10i64..=10 {
                let got = ext.map.evaluate_int(&[x])?;
                let want = binomial(&int(x), i);
                t.check(got == want, || format!("C(x,{}) at {}: got {}, want {}", i, x, got, want));
            }
            // any degree-≤i map on Z is fixed by its values on 0..=i
            let refit = PolyMap::fit(Domain::integers(), FgAbelianGroup::integers(), DegreeBound::AtMost(i), i, &|p| {
                f.evaluate(p)
            })?;
            t.check_result(refit.agrees_with(&ext.map), || format!("grid refit of C(x,{}) differs", i));
            let cert = ext.map.verify_degree(DegreeBound::AtMost(i), i);
            t.check(matches!(&cert, Ok(c) if c.is_genuine()), || format!("degree {} not certified for C(x,{})", i, i));
            if i > 0 {
                let below = ext.map.verify_degree(DegreeBound::AtMost(i - 1), i);
                t.check(matches!(below, Err(Error::DegreeCounterexample(_))), || {
                    format!("C(x,{}) passed degree {}", i, i - 1)
                });
            }
        }
        Ok("C(x, i) for i <= 4 on [-10, 10]".into())
    }
}

struct QuotientRing;

impl QuotientRing {
    /// `Z[Z]/I^{n+1}` on the Laurent window `x^{−w..w}`, with relations
    /// `x^b (x − 1)^{n+1}` that stay inside the window.
    fn laurent_window(n: usize, w: usize) -> Result<FgAbelianGroup> {
        let size = 2 * w + 1;
        let mut rows = Vec::new();
        for b in 0..size.saturating_sub(n + 1) {
            let mut row = vec![BigInt::from(0); size];
            for j in 0..=n + 1 {
                let s = if (n + 1 - j).is_multiple_of(2) { 1 } else { -1 };
                row[b + j] = int(s * binomial_u(n + 1, j) as i64);
            }
            rows.push(row);
        }
        Ok(FgAbelianGroup::from_relations(size, &IntMatrix::from_rows(&rows, size)?))
    }
}

impl Suite for QuotientRing {
    fn name(&self) -> &'static str {
        "quotient-ring"
    }
    fn criterion(&self) -> Option<usize> {
        Some(2)
    }
    fn description(&self) -> &'static str {
        "Z[N]/I^(n+1) has rank n+1 and matches the quotients of the completion Z"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(5)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        for n in 0..=6usize {
            let q = aug_ideal_power_quotient(&CommMonoid::naturals(), n, CoefficientRing::Integers)?;
            t.check(q.group().free_rank() == n + 1 && q.group().torsion().is_empty(), || {
                format!("Z[N]/I^{} is {}", n + 1, q.group().describe())
            });

            // Laurent window of the completion, compared through x^0..x^n
            let w = n + 2;
            let g = Self::laurent_window(n, w)?;
            t.check(g.free_rank() == n + 1 && g.torsion().is_empty(), || {
                format!("Z[Z]/I^{} window is {}", n + 1, g.describe())
            });
            let mut a = IntMatrix::zeros(n + 1, n + 1);
            let mut b = IntMatrix::zeros(g.coord_len(), n + 1);
            for e in 0..=n {
                let qa = q.class_of(&MonoidElement::Free(vec![e as u64]))?;
                let mut unit = vec![BigInt::from(0); 2 * w + 1];
                unit[w + e] = int(1);
                let gb = g.reduce(&unit)?;
                for r in 0..=n {
                    a[(r, e)] = qa[r].clone();
                }
                for (r, v) in gb.into_iter().enumerate() {
                    b[(r, e)] = v;
                }
            }
            t.check(a.is_unimodular() && b.is_unimodular(), || {
                format!("comparison Z[N]/I^{} -> Z[Z]/I^{} is not unimodular", n + 1, n + 1)
            });
            // x^{−1} = Σ_a (−1)^a C(n+1, a+1) x^a holds in the completed quotient
            let mut unit = vec![BigInt::from(0); 2 * w + 1];
            unit[w - 1] = int(1);
            let inverse = g.reduce(&unit)?;
            let mut combo = g.zero();
            for e in 0..=n {
                let c = int(if e % 2 == 0 { 1 } else { -1 }) * int(binomial_u(n + 1, e + 1) as i64);
                combo = g.add(&combo, &g.scale(&c, &b.column(e))?)?;
            }
            t.check(g.normalize(combo)? == g.normalize(inverse)?, || format!("x^-1 expansion fails for n = {}", n));

            // finite truncations Z/N with N a power of two
            for &big_n in &[8usize, 16, 32, 64] {
                if big_n > config.finite_cap {
                    continue;
                }
                let m = CommMonoid::cyclic_group_with_cap(big_n, config.finite_cap)?;
                let qn = aug_ideal_power_quotient(&m, n, CoefficientRing::Integers)?;
                let grp = qn.group();
                let generators = grp.free_rank() + grp.torsion().len();
                let order_ok = grp.torsion_order() == num_traits::pow(int(big_n as i64), n);
                t.check(grp.free_rank() == 1 && generators == n + 1 && order_ok, || {
                    format!("Z[Z/{}]/I^{} is {}", big_n, n + 1, grp.describe())
                });
            }
        }
        Ok("n <= 6, Laurent window and Z/N truncations for N in {8,16,32,64}".into())
    }
}

struct ClosedForm;

impl Suite for ClosedForm {
    fn name(&self) -> &'static str {
        "closed-form"
    }
    fn criterion(&self) -> Option<usize> {
        Some(3)
    }
    fn description(&self) -> &'static str {
        "closed-form extension formula agrees with quotient-ring evaluation"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(5)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        let mut rng = rng(config, 3);
        for trial in 0..100 {
            let rank = rng.gen_range(1..=2usize);
            let n = rng.gen_range(0..=3usize);
            let coeffs: Vec<(Vec<usize>, i64)> =
                multi_indices_upto(rank, n).into_iter().map(|j| (j, rng.gen_range(-5..=5))).collect();
            let f = PolyMap::integer_mahler(Domain::Monoid(CommMonoid::free(rank)), DegreeBound::AtMost(n), &coeffs)?
                .certify()?;
            let x = MonoidElement::Free((0..rank).map(|_| rng.gen_range(0..=8)).collect());
            let y = MonoidElement::Free((0..rank).map(|_| rng.gen_range(0..=8)).collect());
            let closed = closed_form_extension(&f, &x, &y)?;
            let direct = extension_via_quotient(&f, &x, &y)?;
            let extended = extend_over_group_completion(&f)?.evaluate_difference(&x, &y)?;
            t.check(closed == direct && direct == extended, || {
                format!("trial {}: closed form {:?}, quotient {:?}, extension {:?}", trial, closed, direct, extended)
            });
        }
        Ok("100 random maps of degree <= 3 on N and N^2".into())
    }
}

struct FrobeniusCharacter;

impl Suite for FrobeniusCharacter {
    fn name(&self) -> &'static str {
        "frobenius-char"
    }
    fn criterion(&self) -> Option<usize> {
        Some(4)
    }
    fn description(&self) -> &'static str {
        "characters of the p-th tensor power and the Frobenius twist agree mod p"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(5)
    }
    fn run_checks(&self, _config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        for p in [2usize, 3, 5] {
            for n in p..=p + 2 {
                let a = character(&Tensor(p), n, p)?;
                let b = character(&FrobeniusTwist(p as u64), n, p)?;
                match check_divisibility(&a, &b, p as u64)? {
                    Divisibility::Quotient(q) => {
                        let back = q.scale(&int(p as i64)).add(&b)?;
                        t.check(back == a, || format!("p = {}, n = {}: quotient does not reconstruct", p, n));
                    }
                    Divisibility::Counterexample { partition, coefficient } => {
                        t.check(false, || format!("p = {}, n = {}: m{:?} has coefficient {}", p, n, partition, coefficient))
                    }
                }
            }
        }
        Ok("p in {2,3,5}, p <= n <= p+2 variables".into())
    }
}

struct Fermat;

impl Suite for Fermat {
    fn name(&self) -> &'static str {
        "fermat"
    }
    fn criterion(&self) -> Option<usize> {
        Some(5)
    }
    fn description(&self) -> &'static str {
        "(x^p - x)/p is integer valued of degree exactly p"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(1)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        for p in [2usize, 3, 5] {
            let f = fermat_quotient(p)?;
            for x in -20i64..=20 {
                let num = num_traits::pow(int(x), p) - int(x);
                let (q, r) = num.div_rem(&int(p as i64));
                let got = f.evaluate_int(&[x])?;
                t.check(r == int(0) && got == q, || format!("p = {} at {}: got {}, want {}/{}", p, x, got, num, p));
            }
            let cert = f.verify_degree(DegreeBound::AtMost(p), config.box_side);
            t.check(matches!(&cert, Ok(c) if c.is_genuine()), || format!("p = {}: degree not certified", p));
            let below = f.verify_degree(DegreeBound::AtMost(p - 1), config.box_side);
            t.check(matches!(below, Err(Error::DegreeCounterexample(_))), || format!("p = {}: passed degree {}", p, p - 1));
        }
        Ok("p in {2,3,5} on [-20, 20]".into())
    }
}

/// A random bounded complex with `d_{k+1}` factored through `ker d_k`.
pub fn random_complex(rng: &mut impl Rng, ring: CoefficientRing, max_rank: usize, max_top: usize) -> Result<ChainComplex> {
    let top = rng.gen_range(1..=max_top);
    let ranks: Vec<usize> = (0..=top).map(|_| rng.gen_range(0..=max_rank)).collect();
    let entry = |rng: &mut dyn rand::RngCore| -> BigInt {
        match ring {
            CoefficientRing::Integers => int(rng.gen_range(-2..=2)),
            CoefficientRing::Mod(p) => int(rng.gen_range(0..p as i64)),
        }
    };
    let mut diffs: Vec<IntMatrix> = Vec::with_capacity(top);
    for k in 1..=top {
        let d = if k == 1 {
            let mut m = IntMatrix::zeros(ranks[0], ranks[1]);
            for i in 0..ranks[0] {
                for j in 0..ranks[1] {
                    m[(i, j)] = entry(rng);
                }
            }
            m
        } else {
            let ker = linalg::kernel(ring, &diffs[k - 2]);
            let mut r = IntMatrix::zeros(ker.dim(), ranks[k]);
            for i in 0..ker.dim() {
                for j in 0..ranks[k] {
                    r[(i, j)] = entry(rng);
                }
            }
            linalg::mul(ring, &ker.basis, &r)?
        };
        diffs.push(d);
    }
    ChainComplex::new(ring, ranks, diffs)
}

struct DoldKan;

impl Suite for DoldKan {
    fn name(&self) -> &'static str {
        "dold-kan"
    }
    fn criterion(&self) -> Option<usize> {
        Some(6)
    }
    fn description(&self) -> &'static str {
        "normalized chains of Gamma(C) recover C"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(30)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        let mut rng = rng(config, 6);
        let rings = [CoefficientRing::Integers, CoefficientRing::Mod(2), CoefficientRing::Integers, CoefficientRing::Mod(3)];
        for trial in 0..200 {
            let ring = rings[trial % rings.len()];
            let c = random_complex(&mut rng, ring, 4, 4)?;
            let r = dold_kan_roundtrip(&c).map(|rep| rep.homology_matches && rep.isomorphisms.len() == c.ranks().len());
            t.check_result(r, || format!("trial {} over {} with ranks {:?}", trial, ring, c.ranks()));
        }
        Ok("200 complexes over Z, F_2, F_3 with ranks <= 4 and top degree <= 4".into())
    }
}

fn skeletal_functors() -> Vec<FunctorRef> {
    vec![Arc::new(Sym(2)), Arc::new(Sym(3)), Arc::new(Ext(2)), Arc::new(Tensor(2))]
}

fn random_matrix_mod(rng: &mut impl Rng, rows: usize, cols: usize, p: u64) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = int(rng.gen_range(0..p as i64));
        }
    }
    m
}

struct Skeletal;

impl Suite for Skeletal {
    fn name(&self) -> &'static str {
        "skeletal"
    }
    fn criterion(&self) -> Option<usize> {
        Some(7)
    }
    fn description(&self) -> &'static str {
        "a degree-d functor sends 1-skeletal nerves to d-skeletal objects"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(60)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        let mut rng = rng(config, 7);
        let functors = skeletal_functors();
        let mut sharp = 0;
        for trial in 0..50 {
            let p = if trial % 2 == 0 { 2 } else { 3 };
            let ring = CoefficientRing::Mod(p);
            let f = &functors[(trial / 2) % functors.len()];
            let d = f.degree();
            let a = rng.gen_range(1..=3);
            let b = rng.gen_range(1..=3);
            let map = random_matrix_mod(&mut rng, b, a, p);
            let x = cech_nerve(&map, ring, d + 1)?;
            let label = || format!("trial {}: {} on {}x{} nerve over F_{}", trial, f.spec(), b, a, p);
            let y = match apply_functor_levelwise(f.as_ref(), &x) {
                Ok(y) => y,
                Err(e) => {
                    t.check(false, || format!("{}: {}", label(), e));
                    continue;
                }
            };
            t.check_result(is_n_skeletal(&y, d), || format!("{}: not {}-skeletal", label(), d));
            let top = y.normalized_rank(d)?;
            let predicted = y.normalized_ranks_from_levels()[d];
            t.check(top as i64 == predicted, || format!("{}: rank N_{} = {}, level formula {}", label(), d, top, predicted));
            if top != 0 {
                sharp += 1;
                t.check_result(is_n_skeletal(&y, d - 1).map(|s| !s), || format!("{}: already {}-skeletal", label(), d - 1));
            }
        }
        Ok(format!("50 nerves over F_2 and F_3; {} with nonzero top normalized degree", sharp))
    }
}

/// A random injective `r × r'` matrix over `F_p`.
fn random_injection(rng: &mut impl Rng, r: usize, r1: usize, p: u64) -> IntMatrix {
    loop {
        let m = random_matrix_mod(rng, r, r1, p);
        if linalg::rank(CoefficientRing::Mod(p), &m) == r1 {
            return m;
        }
    }
}

struct K0Identify;

impl Suite for K0Identify {
    fn name(&self) -> &'static str {
        "k0identify"
    }
    fn criterion(&self) -> Option<usize> {
        Some(8)
    }
    fn description(&self) -> &'static str {
        "Euler classes of F applied to nerves depend only on the quotient"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(60)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        let mut rng = rng(config, 8);
        let ring = CoefficientRing::Mod(2);
        let functors: Vec<FunctorRef> = vec![Arc::new(Sym(2)), Arc::new(Ext(2)), Arc::new(Tensor(2))];
        let class = |f: &FunctorRef, map: &IntMatrix| -> Result<BigInt> {
            let x = cech_nerve(map, ring, f.degree() + 1)?;
            euler_class(&apply_functor_levelwise(f.as_ref(), &x)?, f.degree())
        };
        // the smallest case, k → k², written out
        let sym2: FunctorRef = Arc::new(Sym(2));
        let incl = IntMatrix::from_i64(&[&[1], &[0]]);
        t.check_result(class(&sym2, &incl).map(|c| c == int(1)), || "Sym^2 of k -> k^2 does not have class 1".into());
        for trial in 0..50 {
            let f = &functors[trial % functors.len()];
            let r1 = rng.gen_range(0..=3usize);
            let r2 = rng.gen_range(0..=3 - r1);
            let r = r1 + r2;
            let twisted = random_injection(&mut rng, r, r1, 2);
            let mut split = IntMatrix::zeros(r, r1);
            for i in 0..r1 {
                split[(i, i)] = int(1);
            }
            let label = || format!("trial {}: {} with ranks {} -> {}", trial, f.spec(), r1, r);
            match (class(f, &twisted), class(f, &split)) {
                (Ok(a), Ok(b)) => {
                    let oracle = int(f.output_rank(r2) as i64);
                    t.check(a == b && b == oracle, || format!("{}: classes {} and {}, rank F(X'') = {}", label(), a, b, oracle));
                }
                (Err(e), _) | (_, Err(e)) => t.check(false, || format!("{}: {}", label(), e)),
            }
        }
        Ok("50 short exact sequences over F_2 with ranks <= 3".into())
    }
}

struct Lambda;

impl Suite for Lambda {
    fn name(&self) -> &'static str {
        "lambda"
    }
    fn criterion(&self) -> Option<usize> {
        Some(9)
    }
    fn description(&self) -> &'static str {
        "lambda operations on K0 = Z at negative classes and the Vandermonde rule"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(1)
    }
    fn run_checks(&self, _config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        let fam = lambda_and_adams(4)?;
        let l = &fam.lambdas;
        t.check(l[2].evaluate_int(&[-1])? == int(1), || "lambda^2(-1) != 1".into());
        t.check(l[3].evaluate_int(&[-1])? == int(-1), || "lambda^3(-1) != -1".into());
        let ext2 = extend_over_group_completion(&PolyMap::binomial_map(Domain::naturals(), 2)?)?;
        for n in 1i64..=10 {
            let want = int(n * (n + 1) / 2);
            t.check(l[2].evaluate_int(&[-n])? == want, || format!("lambda^2(-{}) != {}", n, want));
            t.check(ext2.map.evaluate_int(&[-n])? == want, || format!("extended C(x,2) at -{} != {}", n, want));
        }
        for d in 0..=4usize {
            for xy in cube(2, 0, 6) {
                let (x, y) = (xy[0], xy[1]);
                let lhs = l[d].evaluate_int(&[x + y])?;
                let mut rhs = int(0);
                for i in 0..=d {
                    rhs += l[i].evaluate_int(&[x])? * l[d - i].evaluate_int(&[y])?;
                }
                t.check(lhs == rhs, || format!("Vandermonde fails for d = {} at ({}, {})", d, x, y));
            }
        }
        Ok("negative classes up to -10; Vandermonde on [0,6]^2 for d <= 4".into())
    }
}

struct Rnv;

impl Rnv {
    /// `#{a ∈ [0, p−1]ᵏ : Σ a ≤ n}` by enumeration.
    fn oracle(p: usize, k: usize, n: usize) -> usize {
        cube(k, 0, p as i64 - 1).into_iter().filter(|a| a.iter().sum::<i64>() <= n as i64).count()
    }
}

impl Suite for Rnv {
    fn name(&self) -> &'static str {
        "rnv"
    }
    fn criterion(&self) -> Option<usize> {
        Some(10)
    }
    fn description(&self) -> &'static str {
        "dimensions of F_p[V]/I^(n+1)"
    }
    fn budget(&self) -> Duration {
        Duration::from_secs(5)
    }
    fn run_checks(&self, config: &SuiteConfig, t: &mut Tally) -> Result<String> {
        for p in [2usize, 3] {
            for k in 1..=3usize {
                for n in 0..=4usize {
                    let q = passi_functor(k, n, p as u64, config.finite_cap)?;
                    let want = Self::oracle(p, k, n);
                    t.check(q.dimension() == want, || format!("p = {}, k = {}, n = {}: {} != {}", p, k, n, q.dimension(), want));
                }
            }
        }
        Ok("p in {2,3}, k <= 3, n <= 4".into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_lists_all_criteria() {
        let r = SuiteRegistry::default();
        for n in 1..=10 {
            assert!(r.by_criterion(n).is_some(), "criterion {}", n);
        }
        assert_eq!(r.ordered()[0].name(), "passi");
        assert!(r.get("nope").is_err());
    }

    #[test]
    fn rnv_oracle_small() {
        assert_eq!(Rnv::oracle(2, 3, 1), 4);
        assert_eq!(Rnv::oracle(3, 2, 4), 9);
    }

    #[test]
    fn random_complexes_are_complexes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let c = random_complex(&mut rng, CoefficientRing::Integers, 3, 3).unwrap();
            assert!(c.top() >= 1);
        }
    }

    #[test]
    fn laurent_window_is_free() {
        let g = QuotientRing::laurent_window(2, 4).unwrap();
        assert_eq!(g.describe(), "Z^3");
    }
}
