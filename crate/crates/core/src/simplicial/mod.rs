//! Truncated simplicial modules over `Z` or `F_p`, normalized chains, the
//! Dold-Kan inverse `Γ`, bar-construction nerves and levelwise application of
//! polynomial functors.
//!
//! A map `Rᵐ → Rⁿ` is an `n × m` matrix acting on column vectors. Level `k`
//! carries faces `d₀, …, d_k: X_k → X_{k−1}` and, below the top level,
//! degeneracies `s₀, …, s_k: X_k → X_{k+1}`.

mod functor;
pub(crate) mod linalg;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{FgAbelianGroup, IntMatrix};
use crate::binomial::binomial_u;
use crate::error::{Error, Result};
use crate::monoid_ring::CoefficientRing;

pub use functor::{
    Constant, DirectSum, Ext, FrobeniusTwist, FunctorRef, FunctorRegistry, PolynomialFunctor, Sym, Tensor,
};
pub(crate) use functor::sorted_tuples;
pub use linalg::rank_over_q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialModule {
    ring: CoefficientRing,
    ranks: Vec<usize>,
    /// faces[k][i] = d_i: X_k → X_{k−1}; faces[0] is empty
    faces: Vec<Vec<IntMatrix>>,
    /// degeneracies[k][j] = s_j: X_k → X_{k+1} for k < top
    degeneracies: Vec<Vec<IntMatrix>>,
    /// The caller's attestation that levels above the top are degenerate.
    degenerate_above: bool,
}

impl SimplicialModule {
    /// Validates shapes and every simplicial identity inside the truncation.
    pub fn new(
        ring: CoefficientRing,
        ranks: Vec<usize>,
        faces: Vec<Vec<IntMatrix>>,
        degeneracies: Vec<Vec<IntMatrix>>,
        degenerate_above: bool,
    ) -> Result<Self> {
        linalg::check_ring(ring)?;
        let faces = faces.into_iter().map(|l| l.into_iter().map(|m| linalg::reduce(ring, m)).collect()).collect();
        let degeneracies =
            degeneracies.into_iter().map(|l| l.into_iter().map(|m| linalg::reduce(ring, m)).collect()).collect();
        let x = SimplicialModule { ring, ranks, faces, degeneracies, degenerate_above };
        x.validate()?;
        Ok(x)
    }

    /// The constant simplicial module on `Rʳ`, truncated at `top`.
    pub fn constant(ring: CoefficientRing, rank: usize, top: usize) -> Result<Self> {
        let id = IntMatrix::identity(rank);
        let faces = (0..=top).map(|k| vec![id.clone(); if k == 0 { 0 } else { k + 1 }]).collect();
        let degeneracies = (0..top).map(|k| vec![id.clone(); k + 1]).collect();
        Self::new(ring, vec![rank; top + 1], faces, degeneracies, true)
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    /// Highest stored level.
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn face(&self, k: usize, i: usize) -> &IntMatrix {
        &self.faces[k][i]
    }

    pub fn degeneracy(&self, k: usize, j: usize) -> &IntMatrix {
        &self.degeneracies[k][j]
    }

    pub fn degenerate_above(&self) -> bool {
        self.degenerate_above
    }

    fn validate(&self) -> Result<()> {
        let r = self.ring;
        if self.ranks.is_empty() {
            return Err(Error::SimplicialIdentity("no levels".into()));
        }
        let top = self.top();
        if self.faces.len() != top + 1 || self.degeneracies.len() != top {
            return Err(Error::SimplicialIdentity(format!("expected faces for levels 0..={} and degeneracies below {}", top, top)));
        }
        for k in 0..=top {
            let expect = if k == 0 { 0 } else { k + 1 };
            if self.faces[k].len() != expect {
                return Err(Error::SimplicialIdentity(format!("level {} has {} faces", k, self.faces[k].len())));
            }
            for (i, d) in self.faces[k].iter().enumerate() {
                if d.shape() != (self.ranks[k - 1], self.ranks[k]) {
                    return Err(Error::SimplicialIdentity(format!("d_{} at level {} has shape {:?}", i, k, d.shape())));
                }
            }
        }
        for k in 0..top {
            if self.degeneracies[k].len() != k + 1 {
                return Err(Error::SimplicialIdentity(format!("level {} has {} degeneracies", k, self.degeneracies[k].len())));
            }
            for (j, s) in self.degeneracies[k].iter().enumerate() {
                if s.shape() != (self.ranks[k + 1], self.ranks[k]) {
                    return Err(Error::SimplicialIdentity(format!("s_{} at level {} has shape {:?}", j, k, s.shape())));
                }
            }
        }
        let fail = |what: String| Err(Error::SimplicialIdentity(what));
        // d_i d_j = d_{j−1} d_i for i < j
        for k in 2..=top {
            for j in 1..=k {
                for i in 0..j {
                    let lhs = linalg::mul(r, &self.faces[k - 1][i], &self.faces[k][j])?;
                    let rhs = linalg::mul(r, &self.faces[k - 1][j - 1], &self.faces[k][i])?;
                    if !linalg::equal(r, &lhs, &rhs) {
                        return fail(format!("d_{} d_{} != d_{} d_{} at level {}", i, j, j - 1, i, k));
                    }
                }
            }
        }
        for k in 0..top {
            let id = IntMatrix::identity(self.ranks[k]);
            for j in 0..=k {
                let s = &self.degeneracies[k][j];
                for i in 0..=k + 1 {
                    let lhs = linalg::mul(r, &self.faces[k + 1][i], s)?;
                    let rhs = if i < j {
                        linalg::mul(r, &self.degeneracies[k - 1][j - 1], &self.faces[k][i])?
                    } else if i == j || i == j + 1 {
                        id.clone()
                    } else {
                        linalg::mul(r, &self.degeneracies[k - 1][j], &self.faces[k][i - 1])?
                    };
                    if !linalg::equal(r, &lhs, &rhs) {
                        return fail(format!("d_{} s_{} identity fails at level {}", i, j, k));
                    }
                }
                // s_i s_j = s_{j+1} s_i for i ≤ j
                if k + 2 <= top {
                    for i in 0..=j {
                        let lhs = linalg::mul(r, &self.degeneracies[k + 1][i], s)?;
                        let rhs = linalg::mul(r, &self.degeneracies[k + 1][j + 1], &self.degeneracies[k][i])?;
                        if !linalg::equal(r, &lhs, &rhs) {
                            return fail(format!("s_{} s_{} != s_{} s_{} at level {}", i, j, j + 1, i, k));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Ranks of the normalized pieces predicted from level ranks alone:
    /// `rank N_k = Σ_i (−1)^{k−i} C(k, i) rank X_i`, since `X_k ≅ ⊕ N_i^{C(k,i)}`.
    pub fn normalized_ranks_from_levels(&self) -> Vec<i64> {
        (0..=self.top())
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let s = if (k - i) % 2 == 0 { 1 } else { -1 };
                        s * binomial_u(k, i) as i64 * self.ranks[i] as i64
                    })
                    .sum()
            })
            .collect()
    }

    /// `rank N_k`, computed from the common kernel of `d₁, …, d_k`.
    pub fn normalized_rank(&self, k: usize) -> Result<usize> {
        if k == 0 {
            return Ok(self.ranks[0]);
        }
        let stacked = IntMatrix::vstack(&self.faces[k][1..], self.ranks[k])?;
        Ok(self.ranks[k] - linalg::rank(self.ring, &stacked))
    }
}

/// A bounded chain complex of free modules, `C₀ ← C₁ ← ⋯ ← C_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: CoefficientRing,
    ranks: Vec<usize>,
    /// diffs[k − 1] = ∂_k: C_k → C_{k−1}
    diffs: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn new(ring: CoefficientRing, ranks: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self> {
        linalg::check_ring(ring)?;
        if ranks.is_empty() || diffs.len() + 1 != ranks.len() {
            return Err(Error::NotAComplex(format!("{} ranks need {} differentials", ranks.len(), ranks.len().saturating_sub(1))));
        }
        let diffs: Vec<IntMatrix> = diffs.into_iter().map(|d| linalg::reduce(ring, d)).collect();
        for (k, d) in diffs.iter().enumerate() {
            if d.shape() != (ranks[k], ranks[k + 1]) {
                return Err(Error::NotAComplex(format!("differential in degree {} has shape {:?}", k + 1, d.shape())));
            }
        }
        for k in 1..diffs.len() {
            if !linalg::is_zero(ring, &linalg::mul(ring, &diffs[k - 1], &diffs[k])?) {
                return Err(Error::NotAComplex(format!("d_{} d_{} is not zero", k, k + 1)));
            }
        }
        Ok(ChainComplex { ring, ranks, diffs })
    }

    /// `Rʳ` placed in a single degree.
    pub fn concentrated(ring: CoefficientRing, rank: usize, degree: usize) -> Result<Self> {
        let mut ranks = vec![0; degree + 1];
        ranks[degree] = rank;
        let diffs = (1..=degree).map(|k| IntMatrix::zeros(ranks[k - 1], ranks[k])).collect();
        Self::new(ring, ranks, diffs)
    }

    /// `R^a → R^b` in degrees 1, 0.
    pub fn two_term(ring: CoefficientRing, d: IntMatrix) -> Result<Self> {
        Self::new(ring, vec![d.rows(), d.cols()], vec![d])
    }

    pub fn ring(&self) -> CoefficientRing {
        self.ring
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `∂_k` for `1 ≤ k ≤ top`.
    pub fn differential(&self, k: usize) -> &IntMatrix {
        &self.diffs[k - 1]
    }

    pub fn differentials(&self) -> &[IntMatrix] {
        &self.diffs
    }

    /// `Σ (−1)ᵏ rank C_k`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.ranks.iter().enumerate().map(|(k, &r)| if k % 2 == 0 { BigInt::from(r) } else { -BigInt::from(r) }).sum()
    }

    /// `H_k` for `k = 0..=top`, treating the complex as zero above the top.
    pub fn homology(&self) -> Result<Vec<FgAbelianGroup>> {
        (0..=self.top()).map(|k| self.homology_at(k)).collect()
    }

    pub fn homology_at(&self, k: usize) -> Result<FgAbelianGroup> {
        let n = self.ranks[k];
        let kernel = if k == 0 { linalg::kernel(self.ring, &IntMatrix::zeros(0, n)) } else { linalg::kernel(self.ring, self.differential(k)) };
        let image_rows: Vec<Vec<BigInt>> = if k < self.top() {
            // columns of ∂_{k+1}, expressed in kernel coordinates
            let img = linalg::mul(self.ring, &kernel.coords, self.differential(k + 1))?;
            img.transpose().to_rows()
        } else {
            Vec::new()
        };
        Ok(FgAbelianGroup::from_relation_rows(kernel.dim(), image_rows, self.ring.modulus()))
    }
}

/// Normalized chains with the inclusion `N_k ⊂ X_k` recorded as a basis.
#[derive(Clone, Debug)]
pub struct NormalizedChains {
    pub complex: ChainComplex,
    /// `ranks[k] × rank N_k`, columns span `N_k`.
    pub inclusions: Vec<IntMatrix>,
    /// Left inverses of the inclusions on `N_k`.
    pub coordinates: Vec<IntMatrix>,
}

/// `N_k = ∩_{i≥1} ker d_i` with differential induced by `d₀`.
pub fn normalized_chains(x: &SimplicialModule) -> Result<NormalizedChains> {
    let r = x.ring;
    let mut inclusions = Vec::with_capacity(x.top() + 1);
    let mut coordinates = Vec::with_capacity(x.top() + 1);
    for k in 0..=x.top() {
        if k == 0 {
            inclusions.push(IntMatrix::identity(x.ranks[0]));
            coordinates.push(IntMatrix::identity(x.ranks[0]));
            continue;
        }
        let stacked = IntMatrix::vstack(&x.faces[k][1..], x.ranks[k])?;
        let ker = linalg::kernel(r, &stacked);
        inclusions.push(ker.basis);
        coordinates.push(ker.coords);
    }
    let ranks: Vec<usize> = inclusions.iter().map(|b| b.cols()).collect();
    let mut diffs = Vec::with_capacity(x.top());
    for k in 1..=x.top() {
        let image = linalg::mul(r, &x.faces[k][0], &inclusions[k])?;
        diffs.push(linalg::mul(r, &coordinates[k - 1], &image)?);
    }
    Ok(NormalizedChains { complex: ChainComplex::new(r, ranks, diffs)?, inclusions, coordinates })
}

/// The alternating-face (Moore) complex, kept as an internal cross-check.
pub fn moore_complex(x: &SimplicialModule) -> Result<ChainComplex> {
    let mut diffs = Vec::new();
    for k in 1..=x.top() {
        let mut acc = IntMatrix::zeros(x.ranks[k - 1], x.ranks[k]);
        for (i, d) in x.faces[k].iter().enumerate() {
            acc = if i % 2 == 0 { acc.add(d)? } else { acc.add(&d.scale(&-BigInt::one()))? };
        }
        diffs.push(acc);
    }
    ChainComplex::new(x.ring, x.ranks.clone(), diffs)
}

/// Order-preserving surjections `[n] ↠ [k]`, as value lists, in the order of
/// their jump sets `S ⊂ {1..n}` (lexicographic).
fn surjections(n: usize, k: usize) -> Vec<Vec<usize>> {
    sorted_tuples(n, k, true)
        .into_iter()
        .map(|jumps| {
            let jumps: Vec<usize> = jumps.into_iter().map(|j| j + 1).collect();
            (0..=n).map(|i| jumps.iter().filter(|&&s| s <= i).count()).collect()
        })
        .collect()
}

struct GammaLevel {
    rank: usize,
    /// surjection values → (offset, target dimension k)
    index: HashMap<Vec<usize>, (usize, usize)>,
    order: Vec<Vec<usize>>,
}

fn gamma_level(c: &ChainComplex, n: usize) -> GammaLevel {
    let mut index = HashMap::new();
    let mut order = Vec::new();
    let mut offset = 0;
    for k in 0..=n.min(c.top()) {
        for s in surjections(n, k) {
            index.insert(s.clone(), (offset, k));
            order.push(s);
            offset += c.ranks[k];
        }
    }
    GammaLevel { rank: offset, index, order }
}

fn place(m: &mut IntMatrix, row: usize, col: usize, block: &IntMatrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            if !block[(i, j)].is_zero() {
                m[(row + i, col + j)] = block[(i, j)].clone();
            }
        }
    }
}

/// `Γ(C)` truncated at `levels`: level `n` is `⊕_{[n]↠[k]} C_k`.
///
/// For `θ: [m] → [n]` and a summand indexed by `σ: [n] ↠ [k]`, factor
/// `σθ = δτ` with `τ` surjective and `δ` injective. The summand maps by the
/// identity to summand `τ` when `δ = id`, by `∂` when `δ` is the coface
/// missing `0`, and by zero otherwise.
pub fn dk_gamma(c: &ChainComplex, levels: usize) -> Result<SimplicialModule> {
    let lv: Vec<GammaLevel> = (0..=levels).map(|n| gamma_level(c, n)).collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=levels {
        let mut level_faces = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut d = IntMatrix::zeros(lv[n - 1].rank, lv[n].rank);
            for sigma in &lv[n].order {
                let (col, k) = lv[n].index[sigma];
                // σ ∘ δⁱ on [n−1]
                let phi: Vec<usize> = (0..n).map(|t| sigma[if t < i { t } else { t + 1 }]).collect();
                let mut image: Vec<usize> = phi.clone();
                image.dedup();
                if image.len() == k + 1 {
                    let (row, _) = lv[n - 1].index[&phi];
                    place(&mut d, row, col, &IntMatrix::identity(c.ranks[k]));
                } else if k >= 1 && image.len() == k && image[0] == 1 {
                    let tau: Vec<usize> = phi.iter().map(|v| v - 1).collect();
                    let (row, _) = lv[n - 1].index[&tau];
                    place(&mut d, row, col, c.differential(k));
                }
            }
            level_faces.push(d);
        }
        faces.push(level_faces);
    }
    let mut degeneracies = Vec::with_capacity(levels);
    for n in 0..levels {
        let mut level_degs = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut s = IntMatrix::zeros(lv[n + 1].rank, lv[n].rank);
            for sigma in &lv[n].order {
                let (col, k) = lv[n].index[sigma];
                // σ ∘ σʲ on [n+1]
                let phi: Vec<usize> = (0..=n + 1).map(|t| sigma[if t <= j { t } else { t - 1 }]).collect();
                let (row, _) = lv[n + 1].index[&phi];
                place(&mut s, row, col, &IntMatrix::identity(c.ranks[k]));
            }
            level_degs.push(s);
        }
        degeneracies.push(level_degs);
    }
    let ranks = lv.iter().map(|l| l.rank).collect();
    SimplicialModule::new(c.ring, ranks, faces, degeneracies, levels >= c.top())
}

/// Evidence that `N(Γ(C)) ≅ C`.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    /// `φ_k: C_k → N_k` in kernel coordinates; each is invertible.
    pub isomorphisms: Vec<IntMatrix>,
    pub homology_matches: bool,
}

/// Builds `Γ(C)`, takes normalized chains and checks that the inclusion of
/// the nondegenerate summands is an isomorphism of chain complexes.
pub fn dold_kan_roundtrip(c: &ChainComplex) -> Result<RoundtripReport> {
    let r = c.ring;
    let levels = c.top();
    let x = dk_gamma(c, levels)?;
    let n = normalized_chains(&x)?;
    let mut isos = Vec::with_capacity(levels + 1);
    for k in 0..=levels {
        let lv = gamma_level(c, k);
        let id_sigma: Vec<usize> = (0..=k).collect();
        let (offset, _) = lv.index[&id_sigma];
        let mut iota = IntMatrix::zeros(lv.rank, c.ranks[k]);
        place(&mut iota, offset, 0, &IntMatrix::identity(c.ranks[k]));
        let phi = linalg::mul(r, &n.coordinates[k], &iota)?;
        let back = linalg::mul(r, &n.inclusions[k], &phi)?;
        if !linalg::equal(r, &back, &iota) {
            return Err(Error::NotAComplex(format!("degree {} summand is not normalized", k)));
        }
        if !linalg::is_invertible(r, &phi) {
            return Err(Error::NotAComplex(format!("degree {} comparison is not invertible", k)));
        }
        if k >= 1 {
            let lhs = linalg::mul(r, n.complex.differential(k), &phi)?;
            let rhs = linalg::mul(r, &isos[k - 1], c.differential(k))?;
            if !linalg::equal(r, &lhs, &rhs) {
                return Err(Error::NotAComplex(format!("comparison is not a chain map in degree {}", k)));
            }
        }
        isos.push(phi);
    }
    let hc = c.homology()?;
    let hn = n.complex.homology()?;
    let homology_matches = hc.iter().zip(&hn).all(|(a, b)| a.same_structure(b));
    Ok(RoundtripReport { isomorphisms: isos, homology_matches })
}

/// Largest `k ≤ top` with `N_k ≠ 0`, if any.
pub fn top_normalized_degree(x: &SimplicialModule) -> Result<Option<usize>> {
    for k in (0..=x.top()).rev() {
        if x.normalized_rank(k)? != 0 {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Whether normalized chains vanish in degrees `n+1..=top`.
pub fn is_n_skeletal(x: &SimplicialModule, n: usize) -> Result<bool> {
    if x.top() < n + 1 {
        return Err(Error::TruncationTooSmall { have: x.top(), need: n + 1 });
    }
    if !x.degenerate_above {
        return Err(Error::Unsupported("levels above the truncation are not attested degenerate".into()));
    }
    for k in n + 1..=x.top() {
        if x.normalized_rank(k)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The bar construction of `f: X' → X`: level `n` is `X'^{⊕n} ⊕ X`, with
/// `d₀(a₁,…,aₙ,x) = (a₂,…,aₙ, x + f a₁)`, inner faces adding neighbours,
/// the last face dropping `aₙ`, and `s_j` inserting a zero after `a_j`.
pub fn cech_nerve(f: &IntMatrix, ring: CoefficientRing, levels: usize) -> Result<SimplicialModule> {
    let (b, a) = f.shape();
    let rank = |n: usize| n * a + b;
    let ida = IntMatrix::identity(a);
    let idb = IntMatrix::identity(b);
    let mut faces = vec![Vec::new()];
    for n in 1..=levels {
        let mut level = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut d = IntMatrix::zeros(rank(n - 1), rank(n));
            let x_src = n * a;
            let x_dst = (n - 1) * a;
            place(&mut d, x_dst, x_src, &idb);
            if i == 0 {
                for t in 1..n {
                    place(&mut d, (t - 1) * a, t * a, &ida);
                }
                place(&mut d, x_dst, 0, f);
            } else {
                for t in 0..n {
                    // slot t holds a_{t+1}; d_i merges a_i and a_{i+1} for i < n, d_n drops a_n
                    let dst = if t + 1 < i {
                        Some(t)
                    } else if i == n {
                        None
                    } else if t < i + 1 {
                        Some(i - 1)
                    } else {
                        Some(t - 1)
                    };
                    if let Some(dst) = dst {
                        place(&mut d, dst * a, t * a, &ida);
                    }
                }
            }
            level.push(d);
        }
        faces.push(level);
    }
    let mut degeneracies = Vec::with_capacity(levels);
    for n in 0..levels {
        let mut level = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut s = IntMatrix::zeros(rank(n + 1), rank(n));
            for t in 0..n {
                let dst = if t < j { t } else { t + 1 };
                place(&mut s, dst * a, t * a, &ida);
            }
            place(&mut s, (n + 1) * a, n * a, &idb);
            level.push(s);
        }
        degeneracies.push(level);
    }
    SimplicialModule::new(ring, (0..=levels).map(rank).collect(), faces, degeneracies, true)
}

/// `F(X)` levelwise.
///
/// The input must be certified `s`-skeletal inside its truncation and the
/// truncation must reach `s·d + 1`, so the output's skeletality can be checked.
pub fn apply_functor_levelwise(f: &dyn PolynomialFunctor, x: &SimplicialModule) -> Result<SimplicialModule> {
    f.check_ring(x.ring)?;
    let s = match top_normalized_degree(x)? {
        Some(s) if s == x.top() => return Err(Error::TruncationTooSmall { have: x.top(), need: x.top() + 1 }),
        Some(s) => s,
        None => 0,
    };
    let need = s * f.degree() + 1;
    if x.top() < need {
        return Err(Error::TruncationTooSmall { have: x.top(), need });
    }
    apply_functor_unchecked(f, x)
}

fn apply_functor_unchecked(f: &dyn PolynomialFunctor, x: &SimplicialModule) -> Result<SimplicialModule> {
    let r = x.ring;
    let ranks = x.ranks.iter().map(|&m| f.output_rank(m)).collect();
    let faces = x.faces.iter().map(|l| l.iter().map(|m| f.apply(m, r)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    let degeneracies =
        x.degeneracies.iter().map(|l| l.iter().map(|m| f.apply(m, r)).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    SimplicialModule::new(r, ranks, faces, degeneracies, x.degenerate_above)
}

/// `Σ_{k≤n} (−1)ᵏ rank N_k` for the least `n ≤ bound` at which `X` is
/// certified `n`-skeletal.
pub fn euler_class(x: &SimplicialModule, bound: usize) -> Result<BigInt> {
    for n in 0..=bound {
        if is_n_skeletal(x, n)? {
            let mut acc = BigInt::zero();
            for k in 0..=n {
                let r = BigInt::from(x.normalized_rank(k)?);
                acc += if k % 2 == 0 { r } else { -r };
            }
            return Ok(acc);
        }
    }
    let degree = top_normalized_degree(x)?.unwrap_or(bound + 1);
    Err(Error::NotSkeletal { bound, degree })
}

/// Homology of `N(F(Γ(C)))`, the classical derived functors of `F` at `C`.
///
/// `Γ(C)` is `c`-skeletal for `c` the top degree of `C`, so `F(Γ(C))` is
/// `c·d`-skeletal and a truncation at `c·d + 1` suffices.
pub fn derived_functor_homology(f: &dyn PolynomialFunctor, c: &ChainComplex) -> Result<Vec<FgAbelianGroup>> {
    f.check_ring(c.ring)?;
    let top = c.top() * f.degree().max(1);
    let gamma = dk_gamma(c, top + 1)?;
    let y = apply_functor_unchecked(f, &gamma)?;
    if !is_n_skeletal(&y, top)? {
        return Err(Error::NotSkeletal { bound: top, degree: top + 1 });
    }
    let n = normalized_chains(&y)?;
    (0..=top).map(|k| n.complex.homology_at(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoefficientRing = CoefficientRing::Integers;
    const F2: CoefficientRing = CoefficientRing::Mod(2);

    #[test]
    fn constant_module_normalizes_to_degree_zero() {
        let x = SimplicialModule::constant(Z, 3, 3).unwrap();
        let n = normalized_chains(&x).unwrap();
        assert_eq!(n.complex.ranks(), &[3, 0, 0, 0]);
        assert!(is_n_skeletal(&x, 0).unwrap());
        assert_eq!(euler_class(&x, 0).unwrap(), BigInt::from(3));
    }

    #[test]
    fn nerve_of_inclusion_over_field() {
        let f = IntMatrix::from_i64(&[&[1], &[0]]);
        let x = cech_nerve(&f, F2, 3).unwrap();
        assert_eq!(x.ranks(), &[2, 3, 4, 5]);
        let n = normalized_chains(&x).unwrap();
        assert_eq!(n.complex.ranks(), &[2, 1, 0, 0]);
        // the normalized differential is f itself
        assert_eq!(n.complex.differential(1).column(0).iter().filter(|v| !v.is_zero()).count(), 1);
        assert!(is_n_skeletal(&x, 1).unwrap());
        assert!(!is_n_skeletal(&x, 0).unwrap());
        assert_eq!(euler_class(&x, 3).unwrap(), BigInt::from(1));
    }

    #[test]
    fn nerve_of_zero_map() {
        let f = IntMatrix::zeros(0, 2);
        let x = cech_nerve(&f, Z, 3).unwrap();
        assert_eq!(x.ranks(), &[0, 2, 4, 6]);
        assert_eq!(normalized_chains(&x).unwrap().complex.ranks(), &[0, 2, 0, 0]);
    }

    #[test]
    fn nerve_of_identity_is_acyclic() {
        let x = cech_nerve(&IntMatrix::identity(2), Z, 3).unwrap();
        let h = normalized_chains(&x).unwrap().complex.homology().unwrap();
        assert!(h.iter().all(|g| g.is_trivial()));
    }

    #[test]
    fn sym_square_of_nerve() {
        let f = IntMatrix::from_i64(&[&[1], &[0]]);
        let x = cech_nerve(&f, F2, 3).unwrap();
        let y = apply_functor_levelwise(&Sym(2), &x).unwrap();
        assert_eq!(y.ranks(), &[3, 6, 10, 15]);
        assert_eq!(normalized_chains(&y).unwrap().complex.ranks(), &[3, 3, 1, 0]);
        assert_eq!(y.normalized_ranks_from_levels(), vec![3, 3, 1, 0]);
        assert!(is_n_skeletal(&y, 2).unwrap());
        assert_eq!(euler_class(&y, 2).unwrap(), BigInt::from(1));
    }

    #[test]
    fn truncation_is_enforced() {
        let x = cech_nerve(&IntMatrix::from_i64(&[&[1], &[0]]), F2, 2).unwrap();
        assert!(matches!(apply_functor_levelwise(&Sym(2), &x), Err(Error::TruncationTooSmall { have: 2, need: 3 })));
        assert!(matches!(is_n_skeletal(&x, 2), Err(Error::TruncationTooSmall { .. })));
    }

    #[test]
    fn gamma_of_point_in_degree_one() {
        let c = ChainComplex::concentrated(Z, 1, 1).unwrap();
        let x = dk_gamma(&c, 3).unwrap();
        assert_eq!(x.ranks(), &[0, 1, 2, 3]);
        assert_eq!(normalized_chains(&x).unwrap().complex.ranks(), &[0, 1, 0, 0]);
    }

    #[test]
    fn gamma_roundtrip_with_differential() {
        let c = ChainComplex::two_term(Z, IntMatrix::from_i64(&[&[2]])).unwrap();
        let rep = dold_kan_roundtrip(&c).unwrap();
        assert!(rep.homology_matches);
        let x = dk_gamma(&c, 2).unwrap();
        let h = normalized_chains(&x).unwrap().complex.homology().unwrap();
        assert_eq!(h[0].describe(), "Z/2");
        assert!(h[1].is_trivial());
    }

    #[test]
    fn gamma_in_degree_two_is_not_one_skeletal() {
        let c = ChainComplex::concentrated(Z, 1, 2).unwrap();
        let x = dk_gamma(&c, 3).unwrap();
        assert!(!is_n_skeletal(&x, 1).unwrap());
        assert!(is_n_skeletal(&x, 2).unwrap());
    }

    #[test]
    fn functor_of_constant_is_constant() {
        let x = SimplicialModule::constant(F2, 3, 2).unwrap();
        let y = apply_functor_levelwise(&Ext(2), &x).unwrap();
        assert_eq!(y, SimplicialModule::constant(F2, 3, 2).unwrap());
        let t = apply_functor_levelwise(&Tensor(1), &x).unwrap();
        assert_eq!(t, x);
    }

    #[test]
    fn moore_and_normalized_agree_on_homology() {
        let c = ChainComplex::new(Z, vec![1, 2, 1], vec![IntMatrix::from_i64(&[&[2, 2]]), IntMatrix::from_i64(&[&[1], &[-1]])]).unwrap();
        let x = dk_gamma(&c, 3).unwrap();
        let m = moore_complex(&x).unwrap().homology().unwrap();
        let n = normalized_chains(&x).unwrap().complex.homology().unwrap();
        for k in 0..3 {
            assert!(m[k].same_structure(&n[k]), "degree {}", k);
        }
    }

    #[test]
    fn rejects_broken_identities() {
        let mut x = SimplicialModule::constant(Z, 1, 2).unwrap();
        x.faces[2][1] = IntMatrix::from_i64(&[&[2]]);
        assert!(x.validate().is_err());
        assert!(ChainComplex::new(Z, vec![1, 1, 1], vec![IntMatrix::identity(1), IntMatrix::identity(1)]).is_err());
    }

    #[test]
    fn tensor_square_derived() {
        let c = ChainComplex::two_term(Z, IntMatrix::from_i64(&[&[2]])).unwrap();
        let h = derived_functor_homology(&Tensor(2), &c).unwrap();
        // oracle: the tensor square C ⊗ C written out by hand
        // (C⊗C)₁ = C₁⊗C₀ ⊕ C₀⊗C₁ → (C⊗C)₀ by (2, 2); (C⊗C)₂ → (C⊗C)₁ by (2, −2)
        let cc = ChainComplex::new(Z, vec![1, 2, 1], vec![IntMatrix::from_i64(&[&[2, 2]]), IntMatrix::from_i64(&[&[2], &[-2]])]).unwrap();
        let oracle = cc.homology().unwrap();
        assert_eq!(h.len(), 3);
        for k in 0..3 {
            assert!(h[k].same_structure(&oracle[k]), "degree {}: {} vs {}", k, h[k], oracle[k]);
        }
        assert_eq!(h[0].describe(), "Z/2");
        assert_eq!(h[1].describe(), "Z/2");
        assert!(h[2].is_trivial());
    }

    #[test]
    fn sym_square_of_acyclic_vanishes() {
        let c = ChainComplex::two_term(Z, IntMatrix::identity(1)).unwrap();
        let h = derived_functor_homology(&Sym(2), &c).unwrap();
        assert!(h.iter().all(|g| g.is_trivial()));
    }

    #[test]
    fn derived_of_module_in_degree_zero() {
        let c = ChainComplex::concentrated(Z, 2, 0).unwrap();
        let h = derived_functor_homology(&Sym(2), &c).unwrap();
        assert_eq!(h[0].describe(), "Z^3");
    }
}
