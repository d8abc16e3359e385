//! Smith normal form over the integers, plus the two reductions built on it:
//! incremental row echelon for tall relation matrices and integer kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`]: `u * a * v == d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal(&self.d).into_iter().filter(|x| !x.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

pub(crate) fn diagonal(d: &IntMatrix) -> Vec<BigInt> {
    (0..d.rows().min(d.cols())).map(|i| d[(i, i)].clone()).collect()
}

/// Computes `U·A·V = D` with `U`, `V` unimodular and `D` diagonal with
/// nonnegative entries `d₁ | d₂ | …`.
///
/// Pivots are chosen as the entry of minimal nonzero absolute value in the
/// remaining block, ties broken by smallest (row, col), so the output is a
/// deterministic function of the input.
pub fn smith_normal_form(a: &IntMatrix) -> Snf {
    let r = SnfEngine::run(a.clone(), true, true, false);
    Snf { u: r.u.unwrap(), d: r.d, v: r.v.unwrap() }
}

pub(crate) struct SnfOutput {
    pub d: IntMatrix,
    pub u: Option<IntMatrix>,
    pub v: Option<IntMatrix>,
    pub v_inv: Option<IntMatrix>,
}

struct SnfEngine {
    d: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
    v_inv: Option<IntMatrix>,
}

impl SnfEngine {
    pub(crate) fn run(a: IntMatrix, track_u: bool, track_v: bool, track_v_inv: bool) -> SnfOutput {
        let (m, n) = a.shape();
        let mut e = SnfEngine {
            d: a,
            u: track_u.then(|| IntMatrix::identity(m)),
            v: track_v.then(|| IntMatrix::identity(n)),
            v_inv: track_v_inv.then(|| IntMatrix::identity(n)),
        };
        for t in 0..m.min(n) {
            if !e.reduce_block(t) {
                break;
            }
        }
        SnfOutput { d: e.d, u: e.u, v: e.v, v_inv: e.v_inv }
    }

    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let (m, n) = self.d.shape();
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..m {
            for j in t..n {
                let x = &self.d[(i, j)];
                if x.is_zero() {
                    continue;
                }
                let ax = x.abs();
                if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        if let Some(u) = &mut self.u {
            u.swap_rows(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        if let Some(v) = &mut self.v {
            v.swap_cols(a, b);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(a, b);
        }
    }

    // row[dst] += c·row[src]
    fn row_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_row_multiple(dst, src, c);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, c);
        }
    }

    // col[dst] += c·col[src]; the inverse picks up row[src] -= c·row[dst]
    fn col_op(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.d.add_col_multiple(dst, src, c);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, c);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.add_row_multiple(src, dst, &-c);
        }
    }

    /// Diagonalizes position `t`. Returns false once the remaining block is zero.
    fn reduce_block(&mut self, t: usize) -> bool {
        let (m, n) = self.d.shape();
        loop {
            let Some((pi, pj)) = self.pivot(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let p = self.d[(t, t)].clone();

            let mut clean = true;
            for i in t + 1..m {
                let x = &self.d[(i, t)];
                if x.is_zero() {
                    continue;
                }
                let q = x / &p;
                self.row_op(i, t, &-q);
                if !self.d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                let x = &self.d[(t, j)];
                if x.is_zero() {
                    continue;
                }
                let q = x / &p;
                self.col_op(j, t, &-q);
                if !self.d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }

            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !self.d[(i, j)].is_multiple_of(&p)));
            if let Some(i) = bad_row {
                self.row_op(t, i, &BigInt::one());
                continue;
            }

            if p.is_negative() {
                self.d.negate_row(t);
                if let Some(u) = &mut self.u {
                    u.negate_row(t);
                }
            }
            return true;
        }
    }
}

/// Rows kept in echelon form over `Z`; rows are inserted one at a time so that
/// very tall relation matrices never have to be materialized.
///
/// With a modulus `m`, the row lattice is understood to contain `m·Zⁿ`, so
/// entries are reduced into `[0, m)` after every operation.
pub(crate) struct Echelon {
    cols: usize,
    modulus: Option<BigInt>,
    pivots: Vec<usize>,
    rows: Vec<Vec<BigInt>>,
}

impl Echelon {
    pub fn new(cols: usize, modulus: Option<BigInt>) -> Self {
        Echelon { cols, modulus, pivots: Vec::new(), rows: Vec::new() }
    }

    fn reduce(&self, r: &mut [BigInt]) {
        if let Some(m) = &self.modulus {
            for x in r.iter_mut() {
                if x.is_negative() || &*x >= m {
                    *x = x.mod_floor(m);
                }
            }
        }
    }

    pub fn insert(&mut self, mut r: Vec<BigInt>) {
        debug_assert_eq!(r.len(), self.cols);
        self.reduce(&mut r);
        loop {
            let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
                return;
            };
            match self.pivots.binary_search(&lead) {
                Err(pos) => {
                    self.pivots.insert(pos, lead);
                    self.rows.insert(pos, r);
                    return;
                }
                Ok(k) => {
                    let p = self.rows[k][lead].clone();
                    let x = r[lead].clone();
                    if x.is_multiple_of(&p) {
                        let q = &x / &p;
                        for (a, b) in r.iter_mut().zip(&self.rows[k]) {
                            if !b.is_zero() {
                                *a -= &q * b;
                            }
                        }
                    } else {
                        let eg = p.extended_gcd(&x);
                        let (g, s, t) = (eg.gcd, eg.x, eg.y);
                        let a = &p / &g;
                        let b = &x / &g;
                        let old = std::mem::take(&mut self.rows[k]);
                        let top: Vec<BigInt> = old.iter().zip(&r).map(|(o, y)| &s * o + &t * y).collect();
                        let bottom: Vec<BigInt> = old.iter().zip(&r).map(|(o, y)| &a * y - &b * o).collect();
                        let mut top = top;
                        self.reduce(&mut top);
                        self.rows[k] = top;
                        r = bottom;
                    }
                    self.reduce(&mut r);
                }
            }
        }
    }

    /// Echelon rows, followed by `m·I` when a modulus is set.
    pub fn into_matrix(self) -> IntMatrix {
        let mut rows = self.rows;
        if let Some(m) = &self.modulus {
            for j in 0..self.cols {
                let mut e = vec![BigInt::zero(); self.cols];
                e[j] = m.clone();
                rows.push(e);
            }
        }
        IntMatrix::from_rows(&rows, self.cols).expect("echelon rows have uniform width")
    }
}

/// Basis of a kernel together with a coordinate map: `coords · basis = I`, and
/// every kernel vector `v` satisfies `v = basis · (coords · v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    /// `n × k`, columns span the kernel.
    pub basis: IntMatrix,
    /// `k × n`.
    pub coords: IntMatrix,
}

impl Kernel {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }
}

/// Kernel of `a` (acting on column vectors) over `Z`. The kernel is a saturated
/// sublattice, hence a direct summand with the returned basis.
pub fn integer_kernel(a: &IntMatrix) -> Kernel {
    let n = a.cols();
    let mut ech = Echelon::new(n, None);
    for i in 0..a.rows() {
        ech.insert(a.row(i).to_vec());
    }
    let reduced = ech.into_matrix();
    let out = SnfEngine::run(reduced, false, true, true);
    let rank = diagonal(&out.d).iter().filter(|x| !x.is_zero()).count();
    let idx: Vec<usize> = (rank..n).collect();
    Kernel {
        basis: out.v.unwrap().select_columns(&idx),
        coords: out.v_inv.unwrap().select_rows(&idx),
    }
}

/// Row echelon + SNF tracking only `V` and `V⁻¹`; the shape used to build
/// presentations of finitely generated abelian groups.
pub(crate) fn relation_snf(gens: usize, rows: impl IntoIterator<Item = Vec<BigInt>>, modulus: Option<BigInt>) -> SnfOutput {
    let mut ech = Echelon::new(gens, modulus);
    for r in rows {
        ech.insert(r);
    }
    SnfEngine::run(ech.into_matrix(), false, true, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent oracle: d₁ = gcd of all entries, d₁d₂ = gcd of all 2x2
    /// minors, and so on (determinantal divisors).
    fn determinantal_divisors(a: &IntMatrix) -> Vec<BigInt> {
        let (m, n) = a.shape();
        let mut out = Vec::new();
        let mut prev = BigInt::one();
        for k in 1..=m.min(n) {
            let mut g = BigInt::zero();
            for rs in combos(m, k) {
                for cs in combos(n, k) {
                    let sub = a.select_rows(&rs).select_columns(&cs);
                    g = g.gcd(&sub.determinant().unwrap());
                }
            }
            if g.is_zero() {
                break;
            }
            out.push(&g / &prev);
            prev = g;
        }
        out
    }

    fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
        fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, k, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn diag_two_three() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, IntMatrix::from_i64(&[&[1, 0], &[0, 6]]));
        assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(determinantal_divisors(&a), vec![big(1), big(6)]);
    }

    #[test]
    fn zero_one_by_one() {
        let s = smith_normal_form(&IntMatrix::from_i64(&[&[0]]));
        assert_eq!(s.d, IntMatrix::from_i64(&[&[0]]));
        assert_eq!(s.u, IntMatrix::identity(1));
        assert_eq!(s.v, IntMatrix::identity(1));
    }

    #[test]
    fn identity_is_fixed() {
        let s = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(s.d, IntMatrix::identity(3));
    }

    #[test]
    fn matches_determinantal_divisors() {
        let a = IntMatrix::from_i64(&[&[4, 6, 2], &[8, 12, 4], &[2, 5, 9], &[0, 3, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), determinantal_divisors(&a));
        assert!(s.u.is_unimodular() && s.v.is_unimodular());
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = IntMatrix::from_i64(&[&[1, -1, 0], &[2, -2, 0]]);
        let k = integer_kernel(&a);
        assert_eq!(k.dim(), 2);
        assert!(a.mul(&k.basis).unwrap().is_zero());
        assert_eq!(k.coords.mul(&k.basis).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn echelon_with_modulus_keeps_group() {
        // Z^2 / <(2, 4), 6Z^2>  ~  Z/2 + Z/6
        let out = relation_snf(2, vec![vec![big(2), big(4)]], Some(big(6)));
        let f: Vec<BigInt> = diagonal(&out.d).into_iter().filter(|x| !x.is_zero()).collect();
        assert_eq!(f, vec![big(2), big(6)]);
    }
}
