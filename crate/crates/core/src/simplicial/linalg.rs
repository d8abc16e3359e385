//! Matrix arithmetic over `Z` or a prime field, with sparse products.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{integer_kernel, is_prime, kernel_mod_p, rank_mod_p, IntMatrix, Kernel};
use crate::error::{Error, Result};
use crate::monoid_ring::CoefficientRing;

pub(crate) fn check_ring(ring: CoefficientRing) -> Result<()> {
    match ring {
        CoefficientRing::Integers => Ok(()),
        CoefficientRing::Mod(p) if is_prime(p) => Ok(()),
        CoefficientRing::Mod(m) => Err(Error::Ring(format!("simplicial modules need Z or a prime field, got Z/{}", m))),
    }
}

pub(crate) fn reduce(ring: CoefficientRing, a: IntMatrix) -> IntMatrix {
    match ring {
        CoefficientRing::Integers => a,
        CoefficientRing::Mod(p) => a.reduce_mod(&BigInt::from(p)),
    }
}

/// `a · b`, skipping zeros on both sides.
pub(crate) fn mul(ring: CoefficientRing, a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    if a.cols() != b.rows() {
        return Err(Error::Dimension(format!("cannot multiply {}x{} by {}x{}", a.rows(), a.cols(), b.rows(), b.cols())));
    }
    match ring {
        CoefficientRing::Mod(p) => {
            let sa = sparse_u64(a, p);
            let sb = sparse_u64(b, p);
            let mut out = IntMatrix::zeros(a.rows(), b.cols());
            let mut acc = vec![0u64; b.cols()];
            for (i, row) in sa.iter().enumerate() {
                for &(k, x) in row {
                    for &(j, y) in &sb[k] {
                        acc[j] = ((acc[j] as u128 + x as u128 * y as u128) % p as u128) as u64;
                    }
                }
                for (j, v) in acc.iter_mut().enumerate() {
                    if *v != 0 {
                        out[(i, j)] = BigInt::from(*v);
                        *v = 0;
                    }
                }
            }
            Ok(out)
        }
        CoefficientRing::Integers => {
            let sb = sparse_big(b);
            let mut out = IntMatrix::zeros(a.rows(), b.cols());
            for i in 0..a.rows() {
                for (k, x) in a.row(i).iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, y) in &sb[k] {
                        out[(i, *j)] += x * y;
                    }
                }
            }
            Ok(out)
        }
    }
}

fn sparse_u64(a: &IntMatrix, p: u64) -> Vec<Vec<(usize, u64)>> {
    let pb = BigInt::from(p);
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .filter_map(|(j, x)| {
                    let r = num_integer::Integer::mod_floor(x, &pb).to_u64().expect("reduced below p");
                    (r != 0).then_some((j, r))
                })
                .collect()
        })
        .collect()
}

fn sparse_big(a: &IntMatrix) -> Vec<Vec<(usize, BigInt)>> {
    (0..a.rows())
        .map(|i| a.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
        .collect()
}

pub(crate) fn equal(ring: CoefficientRing, a: &IntMatrix, b: &IntMatrix) -> bool {
    a.shape() == b.shape() && reduce(ring, a.clone()) == reduce(ring, b.clone())
}

pub(crate) fn is_zero(ring: CoefficientRing, a: &IntMatrix) -> bool {
    reduce(ring, a.clone()).is_zero()
}

pub(crate) fn kernel(ring: CoefficientRing, a: &IntMatrix) -> Kernel {
    match ring {
        CoefficientRing::Integers => integer_kernel(a),
        CoefficientRing::Mod(p) => kernel_mod_p(a, p),
    }
}

pub(crate) fn rank(ring: CoefficientRing, a: &IntMatrix) -> usize {
    match ring {
        CoefficientRing::Integers => rank_over_q(a),
        CoefficientRing::Mod(p) => rank_mod_p(a, p),
    }
}

/// Rank over `Q` by fraction-free elimination.
pub fn rank_over_q(a: &IntMatrix) -> usize {
    let mut m = a.to_rows();
    let cols = a.cols();
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(i) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        for i in r + 1..m.len() {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Whether a square matrix is invertible over the ring.
pub(crate) fn is_invertible(ring: CoefficientRing, a: &IntMatrix) -> bool {
    if !a.is_square() {
        return false;
    }
    match ring {
        CoefficientRing::Integers => a.is_unimodular(),
        CoefficientRing::Mod(p) => rank_mod_p(a, p) == a.rows(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_rationals() {
        assert_eq!(rank_over_q(&IntMatrix::from_i64(&[&[2, 4], &[1, 2]])), 1);
        assert_eq!(rank_over_q(&IntMatrix::from_i64(&[&[0, 3, 1], &[2, 0, 0], &[2, 3, 1]])), 2);
        assert_eq!(rank_over_q(&IntMatrix::zeros(3, 2)), 0);
    }

    #[test]
    fn sparse_products_agree_with_dense() {
        let a = IntMatrix::from_i64(&[&[1, 0, 2], &[0, -3, 1]]);
        let b = IntMatrix::from_i64(&[&[4, 1], &[0, 2], &[5, -1]]);
        assert_eq!(mul(CoefficientRing::Integers, &a, &b).unwrap(), a.mul(&b).unwrap());
        let p = CoefficientRing::Mod(3);
        assert_eq!(mul(p, &a, &b).unwrap(), a.mul(&b).unwrap().reduce_mod(&BigInt::from(3)));
    }
}
