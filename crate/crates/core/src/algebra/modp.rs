//! Gaussian elimination over a prime field `F_p`, on machine words.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::matrix::IntMatrix;
use super::snf::Kernel;

fn to_words(a: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    let pb = BigInt::from(p);
    (0..a.rows())
        .map(|i| a.row(i).iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect())
        .collect()
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    r
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<u64>], cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = ((*x as u128 * inv as u128) % p as u128) as u64;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for (x, y) in row.iter_mut().zip(prow.iter()).skip(c) {
                if *y != 0 {
                    *x = ((*x as u128 + nf as u128 * *y as u128) % p as u128) as u64;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only, touching just the nonzero entries of
/// each pivot row.
pub fn rank_mod_p(a: &IntMatrix, p: u64) -> usize {
    let mut m = to_words(a, p);
    let mut r = 0;
    for c in 0..a.cols() {
        if r == m.len() {
            break;
        }
        let Some(i) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, i);
        let inv = inv_mod(m[r][c], p);
        let support: Vec<(usize, u64)> = m[r]
            .iter()
            .enumerate()
            .skip(c)
            .filter(|(_, &y)| y != 0)
            .map(|(j, &y)| (j, ((y as u128 * inv as u128) % p as u128) as u64))
            .collect();
        let (_, rest) = m.split_at_mut(r + 1);
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            let nf = (p - f) as u128;
            for &(j, y) in &support {
                row[j] = ((row[j] as u128 + nf * y as u128) % p as u128) as u64;
            }
        }
        r += 1;
    }
    r
}

/// Kernel over `F_p`, with entries in `[0, p)`. The coordinate map reads off
/// the free (non-pivot) positions.
pub fn kernel_mod_p(a: &IntMatrix, p: u64) -> Kernel {
    let n = a.cols();
    let mut m = to_words(a, p);
    let pivots = rref(&mut m, n, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = IntMatrix::zeros(n, free.len());
    let mut coords = IntMatrix::zeros(free.len(), n);
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = BigInt::from(1);
        coords[(k, f)] = BigInt::from(1);
        for (r, &pc) in pivots.iter().enumerate() {
            let v = m[r][f];
            if v != 0 {
                basis[(pc, k)] = BigInt::from(p - v);
            }
        }
    }
    Kernel { basis, coords }
}

/// Is `p` prime (trial division; moduli here are small).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_depends_on_characteristic() {
        let a = IntMatrix::from_i64(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank_mod_p(&a, 2), 1);
        assert_eq!(rank_mod_p(&a, 3), 2);
    }

    #[test]
    fn kernel_mod_three() {
        let a = IntMatrix::from_i64(&[&[1, 2, 0], &[0, 0, 1]]);
        let k = kernel_mod_p(&a, 3);
        assert_eq!(k.dim(), 1);
        let prod = a.mul(&k.basis).unwrap().reduce_mod(&BigInt::from(3));
        assert!(prod.is_zero());
        assert_eq!(k.coords.mul(&k.basis).unwrap(), IntMatrix::identity(1));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(5) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(91));
    }
}
