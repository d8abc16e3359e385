//! Binomial coefficients and multi-index enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `C(x, k) = x(x−1)⋯(x−k+1)/k!` for any integer `x`.
pub fn binomial(x: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= x - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q
}

/// `C(n, k)` as a machine integer, zero when `k > n`.
pub fn binomial_u(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}

/// Multi-indices in `ℕᵏ` of total degree `≤ n`, ordered by degree and then
/// lexicographically with the first coordinate largest first.
pub fn multi_indices_upto(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for d in 0..=n {
        out.extend(multi_indices_exact(k, d));
    }
    out
}

/// Multi-indices in `ℕᵏ` of total degree exactly `d`.
pub fn multi_indices_exact(k: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() + 1 == k {
            cur.push(d);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=d).rev() {
            cur.push(first);
            go(k, d - first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(k, d, &mut Vec::new(), &mut out);
    out
}

/// All `l` with `0 ≤ l ≤ j` componentwise.
pub fn box_below(j: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(j.len())];
    for &m in j {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=m).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// All points of `[lo, hi]ᵏ`.
pub fn cube(k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(k)];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out
}

/// `Π C(xᵢ, jᵢ)`.
pub fn multi_binomial(x: &[BigInt], j: &[usize]) -> BigInt {
    x.iter().zip(j).map(|(xi, &ji)| binomial(xi, ji)).product()
}

/// `(−1)^n`.
pub fn sign(n: usize) -> BigInt {
    if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(2), 5), BigInt::zero());
        // C(−1, k) = (−1)^k
        for k in 0..6 {
            assert_eq!(binomial(&BigInt::from(-1), k), sign(k));
        }
        assert_eq!(binomial(&BigInt::from(-3), 2), BigInt::from(6));
    }

    #[test]
    fn index_counts() {
        assert_eq!(multi_indices_upto(2, 2).len(), 6);
        assert_eq!(multi_indices_upto(3, 3).len(), binomial_u(6, 3));
        assert_eq!(multi_indices_upto(1, 3), vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(multi_indices_exact(2, 1), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(multi_indices_upto(0, 2), vec![Vec::<usize>::new()]);
        assert_eq!(box_below(&[1, 2]).len(), 6);
        assert_eq!(cube(2, -1, 1).len(), 9);
    }
}
