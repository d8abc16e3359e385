use std::fmt;

use crate::error::{Error, Result};

/// Default bound on the size of finite monoids; every verification loop over a
/// finite monoid is at least quadratic in its size.
pub const DEFAULT_FINITE_CAP: usize = 64;

/// A finite commutative monoid given by its addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_cap(table, DEFAULT_FINITE_CAP)
    }

    /// Validates closure, commutativity, associativity and the unit.
    pub fn with_cap(table: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidMonoid("empty table".into()));
        }
        if n > cap {
            return Err(Error::TooLarge { size: n, cap });
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMonoid(format!("row {} has {} entries, expected {}", i, row.len(), n)));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidMonoid(format!("entry {} out of range in row {}", bad, i)));
            }
        }
        for a in 0..n {
            for b in 0..a {
                if table[a][b] != table[b][a] {
                    return Err(Error::InvalidMonoid(format!("{}+{} != {}+{}", a, b, b, a)));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidMonoid(format!("({}+{})+{} != {}+({}+{})", a, b, c, a, b, c)));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x))
            .ok_or_else(|| Error::InvalidMonoid("no identity element".into()))?;
        Ok(FiniteMonoid { table, identity })
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// `k·a`.
    pub fn multiple(&self, k: u64, a: usize) -> usize {
        let mut acc = self.identity;
        for _ in 0..k {
            acc = self.add(acc, a);
        }
        acc
    }

    /// Greedy generating set: scan elements in index order and keep every
    /// element not already in the submonoid spanned by the ones kept so far.
    pub fn generating_set(&self) -> Vec<usize> {
        let n = self.size();
        let mut span = vec![false; n];
        span[self.identity] = true;
        let mut gens = Vec::new();
        for x in 0..n {
            if span[x] {
                continue;
            }
            gens.push(x);
            // close the span under adding x (and everything already reachable)
            let mut frontier: Vec<usize> = (0..n).filter(|&y| span[y]).collect();
            while let Some(y) = frontier.pop() {
                for &g in &gens {
                    let z = self.add(y, g);
                    if !span[z] {
                        span[z] = true;
                        frontier.push(z);
                    }
                }
            }
        }
        gens
    }
}

/// A commutative monoid: finite (by table) or free of finite rank (`ℕᵏ`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommMonoid {
    Finite(FiniteMonoid),
    Free { rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidElement {
    Finite(usize),
    Free(Vec<u64>),
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidElement::Finite(i) => write!(f, "[{}]", i),
            MonoidElement::Free(v) => {
                let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", s.join(","))
            }
        }
    }
}

impl CommMonoid {
    pub fn free(rank: usize) -> Self {
        CommMonoid::Free { rank }
    }

    /// `ℕ`.
    pub fn naturals() -> Self {
        Self::free(1)
    }

    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        Ok(CommMonoid::Finite(FiniteMonoid::new(table)?))
    }

    /// `Z/n` under addition, element `i` is the residue `i`.
    pub fn cyclic_group(n: usize) -> Result<Self> {
        Self::cyclic_group_with_cap(n, DEFAULT_FINITE_CAP)
    }

    pub fn cyclic_group_with_cap(n: usize, cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMonoid("Z/0 is not finite".into()));
        }
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Ok(CommMonoid::Finite(FiniteMonoid::with_cap(table, cap)?))
    }

    /// `(Z/p)ᵏ`; element index is the base-`p` number with the first
    /// coordinate as the least significant digit.
    pub fn elementary_abelian(p: usize, k: usize, cap: usize) -> Result<Self> {
        let size = p.checked_pow(k as u32).filter(|&s| s <= cap).ok_or(Error::TooLarge {
            size: p.checked_pow(k as u32).unwrap_or(usize::MAX),
            cap,
        })?;
        let digits = |mut x: usize| -> Vec<usize> {
            (0..k)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let from_digits = |d: &[usize]| d.iter().rev().fold(0, |acc, &x| acc * p + x);
        let table = (0..size)
            .map(|a| {
                let da = digits(a);
                (0..size)
                    .map(|b| {
                        let db = digits(b);
                        let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                        from_digits(&s)
                    })
                    .collect()
            })
            .collect();
        Ok(CommMonoid::Finite(FiniteMonoid::with_cap(table, cap)?))
    }

    pub fn identity(&self) -> MonoidElement {
        match self {
            CommMonoid::Finite(m) => MonoidElement::Finite(m.identity()),
            CommMonoid::Free { rank } => MonoidElement::Free(vec![0; *rank]),
        }
    }

    pub fn contains(&self, e: &MonoidElement) -> bool {
        match (self, e) {
            (CommMonoid::Finite(m), MonoidElement::Finite(i)) => *i < m.size(),
            (CommMonoid::Free { rank }, MonoidElement::Free(v)) => v.len() == *rank,
            _ => false,
        }
    }

    pub fn check(&self, e: &MonoidElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::NotInDomain(format!("{} is not an element of {}", e, self)))
        }
    }

    pub fn add(&self, a: &MonoidElement, b: &MonoidElement) -> Result<MonoidElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (CommMonoid::Finite(m), MonoidElement::Finite(x), MonoidElement::Finite(y)) => MonoidElement::Finite(m.add(*x, *y)),
            (CommMonoid::Free { .. }, MonoidElement::Free(x), MonoidElement::Free(y)) => {
                MonoidElement::Free(x.iter().zip(y).map(|(p, q)| p + q).collect())
            }
            _ => unreachable!("checked membership"),
        })
    }

    pub fn multiple(&self, k: u64, a: &MonoidElement) -> Result<MonoidElement> {
        self.check(a)?;
        Ok(match (self, a) {
            (CommMonoid::Finite(m), MonoidElement::Finite(x)) => MonoidElement::Finite(m.multiple(k, *x)),
            (CommMonoid::Free { .. }, MonoidElement::Free(v)) => MonoidElement::Free(v.iter().map(|x| x * k).collect()),
            _ => unreachable!("checked membership"),
        })
    }

    /// A generating set: unit vectors for free monoids, the greedy set for
    /// finite ones.
    pub fn generators(&self) -> Vec<MonoidElement> {
        match self {
            CommMonoid::Finite(m) => m.generating_set().into_iter().map(MonoidElement::Finite).collect(),
            CommMonoid::Free { rank } => (0..*rank)
                .map(|i| {
                    let mut v = vec![0; *rank];
                    v[i] = 1;
                    MonoidElement::Free(v)
                })
                .collect(),
        }
    }

    /// All elements of a finite monoid.
    pub fn elements(&self) -> Option<Vec<MonoidElement>> {
        match self {
            CommMonoid::Finite(m) => Some((0..m.size()).map(MonoidElement::Finite).collect()),
            CommMonoid::Free { .. } => None,
        }
    }

    pub fn size(&self) -> Option<usize> {
        match self {
            CommMonoid::Finite(m) => Some(m.size()),
            CommMonoid::Free { .. } => None,
        }
    }
}

impl fmt::Display for CommMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CommMonoid::Finite(m) => write!(f, "finite monoid of order {}", m.size()),
            CommMonoid::Free { rank: 1 } => write!(f, "N"),
            CommMonoid::Free { rank } => write!(f, "N^{}", rank),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative() {
        // commutative, unital at 0, but (1+1)+2 = 2+2 = 0 while 1+(1+2) = 1+0 = 1
        let t = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 0]];
        assert!(matches!(FiniteMonoid::new(t), Err(Error::InvalidMonoid(_))));
    }

    #[test]
    fn rejects_non_commutative() {
        let t = vec![vec![0, 1], vec![0, 1]];
        assert!(FiniteMonoid::new(t).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(CommMonoid::cyclic_group(65), Err(Error::TooLarge { size: 65, cap: 64 })));
        assert!(CommMonoid::cyclic_group_with_cap(65, 100).is_ok());
    }

    #[test]
    fn elementary_abelian_generators_are_unit_vectors() {
        let m = CommMonoid::elementary_abelian(3, 2, 64).unwrap();
        assert_eq!(m.generators(), vec![MonoidElement::Finite(1), MonoidElement::Finite(3)]);
    }

    #[test]
    fn identity_need_not_be_index_zero() {
        // {a, e} with a absorbing and e the unit, e listed second
        let m = FiniteMonoid::new(vec![vec![0, 0], vec![0, 1]]).unwrap();
        assert_eq!(m.identity(), 1);
        assert_eq!(m.generating_set(), vec![0]);
    }
}
