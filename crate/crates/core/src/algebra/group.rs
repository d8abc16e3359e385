use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::snf::{diagonal, relation_snf};
use crate::error::{Error, Result};

/// Upper bound on the number of torsion elements we are willing to enumerate.
pub const MAX_ENUMERATED_TORSION: usize = 1 << 16;

/// A finitely generated abelian group `Z^ambient / (relations)` in invariant
/// factor form.
///
/// Elements are handled in two coordinate systems: *ambient* vectors over the
/// presentation generators and reduced *coordinates* `(t₁, …, t_s, f₁, …, f_r)`
/// with `0 ≤ tᵢ < dᵢ` for the torsion part and unconstrained free part.
#[derive(Clone, PartialEq, Eq)]
pub struct FgAbelianGroup {
    ambient: usize,
    torsion: Vec<BigInt>,
    free_rank: usize,
    /// ambient × coord_len; columns of `V` for the surviving SNF positions
    to_coords: IntMatrix,
    /// coord_len × ambient; matching rows of `V⁻¹`
    from_coords: IntMatrix,
}

pub type Coords = Vec<BigInt>;

impl FgAbelianGroup {
    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            ambient: rank,
            torsion: Vec::new(),
            free_rank: rank,
            to_coords: IntMatrix::identity(rank),
            from_coords: IntMatrix::identity(rank),
        }
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn integers() -> Self {
        Self::free(1)
    }

    pub fn cyclic(n: u64) -> Self {
        if n == 0 {
            return Self::integers();
        }
        Self::from_relations(1, &IntMatrix::from_i64(&[&[n as i64]]))
    }

    /// `Z^free ⊕ ⊕ Z/dᵢ` given directly in normal form.
    pub fn from_invariants(free_rank: usize, torsion: Vec<BigInt>) -> Result<Self> {
        for w in torsion.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::Dimension(format!("invariant factors {} and {} do not divide", w[0], w[1])));
            }
        }
        if torsion.iter().any(|d| d < &BigInt::from(2)) {
            return Err(Error::Dimension("invariant factors must be at least 2".into()));
        }
        let n = torsion.len() + free_rank;
        Ok(FgAbelianGroup {
            ambient: n,
            torsion,
            free_rank,
            to_coords: IntMatrix::identity(n),
            from_coords: IntMatrix::identity(n),
        })
    }

    /// The group presented by `gens` generators and the rows of `rels`.
    pub fn from_relations(gens: usize, rels: &IntMatrix) -> Self {
        assert_eq!(rels.cols(), gens, "relation matrix must have one column per generator");
        Self::from_relation_rows(gens, rels.to_rows(), None)
    }

    /// Presentation with an additional exponent: `m·x = 0` for every `x`.
    pub fn from_relation_rows(gens: usize, rows: impl IntoIterator<Item = Vec<BigInt>>, modulus: Option<BigInt>) -> Self {
        let out = relation_snf(gens, rows, modulus);
        let diag = diagonal(&out.d);
        let v = out.v.expect("tracked");
        let vi = out.v_inv.expect("tracked");
        let mut torsion_idx = Vec::new();
        let mut torsion = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if !d.is_zero() && !d.is_one() {
                torsion_idx.push(i);
                torsion.push(d.clone());
            }
        }
        let rank = diag.iter().filter(|d| !d.is_zero()).count();
        let mut idx = torsion_idx;
        idx.extend(rank..gens);
        FgAbelianGroup {
            ambient: gens,
            torsion,
            free_rank: gens - rank,
            to_coords: v.select_columns(&idx),
            from_coords: vi.select_rows(&idx),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn coord_len(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.coord_len() == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn same_structure(&self, other: &FgAbelianGroup) -> bool {
        self.torsion == other.torsion && self.free_rank == other.free_rank
    }

    pub fn zero(&self) -> Coords {
        vec![BigInt::zero(); self.coord_len()]
    }

    /// Reduced coordinates of an ambient vector.
    pub fn reduce(&self, ambient: &[BigInt]) -> Result<Coords> {
        if ambient.len() != self.ambient {
            return Err(Error::Dimension(format!(
                "element with {} entries in a group on {} generators",
                ambient.len(),
                self.ambient
            )));
        }
        let c = self.to_coords.left_apply(ambient)?;
        Ok(self.normalize_unchecked(c))
    }

    /// Brings coordinates into canonical range.
    pub fn normalize(&self, coords: Coords) -> Result<Coords> {
        self.check_coords(&coords)?;
        Ok(self.normalize_unchecked(coords))
    }

    fn normalize_unchecked(&self, mut c: Coords) -> Coords {
        for (x, d) in c.iter_mut().zip(&self.torsion) {
            if x.is_negative() || &*x >= d {
                *x = x.mod_floor(d);
            }
        }
        c
    }

    fn check_coords(&self, c: &[BigInt]) -> Result<()> {
        if c.len() != self.coord_len() {
            return Err(Error::Dimension(format!(
                "coordinate vector of length {} for a group with {} coordinates",
                c.len(),
                self.coord_len()
            )));
        }
        Ok(())
    }

    /// An ambient representative of the given coordinates.
    pub fn lift(&self, coords: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_coords(coords)?;
        self.from_coords.left_apply(coords)
    }

    /// Ambient representative of the `i`-th coordinate generator.
    pub fn basis_lift(&self, i: usize) -> Vec<BigInt> {
        self.from_coords.row(i).to_vec()
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Result<Coords> {
        self.check_coords(a)?;
        self.check_coords(b)?;
        Ok(self.normalize_unchecked(a.iter().zip(b).map(|(x, y)| x + y).collect()))
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Result<Coords> {
        self.check_coords(a)?;
        self.check_coords(b)?;
        Ok(self.normalize_unchecked(a.iter().zip(b).map(|(x, y)| x - y).collect()))
    }

    pub fn neg(&self, a: &[BigInt]) -> Result<Coords> {
        self.check_coords(a)?;
        Ok(self.normalize_unchecked(a.iter().map(|x| -x).collect()))
    }

    pub fn scale(&self, c: &BigInt, a: &[BigInt]) -> Result<Coords> {
        self.check_coords(a)?;
        Ok(self.normalize_unchecked(a.iter().map(|x| c * x).collect()))
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        self.normalize_unchecked(a.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn generator(&self, i: usize) -> Coords {
        let mut c = self.zero();
        c[i] = BigInt::one();
        c
    }

    /// Number of torsion elements, if small enough to enumerate.
    pub fn torsion_count(&self) -> Result<usize> {
        let order = self.torsion_order();
        match order.to_usize() {
            Some(n) if n <= MAX_ENUMERATED_TORSION => Ok(n),
            _ => Err(Error::TooLarge { size: order.to_usize().unwrap_or(usize::MAX), cap: MAX_ENUMERATED_TORSION }),
        }
    }

    /// Torsion coordinates of the `index`-th torsion element (mixed radix,
    /// first coordinate fastest).
    pub fn torsion_digits(&self, mut index: usize) -> Vec<BigInt> {
        self.torsion
            .iter()
            .map(|d| {
                let d = d.to_usize().expect("enumerable torsion");
                let digit = index % d;
                index /= d;
                BigInt::from(digit)
            })
            .collect()
    }

    pub fn torsion_index(&self, digits: &[BigInt]) -> usize {
        let mut idx = 0usize;
        let mut radix = 1usize;
        for (x, d) in digits.iter().zip(&self.torsion) {
            let d = d.to_usize().expect("enumerable torsion");
            idx += x.mod_floor(&BigInt::from(d)).to_usize().unwrap() * radix;
            radix *= d;
        }
        idx
    }

    /// The quotient by the subgroup generated by `rels` (given in this group's
    /// coordinates). The result's ambient space is this group's coordinate
    /// space, so `quotient.reduce(coords)` is the projection.
    pub fn quotient(&self, rels: &[Coords]) -> Result<FgAbelianGroup> {
        let n = self.coord_len();
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(self.torsion.len() + rels.len());
        for (i, d) in self.torsion.iter().enumerate() {
            let mut r = vec![BigInt::zero(); n];
            r[i] = d.clone();
            rows.push(r);
        }
        for r in rels {
            self.check_coords(r)?;
            rows.push(r.clone());
        }
        Ok(Self::from_relation_rows(n, rows, None))
    }

    /// Short human form such as `Z^2 + Z/2 + Z/6` or `0`.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{}", d)).collect();
        match self.free_rank {
            0 => {}
            1 => parts.insert(0, "Z".to_string()),
            r => parts.insert(0, format!("Z^{}", r)),
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbelianGroup({})", self.describe())
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Convenience: presentation from `gens` and a relation matrix.
pub fn fg_group_from_relations(gens: usize, rels: &IntMatrix) -> FgAbelianGroup {
    FgAbelianGroup::from_relations(gens, rels)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn cyclic_two() {
        let g = fg_group_from_relations(1, &IntMatrix::from_i64(&[&[2]]));
        assert_eq!(g.torsion(), &[b(2)]);
        assert_eq!(g.free_rank(), 0);
    }

    #[test]
    fn identified_generators() {
        let g = fg_group_from_relations(2, &IntMatrix::from_i64(&[&[1, -1]]));
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion().is_empty());
        assert_eq!(g.reduce(&[b(1), b(0)]).unwrap(), g.reduce(&[b(0), b(1)]).unwrap());
    }

    #[test]
    fn z6_from_two_and_three() {
        let g = fg_group_from_relations(2, &IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(g.torsion(), &[b(6)]);
        assert_eq!(g.free_rank(), 0);
        assert!(g.is_zero(&g.reduce(&[b(2), b(0)]).unwrap()));
        assert!(!g.is_zero(&g.reduce(&[b(1), b(0)]).unwrap()));
    }

    #[test]
    fn relation_rows_reduce_to_zero() {
        let rels = IntMatrix::from_i64(&[&[4, 6, 2], &[2, 2, 2]]);
        let g = fg_group_from_relations(3, &rels);
        for i in 0..rels.rows() {
            assert!(g.is_zero(&g.reduce(rels.row(i)).unwrap()));
        }
        // lift then reduce is the identity on coordinates
        for i in 0..g.coord_len() {
            let e = g.generator(i);
            assert_eq!(g.reduce(&g.lift(&e).unwrap()).unwrap(), e);
        }
    }

    #[test]
    fn quotient_of_z2_by_antidiagonal() {
        let z2 = FgAbelianGroup::free(2);
        let q = z2.quotient(&[vec![b(1), b(-1)]]).unwrap();
        assert_eq!(q.describe(), "Z");
    }

    #[test]
    fn torsion_enumeration_roundtrip() {
        let g = FgAbelianGroup::from_invariants(1, vec![b(2), b(6)]).unwrap();
        assert_eq!(g.torsion_count().unwrap(), 12);
        for i in 0..12 {
            assert_eq!(g.torsion_index(&g.torsion_digits(i)), i);
        }
        assert!(FgAbelianGroup::from_invariants(0, vec![b(4), b(6)]).is_err());
    }
}
