use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::{CommMonoid, Coords, FgAbelianGroup, MonoidElement};
use crate::error::{Error, Result};

/// Where a polynomial map is defined: a commutative monoid or a finitely
/// generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Monoid(CommMonoid),
    Group(FgAbelianGroup),
}

/// A domain element split into a finite part and a free part.
///
/// For a finite monoid `finite` is the element index and `free` is empty; for
/// `ℕᵏ` `finite` is zero and `free` holds the coordinates; for a group
/// `finite` enumerates the torsion coordinates and `free` holds the free ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub finite: usize,
    pub free: Vec<BigInt>,
}

impl Point {
    pub fn free(coords: Vec<BigInt>) -> Self {
        Point { finite: 0, free: coords }
    }

    pub fn finite(i: usize) -> Self {
        Point { finite: i, free: Vec::new() }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        Point::free(coords.iter().map(|&x| BigInt::from(x)).collect())
    }
}

impl Domain {
    pub fn naturals() -> Self {
        Domain::Monoid(CommMonoid::naturals())
    }

    pub fn integers() -> Self {
        Domain::Group(FgAbelianGroup::integers())
    }

    pub fn is_group(&self) -> bool {
        matches!(self, Domain::Group(_))
    }

    /// Number of values the finite part ranges over.
    pub fn finite_count(&self) -> Result<usize> {
        match self {
            Domain::Monoid(CommMonoid::Finite(m)) => Ok(m.size()),
            Domain::Monoid(CommMonoid::Free { .. }) => Ok(1),
            Domain::Group(g) => g.torsion_count(),
        }
    }

    pub fn free_rank(&self) -> usize {
        match self {
            Domain::Monoid(CommMonoid::Finite(_)) => 0,
            Domain::Monoid(CommMonoid::Free { rank }) => *rank,
            Domain::Group(g) => g.free_rank(),
        }
    }

    pub fn zero(&self) -> Point {
        match self {
            Domain::Monoid(CommMonoid::Finite(m)) => Point::finite(m.identity()),
            _ => Point { finite: 0, free: vec![BigInt::zero(); self.free_rank()] },
        }
    }

    pub fn check(&self, p: &Point) -> Result<()> {
        let finite_ok = p.finite < self.finite_count()?;
        let free_ok = p.free.len() == self.free_rank();
        let sign_ok = self.is_group() || p.free.iter().all(|x| !x.is_negative());
        if finite_ok && free_ok && sign_ok {
            Ok(())
        } else {
            Err(Error::NotInDomain(format!("{} is not a point of {}", self.show(p), self)))
        }
    }

    pub fn add(&self, a: &Point, b: &Point) -> Result<Point> {
        self.check(a)?;
        self.check(b)?;
        let finite = match self {
            Domain::Monoid(CommMonoid::Finite(m)) => m.add(a.finite, b.finite),
            Domain::Monoid(CommMonoid::Free { .. }) => 0,
            Domain::Group(g) => {
                let s = g.torsion().len();
                let ta = g.torsion_digits(a.finite);
                let tb = g.torsion_digits(b.finite);
                let sum: Vec<BigInt> = ta.iter().zip(&tb).map(|(x, y)| x + y).collect();
                debug_assert_eq!(sum.len(), s);
                g.torsion_index(&sum)
            }
        };
        Ok(Point { finite, free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect() })
    }

    pub fn neg(&self, a: &Point) -> Result<Point> {
        match self {
            Domain::Group(g) => {
                self.check(a)?;
                let t: Vec<BigInt> = g.torsion_digits(a.finite).into_iter().map(|x| -x).collect();
                Ok(Point { finite: g.torsion_index(&t), free: a.free.iter().map(|x| -x).collect() })
            }
            Domain::Monoid(_) => Err(Error::Unsupported("negation in a monoid".into())),
        }
    }

    pub fn sub(&self, a: &Point, b: &Point) -> Result<Point> {
        self.add(a, &self.neg(b)?)
    }

    /// `k·a`.
    pub fn multiple(&self, k: usize, a: &Point) -> Result<Point> {
        let mut acc = self.zero();
        for _ in 0..k {
            acc = self.add(&acc, a)?;
        }
        Ok(acc)
    }

    /// Generators whose iterated differences decide the degree.
    pub fn generators(&self) -> Vec<Point> {
        match self {
            Domain::Monoid(m @ CommMonoid::Finite(_)) => m
                .generators()
                .into_iter()
                .map(|e| match e {
                    MonoidElement::Finite(i) => Point::finite(i),
                    MonoidElement::Free(_) => unreachable!(),
                })
                .collect(),
            Domain::Monoid(CommMonoid::Free { rank }) => (0..*rank).map(|i| unit(*rank, i)).collect(),
            Domain::Group(g) => {
                let s = g.torsion().len();
                let mut out: Vec<Point> = (0..s)
                    .map(|i| {
                        let mut t = vec![BigInt::zero(); s];
                        t[i] = BigInt::from(1);
                        Point { finite: g.torsion_index(&t), free: vec![BigInt::zero(); g.free_rank()] }
                    })
                    .collect();
                out.extend((0..g.free_rank()).map(|i| unit(g.free_rank(), i)));
                out
            }
        }
    }

    /// The point of a group domain with the given reduced coordinates.
    pub fn point_of_coords(&self, coords: &[BigInt]) -> Result<Point> {
        match self {
            Domain::Group(g) => {
                let c = g.normalize(coords.to_vec())?;
                let s = g.torsion().len();
                Ok(Point { finite: g.torsion_index(&c[..s]), free: c[s..].to_vec() })
            }
            Domain::Monoid(_) => Err(Error::Unsupported("coordinates of a monoid point".into())),
        }
    }

    /// Reduced coordinates of a point of a group domain.
    pub fn coords_of(&self, p: &Point) -> Result<Coords> {
        match self {
            Domain::Group(g) => {
                self.check(p)?;
                let mut c = g.torsion_digits(p.finite);
                c.extend(p.free.iter().cloned());
                Ok(c)
            }
            Domain::Monoid(_) => Err(Error::Unsupported("coordinates of a monoid point".into())),
        }
    }

    pub fn point_of_element(&self, e: &MonoidElement) -> Result<Point> {
        match (self, e) {
            (Domain::Monoid(m), _) if m.contains(e) => Ok(match e {
                MonoidElement::Finite(i) => Point::finite(*i),
                MonoidElement::Free(v) => Point::free(v.iter().map(|&x| BigInt::from(x)).collect()),
            }),
            _ => Err(Error::NotInDomain(format!("{} is not an element of {}", e, self))),
        }
    }

    pub fn element_of_point(&self, p: &Point) -> Result<MonoidElement> {
        self.check(p)?;
        match self {
            Domain::Monoid(CommMonoid::Finite(_)) => Ok(MonoidElement::Finite(p.finite)),
            Domain::Monoid(CommMonoid::Free { .. }) => Ok(MonoidElement::Free(
                p.free.iter().map(|x| x.to_u64().ok_or_else(|| Error::NotInDomain(x.to_string()))).collect::<Result<_>>()?,
            )),
            Domain::Group(_) => Err(Error::Unsupported("group points are not monoid elements".into())),
        }
    }

    /// Human readable rendering of a point.
    pub fn show(&self, p: &Point) -> String {
        let free: Vec<String> = p.free.iter().map(|x| x.to_string()).collect();
        match self {
            Domain::Monoid(CommMonoid::Finite(_)) => format!("[{}]", p.finite),
            Domain::Monoid(CommMonoid::Free { .. }) => format!("({})", free.join(",")),
            Domain::Group(g) if g.torsion().is_empty() => format!("({})", free.join(",")),
            Domain::Group(g) => {
                let t: Vec<String> = match g.torsion_count() {
                    Ok(_) => g.torsion_digits(p.finite).iter().map(|x| x.to_string()).collect(),
                    Err(_) => vec![format!("#{}", p.finite)],
                };
                format!("({};{})", t.join(","), free.join(","))
            }
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Monoid(m) => write!(f, "{}", m),
            Domain::Group(g) => write!(f, "{}", g),
        }
    }
}

fn unit(k: usize, i: usize) -> Point {
    let mut v = vec![BigInt::zero(); k];
    v[i] = BigInt::from(1);
    Point::free(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_points_roundtrip_coordinates() {
        let g = FgAbelianGroup::from_invariants(1, vec![BigInt::from(2), BigInt::from(4)]).unwrap();
        let d = Domain::Group(g);
        let c = vec![BigInt::from(1), BigInt::from(3), BigInt::from(-5)];
        let p = d.point_of_coords(&c).unwrap();
        assert_eq!(d.coords_of(&p).unwrap(), c);
        let q = d.add(&p, &d.neg(&p).unwrap()).unwrap();
        assert_eq!(q, d.zero());
        assert_eq!(d.generators().len(), 3);
        assert_eq!(d.show(&p), "(1,3;-5)");
    }

    #[test]
    fn monoid_points_reject_negatives() {
        let d = Domain::naturals();
        assert!(d.check(&Point::from_i64(&[-1])).is_err());
        assert!(d.neg(&Point::from_i64(&[1])).is_err());
        assert_eq!(d.element_of_point(&Point::from_i64(&[4])).unwrap(), MonoidElement::Free(vec![4]));
    }
}
