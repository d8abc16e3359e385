//! Group completion of commutative monoids and its universal property.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::group::{Coords, FgAbelianGroup};
use super::matrix::IntMatrix;
use super::monoid::{CommMonoid, MonoidElement};
use crate::error::{Error, Result};

/// An additive map from a monoid into an abelian group, recorded on every
/// element (finite source) or on the standard generators (free source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidHom {
    source: CommMonoid,
    target: FgAbelianGroup,
    images: Vec<Coords>,
}

impl MonoidHom {
    pub fn new(source: CommMonoid, target: FgAbelianGroup, images: Vec<Coords>) -> Result<Self> {
        let expected = match &source {
            CommMonoid::Finite(m) => m.size(),
            CommMonoid::Free { rank } => *rank,
        };
        if images.len() != expected {
            return Err(Error::Dimension(format!("{} images for {} generators", images.len(), expected)));
        }
        let images = images.into_iter().map(|c| target.normalize(c)).collect::<Result<Vec<_>>>()?;
        let hom = MonoidHom { source, target, images };
        if let CommMonoid::Finite(m) = &hom.source {
            if !hom.target.is_zero(&hom.images[m.identity()]) {
                return Err(Error::InvalidMonoid("identity must map to zero".into()));
            }
        }
        hom.check_additive()?;
        Ok(hom)
    }

    pub fn source(&self) -> &CommMonoid {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn apply(&self, e: &MonoidElement) -> Result<Coords> {
        self.source.check(e)?;
        match e {
            MonoidElement::Finite(i) => Ok(self.images[*i].clone()),
            MonoidElement::Free(v) => {
                let mut acc = self.target.zero();
                for (k, img) in v.iter().zip(&self.images) {
                    acc = self.target.add(&acc, &self.target.scale(&BigInt::from(*k), img)?)?;
                }
                Ok(acc)
            }
        }
    }

    /// Exhaustive for finite sources; free sources are additive by construction.
    pub fn check_additive(&self) -> Result<()> {
        if let CommMonoid::Finite(m) = &self.source {
            for a in 0..m.size() {
                for b in 0..=a {
                    let lhs = &self.images[m.add(a, b)];
                    let rhs = self.target.add(&self.images[a], &self.images[b])?;
                    if !self.target.is_zero(&self.target.sub(lhs, &rhs)?) {
                        return Err(Error::InvalidMonoid(format!("map is not additive on ([{}], [{}])", a, b)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A homomorphism of finitely generated abelian groups acting on coordinates:
/// `x ↦ x · matrix`, then reduced in the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: FgAbelianGroup,
    pub target: FgAbelianGroup,
    pub matrix: IntMatrix,
}

impl GroupHom {
    pub fn apply(&self, x: &[BigInt]) -> Result<Coords> {
        let y = self.matrix.left_apply(x)?;
        self.target.normalize(y)
    }
}

/// `(M⁺, i: M → M⁺)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub group: FgAbelianGroup,
    pub hom: MonoidHom,
}

impl Completion {
    /// Universal property: the unique group map `M⁺ → B` with `φ = ψ ∘ i`.
    pub fn factor(&self, phi: &MonoidHom) -> Result<GroupHom> {
        if phi.source() != self.hom.source() {
            return Err(Error::IncompatibleDomains("monoid map has a different source".into()));
        }
        let target = phi.target().clone();
        // ambient generator g of M⁺ is [element g] (finite) or e_g (free)
        let ambient_images: Vec<Coords> = match self.hom.source() {
            CommMonoid::Finite(m) => (0..m.size()).map(|i| phi.apply(&MonoidElement::Finite(i))).collect::<Result<_>>()?,
            CommMonoid::Free { .. } => self.hom.source().generators().iter().map(|g| phi.apply(g)).collect::<Result<_>>()?,
        };
        let mut matrix = IntMatrix::zeros(self.group.coord_len(), target.coord_len());
        for i in 0..self.group.coord_len() {
            let lift = self.group.basis_lift(i);
            let mut acc = target.zero();
            for (c, img) in lift.iter().zip(&ambient_images) {
                if !c.is_zero() {
                    acc = target.add(&acc, &target.scale(c, img)?)?;
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                matrix[(i, j)] = v;
            }
        }
        Ok(GroupHom { source: self.group.clone(), target, matrix })
    }
}

/// The Grothendieck group of `m` with its canonical map.
///
/// Free monoids complete to `Zᵏ` with the coordinate embedding; a finite monoid
/// completes to the free group on its elements modulo `[a] + [b] − [a+b]`.
pub fn group_completion(m: &CommMonoid) -> Completion {
    match m {
        CommMonoid::Free { rank } => {
            let group = FgAbelianGroup::free(*rank);
            let images = (0..*rank).map(|i| group.generator(i)).collect();
            let hom = MonoidHom { source: m.clone(), target: group.clone(), images };
            Completion { group, hom }
        }
        CommMonoid::Finite(fm) => {
            let n = fm.size();
            let rows = (0..n).flat_map(|a| (0..=a).map(move |b| (a, b))).map(|(a, b)| {
                let mut r = vec![BigInt::zero(); n];
                r[a] += BigInt::one();
                r[b] += BigInt::one();
                r[fm.add(a, b)] -= BigInt::one();
                r
            });
            let group = FgAbelianGroup::from_relation_rows(n, rows, None);
            let images = (0..n)
                .map(|i| {
                    let mut e = vec![BigInt::zero(); n];
                    e[i] = BigInt::one();
                    group.reduce(&e).expect("ambient width matches")
                })
                .collect();
            let hom = MonoidHom { source: m.clone(), target: group.clone(), images };
            Completion { group, hom }
        }
    }
}

/// A monoid map `M → N`, recorded on all elements (finite source) or on the
/// standard generators (free source).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidMap {
    pub source: CommMonoid,
    pub target: CommMonoid,
    pub images: Vec<MonoidElement>,
}

impl MonoidMap {
    pub fn new(source: CommMonoid, target: CommMonoid, images: Vec<MonoidElement>) -> Result<Self> {
        for e in &images {
            target.check(e)?;
        }
        let map = MonoidMap { source, target, images };
        match &map.source {
            CommMonoid::Finite(m) => {
                if map.images.len() != m.size() {
                    return Err(Error::Dimension("finite monoid map needs one image per element".into()));
                }
                if map.images[m.identity()] != map.target.identity() {
                    return Err(Error::InvalidMonoid("identity must map to identity".into()));
                }
                for a in 0..m.size() {
                    for b in 0..=a {
                        let lhs = &map.images[m.add(a, b)];
                        let rhs = map.target.add(&map.images[a], &map.images[b])?;
                        if *lhs != rhs {
                            return Err(Error::InvalidMonoid(format!("map is not additive on ([{}], [{}])", a, b)));
                        }
                    }
                }
            }
            CommMonoid::Free { rank } => {
                if map.images.len() != *rank {
                    return Err(Error::Dimension("free monoid map needs one image per generator".into()));
                }
            }
        }
        Ok(map)
    }

    pub fn apply(&self, e: &MonoidElement) -> Result<MonoidElement> {
        self.source.check(e)?;
        match e {
            MonoidElement::Finite(i) => Ok(self.images[*i].clone()),
            MonoidElement::Free(v) => {
                let mut acc = self.target.identity();
                for (k, img) in v.iter().zip(&self.images) {
                    acc = self.target.add(&acc, &self.target.multiple(*k, img)?)?;
                }
                Ok(acc)
            }
        }
    }
}

/// Functoriality of completion: the group map `M⁺ → N⁺` induced by `f`.
pub fn complete_map(f: &MonoidMap) -> Result<GroupHom> {
    let src = group_completion(&f.source);
    let tgt = group_completion(&f.target);
    let images = match &f.source {
        CommMonoid::Finite(m) => (0..m.size())
            .map(|i| tgt.hom.apply(&f.images[i]))
            .collect::<Result<Vec<_>>>()?,
        CommMonoid::Free { .. } => f.images.iter().map(|e| tgt.hom.apply(e)).collect::<Result<Vec<_>>>()?,
    };
    let phi = MonoidHom::new(f.source.clone(), tgt.group.clone(), images)?;
    src.factor(&phi)
}
