use std::collections::HashMap;

use num_bigint::BigInt;

use super::{DegreeBound, Domain, InvariantWitness, PolyMap, Point};
use crate::algebra::{group_completion, CommMonoid, Completion, Coords, FgAbelianGroup, MonoidElement};
use crate::binomial::{binomial_u, cube, sign};
use crate::error::{Error, Result};
use crate::monoid_ring::{aug_ideal_power_quotient, CoefficientRing};

/// A map extended over the group completion, together with the completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub map: PolyMap,
    pub completion: Completion,
}

impl Extension {
    /// The point `i(m)` of the completion.
    pub fn class_point(&self, m: &MonoidElement) -> Result<Point> {
        let c = self.completion.hom.apply(m)?;
        self.map.domain().point_of_coords(&c)
    }

    /// `f⁺(i(x) − i(y))`.
    pub fn evaluate_difference(&self, x: &MonoidElement, y: &MonoidElement) -> Result<Coords> {
        let d = self.map.domain();
        let p = d.sub(&self.class_point(x)?, &self.class_point(y)?)?;
        self.map.evaluate(&p)
    }
}

/// `Σ_{j=0}^{n} (−1)ʲ C(n+1, j+1) f(x + j·y)`, the value of the extension at
/// `x − y`. It comes from writing `y⁻¹ = Σ_k (1 − y)ᵏ` in `Z[M]/I^{n+1}` and
/// collecting powers of `y`.
pub fn closed_form_extension(f: &PolyMap, x: &MonoidElement, y: &MonoidElement) -> Result<Coords> {
    let Domain::Monoid(m) = f.domain() else {
        return Err(Error::Unsupported("closed form extension starts from a monoid".into()));
    };
    let cod = f.codomain();
    let DegreeBound::AtMost(n) = f.degree() else {
        return Ok(cod.zero());
    };
    let mut acc = cod.zero();
    let mut xjy = x.clone();
    for j in 0..=n {
        let c = sign(j) * BigInt::from(binomial_u(n + 1, j + 1));
        acc = cod.add(&acc, &cod.scale(&c, &f.evaluate_element(&xjy)?)?)?;
        xjy = m.add(&xjy, y)?;
    }
    Ok(acc)
}

/// `f⁺(x − y)` computed in `Z[M]/I^{n+1}`: the class of `x·y⁻¹` pushed
/// through the linear extension of `f`.
pub fn extension_via_quotient(f: &PolyMap, x: &MonoidElement, y: &MonoidElement) -> Result<Coords> {
    let Domain::Monoid(m) = f.domain() else {
        return Err(Error::Unsupported("quotient evaluation starts from a monoid".into()));
    };
    let cod = f.codomain();
    let DegreeBound::AtMost(n) = f.degree() else {
        return Ok(cod.zero());
    };
    let q = aug_ideal_power_quotient(m, n, CoefficientRing::Integers)?;
    let element = q.mul(&q.class_of(x)?, &q.invert_monoid_element(y)?)?;
    let images = q.linearize(cod, &|e| f.evaluate_element(e))?;
    q.apply_linear(cod, &images, &element)
}

/// The unique polynomial map on `M⁺` of the same degree restricting to `f`.
pub fn extend_over_group_completion(f: &PolyMap) -> Result<Extension> {
    if !f.is_certified() {
        return Err(Error::UncertifiedDegree);
    }
    let Domain::Monoid(m) = f.domain() else {
        return Err(Error::Unsupported("map is already defined on a group".into()));
    };
    let completion = group_completion(m);
    match m {
        CommMonoid::Free { .. } => {
            let map = PolyMap::from_slices(
                Domain::Group(completion.group.clone()),
                f.codomain().clone(),
                f.degree(),
                f.slices().to_vec(),
            )?
            .assume_certified();
            Ok(Extension { map, completion })
        }
        CommMonoid::Finite(fm) => {
            let g = completion.group.clone();
            let domain = Domain::Group(g.clone());
            let count = domain.finite_count()?;
            // every element of the completion is i(x) − i(y)
            let mut pairs: HashMap<usize, (usize, usize)> = HashMap::with_capacity(count);
            let classes: Vec<Point> = (0..fm.size())
                .map(|i| domain.point_of_coords(&completion.hom.apply(&MonoidElement::Finite(i))?))
                .collect::<Result<_>>()?;
            'outer: for x in 0..fm.size() {
                for y in 0..fm.size() {
                    let p = domain.sub(&classes[x], &classes[y])?;
                    pairs.entry(p.finite).or_insert((x, y));
                    if pairs.len() == count {
                        break 'outer;
                    }
                }
            }
            let values = (0..count)
                .map(|t| {
                    let (x, y) = pairs[&t];
                    closed_form_extension(f, &MonoidElement::Finite(x), &MonoidElement::Finite(y))
                })
                .collect::<Result<Vec<_>>>()?;
            let map = PolyMap::from_table(domain, f.codomain().clone(), f.degree(), values)?.certify()?;
            Ok(Extension { map, completion })
        }
    }
}

/// `g ∘ f`, of degree at most `deg g · deg f`.
///
/// A `g` defined on a monoid is first extended over its completion, whose
/// coordinates must match the codomain of `f`.
pub fn compose(g: &PolyMap, f: &PolyMap) -> Result<PolyMap> {
    if !g.is_certified() || !f.is_certified() {
        return Err(Error::UncertifiedDegree);
    }
    let outer = match g.domain() {
        Domain::Monoid(_) => extend_over_group_completion(g)?.map,
        Domain::Group(_) => g.clone(),
    };
    let Domain::Group(mid) = outer.domain() else { unreachable!() };
    if !mid.same_structure(f.codomain()) {
        return Err(Error::IncompatibleDomains(format!("{} does not match {}", f.codomain(), mid)));
    }
    let degree = DegreeBound::compose(g.degree(), f.degree());
    let side = degree.as_i64().max(0) as usize;
    let od = outer.domain().clone();
    let h = PolyMap::fit(f.domain().clone(), g.codomain().clone(), degree, side, &|p| {
        outer.evaluate(&od.point_of_coords(&f.evaluate(p)?)?)
    })?;
    Ok(h.assume_certified())
}

/// The map induced on `A / ⟨rels⟩` when `f` is invariant under every relation.
///
/// Invariance is checked on the finite part times `[0, n]ʳ`; this decides it
/// because `x ↦ f(x + m) − f(x)` has degree `≤ n` and a degree-`n` map that
/// vanishes on a grid of side `n + 1` vanishes identically.
pub fn factor_through_quotient(f: &PolyMap, rels: &[Coords]) -> Result<PolyMap> {
    if !f.is_certified() {
        return Err(Error::UncertifiedDegree);
    }
    let Domain::Group(a) = f.domain() else {
        return Err(Error::Unsupported("quotients need a group domain".into()));
    };
    let domain = f.domain();
    let side = f.degree().as_i64().max(0);
    let rel_points: Vec<Point> = rels.iter().map(|r| domain.point_of_coords(r)).collect::<Result<_>>()?;
    for (r, m) in rels.iter().zip(&rel_points) {
        for t in 0..domain.finite_count()? {
            for x in cube(a.free_rank(), 0, side) {
                let p = Point { finite: t, free: x.into_iter().map(BigInt::from).collect() };
                let shifted = f.evaluate(&domain.add(&p, m)?)?;
                let original = f.evaluate(&p)?;
                if shifted != original {
                    let relation = format!("({})", r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
                    return Err(Error::NotInvariant(Box::new(InvariantWitness {
                        at: format!("({})", domain.show(&p)),
                        relation,
                        shifted,
                        original,
                    })));
                }
            }
        }
    }
    let q = a.quotient(rels)?;
    let qd = Domain::Group(q.clone());
    let qd2 = qd.clone();
    let bar = PolyMap::fit(qd, f.codomain().clone(), f.degree(), side as usize, &|p| {
        let lift = q.lift(&qd2.coords_of(p)?)?;
        f.evaluate(&domain.point_of_coords(&lift)?)
    })?;
    Ok(bar.assume_certified())
}

/// Projection of group coordinates to a quotient produced by
/// [`factor_through_quotient`].
pub fn project(a: &FgAbelianGroup, quotient: &FgAbelianGroup, coords: &[BigInt]) -> Result<Coords> {
    quotient.reduce(&a.normalize(coords.to_vec())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binomial::binomial;
    use crate::error::Error;

    fn nat(x: u64) -> MonoidElement {
        MonoidElement::Free(vec![x])
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lambda_two_at_minus_one() {
        let f = PolyMap::binomial_map(Domain::naturals(), 2).unwrap();
        assert_eq!(closed_form_extension(&f, &nat(0), &nat(1)).unwrap(), vec![int(1)]);
        let ext = extend_over_group_completion(&f).unwrap();
        assert_eq!(ext.map.evaluate_int(&[-1]).unwrap(), int(1));
        assert_eq!(ext.evaluate_difference(&nat(0), &nat(1)).unwrap(), vec![int(1)]);
        assert_eq!(extension_via_quotient(&f, &nat(0), &nat(1)).unwrap(), vec![int(1)]);
    }

    #[test]
    fn binomial_three_at_minus_one() {
        let f = PolyMap::binomial_map(Domain::naturals(), 3).unwrap();
        assert_eq!(closed_form_extension(&f, &nat(0), &nat(1)).unwrap(), vec![int(-1)]);
        // x(x−1)(x−2)/6 at −1
        assert_eq!(int((-1) * (-2) * (-3) / 6), int(-1));
    }

    #[test]
    fn linear_closed_form() {
        let f = PolyMap::integer_mahler(Domain::naturals(), DegreeBound::AtMost(1), &[(vec![1], 5)]).unwrap().certify().unwrap();
        for x in 0..5 {
            for y in 0..5 {
                assert_eq!(closed_form_extension(&f, &nat(x), &nat(y)).unwrap(), vec![int(5 * (x as i64 - y as i64))]);
            }
        }
    }

    #[test]
    fn extension_requires_certificate() {
        let f = PolyMap::integer_mahler(Domain::naturals(), DegreeBound::AtMost(1), &[(vec![1], 1)]).unwrap();
        assert_eq!(extend_over_group_completion(&f), Err(Error::UncertifiedDegree));
    }

    #[test]
    fn finite_monoid_extension_restricts() {
        // truncated naturals {0,1,2,3} with 2+2 = 2+3 = ... saturating at a 2-cycle on {2,3}
        let m = CommMonoid::from_table(vec![vec![0, 1, 2, 3], vec![1, 2, 3, 2], vec![2, 3, 2, 3], vec![3, 2, 3, 2]]).unwrap();
        // the completion is Z/2; the parity map is additive there
        let values = vec![vec![int(0)], vec![int(1)], vec![int(0)], vec![int(1)]];
        let f = PolyMap::from_table(Domain::Monoid(m.clone()), FgAbelianGroup::cyclic(2), DegreeBound::AtMost(1), values)
            .unwrap()
            .certify()
            .unwrap();
        let ext = extend_over_group_completion(&f).unwrap();
        for e in m.elements().unwrap() {
            assert_eq!(ext.map.evaluate(&ext.class_point(&e).unwrap()).unwrap(), f.evaluate_element(&e).unwrap());
        }
    }

    #[test]
    fn compose_binomial_with_doubling() {
        let g = PolyMap::binomial_map(Domain::naturals(), 2).unwrap();
        let f = PolyMap::integer_mahler(Domain::naturals(), DegreeBound::AtMost(1), &[(vec![1], 2)]).unwrap().certify().unwrap();
        let h = compose(&g, &f).unwrap();
        assert_eq!(h.degree(), DegreeBound::AtMost(2));
        for x in 0..=10 {
            assert_eq!(h.evaluate_int(&[x]).unwrap(), int(2 * x * x - x));
        }
    }

    #[test]
    fn compose_with_constant_outer() {
        let g = PolyMap::constant(Domain::integers(), FgAbelianGroup::integers(), vec![int(4)]).unwrap();
        let f = PolyMap::binomial_map(Domain::naturals(), 3).unwrap();
        let h = compose(&g, &f).unwrap();
        assert_eq!(h.degree(), DegreeBound::AtMost(0));
        assert_eq!(h.evaluate_int(&[9]).unwrap(), int(4));
        let id = PolyMap::identity(FgAbelianGroup::integers()).unwrap();
        assert!(compose(&id, &f).unwrap().agrees_with(&f).unwrap());
    }

    #[test]
    fn factor_binomial_of_sum() {
        let z2 = FgAbelianGroup::free(2);
        let d = Domain::Group(z2.clone());
        // C(x+y, 2) = C(x,2) + xy + C(y,2) = C(x,2) + C(x,1)C(y,1) + C(y,2)
        let f = PolyMap::integer_mahler(d, DegreeBound::AtMost(2), &[(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)])
            .unwrap()
            .certify()
            .unwrap();
        let bar = factor_through_quotient(&f, &[vec![int(1), int(-1)]]).unwrap();
        let Domain::Group(q) = bar.domain() else { panic!() };
        assert_eq!(q.describe(), "Z");
        for x in -4i64..=4 {
            for y in -4i64..=4 {
                let image = project(&z2, q, &[int(x), int(y)]).unwrap();
                let v = bar.evaluate(&bar.domain().point_of_coords(&image).unwrap()).unwrap();
                assert_eq!(v, vec![binomial(&int(x + y), 2)]);
            }
        }
    }

    #[test]
    fn factor_rejects_non_invariant() {
        let f = PolyMap::binomial_map(Domain::integers(), 2).unwrap();
        assert!(matches!(factor_through_quotient(&f, &[vec![int(1)]]), Err(Error::NotInvariant(_))));
        let c = PolyMap::constant(Domain::integers(), FgAbelianGroup::integers(), vec![int(3)]).unwrap();
        let bar = factor_through_quotient(&c, &[vec![int(2)]]).unwrap();
        assert_eq!(bar.evaluate(&bar.domain().zero()).unwrap(), vec![int(3)]);
    }
}
