//! `K₀` of additive and stable categories, presented by their monoid of
//! isomorphism classes and a list of cofiber relations, together with the
//! polynomial maps induced on `K₀` by polynomial functors.

use num_bigint::BigInt;

use crate::algebra::{group_completion, CommMonoid, Completion, Coords, FgAbelianGroup, MonoidElement};
use crate::binomial::cube;
use crate::error::{Error, Result};
use crate::polymap::{extend_over_group_completion, factor_through_quotient, DegreeBound, Domain, PolyMap};

/// An additive category seen through `π₀` under `⊕`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCatSpec {
    pub pi0: CommMonoid,
}

/// A stable category: additive data plus cofiber sequences `x' → x → x''`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableCatSpec {
    pub additive: AdditiveCatSpec,
    /// Triples `(x', x, x'')`.
    pub cofiber_rels: Vec<(MonoidElement, MonoidElement, MonoidElement)>,
}

impl StableCatSpec {
    pub fn split(pi0: CommMonoid) -> Self {
        StableCatSpec { additive: AdditiveCatSpec { pi0 }, cofiber_rels: Vec::new() }
    }

    pub fn check(&self) -> Result<()> {
        for (a, b, c) in &self.cofiber_rels {
            for e in [a, b, c] {
                self.additive.pi0.check(e)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Group {
    pub group: FgAbelianGroup,
    completion: Completion,
    /// Cofiber relations in the coordinates of the additive `K₀`.
    relations: Vec<Coords>,
}

impl K0Group {
    /// `[x]`.
    pub fn class_of(&self, x: &MonoidElement) -> Result<Coords> {
        let c = self.completion.hom.apply(x)?;
        if self.relations.is_empty() {
            Ok(c)
        } else {
            self.group.reduce(&c)
        }
    }

    /// The additive `K₀` this group is a quotient of.
    pub fn additive_group(&self) -> &FgAbelianGroup {
        &self.completion.group
    }

    pub fn relations(&self) -> &[Coords] {
        &self.relations
    }

    pub fn pi0(&self) -> &CommMonoid {
        self.completion.hom.source()
    }
}

/// Group completion of `π₀`.
pub fn k0_additive(spec: &AdditiveCatSpec) -> K0Group {
    let completion = group_completion(&spec.pi0);
    K0Group { group: completion.group.clone(), completion, relations: Vec::new() }
}

/// Additive `K₀` modulo `[x'] + [x''] − [x]` for each cofiber sequence.
pub fn k0_stable(spec: &StableCatSpec) -> Result<K0Group> {
    spec.check()?;
    let add = k0_additive(&spec.additive);
    let g = &add.group;
    let relations = spec
        .cofiber_rels
        .iter()
        .map(|(a, b, c)| {
            let s = g.add(&add.class_of(a)?, &add.class_of(c)?)?;
            g.sub(&s, &add.class_of(b)?)
        })
        .collect::<Result<Vec<_>>>()?;
    if relations.is_empty() {
        return Ok(add);
    }
    let group = g.quotient(&relations)?;
    Ok(K0Group { group, completion: add.completion, relations })
}

/// The map `F_*: K₀(C) → K₀(D)` with `F_*[X] = [F(X)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub map: PolyMap,
    pub source: K0Group,
}

impl InducedMap {
    pub fn at_class(&self, x: &MonoidElement) -> Result<Coords> {
        let c = self.source.class_of(x)?;
        self.map.evaluate(&self.map.domain().point_of_coords(&c)?)
    }
}

/// Induces a polynomial map on `K₀(C)` from `F: π₀(C) → K₀(D)` of degree `≤ n`.
///
/// `F` is extended over the group completion and then factored through the
/// cofiber relations; a relation `F` does not respect is reported as a
/// counterexample.
pub fn induced_k0_map(f: &PolyMap, n: usize, spec_c: &StableCatSpec, spec_d: &StableCatSpec) -> Result<InducedMap> {
    if !f.is_certified() {
        return Err(Error::UncertifiedDegree);
    }
    if f.degree() > DegreeBound::AtMost(n) {
        return Err(Error::IncompatibleDomains(format!("map has degree bound {} above {}", f.degree(), n)));
    }
    if f.domain() != &Domain::Monoid(spec_c.additive.pi0.clone()) {
        return Err(Error::IncompatibleDomains("map is not defined on pi0 of the source".into()));
    }
    let target = k0_stable(spec_d)?;
    if !f.codomain().same_structure(&target.group) {
        return Err(Error::IncompatibleDomains(format!("map lands in {}, target K0 is {}", f.codomain(), target.group)));
    }
    let source = k0_stable(spec_c)?;
    let ext = extend_over_group_completion(f)?;
    let map = if source.relations.is_empty() { ext.map } else { factor_through_quotient(&ext.map, &source.relations)? };
    let induced = InducedMap { map, source };
    // F_*[X] = [F(X)] on the finite part, or on a box of classes
    let sample: Vec<MonoidElement> = match &spec_c.additive.pi0 {
        CommMonoid::Finite(_) => spec_c.additive.pi0.elements().expect("finite"),
        CommMonoid::Free { rank } => cube(*rank, 0, n as i64 + 1)
            .into_iter()
            .map(|v| MonoidElement::Free(v.into_iter().map(|x| x as u64).collect()))
            .collect(),
    };
    for x in &sample {
        let lhs = induced.at_class(x)?;
        let rhs = f.evaluate_element(x)?;
        if lhs != rhs {
            return Err(Error::Unsupported(format!("induced map disagrees with F at {}", x)));
        }
    }
    Ok(induced)
}

/// λ-operations `λⁱ(x) = C(x, i)` on `Z` and the Adams operations derived
/// from them.
#[derive(Clone, Debug)]
pub struct LambdaFamily {
    /// `lambdas[i]` is `λⁱ`, starting at `λ⁰ = 1`.
    pub lambdas: Vec<PolyMap>,
    /// `adams[k]` is `ψᵏ`; `adams[0]` is unused and zero.
    pub adams: Vec<PolyMap>,
}

/// `λ¹, …, λ^{i_max}` and `ψ¹, …, ψ^{i_max}` as certified maps `Z → Z`.
///
/// Adams operations follow the Newton recurrence
/// `ψᵏ = Σ_{i=1}^{k−1} (−1)^{i−1} λⁱ ψ^{k−i} + (−1)^{k−1} k λᵏ`.
pub fn lambda_and_adams(i_max: usize) -> Result<LambdaFamily> {
    if i_max == 0 {
        return Err(Error::Unsupported("need at least one lambda operation".into()));
    }
    let z = Domain::integers();
    let lambdas = (0..=i_max).map(|i| PolyMap::binomial_map(z.clone(), i)).collect::<Result<Vec<_>>>()?;
    let mut adams: Vec<PolyMap> = vec![PolyMap::zero(z.clone(), FgAbelianGroup::integers())?];
    for k in 1..=i_max {
        let sk = if k % 2 == 1 { 1 } else { -1 };
        let mut acc = lambdas[k].scale(&BigInt::from(sk * k as i64))?;
        for i in 1..k {
            let term = lambdas[i].mul(&adams[k - i])?;
            acc = if i % 2 == 1 { acc.add(&term)? } else { acc.sub(&term)? };
        }
        adams.push(acc.with_exact_degree());
    }
    Ok(LambdaFamily { lambdas, adams })
}

/// `(xᵖ − ψᵖ(x)) / p` on `Z`, certified of degree `p`.
pub fn fermat_quotient(p: usize) -> Result<PolyMap> {
    let family = lambda_and_adams(p)?;
    let x = PolyMap::identity(FgAbelianGroup::integers())?;
    let diff = x.pow(p)?.sub(&family.adams[p])?;
    diff.div_exact(&BigInt::from(p))?.certify()
}

/// `m ↦ mᵖ` on `ℕ`, the effect of the `p`-th tensor power on ranks.
pub fn tensor_power_on_ranks(p: usize) -> Result<PolyMap> {
    let f = PolyMap::fit(Domain::naturals(), FgAbelianGroup::integers(), DegreeBound::AtMost(p), p, &|x| {
        Ok(vec![num_traits::pow(x.free[0].clone(), p)])
    })?;
    f.certify()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn nat(x: u64) -> MonoidElement {
        MonoidElement::Free(vec![x])
    }

    #[test]
    fn additive_examples() {
        assert_eq!(k0_additive(&AdditiveCatSpec { pi0: CommMonoid::naturals() }).group.describe(), "Z");
        assert_eq!(k0_additive(&AdditiveCatSpec { pi0: CommMonoid::free(2) }).group.describe(), "Z^2");
        let absorbing = CommMonoid::from_table(vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert!(k0_additive(&AdditiveCatSpec { pi0: absorbing }).group.is_trivial());
    }

    #[test]
    fn stable_examples() {
        let split = StableCatSpec::split(CommMonoid::free(2));
        assert_eq!(k0_stable(&split).unwrap(), k0_additive(&split.additive));
        // e₁ → e₂ → e₁ forces [e₂] = 2[e₁]
        let e1 = MonoidElement::Free(vec![1, 0]);
        let e2 = MonoidElement::Free(vec![0, 1]);
        let spec = StableCatSpec { additive: AdditiveCatSpec { pi0: CommMonoid::free(2) }, cofiber_rels: vec![(e1.clone(), e2.clone(), e1.clone())] };
        let k = k0_stable(&spec).unwrap();
        assert_eq!(k.group.describe(), "Z");
        let two_e1 = k.group.scale(&int(2), &k.class_of(&e1).unwrap()).unwrap();
        assert_eq!(k.class_of(&e2).unwrap(), two_e1);
        // a relation that already holds
        let spec = StableCatSpec { additive: AdditiveCatSpec { pi0: CommMonoid::naturals() }, cofiber_rels: vec![(nat(1), nat(2), nat(1))] };
        assert_eq!(k0_stable(&spec).unwrap().group.describe(), "Z");
    }

    #[test]
    fn lambda_two_induced() {
        let spec = StableCatSpec::split(CommMonoid::naturals());
        let f = PolyMap::binomial_map(Domain::naturals(), 2).unwrap();
        let ind = induced_k0_map(&f, 2, &spec, &spec).unwrap();
        assert_eq!(ind.map.evaluate_int(&[-1]).unwrap(), int(1));
        let lin = PolyMap::integer_mahler(Domain::naturals(), DegreeBound::AtMost(1), &[(vec![1], 3)]).unwrap().certify().unwrap();
        let ind = induced_k0_map(&lin, 1, &spec, &spec).unwrap();
        for x in -5..=5 {
            assert_eq!(ind.map.evaluate_int(&[x]).unwrap(), int(3 * x));
        }
    }

    #[test]
    fn tensor_power_induced() {
        let spec = StableCatSpec::split(CommMonoid::naturals());
        let f = tensor_power_on_ranks(3).unwrap();
        let ind = induced_k0_map(&f, 3, &spec, &spec).unwrap();
        for x in -10i64..=10 {
            assert_eq!(ind.map.evaluate_int(&[x]).unwrap(), int(x.pow(3)));
        }
    }

    #[test]
    fn non_respecting_functor_is_caught() {
        // [1] = [1] + [0] holds already; [1] = [1] + [1] kills [1], and C(·, 2) is not constant
        let src = StableCatSpec {
            additive: AdditiveCatSpec { pi0: CommMonoid::naturals() },
            cofiber_rels: vec![(nat(1), nat(1), nat(0))],
        };
        let tgt = StableCatSpec::split(CommMonoid::naturals());
        let collapse = StableCatSpec {
            additive: AdditiveCatSpec { pi0: CommMonoid::naturals() },
            cofiber_rels: vec![(nat(1), nat(1), nat(1))],
        };
        let f = PolyMap::binomial_map(Domain::naturals(), 2).unwrap();
        assert!(induced_k0_map(&f, 2, &src, &tgt).is_ok());
        assert!(matches!(induced_k0_map(&f, 2, &collapse, &tgt), Err(Error::NotInvariant(_))));
    }

    #[test]
    fn adams_operations_are_identity_on_ranks() {
        let fam = lambda_and_adams(5).unwrap();
        for k in 1..=5 {
            assert_eq!(fam.adams[k].degree(), DegreeBound::AtMost(1));
            for x in -7..=7 {
                assert_eq!(fam.adams[k].evaluate_int(&[x]).unwrap(), int(x));
            }
        }
        assert_eq!(fam.lambdas[2].evaluate_int(&[-1]).unwrap(), int(1));
        assert_eq!(fam.lambdas[1].evaluate_int(&[9]).unwrap(), int(9));
    }

    #[test]
    fn fermat_quotients() {
        for p in [2usize, 3, 5] {
            let q = fermat_quotient(p).unwrap();
            assert_eq!(q.degree(), DegreeBound::AtMost(p));
            for x in -20i64..=20 {
                let direct = (int(x).pow(p as u32) - int(x)) / int(p as i64);
                assert_eq!(q.evaluate_int(&[x]).unwrap(), direct);
            }
        }
    }
}
