//! Randomized invariants across the library.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polyk0::algebra::{smith_normal_form, FgAbelianGroup, IntMatrix};
use polyk0::characters::{
    character, check_divisibility, newton_convert, newton_convert_inverse, Divisibility, SymmetricPolynomial,
};
use polyk0::k0::lambda_and_adams;
use polyk0::monoid_ring::CoefficientRing;
use polyk0::polymap::{DegreeBound, Domain, PolyMap, Point};
use polyk0::simplicial::{
    cech_nerve, dk_gamma, dold_kan_roundtrip, normalized_chains, Ext, FrobeniusTwist, PolynomialFunctor, Sym, Tensor,
};
use polyk0::suites::random_complex;

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn matrix(rows: usize, cols: usize, entries: &[i64]) -> IntMatrix {
    IntMatrix::from_vec(rows, cols, entries.iter().take(rows * cols).map(|&x| int(x)).collect()).unwrap()
}

fn small_matrix() -> impl Strategy<Value = IntMatrix> {
    (0usize..5, 0usize..5)
        .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-20i64..=20, r * c)))
        .prop_map(|(r, c, e)| matrix(r, c, &e))
}

fn group() -> impl Strategy<Value = FgAbelianGroup> {
    (1usize..4, 0usize..4)
        .prop_flat_map(|(g, r)| (Just(g), Just(r), prop::collection::vec(-6i64..=6, g * r)))
        .prop_map(|(g, r, e)| FgAbelianGroup::from_relations(g, &matrix(r, g, &e)))
}

/// A map `ℕ² → Z` of degree at most 3 with small Mahler coefficients.
fn map_n2() -> impl Strategy<Value = PolyMap> {
    prop::collection::vec(-5i64..=5, 10).prop_map(|cs| {
        let idx = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2], [3, 0], [2, 1], [1, 2], [0, 3]];
        let coeffs: Vec<(Vec<usize>, i64)> = idx.iter().zip(cs).map(|(j, c)| (j.to_vec(), c)).collect();
        PolyMap::integer_mahler(Domain::Monoid(polyk0::algebra::CommMonoid::free(2)), DegreeBound::AtMost(3), &coeffs).unwrap()
    })
}

fn point() -> impl Strategy<Value = Point> {
    (0i64..6, 0i64..6).prop_map(|(a, b)| Point::from_i64(&[a, b]))
}

fn functor(which: usize, degree: usize) -> Box<dyn PolynomialFunctor> {
    match which % 3 {
        0 => Box::new(Sym(degree)),
        1 => Box::new(Ext(degree)),
        _ => Box::new(Tensor(degree)),
    }
}

fn ring(which: u8) -> CoefficientRing {
    match which % 3 {
        0 => CoefficientRing::Integers,
        1 => CoefficientRing::modulo(2).unwrap(),
        _ => CoefficientRing::modulo(3).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_is_a_unimodular_diagonalization(a in small_matrix()) {
        let s = smith_normal_form(&a);
        prop_assert!(s.u.is_unimodular());
        prop_assert!(s.v.is_unimodular());
        prop_assert_eq!(s.u.mul(&a).unwrap().mul(&s.v).unwrap(), s.d.clone());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let diag: Vec<BigInt> = (0..s.d.rows().min(s.d.cols())).map(|i| s.d[(i, i)].clone()).collect();
        for w in diag.windows(2) {
            prop_assert!(!w[0].is_negative());
            if w[0].is_zero() {
                prop_assert!(w[1].is_zero());
            } else {
                prop_assert!((&w[1] % &w[0]).is_zero());
            }
        }
    }

    #[test]
    fn snf_is_deterministic(a in small_matrix()) {
        prop_assert_eq!(smith_normal_form(&a), smith_normal_form(&a));
    }

    #[test]
    fn group_reduction_is_a_homomorphism(g in group(), x in prop::collection::vec(-30i64..=30, 3), y in prop::collection::vec(-30i64..=30, 3)) {
        let n = g.ambient_rank();
        let x: Vec<BigInt> = x.into_iter().take(n).map(int).collect();
        let y: Vec<BigInt> = y.into_iter().take(n).map(int).collect();
        prop_assume!(x.len() == n && y.len() == n);
        let rx = g.reduce(&x).unwrap();
        let ry = g.reduce(&y).unwrap();
        prop_assert_eq!(g.normalize(rx.clone()).unwrap(), rx.clone());
        prop_assert_eq!(g.reduce(&g.lift(&rx).unwrap()).unwrap(), rx.clone());
        let sum: Vec<BigInt> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert_eq!(g.reduce(&sum).unwrap(), g.add(&rx, &ry).unwrap());
    }

    #[test]
    fn cross_differences_commute(f in map_n2(), y in point(), z in point(), x in point()) {
        let yz = f.cross_difference(&y).unwrap().cross_difference(&z).unwrap();
        let zy = f.cross_difference(&z).unwrap().cross_difference(&y).unwrap();
        prop_assert_eq!(yz.evaluate(&x).unwrap(), zy.evaluate(&x).unwrap());
    }

    #[test]
    fn cross_difference_cocycle(f in map_n2(), y in point(), z in point(), x in point()) {
        // D_{y+z} f(x) = D_y f(x + z) + D_z f(x)
        let d = Domain::Monoid(polyk0::algebra::CommMonoid::free(2));
        let lhs = f.cross_difference(&d.add(&y, &z).unwrap()).unwrap().evaluate(&x).unwrap();
        let a = f.cross_difference(&y).unwrap().evaluate(&d.add(&x, &z).unwrap()).unwrap();
        let b = f.cross_difference(&z).unwrap().evaluate(&x).unwrap();
        prop_assert_eq!(lhs, vec![&a[0] + &b[0]]);
    }

    #[test]
    fn differences_lower_the_degree(f in map_n2(), y in point()) {
        let d = f.mahler_degree().as_i64();
        let dd = f.cross_difference(&y).unwrap().mahler_degree().as_i64();
        prop_assert!(dd < d || d < 0);
    }

    #[test]
    fn lambda_vandermonde(x in -8i64..=8, y in -8i64..=8, d in 1usize..=4) {
        let fam = lambda_and_adams(4).unwrap();
        let lhs = fam.lambdas[d].evaluate_int(&[x + y]).unwrap();
        let rhs: BigInt = (0..=d)
            .map(|i| fam.lambdas[i].evaluate_int(&[x]).unwrap() * fam.lambdas[d - i].evaluate_int(&[y]).unwrap())
            .sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn adams_operations_are_additive(x in -8i64..=8, y in -8i64..=8, k in 1usize..=4) {
        let fam = lambda_and_adams(4).unwrap();
        let psi = |v: i64| fam.adams[k].evaluate_int(&[v]).unwrap();
        prop_assert_eq!(psi(x + y), psi(x) + psi(y));
    }

    #[test]
    fn characters_are_symmetric(which in 0usize..3, p in 1usize..4, extra in 0usize..2, pt in prop::collection::vec(-4i64..=4, 5), perm in Just((0..5).collect::<Vec<usize>>()).prop_shuffle()) {
        let n = p + extra;
        let f = functor(which, p);
        let ch = character(f.as_ref(), n, p).unwrap();
        let point: Vec<BigInt> = pt[..n].iter().map(|&v| int(v)).collect();
        let order: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let permuted: Vec<BigInt> = order.iter().map(|&i| point[i].clone()).collect();
        prop_assert_eq!(ch.evaluate(&point).unwrap(), ch.evaluate(&permuted).unwrap());
    }

    #[test]
    fn character_values_match_the_trace(which in 0usize..3, p in 1usize..4, pt in prop::collection::vec(-3i64..=3, 4)) {
        // the character at a point is the trace of F applied to the diagonal matrix
        let n = pt.len();
        let f = functor(which, p);
        prop_assume!(n >= p);
        let mut diag = IntMatrix::zeros(n, n);
        for (i, &v) in pt.iter().enumerate() {
            diag[(i, i)] = int(v);
        }
        let fa = f.apply(&diag, CoefficientRing::Integers).unwrap();
        let trace: BigInt = (0..fa.rows()).map(|i| fa[(i, i)].clone()).sum();
        let point: Vec<BigInt> = pt.iter().map(|&v| int(v)).collect();
        prop_assert_eq!(character(f.as_ref(), n, p).unwrap().evaluate(&point).unwrap(), trace);
    }

    #[test]
    fn characters_are_stable_under_restriction(which in 0usize..3, p in 1usize..4, extra in 1usize..3) {
        let f = functor(which, p);
        let big = character(f.as_ref(), p + extra, p).unwrap();
        let small = character(f.as_ref(), p + extra - 1, p).unwrap();
        prop_assert_eq!(big.restrict().unwrap(), small);
    }

    #[test]
    fn newton_conversion_roundtrips(ps in prop::collection::vec(-20i64..=20, 1..6)) {
        let ps: Vec<BigRational> = ps.into_iter().map(|x| BigRational::from_integer(int(x))).collect();
        prop_assert_eq!(newton_convert_inverse(&newton_convert(&ps)), ps);
    }

    #[test]
    fn normalized_ranks_follow_the_level_formula(seed in any::<u64>(), r in 0u8..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, ring(r), 3, 3).unwrap();
        let x = dk_gamma(&c, c.top() + 1).unwrap();
        let predicted = x.normalized_ranks_from_levels();
        let n = normalized_chains(&x).unwrap();
        let actual: Vec<i64> = n.complex.ranks().iter().map(|&v| v as i64).collect();
        prop_assert_eq!(predicted, actual);
    }

    #[test]
    fn dold_kan_roundtrip_holds(seed in any::<u64>(), r in 0u8..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, ring(r), 4, 3).unwrap();
        let report = dold_kan_roundtrip(&c).unwrap();
        prop_assert!(report.homology_matches);
        prop_assert_eq!(report.isomorphisms.len(), c.top() + 1);
    }

    #[test]
    fn euler_characteristic_matches_homology(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_complex(&mut rng, CoefficientRing::Integers, 4, 4).unwrap();
        let h = c.homology().unwrap();
        let alt: i64 = h.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.free_rank() as i64 } else { -(g.free_rank() as i64) }).sum();
        prop_assert_eq!(c.euler_characteristic(), int(alt));
    }

    #[test]
    fn nerve_of_an_injection_is_one_skeletal(a in 1usize..3, extra in 0usize..2, entries in prop::collection::vec(0i64..2, 12)) {
        // [I | M] stacked so the map k^a → k^(a+extra) is injective
        let b = a + extra;
        let mut f = IntMatrix::zeros(b, a);
        for i in 0..a {
            f[(i, i)] = BigInt::one();
        }
        for i in a..b {
            for j in 0..a {
                f[(i, j)] = int(entries[i * a + j]);
            }
        }
        let x = cech_nerve(&f, CoefficientRing::modulo(2).unwrap(), 4).unwrap();
        let n = normalized_chains(&x).unwrap();
        prop_assert_eq!(n.complex.ranks().to_vec(), vec![b, a, 0, 0, 0]);
    }
}

#[test]
fn tensor_powers_multiply_characters() {
    for p in 1..=4 {
        for n in p..=p + 1 {
            let t1 = character(&Tensor(1), n, 1).unwrap();
            assert_eq!(character(&Tensor(p), n, p).unwrap(), t1.pow(p).unwrap(), "p={} n={}", p, n);
        }
    }
}

#[test]
fn freshmans_dream_mod_p() {
    // p₁ᵖ − p_p is divisible by p exactly when p is prime
    for p in [2u64, 3, 5, 7] {
        let n = p as usize;
        let lhs = SymmetricPolynomial::power_sum(n, 1).pow(n).unwrap();
        let rhs = SymmetricPolynomial::power_sum(n, n);
        assert!(matches!(check_divisibility(&lhs, &rhs, p).unwrap(), Divisibility::Quotient(_)), "p={}", p);
        let twist = character(&FrobeniusTwist(p), n, n).unwrap();
        assert_eq!(twist, rhs);
    }
    let lhs = SymmetricPolynomial::power_sum(4, 1).pow(4).unwrap();
    let rhs = SymmetricPolynomial::power_sum(4, 4);
    assert!(matches!(check_divisibility(&lhs, &rhs, 4).unwrap(), Divisibility::Counterexample { .. }));
}
