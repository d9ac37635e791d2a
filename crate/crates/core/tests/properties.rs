//! Randomized invariants across the exact algebra, simplex rings, scalar
//! forms and group-valued forms.

use cdforms::exactalg::{AlgebraPresentation, AlgebraRef, BaseRing, Ideal, Monomial, Poly, PolyRing, RingRef};
use cdforms::forms::{degeneracy_witness, ScalarCombForm};
use cdforms::gforms::{delta0, delta1, GroupForm};
use cdforms::hopf::{builtin_group, DeformationKernel, SquareZeroExt};
use cdforms::random::{self, PolyBounds};
use cdforms::rng::Lcg64;
use cdforms::simplex::{Engine, Flavor, IndexMap, SimplexRing};
use proptest::prelude::*;

const SMALL: PolyBounds = PolyBounds { max_degree: 2, max_terms: 3, coeff: 3 };

fn base(f2: bool) -> BaseRing {
    if f2 {
        BaseRing::prime_field(2).unwrap()
    } else {
        BaseRing::Rationals
    }
}

fn plane(f2: bool) -> AlgebraRef {
    AlgebraPresentation::free(base(f2), ["x", "y"])
}

fn flavor(strong: bool) -> Flavor {
    if strong {
        Flavor::Strong
    } else {
        Flavor::Weak
    }
}

fn poly_from(ring: &RingRef, terms: &[(i64, u32, u32)]) -> Poly {
    let b = ring.base();
    Poly::from_terms(ring, terms.iter().map(|&(c, i, j)| (Monomial::from_exponents(vec![i, j]), b.from_int(c))))
}

fn terms() -> impl Strategy<Value = Vec<(i64, u32, u32)>> {
    prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn polynomials_form_a_commutative_ring(a in terms(), b in terms(), c in terms(), f2 in any::<bool>()) {
        let ring = PolyRing::new(base(f2), ["x", "y"]);
        let (a, b, c) = (poly_from(&ring, &a), poly_from(&ring, &b), poly_from(&ring, &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rendered_polynomials_parse_back(a in terms(), f2 in any::<bool>()) {
        let ring = PolyRing::new(base(f2), ["x", "y"]);
        let p = poly_from(&ring, &a);
        prop_assert_eq!(Poly::parse(&ring, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn rendered_forms_parse_back(seed in any::<u64>(), n in 0usize..=3, strong in any::<bool>(), f2 in any::<bool>()) {
        let alg = plane(f2);
        let mut rng = Lcg64::new(seed);
        let a = random::classical(&mut rng, &alg, flavor(strong), n, SMALL).unwrap();
        let back = cdforms::forms::ClassicalForm::parse(&alg, flavor(strong), Some(n), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn normal_forms_are_canonical(g1 in terms(), g2 in terms(), p in terms(), q in terms()) {
        let ring = PolyRing::new(BaseRing::Rationals, ["x", "y"]);
        let gens = vec![poly_from(&ring, &g1), poly_from(&ring, &g2)];
        let ideal = Ideal::new(&ring, gens.clone());
        let (p, q) = (poly_from(&ring, &p), poly_from(&ring, &q));
        let nf = ideal.normal_form(&p).unwrap();
        prop_assert_eq!(ideal.normal_form(&nf).unwrap(), nf.clone());
        // p and p + g·q differ by an ideal element.
        let shifted = &p + &(&gens[0] * &q);
        prop_assert_eq!(ideal.normal_form(&shifted).unwrap(), nf);
        prop_assert!(ideal.contains(&(&gens[1] * &q)).unwrap());
    }

    #[test]
    fn engines_agree_on_products(seed in any::<u64>(), n in 1usize..=3, strong in any::<bool>(), f2 in any::<bool>()) {
        let alg = plane(f2);
        let st = SimplexRing::new(&alg, n, flavor(strong), Engine::Structured).unwrap();
        let ge = st.with_engine(Engine::Generic).unwrap();
        let mut rng = Lcg64::new(seed);
        let amb = st.ambient();
        let (p, q) = (random::ring_poly(&mut rng, &amb, SMALL), random::ring_poly(&mut rng, &amb, SMALL));
        let s = &st.from_ambient(&p).unwrap() * &st.from_ambient(&q).unwrap();
        let g = ge.from_ambient(&(&p * &q)).unwrap();
        prop_assert_eq!(s.to_engine(Engine::Generic).unwrap(), g.clone());
        prop_assert_eq!(g.to_engine(Engine::Structured).unwrap(), s);
    }

    #[test]
    fn pullbacks_are_functorial_ring_maps(seed in any::<u64>(), strong in any::<bool>()) {
        let alg = plane(false);
        let r2 = SimplexRing::new(&alg, 2, flavor(strong), Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let amb = r2.ambient();
        let a = r2.from_ambient(&random::ring_poly(&mut rng, &amb, SMALL)).unwrap();
        let b = r2.from_ambient(&random::ring_poly(&mut rng, &amb, SMALL)).unwrap();
        let f = IndexMap::new(3, (0..3).map(|_| rng.below(4) as usize).collect()).unwrap();
        let g = IndexMap::new(1, (0..4).map(|_| rng.below(2) as usize).collect()).unwrap();
        prop_assert_eq!((&a * &b).pullback(&f).unwrap(), &a.pullback(&f).unwrap() * &b.pullback(&f).unwrap());
        prop_assert_eq!(a.pullback(&f).unwrap().pullback(&g).unwrap(), a.pullback(&f.then(&g).unwrap()).unwrap());
    }

    #[test]
    fn nu_is_inverted_and_lands_in_forms(seed in any::<u64>(), n in 1usize..=3, strong in any::<bool>(), f2 in any::<bool>()) {
        let alg = plane(f2);
        let fl = flavor(strong);
        let ring = SimplexRing::new(&alg, n, fl, Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let a = random::classical(&mut rng, &alg, fl, n, SMALL).unwrap();
        let f = ScalarCombForm::nu(&a, &ring).unwrap();
        prop_assert!(degeneracy_witness(f.elem()).unwrap().is_none());
        prop_assert_eq!(f.nu_inverse().unwrap(), a);
    }

    #[test]
    fn cech_differential_squares_to_zero(seed in any::<u64>(), p in 0usize..=1, f2 in any::<bool>()) {
        let alg = plane(f2);
        let ring = SimplexRing::new(&alg, p, Flavor::Strong, Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let a = random::classical(&mut rng, &alg, Flavor::Strong, p, SMALL).unwrap();
        let f = ScalarCombForm::nu(&a, &ring).unwrap();
        let df = f.cech_delta().unwrap();
        prop_assert_eq!(df.nu_inverse().unwrap(), a.exterior_d());
        prop_assert!(df.cech_delta().unwrap().is_zero());
    }

    #[test]
    fn permutations_act_by_sign(seed in any::<u64>(), n in 1usize..=3) {
        let alg = plane(false);
        let ring = SimplexRing::new(&alg, n, Flavor::Strong, Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let f = ScalarCombForm::nu(&random::classical(&mut rng, &alg, Flavor::Strong, n, SMALL).unwrap(), &ring).unwrap();
        let sigma = IndexMap::permutation(random::permutation(&mut rng, n)).unwrap();
        let tau = IndexMap::permutation(random::permutation(&mut rng, n)).unwrap();
        let sign = sigma.sign().unwrap();
        prop_assert_eq!(sigma.then(&tau).unwrap().sign().unwrap(), sign * tau.sign().unwrap());
        prop_assert_eq!(f.sym_action(&sigma).unwrap(), f.scale(&alg.base().from_int(sign)));
    }

    #[test]
    fn group_forms_form_a_group(seed in any::<u64>(), idx in 0usize..4, n in 1usize..=2) {
        let alg = plane(false);
        let g = builtin_group(["Ga", "Gm", "Aff1", "Heis3"][idx], alg.base()).unwrap();
        let ring = SimplexRing::new(&alg, n, Flavor::Strong, Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let rep = random::rep(&mut rng, &g, &alg, n, SMALL).unwrap();
        let f = GroupForm::from_classical(&g, &rep, &ring).unwrap();
        prop_assert!(f.degeneracy_failure().unwrap().is_none());
        prop_assert!(f.product(&f.inverse()).unwrap().is_identity());
        prop_assert_eq!(f.to_classical().unwrap(), rep);
    }

    #[test]
    fn maurer_cartan_equation_holds_for_random_points(seed in any::<u64>(), idx in 0usize..4) {
        let alg = AlgebraPresentation::new(BaseRing::Rationals, ["x", "s", "sbar"], &[], &[("s", "sbar")]).unwrap();
        let g = builtin_group(["Ga", "Gm", "Aff1", "Heis3"][idx], alg.base()).unwrap();
        let ring = SimplexRing::new(&alg, 1, Flavor::Strong, Engine::Structured).unwrap();
        let mut rng = Lcg64::new(seed);
        let x = random::point(&mut rng, &g, &alg, SMALL).unwrap();
        prop_assert!(delta1(&delta0(&x, &ring).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn deformation_points_match_linear_maps(seed in any::<u64>(), idx in 0usize..4) {
        let alg = plane(false);
        let g = builtin_group(["Ga", "Gm", "Aff1", "Heis3"][idx], alg.base()).unwrap();
        let target = SquareZeroExt::with_differentials(&alg);
        let k = DeformationKernel::new(&g, &target).unwrap();
        let mut rng = Lcg64::new(seed);
        let u: Vec<Vec<Poly>> = (0..g.colie().dim()).map(|_| (0..2).map(|_| random::poly(&mut rng, &alg, SMALL)).collect()).collect();
        let v: Vec<Vec<Poly>> = (0..g.colie().dim()).map(|_| (0..2).map(|_| random::poly(&mut rng, &alg, SMALL)).collect()).collect();
        prop_assert_eq!(k.check_pair(&u, &v).unwrap(), None);
        prop_assert_eq!(k.linear_from_point(&k.point_from_linear(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn forked_streams_are_reproducible(seed in any::<u64>(), label in any::<u64>()) {
        let mut a = Lcg64::new(seed).fork(label);
        let mut b = Lcg64::new(seed).fork(label);
        let xs: Vec<u32> = (0..8).map(|_| a.next_u32()).collect();
        let ys: Vec<u32> = (0..8).map(|_| b.next_u32()).collect();
        prop_assert_eq!(xs, ys);
        let r = a.range(-3, 3);
        prop_assert!((-3..=3).contains(&r));
    }
}
