use super::*;
use crate::exactalg::AlgebraPresentation;
use crate::simplex::{Engine, Flavor, SimplexRing};

const Q: BaseRing = BaseRing::Rationals;

fn tensor(entries: &[((usize, usize), i64)]) -> ColieTensor {
    ColieTensor { entries: entries.iter().map(|&(k, c)| (k, Q.from_int(c))).collect() }
}

#[test]
fn builtins_satisfy_axioms() {
    for base in [Q, BaseRing::prime_field(2).unwrap(), BaseRing::prime_field(5).unwrap()] {
        for name in BUILTIN_GROUPS {
            let g = builtin_group(name, base).unwrap();
            assert!(g.axiom_failures().is_empty(), "{name} over {base}");
        }
    }
    assert!(matches!(builtin_group("SL2", Q), Err(Error::UnknownName(_))));
}

#[test]
fn affine_composition_law() {
    let g = builtin_group("Aff1", Q).unwrap();
    let t = tensor_algebra(&[(g.algebra(), "1"), (g.algebra(), "2")]).unwrap();
    let p1 = GroupPoint::new(&g, &t, (0..3).map(|i| t.var(i)).collect()).unwrap();
    let p2 = GroupPoint::new(&g, &t, (3..6).map(|i| t.var(i)).collect()).unwrap();
    let c = p1.compose(&p2).unwrap();
    assert!(t.equal(&c.images()[0], &t.parse("a_1*a_2").unwrap()));
    assert!(t.equal(&c.images()[2], &t.parse("b_1 + a_1*b_2").unwrap()));
}

#[test]
fn colie_bases() {
    let gm = builtin_group("Gm", Q).unwrap();
    assert_eq!(gm.colie().basis(), &[0]);
    assert_eq!(gm.colie().generator_class(1), &vec![Q.from_int(-1)]);
    let aff = builtin_group("Aff1", Q).unwrap();
    assert_eq!(aff.colie().basis(), &[0, 2]);
    assert_eq!(aff.colie_names(), vec!["[a]", "[b]"]);
    let heis = builtin_group("Heis3", Q).unwrap();
    assert_eq!(heis.colie().dim(), 3);
    // Reduction kills I² and is the identity on representatives.
    let a = aff.algebra();
    let sq = a.parse("(a - 1)*b + b^2").unwrap();
    assert_eq!(aff.reduce_colie(&sq).unwrap(), vec![Q.zero(), Q.zero()]);
    assert_eq!(aff.reduce_colie(&a.parse("abar - 1").unwrap()).unwrap(), vec![Q.from_int(-1), Q.zero()]);
    assert!(matches!(aff.reduce_colie(&a.parse("a").unwrap()), Err(Error::Augmentation(_))));
}

#[test]
fn comult_tail_examples() {
    let ga = builtin_group("Ga", Q).unwrap();
    assert!(ga.comult_tail(&ga.algebra().parse("x").unwrap()).unwrap().is_empty());
    let aff = builtin_group("Aff1", Q).unwrap();
    let tail = aff.comult_tail(&aff.algebra().parse("b").unwrap()).unwrap();
    assert_eq!(tail.len(), 1);
    assert_eq!(tail[0].0.to_string(), "a - 1");
    assert_eq!(tail[0].1.to_string(), "b");
    let heis = builtin_group("Heis3", Q).unwrap();
    let tail = heis.comult_tail(&heis.algebra().parse("r").unwrap()).unwrap();
    assert_eq!(tail.len(), 1);
    assert_eq!((tail[0].0.to_string(), tail[0].1.to_string()), ("p".into(), "q".into()));
    assert!(heis.comult_tail(&heis.algebra().parse("r + 1").unwrap()).is_err());
}

#[test]
fn lambda_examples() {
    let ga = builtin_group("Ga", Q).unwrap();
    assert!(ga.lambda_basis(0).unwrap().is_zero());
    let heis = builtin_group("Heis3", Q).unwrap();
    let l = heis.lambda_basis(2).unwrap();
    assert_eq!(l, tensor(&[((0, 1), 1), ((1, 0), -1)]));
    let names = heis.colie_names();
    assert_eq!(l.render(Q, &names, &names), "[p]⊗[q] - [q]⊗[p]");
    let aff = builtin_group("Aff1", Q).unwrap();
    assert_eq!(aff.lambda_basis(1).unwrap(), tensor(&[((0, 1), 1), ((1, 0), -1)]));
    assert!(aff.lambda_basis(0).unwrap().is_zero());
    // Antisymmetry.
    for g in [&heis, &aff] {
        for j in 0..g.colie().dim() {
            let l = g.lambda_basis(j).unwrap();
            assert_eq!(l.transpose(), l.scale(Q, &Q.from_int(-1)));
        }
    }
}

#[test]
fn lambda_ignores_the_tail_split() {
    let aff = builtin_group("Aff1", Q).unwrap();
    let a = aff.algebra();
    // (a−1)⊗b rewritten as (a−1+(a−1)²)⊗b − (a−1)²⊗b.
    let t1 = vec![(a.parse("a - 1").unwrap(), a.parse("b").unwrap())];
    let t2 = vec![
        (a.parse("a - 1 + (a - 1)^2").unwrap(), a.parse("b").unwrap()),
        (a.parse("-(a - 1)^2").unwrap(), a.parse("b").unwrap()),
    ];
    assert_eq!(aff.lambda_from_tail(&t1).unwrap(), aff.lambda_from_tail(&t2).unwrap());
}

#[test]
fn corrupted_structures_are_rejected() {
    let heis = builtin_group("Heis3", Q).unwrap();
    let pair = heis.pair_algebra();
    let mut comult = heis.comult().to_vec();
    comult[0] = &comult[0] + &pair.parse("p_1*p_2").unwrap();
    let bad = HopfAlgebra::unchecked("bad", heis.algebra(), comult.clone(), heis.counit().to_vec(), heis.antipode().to_vec()).unwrap();
    let fails = bad.axiom_failures();
    assert!(fails.iter().any(|e| matches!(e, Error::Axiom { axiom, .. } if axiom == "coassociativity")));
    assert!(HopfAlgebra::new("bad", heis.algebra(), comult, heis.counit().to_vec(), heis.antipode().to_vec()).is_err());

    let mut counit = heis.counit().to_vec();
    counit[2] = Q.from_int(1);
    let bad = HopfAlgebra::unchecked("bad", heis.algebra(), heis.comult().to_vec(), counit, heis.antipode().to_vec()).unwrap();
    assert!(bad.axiom_failures().iter().any(|e| matches!(e, Error::Axiom { axiom, generator, .. } if axiom.contains("counit") && generator == "r")));

    let mut antipode = heis.antipode().to_vec();
    antipode[1] = &antipode[1] + &heis.algebra().parse("q").unwrap();
    let bad = HopfAlgebra::unchecked("bad", heis.algebra(), heis.comult().to_vec(), heis.counit().to_vec(), antipode).unwrap();
    let fails = bad.axiom_failures();
    assert!(fails.iter().any(|e| matches!(e, Error::Axiom { axiom, witness, .. } if axiom.contains("antipode") && !witness.is_empty())));
}

#[test]
fn text_specs_round_trip_through_relabeling() {
    let heis = builtin_group("Heis3", Q).unwrap();
    let re = heis.relabeled("H", &["u".into(), "v".into(), "w".into()]).unwrap();
    assert_eq!(re.comult()[2].to_string(), "u_1*v_2 + w_1 + w_2");
    assert!(!re.same_group(&heis));
    assert!(heis.same_group(&builtin_group("Heis3", Q).unwrap()));
}

#[test]
fn coaction_examples() {
    let scale = builtin_action("gm_scales_ga", Q).unwrap();
    assert_eq!(scale.lambda_bar_basis(0).unwrap(), tensor(&[((0, 0), 1)]));
    let ga = builtin_action("conjugation(Ga)", Q).unwrap();
    assert_eq!(ga.rho()[0].to_string(), "x_2");
    assert!(ga.lambda_bar_basis(0).unwrap().is_zero());
    let aff = builtin_action("conjugation(Aff1)", Q).unwrap();
    assert_eq!(aff.lambda_bar_basis(1).unwrap(), tensor(&[((0, 1), 1), ((1, 0), -1)]));
    let heis = builtin_action("conjugation(Heis3)", Q).unwrap();
    assert!(heis.rho()[2].to_string().contains("r_2"));
    // Conjugation recovers λ.
    for name in BUILTIN_GROUPS {
        let g = builtin_group(name, Q).unwrap();
        let c = g.conjugation().unwrap();
        for j in 0..g.colie().dim() {
            assert_eq!(c.lambda_bar_basis(j).unwrap(), g.lambda_basis(j).unwrap(), "{name}");
        }
    }
    assert!(builtin_action("rotation", Q).is_err());
}

#[test]
fn bad_coaction_is_rejected() {
    let gm = builtin_group("Gm", Q).unwrap();
    let ga = builtin_group("Ga", Q).unwrap();
    assert!(Coaction::new("square", &gm, &ga, &["t_1^2*x_2"]).is_ok());
    let err = Coaction::new("shift", &gm, &ga, &["x_2 + t_1 - 1"]).unwrap_err();
    assert!(matches!(err, Error::Axiom { .. }));
}

#[test]
fn heisenberg_commutator_over_two_simplex() {
    let b = AlgebraPresentation::free(Q, ["u", "v", "w"]);
    let heis = builtin_group("Heis3", Q).unwrap();
    for engine in [Engine::Structured, Engine::Generic] {
        let r = SimplexRing::new(&b, 2, Flavor::Strong, engine).unwrap();
        let e1u = r.eps_named(1, "u").unwrap();
        let e2v = r.eps_named(2, "v").unwrap();
        let g1 = GroupPoint::new(&heis, &r, vec![e1u.clone(), r.zero(), r.zero()]).unwrap();
        let g2 = GroupPoint::new(&heis, &r, vec![r.zero(), e2v.clone(), r.zero()]).unwrap();
        let c = g1.commutator(&g2).unwrap();
        assert!(c.images()[0].is_zero() && c.images()[1].is_zero());
        assert_eq!(c.images()[2], &e1u * &e2v);
        let e = GroupPoint::identity(&heis, &r);
        assert!(e.commutator(&g1).unwrap().is_identity());
        assert!(g1.compose(&g1.inverse()).unwrap().is_identity());
    }
}

#[test]
fn points_must_respect_units() {
    let gm = builtin_group("Gm", Q).unwrap();
    let b = AlgebraPresentation::free(Q, ["x"]);
    let x = b.parse("x").unwrap();
    assert!(matches!(GroupPoint::new(&gm, &b, vec![x.clone(), x]), Err(Error::Unit(_))));
}

#[test]
fn deformation_kernels() {
    let b = AlgebraPresentation::free(Q, ["x", "y"]);
    let bx = b.parse("x").unwrap();
    let by = b.parse("y").unwrap();
    let c = SquareZeroExt::dual_numbers(&b);

    let ga = builtin_group("Ga", Q).unwrap();
    let k = DeformationKernel::new(&ga, &c).unwrap();
    let p = k.point_from_linear(&vec![vec![bx.clone()]]).unwrap();
    assert_eq!(c.render(&p.images()[0]), "x*eps");
    assert_eq!(k.check_pair(&vec![vec![bx.clone()]], &vec![vec![by.clone()]]).unwrap(), None);

    let aff = builtin_group("Aff1", Q).unwrap();
    let k = DeformationKernel::new(&aff, &c).unwrap();
    let p = k.point_from_linear(&vec![vec![bx.clone()], vec![by.clone()]]).unwrap();
    assert_eq!(c.render(&p.images()[0]), "1 + x*eps");
    assert_eq!(c.render(&p.images()[1]), "1 - x*eps");
    assert_eq!(c.render(&p.images()[2]), "y*eps");
    let u = vec![vec![bx.clone()], vec![by.clone()]];
    let v = vec![vec![by.clone()], vec![b.parse("x*y").unwrap()]];
    assert_eq!(k.check_pair(&u, &v).unwrap(), None);
    let two = k.scale(&b.parse("2").unwrap(), &p).unwrap();
    assert_eq!(two.same(&p.compose(&p).unwrap()), true);

    let heis = builtin_group("Heis3", Q).unwrap();
    let k = DeformationKernel::new(&heis, &c).unwrap();
    let u = vec![vec![bx.clone()], vec![by.clone()], vec![bx.clone()]];
    let v = vec![vec![by.clone()], vec![bx.clone()], vec![by.clone()]];
    assert_eq!(k.check_pair(&u, &v).unwrap(), None);

    // O(Δ¹) is the extension by Ω¹; O(Δ²) is not square-zero.
    let r1 = SimplexRing::new(&b, 1, Flavor::Strong, Engine::Structured).unwrap();
    let k = DeformationKernel::new(&aff, &r1).unwrap();
    let p = k.point_from_linear(&vec![vec![bx.clone(), by.clone()], vec![by.clone(), bx.clone()]]).unwrap();
    assert_eq!(p.images()[2].to_string(), "y*e[1,x] + x*e[1,y]");
    let r2 = SimplexRing::new(&b, 2, Flavor::Strong, Engine::Structured).unwrap();
    assert!(matches!(DeformationKernel::new(&aff, &r2), Err(Error::Precondition(_))));
    let off = GroupPoint::new(&aff, &r1, vec![r1.from_base(&b.parse("2").unwrap()), r1.from_base(&b.parse("1/2").unwrap()), r1.zero()]).unwrap();
    assert!(matches!(k.linear_from_point(&off), Err(Error::Point(_))));
}

#[test]
fn linearized_conjugation() {
    let b = AlgebraPresentation::new(Q, ["s", "sb"], &[], &[("s", "sb")]).unwrap();
    let aff = builtin_group("Aff1", Q).unwrap();
    let conj = aff.conjugation().unwrap();
    let s = b.parse("s").unwrap();
    let gamma = GroupPoint::new(&aff, &b, vec![s.clone(), b.parse("sb").unwrap(), Poly::zero(b.ring())]).unwrap();
    let m = conj.linearized_at(&gamma).unwrap();
    let rendered: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
    assert_eq!(rendered, vec![vec!["1", "0"], vec!["0", "s"]]);
    // Compare with acting on a kernel point over B[ε].
    let c = SquareZeroExt::dual_numbers(&b);
    let k = DeformationKernel::new(&aff, &c).unwrap();
    let u = vec![vec![b.parse("s + 1").unwrap()], vec![b.parse("sb").unwrap()]];
    let phi = k.point_from_linear(&u).unwrap();
    let gl = gamma.map(&c, |p| Ok(c.from_base(p))).unwrap();
    let acted = k.linear_from_point(&conj.act(&gl, &phi).unwrap()).unwrap();
    assert_eq!(acted[0][0].to_string(), "s + 1");
    assert_eq!(acted[1][0].to_string(), "1");
}
