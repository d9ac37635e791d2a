use super::*;
use crate::exactalg::{AlgebraPresentation, BaseRing};

fn qx(names: &[&str]) -> AlgebraRef {
    AlgebraPresentation::free(BaseRing::Rationals, names.iter().copied())
}

fn ring(alg: &AlgebraRef, n: usize, flavor: Flavor, engine: Engine) -> SimplexRing {
    SimplexRing::new(alg, n, flavor, engine).unwrap()
}

#[test]
fn degree_one_is_dual_numbers() {
    let b = qx(&["x"]);
    for flavor in [Flavor::Weak, Flavor::Strong] {
        for engine in [Engine::Structured, Engine::Generic] {
            let r = ring(&b, 1, flavor, engine);
            let e = r.eps(1, 0).unwrap();
            assert!(!e.is_zero());
            assert!((&e * &e).is_zero());
        }
    }
}

#[test]
fn degree_zero_is_base() {
    let b = qx(&["x"]);
    let r = ring(&b, 0, Flavor::Strong, Engine::Generic);
    let x = r.from_base(&b.parse("x").unwrap());
    assert!(!(&x * &x).is_zero());
    assert!(r.eps(1, 0).is_err());
}

#[test]
fn dgen_examples() {
    let b = qx(&["x"]);
    let r1 = ring(&b, 1, Flavor::Strong, Engine::Structured);
    let x2 = b.parse("x^2").unwrap();
    let expect = &r1.from_base(&b.parse("2*x").unwrap()) * &r1.eps(1, 0).unwrap();
    assert_eq!(r1.dgen(0, 1, &x2).unwrap(), expect);
    assert_eq!(r1.dgen(0, 1, &b.parse("x").unwrap()).unwrap().to_string(), "e[1,x]");
    let r2 = ring(&b, 2, Flavor::Strong, Engine::Structured);
    let x = b.parse("x").unwrap();
    assert_eq!(r2.dgen(1, 2, &x).unwrap(), &r2.eps(2, 0).unwrap() - &r2.eps(1, 0).unwrap());
    assert!(r2.dgen(0, 3, &x).is_err());
}

#[test]
fn taylor_point() {
    let b = qx(&["x", "y"]);
    let r = ring(&b, 2, Flavor::Strong, Engine::Structured);
    let xy = r.universal_point(2, &b.parse("x*y").unwrap()).unwrap();
    assert_eq!(xy.to_string(), "x*y + y*e[2,x] + x*e[2,y]");
}

#[test]
fn diagonal_survives_only_weak_char_two() {
    let b = AlgebraPresentation::free(BaseRing::prime_field(2).unwrap(), ["x"]);
    for engine in [Engine::Structured, Engine::Generic] {
        let w = ring(&b, 2, Flavor::Weak, engine);
        let s = ring(&b, 2, Flavor::Strong, engine);
        let dw = &w.eps(1, 0).unwrap() * &w.eps(2, 0).unwrap();
        let ds = &s.eps(1, 0).unwrap() * &s.eps(2, 0).unwrap();
        assert!(!dw.is_zero());
        assert!(ds.is_zero());
    }
    let q = qx(&["x"]);
    let w = ring(&q, 2, Flavor::Weak, Engine::Generic);
    assert!((&w.eps(1, 0).unwrap() * &w.eps(2, 0).unwrap()).is_zero());
}

#[test]
fn pullback_examples() {
    let b = qx(&["x"]);
    let r1 = ring(&b, 1, Flavor::Strong, Engine::Structured);
    let e = r1.eps(1, 0).unwrap();
    assert!(e.pullback(&IndexMap::collapse(1)).unwrap().is_zero());
    let phi = IndexMap::new(2, vec![1, 2]).unwrap();
    let r2 = r1.sibling(2).unwrap();
    assert_eq!(e.pullback(&phi).unwrap(), r2.dgen(1, 2, &b.parse("x").unwrap()).unwrap());
    assert_eq!(e.pullback(&IndexMap::identity(1)).unwrap(), e);
}

#[test]
fn merge_and_split_maps() {
    let b = qx(&["x", "y"]);
    let p = b.parse("x^2*y + y").unwrap();
    for engine in [Engine::Structured, Engine::Generic] {
        let r1 = ring(&b, 1, Flavor::Strong, engine);
        let r2 = r1.sibling(2).unwrap();
        assert!(r1.mult_map(0, 1, &r1.dgen(0, 1, &p).unwrap()).unwrap().is_zero());
        assert_eq!(r2.mult_map(0, 1, &r2.dgen(0, 2, &p).unwrap()).unwrap(), r1.dgen(0, 1, &p).unwrap());
        let base = r1.from_base(&p);
        assert_eq!(r1.mult_map(0, 1, &base).unwrap(), r1.sibling(0).unwrap().from_base(&p));
        let d01 = r1.dgen(0, 1, &p).unwrap();
        assert_eq!(r2.splitting_map(2, &d01).unwrap(), r2.dgen(0, 1, &p).unwrap());
        assert_eq!(r2.splitting_map(1, &d01).unwrap(), r2.dgen(0, 2, &p).unwrap());
        let e = &(&r1.eps(1, 0).unwrap() * &r1.from_base(&p)) + &r1.from_base(&b.parse("y").unwrap());
        let back = r2.mult_map(0, 1, &r2.splitting_map(1, &e).unwrap()).unwrap();
        assert_eq!(back, e);
    }
}

#[test]
fn inverse_examples() {
    let b = qx(&["x", "y"]);
    let r1 = ring(&b, 1, Flavor::Strong, Engine::Structured);
    let e = &r1.one() + &r1.eps(1, 0).unwrap();
    assert_eq!(e.inverse().unwrap(), &r1.one() - &r1.eps(1, 0).unwrap());
    assert_eq!(r1.one().inverse().unwrap(), r1.one());
    let r2 = ring(&b, 2, Flavor::Strong, Engine::Structured);
    let (e1x, e2y) = (r2.eps(1, 0).unwrap(), r2.eps(2, 1).unwrap());
    let u = &(&r2.one() + &e1x) + &e2y;
    // (e1x + e2y)^2 = 2*e1x*e2y, so the series contributes a 2
    let expect = &(&(&r2.one() - &e1x) - &e2y) + &(&e1x * &e2y).scale(&BaseRing::Rationals.from_int(2));
    assert_eq!(u.inverse().unwrap(), expect);
    assert_ne!(&u * &(&(&(&r2.one() - &e1x) - &e2y) + &(&e1x * &e2y)), r2.one());
    assert_eq!(&u * &expect, r2.one());
    assert!(matches!(r2.from_base(&b.parse("x").unwrap()).inverse(), Err(Error::Unit(_))));
}

#[test]
fn structured_rejects_presented_algebra() {
    let b = AlgebraPresentation::new(BaseRing::Rationals, ["x", "y"], &["y^2 - x^3"], &[]).unwrap();
    assert!(matches!(SimplexRing::new(&b, 1, Flavor::Strong, Engine::Structured), Err(Error::Engine(_))));
    let g = SimplexRing::new(&b, 2, Flavor::Strong, Engine::Generic).unwrap();
    assert_eq!(g.stabilized_at(), Some(2));
}

#[test]
fn engines_agree_on_products() {
    let b = qx(&["x", "y"]);
    let s = ring(&b, 2, Flavor::Strong, Engine::Structured);
    let amb = s.ambient();
    let p = Poly::parse(&amb, "x_1*y_2 - x_0*y_1^2 + x_2^2*y_0").unwrap();
    let es = s.from_ambient(&p).unwrap();
    let eg = s.twin().unwrap().from_ambient(&p).unwrap();
    assert_eq!(eg.to_engine(Engine::Structured).unwrap(), es);
    assert_eq!(es.to_engine(Engine::Generic).unwrap(), eg);
}

#[test]
fn localized_generator_taylor() {
    let b = AlgebraPresentation::new(BaseRing::Rationals, ["s", "sb"], &[], &[("s", "sb")]).unwrap();
    let r = ring(&b, 1, Flavor::Strong, Engine::Structured);
    let sb = r.universal_point(1, &b.parse("sb").unwrap()).unwrap();
    let s = r.universal_point(1, &b.parse("s").unwrap()).unwrap();
    assert_eq!(&s * &sb, r.one());
    let g = r.twin().unwrap();
    assert_eq!(sb.to_engine(Engine::Generic).unwrap(), g.universal_point(1, &b.parse("sb").unwrap()).unwrap());
}
