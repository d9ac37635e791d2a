use cdforms::exactalg::{AlgebraPresentation, AlgebraRef, BaseRing};
use cdforms::simplex::Flavor;
use cdforms::verify::{corrupted_groups, corrupted_presentations, run_suite, run_suites, Settings, Status, SUITES};

fn algebra(f2: bool, k: usize) -> AlgebraRef {
    let base = if f2 { BaseRing::prime_field(2).unwrap() } else { BaseRing::Rationals };
    AlgebraPresentation::free(base, ["x", "y", "z"].into_iter().take(k))
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Independent count of `n`-forms with coefficients of degree ≤ d in k
/// variables: exterior forms have C(k, n) patterns; weak forms in
/// characteristic 2 additionally keep every diagonal, i.e. all multisets.
fn expected_dimension(f2: bool, flavor: Flavor, k: usize, n: usize, d: usize) -> usize {
    let coefficients = binomial(k + d, d);
    let patterns = if f2 && flavor == Flavor::Weak { binomial(k + n - 1, n) } else { binomial(k, n) };
    coefficients * patterns
}

#[test]
fn nu_dimensions_match_the_pattern_count() {
    // Frozen from `expected_dimension`.
    let frozen = [(false, 2, 2, 2, 6, 6), (true, 2, 2, 2, 18, 6), (true, 3, 3, 3, 200, 20), (false, 3, 3, 3, 20, 20)];
    for (f2, k, n, d, weak, strong) in frozen {
        assert_eq!(expected_dimension(f2, Flavor::Weak, k, n, d), weak);
        assert_eq!(expected_dimension(f2, Flavor::Strong, k, n, d), strong);
    }
    for f2 in [false, true] {
        for k in 1..=3 {
            let mut s = Settings::new(&algebra(f2, k));
            s.max_degree = 3;
            s.coeff_degree = 3;
            for r in run_suite("nu-iso", &s).unwrap() {
                assert_eq!(r.status, Status::Pass, "{}: {:?}", r.instance, r.witness);
                let Some(rest) = r.instance.strip_prefix("bijectivity n=") else { continue };
                let n: usize = rest[..1].parse().unwrap();
                let flavor = if rest.ends_with("weak") { Flavor::Weak } else { Flavor::Strong };
                let want = expected_dimension(f2, flavor, k, n, 3);
                assert_eq!(r.witness.as_deref(), Some(format!("dimension {want}").as_str()), "{}", r.instance);
            }
        }
    }
}

#[test]
fn reports_do_not_depend_on_parallelism() {
    let mut s = Settings::new(&algebra(false, 2));
    s.instances = 3;
    s.seed = 7;
    let names: Vec<String> = SUITES.iter().map(|n| n.to_string()).collect();
    let strip = |rs: Vec<cdforms::verify::Record>| {
        rs.into_iter().map(|r| (r.suite, r.index, r.instance, r.status, r.witness)).collect::<Vec<_>>()
    };
    let serial = strip(run_suites(&names, &s, 1).unwrap());
    let parallel = strip(run_suites(&names, &s, 4).unwrap());
    assert_eq!(serial, parallel);
    assert!(serial.iter().all(|r| r.3 != Status::Fail), "{serial:?}");
}

#[test]
fn unknown_suites_are_rejected() {
    let s = Settings::new(&algebra(false, 1));
    assert!(run_suite("nope", &s).is_err());
    assert!(run_suites(&["wedge".into(), "nope".into()], &s, 2).is_err());
}

#[test]
fn every_corruption_is_caught_with_a_witness() {
    for f2 in [false, true] {
        let alg = algebra(f2, 2);
        let mut all = corrupted_groups(alg.base()).unwrap();
        assert_eq!(all.len(), 3 * (1 + 2 + 3 + 3));
        for flavor in [Flavor::Weak, Flavor::Strong] {
            all.extend(corrupted_presentations(&alg, 2, flavor, Default::default()).unwrap());
        }
        for r in &all {
            assert_eq!(r.status, Status::Fail, "{} was not caught", r.instance);
            assert!(r.witness.as_deref().is_some_and(|w| !w.is_empty()));
        }
    }
}

#[test]
fn characteristic_two_separates_the_flavors() {
    let mut s = Settings::new(&algebra(true, 2));
    s.max_degree = 2;
    let recs = run_suite("nu-iso", &s).unwrap();
    let ranks = recs.iter().find(|r| r.instance == "flavor ranks n=2").unwrap();
    assert_eq!(ranks.status, Status::Pass);
    assert_eq!(
        ranks.witness.as_deref(),
        Some("dimensions 18 > 6; ν(dx*dx) = e[1,x]*e[2,x] vanishes in the strong ring")
    );
}
