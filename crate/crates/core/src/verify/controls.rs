//! Negative controls: deliberately broken presentations and Hopf structures
//! that the suites must reject with a witness.

use super::{Recorder, Record, Settings, Verdict};
use crate::error::Result;
use crate::exactalg::{AlgebraRef, BaseRing, Caps, Monomial, Poly};
use crate::hopf::{builtin_group, HopfAlgebra, HopfRef, BUILTIN_GROUPS};
use crate::simplex::generic::{flavor_generators, monomials_of_degree};
use crate::simplex::{Engine, Flavor, SimplexRing};

/// Compares the quotient of `candidate` (a Gröbner-engine ring) with that of
/// `reference` over the same ambient ring. Every generator of the candidate
/// ideal must vanish in the reference, and every low-degree monomial must
/// reduce in the candidate to the same element as its reference normal form.
pub fn presentation_agreement(reference: &SimplexRing, candidate: &SimplexRing) -> Result<Option<String>> {
    let ambient = candidate.ambient();
    let gens = candidate.defining_ideal()?.generators().to_vec();
    let mut top = 1;
    for g in &gens {
        let r = reference.from_ambient(g)?;
        if !r.is_zero() {
            return Ok(Some(format!("generator {g} survives in the reference as {r}")));
        }
        top = top.max(g.total_degree().unwrap_or(0));
    }
    let base = ambient.base();
    for d in 0..=top.min(3) {
        for m in monomials_of_degree(ambient.nvars(), d) {
            let m = Poly::monomial(&ambient, m, base.one());
            let via_reference = candidate.from_ambient(&reference.from_ambient(&m)?.lift())?;
            let direct = candidate.from_ambient(&m)?;
            if via_reference != direct {
                return Ok(Some(format!("{m} reduces to {direct}, but its reference form reduces to {via_reference}")));
            }
        }
    }
    Ok(None)
}

/// One corrupted defining ideal per generator: the generator gets the first
/// ambient variable added. Each record fails when the corruption is caught.
pub fn corrupted_presentations(alg: &AlgebraRef, n: usize, flavor: Flavor, caps: Caps) -> Result<Vec<Record>> {
    let settings = Settings::new(alg);
    let mut rec = Recorder::new("engine-crosscheck", &settings);
    let reference = SimplexRing::with_caps(alg, n, flavor, Engine::Structured, caps)?;
    let ambient = reference.ambient();
    let gens = flavor_generators(alg, &ambient, n, flavor);
    let shift = Poly::monomial(&ambient, Monomial::var(ambient.nvars(), 0), ambient.base().one());
    for i in 0..gens.len() {
        rec.check(format!("corrupted generator {i} n={n} {flavor}"), |_| {
            let mut bad = gens.clone();
            bad[i] = &bad[i] + &shift;
            let candidate = SimplexRing::generic_with_generators(alg, n, flavor, bad, caps)?;
            Ok(presentation_agreement(&reference, &candidate)?.map_or(Verdict::Pass, Verdict::Fail))
        });
    }
    Ok(rec.finish())
}

/// Each builtin group with one structure map broken on one generator.
/// Each record fails when the axiom check catches the corruption.
pub fn corrupted_groups(base: BaseRing) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for name in BUILTIN_GROUPS {
        let g = builtin_group(name, base)?;
        out.extend(corruptions(&g)?);
    }
    Ok(out)
}

fn corruptions(g: &HopfRef) -> Result<Vec<Record>> {
    let alg = g.algebra();
    let pair = g.pair_algebra();
    let base = g.base();
    let k = alg.ngens();
    let settings = Settings::new(alg);
    let mut rec = Recorder::new("hopf-axioms", &settings);
    for i in 0..k {
        let gen = &alg.generators()[i];
        let kinds = ["comultiplication", "counit", "antipode"];
        for kind in kinds {
            rec.check(format!("{} with corrupted {kind} on {gen}", g.name()), |_| {
                let mut comult = g.comult().to_vec();
                let mut counit = g.counit().to_vec();
                let mut antipode = g.antipode().to_vec();
                match kind {
                    "comultiplication" => comult[i] = &comult[i] + &(&pair.var(i) * &pair.var(k + i)),
                    "counit" => counit[i] = base.add(&counit[i], &base.one()),
                    _ => antipode[i] = &antipode[i] + &alg.var(i),
                }
                let bad = match HopfAlgebra::unchecked(g.name(), alg, comult, counit, antipode) {
                    Ok(h) => h,
                    Err(e) => return Ok(Verdict::Fail(format!("rejected at construction: {e}"))),
                };
                Ok(bad.axiom_failures().into_iter().next().map(|e| e.to_string()).into())
            });
        }
    }
    Ok(rec.finish())
}
