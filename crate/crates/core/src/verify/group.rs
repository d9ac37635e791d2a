//! Suites on Hopf algebras and group-valued forms.

use super::{with_unit, Recorder, Settings, Verdict};
use crate::error::{Error, Result};
use crate::exactalg::{AlgebraPresentation, AlgebraRef};
use crate::forms::ClassicalForm;
use crate::gforms::{
    classical_adjoint, classical_aut_bracket, classical_bracket, classical_square, delta0, delta1, delta2, delta3,
    delta3_full, mc_form, rep_add, rep_scale, twisted_action, AutForm, ClassicalRep, GroupForm,
};
use crate::hopf::{
    builtin_action, builtin_group, CoactionRef, DeformationKernel, GroupPoint, HopfRef, LinearMap, SquareZeroExt,
    SquareZeroTarget, BUILTIN_GROUPS,
};
use crate::random;
use crate::rng::Lcg64;
use crate::simplex::{Engine, Flavor, IndexMap, SimplexRing};

fn render(rep: &[ClassicalForm]) -> String {
    let parts: Vec<String> = rep.iter().map(|f| f.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn rep_diff(what: &str, got: &ClassicalRep, want: &ClassicalRep) -> Option<String> {
    if got == want {
        None
    } else {
        Some(format!("{what}: got {}, expected {}", render(got), render(want)))
    }
}

fn d_rep(rep: &[ClassicalForm]) -> ClassicalRep {
    rep.iter().map(|f| f.exterior_d()).collect()
}

fn same(what: &str, a: &GroupForm, b: &GroupForm) -> Option<String> {
    a.difference(b).map(|w| format!("{what}: {w}"))
}

fn identity(what: &str, a: &GroupForm) -> Option<String> {
    if a.is_identity() {
        None
    } else {
        Some(format!("{what} is not the identity: {}", a.point().render()))
    }
}

/// The degeneracy check every output form must pass.
fn is_form(what: &str, a: &GroupForm) -> Result<Option<String>> {
    Ok(a.degeneracy_failure()?.map(|w| format!("{what} is not a form: {w}")))
}

macro_rules! bail {
    ($e:expr) => {
        if let Some(w) = $e {
            return Ok(Verdict::Fail(w));
        }
    };
}

/// Random form of a given degree over the strong ring of `alg`.
fn random_form(s: &Settings, rng: &mut Lcg64, g: &HopfRef, alg: &AlgebraRef, n: usize) -> Result<GroupForm> {
    let ring = s.ring_over(alg, n, Flavor::Strong)?;
    let rep = random::rep(rng, g, alg, n, s.small_bounds())?;
    GroupForm::from_classical(g, &rep, &ring)
}

fn random_point(s: &Settings, rng: &mut Lcg64, g: &HopfRef, alg: &AlgebraRef) -> Result<GroupPoint<AlgebraRef>> {
    random::point(rng, g, alg, s.small_bounds())
}

/// Unsupported inputs (such as random points of presented groups) are skips.
fn soften(r: Result<Verdict>) -> Result<Verdict> {
    match r {
        Err(Error::Unsupported(why)) => Ok(Verdict::Skip(why)),
        other => other,
    }
}

fn actions(s: &Settings) -> Result<Vec<CoactionRef>> {
    match (&s.action, &s.group) {
        (Some(a), _) => Ok(vec![a.clone()]),
        (None, Some(_)) => Ok(Vec::new()),
        (None, None) => Ok(vec![builtin_action("gm_scales_ga", s.algebra.base())?]),
    }
}

pub(super) fn hopf_axioms(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&BUILTIN_GROUPS) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    for g in &groups {
        rec.check(format!("axioms {}", g.name()), |_| {
            Ok(g.axiom_failures().into_iter().next().map(|e| e.to_string()).into())
        });
        if g.axiom_failures().is_empty() {
            rec.check(format!("conjugation {}", g.name()), |_| {
                Ok(g.conjugation()?.axiom_failures().into_iter().next().map(|e| e.to_string()).into())
            });
        }
    }
    match actions(s) {
        Ok(list) => {
            for a in list {
                rec.check(format!("coaction {}", a.name()), |_| {
                    Ok(a.axiom_failures().into_iter().next().map(|e| e.to_string()).into())
                });
            }
        }
        Err(e) => rec.check("coactions", |_| Err(e)),
    }
}

pub(super) fn sign_action(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&["Heis3", "Aff1"]) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    let base = s.algebra.base();
    for g in &groups {
        for n in 1..=s.max_degree.max(1) {
            rec.check(format!("group {} n={n}", g.name()), |rng| {
                let ring = s.ring(n, Flavor::Strong)?;
                for _ in 0..s.instances {
                    let rep = random::rep(rng, g, &s.algebra, n, s.bounds())?;
                    let f = GroupForm::from_classical(g, &rep, &ring)?;
                    let sigma = IndexMap::permutation(random::permutation(rng, n))?;
                    let sign = sigma.sign().expect("a permutation");
                    let moved = f.permute(&sigma)?;
                    let want = if sign == 1 { f.clone() } else { f.inverse() };
                    bail!(same(&format!("σ = {sigma} on {}", render(&rep)), &moved, &want));
                    bail!(rep_diff(
                        &format!("σ = {sigma} classically"),
                        &moved.to_classical()?,
                        &rep_scale(&rep, &base.from_int(sign))
                    ));
                }
                Ok(Verdict::Pass)
            });
        }
    }
}

pub(super) fn bracket_laws(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&["Heis3", "Aff1"]) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    let alg = &s.algebra;
    let base = alg.base();
    for g in &groups {
        let name = g.name();
        rec.check(format!("bilinearity {name}"), |rng| {
            for (p, q) in [(1, 1), (1, 2), (2, 1)] {
                for _ in 0..s.instances {
                    let (f1, f2) = (random_form(s, rng, g, alg, p)?, random_form(s, rng, g, alg, p)?);
                    let h = random_form(s, rng, g, alg, q)?;
                    let lhs = f1.product(&f2)?.bracket(&h)?;
                    let rhs = f1.bracket(&h)?.product(&f2.bracket(&h)?)?;
                    bail!(same(&format!("[f1·f2, h] in degrees ({p},{q})"), &lhs, &rhs));
                    let lhs = h.bracket(&f1.product(&f2)?)?;
                    let rhs = h.bracket(&f1)?.product(&h.bracket(&f2)?)?;
                    bail!(same(&format!("[h, f1·f2] in degrees ({q},{p})"), &lhs, &rhs));
                }
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("graded anticommutativity {name}"), |rng| {
            for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                for _ in 0..s.instances {
                    let (f, h) = (random_form(s, rng, g, alg, p)?, random_form(s, rng, g, alg, q)?);
                    let fh = f.bracket(&h)?;
                    let hf = h.bracket(&f)?;
                    // [f, h] = −(−1)^{pq}[h, f]
                    let want = if (p * q) % 2 == 1 { hf } else { hf.inverse() };
                    bail!(same(&format!("[f, h] in degrees ({p},{q})"), &fh, &want));
                }
            }
            Ok(Verdict::Pass)
        });
        for (p, q, r) in [(1, 1, 1), (1, 1, 2)] {
            rec.check(format!("graded jacobi {name} ({p},{q},{r})"), |rng| {
                for _ in 0..s.instances {
                    let f = random_form(s, rng, g, alg, p)?;
                    let h = random_form(s, rng, g, alg, q)?;
                    let k = random_form(s, rng, g, alg, r)?;
                    let signed = |x: GroupForm, e: usize| if e % 2 == 0 { x } else { x.inverse() };
                    let a = signed(f.bracket(&h)?.bracket(&k)?, p * r);
                    let b = signed(h.bracket(&k)?.bracket(&f)?, q * p);
                    let c = signed(k.bracket(&f)?.bracket(&h)?, r * q);
                    let total = a.product(&b)?.product(&c)?;
                    bail!(identity("the graded Jacobi sum", &total));
                    let (fs, hs, ks) = (f.to_classical()?, h.to_classical()?, k.to_classical()?);
                    let nested = classical_bracket(g, &classical_bracket(g, &fs, &hs)?, &ks)?;
                    bail!(rep_diff("[[f, h], k] against the classical pairing", &f.bracket(&h)?.bracket(&k)?.to_classical()?, &nested));
                }
                Ok(Verdict::Pass)
            });
        }
        rec.check(format!("classical pairing {name}"), |rng| {
            for (p, q) in [(1, 1), (1, 2), (2, 1)] {
                for _ in 0..s.instances {
                    let (f, h) = (random_form(s, rng, g, alg, p)?, random_form(s, rng, g, alg, q)?);
                    let br = f.bracket(&h)?;
                    if let Some(w) = is_form("[f, h]", &br)? {
                        return Ok(Verdict::Fail(w));
                    }
                    let want = classical_bracket(g, &f.to_classical()?, &h.to_classical()?)?;
                    bail!(rep_diff(&format!("[f, h] in degrees ({p},{q})"), &br.to_classical()?, &want));
                }
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("square {name}"), |rng| {
            for _ in 0..s.instances {
                let f = random_form(s, rng, g, alg, 1)?;
                let fs = f.to_classical()?;
                let twice = rep_scale(&classical_square(g, &fs)?, &base.from_int(2));
                bail!(rep_diff(&format!("[f, f] for f = {}", render(&fs)), &f.bracket(&f)?.to_classical()?, &twice));
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("projections commute {name}"), |rng| {
            for (u, v) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
                let r = u.max(v) + rng.below((u + v - u.max(v)) as u64) as usize;
                let (f, h) = (random_form(s, rng, g, alg, u)?, random_form(s, rng, g, alg, v)?);
                for _ in 0..s.instances {
                    let pf = IndexMap::new(r, (0..=u).map(|_| rng.below(r as u64 + 1) as usize).collect())?;
                    let ph = IndexMap::new(r, (0..=v).map(|_| rng.below(r as u64 + 1) as usize).collect())?;
                    let c = f.pullback(&pf)?.commutator(&h.pullback(&ph)?)?;
                    if !c.is_identity() {
                        return Ok(Verdict::Fail(format!("pullbacks along {pf} and {ph} have commutator {}", c.render())));
                    }
                }
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("inner automorphisms {name}"), |rng| {
            for (p, q) in [(1, 1), (1, 2)] {
                for _ in 0..s.instances {
                    let (f, h) = (random_form(s, rng, g, alg, p)?, random_form(s, rng, g, alg, q)?);
                    let inner = AutForm::inner(&f)?;
                    let via_aut = inner.bracket(&h)?;
                    bail!(same("the bracket through inner automorphisms", &via_aut, &f.bracket(&h)?));
                    let want = classical_aut_bracket(inner.action(), &f.to_classical()?, &h.to_classical()?)?;
                    bail!(rep_diff("the classical automorphism pairing", &via_aut.to_classical()?, &want));
                }
            }
            Ok(Verdict::Pass)
        });
    }
    let list = match actions(s) {
        Ok(l) => l,
        Err(e) => return rec.check("coactions", |_| Err(e)),
    };
    for a in list {
        rec.check(format!("automorphism pairing {}", a.name()), |rng| {
            for q in [1, 2] {
                for _ in 0..s.instances {
                    let chi = AutForm::new(random_form(s, rng, a.acting(), alg, 1)?, &a)?;
                    let h = random_form(s, rng, a.acted(), alg, q)?;
                    let br = chi.bracket(&h)?;
                    if let Some(w) = is_form("[χ, h]", &br)? {
                        return Ok(Verdict::Fail(w));
                    }
                    let want = classical_aut_bracket(&a, &chi.chi().to_classical()?, &h.to_classical()?)?;
                    bail!(rep_diff(&format!("[χ, h] in degree {q}"), &br.to_classical()?, &want));
                }
            }
            Ok(Verdict::Pass)
        });
    }
}

pub(super) fn adjoint(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&["Aff1"]) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    for g in &groups {
        for n in 1..=s.max_degree.max(1) {
            rec.check(format!("adjoint {} n={n}", g.name()), |rng| {
                soften((|| {
                    let b = with_unit(&s.algebra)?;
                    let conj = g.conjugation()?;
                    for _ in 0..s.instances {
                        let x = random_point(s, rng, g, &b)?;
                        let y = random_point(s, rng, g, &b)?;
                        let phi = random_form(s, rng, g, &b, n)?;
                        let ad = phi.adjoint(&x, 0)?;
                        if let Some(w) = is_form("the adjoint form", &ad)? {
                            return Ok(Verdict::Fail(w));
                        }
                        for slot in 1..=n {
                            bail!(same(&format!("slot {slot} against slot 0 at g = {}", x.render()), &phi.adjoint(&x, slot)?, &ad));
                        }
                        let m = conj.linearized_at(&x)?;
                        let want = classical_adjoint(&m, &phi.to_classical()?)?;
                        bail!(rep_diff(&format!("adjoint at g = {}", x.render()), &ad.to_classical()?, &want));
                        let twice = phi.adjoint(&y, 0)?.adjoint(&x, 0)?;
                        bail!(same("adjoint of a product", &phi.adjoint(&x.compose(&y)?, 0)?, &twice));
                    }
                    Ok(Verdict::Pass)
                })())
            });
        }
    }
}

pub(super) fn deformation_kernel(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&BUILTIN_GROUPS) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    let alg = &s.algebra;
    for g in &groups {
        let name = g.name();
        rec.check(format!("{name} over B[eps]"), |rng| kernel_checks(s, rng, g, &SquareZeroExt::dual_numbers(alg)));
        rec.check(format!("{name} over B+Omega1"), |rng| {
            kernel_checks(s, rng, g, &SquareZeroExt::with_differentials(alg))
        });
        if alg.is_localized_free() {
            rec.check(format!("{name} over O(Delta1)"), |rng| {
                kernel_checks(s, rng, g, &SimplexRing::with_caps(alg, 1, Flavor::Strong, Engine::Structured, s.caps)?)
            });
        }
    }
}

fn random_linear<T: SquareZeroTarget>(s: &Settings, rng: &mut Lcg64, k: &DeformationKernel<T>) -> LinearMap {
    let rank = k.target().kernel_rank();
    let alg = k.target().base_algebra();
    (0..k.group().colie().dim())
        .map(|_| (0..rank).map(|_| random::poly(rng, alg, s.bounds())).collect())
        .collect()
}

/// Kernel points commute, compose by adding linear maps, match linear maps
/// one to one and carry the B-module structure.
fn kernel_checks<T: SquareZeroTarget>(s: &Settings, rng: &mut Lcg64, g: &HopfRef, target: &T) -> Result<Verdict> {
    let k = DeformationKernel::new(g, target)?;
    let alg = target.base_algebra();
    for _ in 0..s.instances {
        let (u, v) = (random_linear(s, rng, &k), random_linear(s, rng, &k));
        bail!(k.check_pair(&u, &v)?);
        let p = k.point_from_linear(&u)?;
        let back = k.linear_from_point(&p)?;
        if back != u {
            return Ok(Verdict::Fail(format!("{} gives back {back:?} instead of {u:?}", p.render())));
        }
        let b = random::poly(rng, alg, s.bounds());
        let scaled: LinearMap = u.iter().map(|row| row.iter().map(|x| alg.normalize(&(&b * x))).collect()).collect();
        let via_point = k.scale(&b, &p)?;
        if let Some(w) = via_point.difference(&k.point_from_linear(&scaled)?) {
            return Ok(Verdict::Fail(format!("module structure at b = {b}: {w}")));
        }
        if k.linear_from_point(&p.inverse())?.iter().flatten().zip(u.iter().flatten()).any(|(a, x)| !alg.is_zero_elem(&(a + x))) {
            return Ok(Verdict::Fail(format!("the inverse of {} is not the negated map", p.render())));
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn delta_suite(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let groups = match s.groups(&BUILTIN_GROUPS) {
        Ok(g) => g,
        Err(e) => return rec.check("groups", |_| Err(e)),
    };
    let alg = &s.algebra;
    for g in &groups {
        let name = g.name();
        rec.check(format!("δ¹δ⁰ = 1 {name}"), |rng| {
            soften((|| {
                let b = with_unit(alg)?;
                let r1 = s.ring_over(&b, 1, Flavor::Strong)?;
                for _ in 0..s.instances {
                    let x = random_point(s, rng, g, &b)?;
                    let d = delta0(&x, &r1)?;
                    if let Some(w) = is_form("δ⁰g", &d)? {
                        return Ok(Verdict::Fail(w));
                    }
                    bail!(identity(&format!("δ¹δ⁰g for g = {}", x.render()), &delta1(&d)?));
                }
                Ok(Verdict::Pass)
            })())
        });
        rec.check(format!("crossed homomorphism {name}"), |rng| {
            soften((|| {
                let b = with_unit(alg)?;
                let r1 = s.ring_over(&b, 1, Flavor::Strong)?;
                for _ in 0..s.instances {
                    let (x, y) = (random_point(s, rng, g, &b)?, random_point(s, rng, g, &b)?);
                    let lhs = delta0(&x.compose(&y)?, &r1)?;
                    let rhs = delta0(&x, &r1)?.adjoint(&y.inverse(), 0)?.product(&delta0(&y, &r1)?)?;
                    bail!(same(&format!("δ⁰(gh) for g = {}, h = {}", x.render(), y.render()), &lhs, &rhs));
                }
                Ok(Verdict::Pass)
            })())
        });
        rec.check(format!("structure equation {name}"), |rng| {
            for _ in 0..s.instances {
                let w = random_form(s, rng, g, alg, 1)?;
                let ws = w.to_classical()?;
                let d = delta1(&w)?;
                if let Some(x) = is_form("δ¹ω", &d)? {
                    return Ok(Verdict::Fail(x));
                }
                let want = rep_add(&d_rep(&ws), &classical_square(g, &ws)?)?;
                bail!(rep_diff(&format!("δ¹ω for ω = {}", render(&ws)), &d.to_classical()?, &want));
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("maurer-cartan {name}"), |_| {
            let w = mc_form(g, Engine::Structured)?;
            let ws = w.to_classical()?;
            bail!(identity("δ¹ of the Maurer-Cartan form", &delta1(&w)?));
            let dw = d_rep(&ws);
            let sq = classical_square(g, &ws)?;
            let total = rep_add(&dw, &sq)?;
            if total.iter().any(|f| !f.is_zero()) {
                return Ok(Verdict::Fail(format!("dω + [ω]^(2) = {} for ω = {}", render(&total), render(&ws))));
            }
            Ok(Verdict::PassWith(format!("ω = {}, dω = {}, [ω]^(2) = {}", render(&ws), render(&dw), render(&sq))))
        });
        rec.check(format!("additivity defect {name}"), |rng| {
            for _ in 0..s.instances {
                let (w, v) = (random_form(s, rng, g, alg, 1)?, random_form(s, rng, g, alg, 1)?);
                let lhs = delta1(&w.product(&v)?)?;
                let rhs = delta1(&w)?.product(&delta1(&v)?)?.product(&w.bracket(&v)?)?;
                bail!(same("δ¹(ωω')", &lhs, &rhs));
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("equivariance {name}"), |rng| {
            soften((|| {
                let b = with_unit(alg)?;
                let r1 = s.ring_over(&b, 1, Flavor::Strong)?;
                for _ in 0..s.instances {
                    let w = random_form(s, rng, g, &b, 1)?;
                    let (x, y) = (random_point(s, rng, g, &b)?, random_point(s, rng, g, &b)?);
                    let e = GroupPoint::identity(g, &b);
                    bail!(same("ω twisted by the identity", &twisted_action(&w, &e)?, &w));
                    bail!(same(
                        "the identity form twisted by g",
                        &twisted_action(&GroupForm::identity(g, &r1), &x)?,
                        &delta0(&x, &r1)?
                    ));
                    let two = twisted_action(&twisted_action(&w, &x)?, &y)?;
                    bail!(same("twisting by g then h", &two, &twisted_action(&w, &x.compose(&y)?)?));
                    let lhs = delta1(&twisted_action(&w, &x)?)?;
                    let rhs = delta1(&w)?.adjoint(&x.inverse(), 0)?;
                    bail!(same(&format!("δ¹ of ω twisted by g = {}", x.render()), &lhs, &rhs));
                }
                Ok(Verdict::Pass)
            })())
        });
        rec.check(format!("bianchi {name}"), |rng| {
            let mut tested = 0;
            for _ in 0..s.instances {
                let w = random_form(s, rng, g, alg, 1)?;
                let curvature = delta1(&w)?;
                if curvature.is_identity() {
                    continue;
                }
                tested += 1;
                bail!(identity("δ²_{i_*ω}δ¹ω", &delta2(&AutForm::inner(&w)?, &curvature)?));
            }
            Ok(if tested == 0 { Verdict::Skip("every drawn ω was flat".into()) } else { Verdict::Pass })
        });
        rec.check(format!("δ² against classical {name}"), |rng| {
            for _ in 0..s.instances {
                let w = random_form(s, rng, g, alg, 1)?;
                let chi = AutForm::inner(&w)?;
                let phi = random_form(s, rng, g, alg, 2)?;
                let ps = phi.to_classical()?;
                let d2 = delta2(&chi, &phi)?;
                if let Some(x) = is_form("δ²φ", &d2)? {
                    return Ok(Verdict::Fail(x));
                }
                let want = rep_add(&d_rep(&ps), &classical_aut_bracket(chi.action(), &w.to_classical()?, &ps)?)?;
                bail!(rep_diff(&format!("δ²_χφ for φ = {}", render(&ps)), &d2.to_classical()?, &want));
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("δ³ against classical {name}"), |rng| {
            let b4 = four_coordinates(s)?;
            for _ in 0..s.instances.min(4) {
                let w = random_form(s, rng, g, &b4, 1)?;
                let chi = AutForm::inner(&w)?;
                let eta = random_form(s, rng, g, &b4, 2)?;
                let omega = random_form(s, rng, g, &b4, 3)?;
                let os = omega.to_classical()?;
                let naive = delta3(&chi, &omega)?;
                if let Some(x) = is_form("δ³Ω", &naive)? {
                    return Ok(Verdict::Fail(x));
                }
                bail!(same("δ³ against the full formula", &naive, &delta3_full(&chi, &eta, &omega)?));
                let want = rep_add(&d_rep(&os), &classical_aut_bracket(chi.action(), &w.to_classical()?, &os)?)?;
                bail!(rep_diff(&format!("δ³_χΩ for Ω = {}", render(&os)), &naive.to_classical()?, &want));
            }
            Ok(Verdict::Pass)
        });
    }
    if s.group.is_none() {
        rec.check("maurer-cartan Aff1 worked example", |_| {
            let aff = builtin_group("Aff1", alg.base())?;
            let ws = mc_form(&aff, Engine::Structured)?.to_classical()?;
            let dw = d_rep(&ws);
            let sq = classical_square(&aff, &ws)?;
            let got = [render(&ws), dw[1].to_string(), sq[1].to_string()];
            let want = ["(abar*da, abar*db)", "-abar^2*da^db", "abar^2*da^db"];
            if got != want {
                return Ok(Verdict::Fail(format!("got {got:?}, expected {want:?}")));
            }
            Ok(Verdict::PassWith(format!("ω = {}, dω(b̄) = {}, [ω]^(2)(b̄) = {}", got[0], got[1], got[2])))
        });
        rec.check("central curvature Heis3", |rng| central_curvature(s, rng));
        rec.check("δ³ with trivial χ Ga", |rng| {
            let b4 = four_coordinates(s)?;
            let ga = builtin_group("Ga", b4.base())?;
            let chi = AutForm::identity(&ga.conjugation()?, &s.ring_over(&b4, 1, Flavor::Strong)?);
            for _ in 0..s.instances.min(4) {
                let omega = random_form(s, rng, &ga, &b4, 3)?;
                let os = omega.to_classical()?;
                bail!(rep_diff(&format!("δ³Ω for Ω = {}", render(&os)), &delta3(&chi, &omega)?.to_classical()?, &d_rep(&os)));
            }
            Ok(Verdict::Pass)
        });
    }
    let list = match actions(s) {
        Ok(l) => l,
        Err(e) => return rec.check("coactions", |_| Err(e)),
    };
    for a in list {
        rec.check(format!("δ² against classical {}", a.name()), |rng| {
            for _ in 0..s.instances {
                let chi = AutForm::new(random_form(s, rng, a.acting(), alg, 1)?, &a)?;
                let phi = random_form(s, rng, a.acted(), alg, 2)?;
                let ps = phi.to_classical()?;
                let want = rep_add(&d_rep(&ps), &classical_aut_bracket(&a, &chi.chi().to_classical()?, &ps)?)?;
                bail!(rep_diff(&format!("δ²_χφ for φ = {}", render(&ps)), &delta2(&chi, &phi)?.to_classical()?, &want));
            }
            Ok(Verdict::Pass)
        });
        rec.check(format!("zero curvature {}", a.name()), |rng| soften(zero_curvature(s, rng, &a)));
    }
}

/// A free algebra on four coordinates over the configured base ring.
fn four_coordinates(s: &Settings) -> Result<AlgebraRef> {
    let alg = &s.algebra;
    if alg.is_free() && alg.ngens() >= 4 {
        return Ok(alg.clone());
    }
    Ok(AlgebraPresentation::free(alg.base(), ["x1", "x2", "x3", "x4"]))
}

/// `δ³_χ δ²_χ η = 1` for `χ = δ⁰γ`, whose curvature vanishes.
fn zero_curvature(s: &Settings, rng: &mut Lcg64, a: &CoactionRef) -> Result<Verdict> {
    let b = with_unit(&s.algebra)?;
    let r1 = s.ring_over(&b, 1, Flavor::Strong)?;
    let mut tested = 0;
    for _ in 0..s.instances.min(4) {
        let gamma = random_point(s, rng, a.acting(), &b)?;
        let chi = AutForm::new(delta0(&gamma, &r1)?, a)?;
        bail!(identity("δ¹δ⁰γ", &delta1(chi.chi())?));
        let eta = random_form(s, rng, a.acted(), &b, 2)?;
        let once = delta2(&chi, &eta)?;
        if once.is_identity() {
            continue;
        }
        tested += 1;
        bail!(identity(&format!("δ³δ²η for γ = {}", gamma.render()), &delta3(&chi, &once)?));
    }
    Ok(if tested == 0 { Verdict::Skip("every drawn η was closed".into()) } else { Verdict::Pass })
}

/// Heis3 with `χ = i_*ω` and `η = δ¹ω` times a central 2-form: the curvature
/// condition holds and `δ³δ²η = 1`.
fn central_curvature(s: &Settings, rng: &mut Lcg64) -> Result<Verdict> {
    let b = four_coordinates(s)?;
    let heis = builtin_group("Heis3", b.base())?;
    let r2 = s.ring_over(&b, 2, Flavor::Strong)?;
    let mut tested = 0;
    for _ in 0..s.instances.min(4) {
        let w = random_form(s, rng, &heis, &b, 1)?;
        let z2 = ClassicalForm::zero(&b, Flavor::Strong, 2);
        let central = random::classical(rng, &b, Flavor::Strong, 2, s.small_bounds())?;
        let zeta = GroupForm::from_classical(&heis, &[z2.clone(), z2, central], &r2)?;
        let eta = delta1(&w)?.product(&zeta)?;
        let chi = AutForm::inner(&w)?;
        let once = delta2(&chi, &eta)?;
        if once.is_identity() {
            continue;
        }
        tested += 1;
        bail!(identity("δ³δ²η", &delta3(&chi, &once)?));
    }
    Ok(if tested == 0 { Verdict::Skip("every drawn η was closed".into()) } else { Verdict::Pass })
}
