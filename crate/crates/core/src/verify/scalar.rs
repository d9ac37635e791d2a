//! Suites on the rings of simplices and on scalar forms.

use std::collections::BTreeMap;

use super::{compare, presentation_agreement, Recorder, Settings, Verdict};
use crate::error::Result;
use crate::exactalg::linalg::{rank, SparseVec};
use crate::exactalg::{Ideal, Monomial, Poly, RingRef};
use crate::forms::{degeneracy_witness, ClassicalForm, ScalarCombForm};
use crate::random::{self, PolyBounds};
use crate::simplex::generic::{ambient_ring, j_generators, monomials_of_degree, relation_generators};
use crate::simplex::{Engine, Flavor, IndexMap, Key, SimplexRing};

fn degrees(s: &Settings, lo: usize) -> std::ops::RangeInclusive<usize> {
    lo..=s.max_degree.max(lo)
}

fn sign_of(perm: &IndexMap) -> i64 {
    perm.sign().expect("a permutation")
}

pub(super) fn ideal_identities(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    for n in degrees(s, 2) {
        for &flavor in &s.flavors {
            rec.check(format!("five descriptions n={n} {flavor}"), |_| descriptions(s, n, flavor));
            rec.check(format!("cocycle identity n={n} {flavor}"), |rng| {
                let r = s.ring(n, flavor)?;
                for t in 0..s.instances {
                    let b = random::poly(rng, &s.algebra, s.bounds());
                    let pick = |rng: &mut crate::rng::Lcg64| rng.below(n as u64 + 1) as usize;
                    let (i, j, k) = (pick(rng), pick(rng), pick(rng));
                    let lhs = r.dgen(i, k, &b)?;
                    let rhs = &r.dgen(i, j, &b)? + &r.dgen(j, k, &b)?;
                    if lhs != rhs {
                        return Ok(Verdict::Fail(format!("instance {t}, b = {b}, (i,j,k) = ({i},{j},{k}): {lhs} vs {rhs}")));
                    }
                }
                Ok(cocycle_ideals(s, n)?.into())
            });
        }
    }
    rec.check("neighborhood chain n=2", |_| neighborhood_chain(s));
}

/// `J_ik ⊆ J_ij + J_jk` in the ambient ring for all distinct triples.
fn cocycle_ideals(s: &Settings, n: usize) -> Result<Option<String>> {
    let alg = &s.algebra;
    let amb = ambient_ring(alg, n);
    for i in 0..=n {
        for j in 0..=n {
            for k in 0..=n {
                if i == j || j == k || i == k {
                    continue;
                }
                let mut gens = j_generators(alg, &amb, i, j);
                gens.extend(j_generators(alg, &amb, j, k));
                let sum = Ideal::with_caps(&amb, gens, s.caps);
                for g in j_generators(alg, &amb, i, k) {
                    if !sum.contains(&g)? {
                        return Ok(Some(format!("{g} is in J_{i}{k} but not in J_{i}{j} + J_{j}{k}")));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn products(acc: Vec<Poly>, next: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::with_capacity(acc.len() * next.len());
    for a in &acc {
        for b in next {
            out.push(a * b);
        }
    }
    out
}

/// The five descriptions of the ideal of forms, as ideals of the ambient ring
/// containing the defining ideal.
fn descriptions(s: &Settings, n: usize, flavor: Flavor) -> Result<Verdict> {
    let alg = &s.algebra;
    let r = SimplexRing::with_caps(alg, n, flavor, Engine::Generic, s.caps)?;
    let amb = r.ambient();
    let defining: Vec<Poly> = r.defining_ideal()?.basis()?.to_vec();
    let with_defining = |gens: Vec<Poly>| Ideal::with_caps(&amb, gens.into_iter().chain(defining.iter().cloned()), s.caps);
    let j = |a: usize, b: usize| j_generators(alg, &amb, a, b);
    let product = |pairs: &[(usize, usize)]| {
        let acc = pairs.iter().fold(vec![Poly::one(&amb)], |acc, &(a, b)| products(acc, &j(a, b)));
        with_defining(acc)
    };
    let meet = |pairs: &[(usize, usize)]| -> Result<Ideal> {
        let mut acc = with_defining(j(pairs[0].0, pairs[0].1));
        for &(a, b) in &pairs[1..] {
            let next = with_defining(j(a, b));
            let m = acc.intersection(&next)?;
            acc = with_defining(m.basis()?.to_vec());
        }
        Ok(acc)
    };
    let from_zero: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    let consecutive: Vec<(usize, usize)> = (1..=n).map(|i| (i - 1, i)).collect();
    let all: Vec<(usize, usize)> = (0..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
    let descs = [
        ("∏ J0i", product(&from_zero)),
        ("∏ J(i-1)i", product(&consecutive)),
        ("∩ J(i-1)i", meet(&consecutive)?),
        ("∩ J0i", meet(&from_zero)?),
        ("∩ Jrs", meet(&all)?),
    ];
    let (name0, first) = &descs[0];
    for (name, other) in &descs[1..] {
        for g in other.generators() {
            if !first.contains(g)? {
                return Ok(Verdict::Fail(format!("{g} lies in {name} but not in {name0}")));
            }
        }
        for g in first.generators() {
            if !other.contains(g)? {
                return Ok(Verdict::Fail(format!("{g} lies in {name0} but not in {name}")));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `I₂³ ⊆ J^(2) ⊆ J^<2> ⊆ I₂²` for `n = 2` with `I₂ = J01 + J12`, plus
/// witnesses that the outer inclusions are strict.
fn neighborhood_chain(s: &Settings) -> Result<Verdict> {
    let alg = &s.algebra;
    let weak = SimplexRing::with_caps(alg, 2, Flavor::Weak, Engine::Generic, s.caps)?;
    let strong = SimplexRing::with_caps(alg, 2, Flavor::Strong, Engine::Generic, s.caps)?;
    let amb = weak.ambient();
    let rel = relation_generators(alg, &amb, 2);
    let mut i2 = j_generators(alg, &amb, 0, 1);
    i2.extend(j_generators(alg, &amb, 1, 2));
    let i2 = Ideal::with_caps(&amb, i2, s.caps);
    let with_rel = |i: Ideal| Ideal::with_caps(&amb, i.generators().iter().cloned().chain(rel.iter().cloned()), s.caps);
    let cube = with_rel(i2.power(3)?);
    let square = with_rel(i2.power(2)?);
    let (w, st) = (weak.defining_ideal()?, strong.defining_ideal()?);
    let steps: [(&str, &Ideal, &Ideal); 3] =
        [("I2^3 ⊆ J^(2)", w, &cube), ("J^(2) ⊆ J^<2>", st, w), ("J^<2> ⊆ I2^2", &square, st)];
    for (what, big, small) in steps {
        for g in small.generators() {
            if !big.contains(g)? {
                return Ok(Verdict::Fail(format!("{what} fails at {g}")));
            }
        }
    }
    let coords = alg.coordinates();
    let mut notes = Vec::new();
    if let Some(&x) = coords.first() {
        let e = &j_generators(alg, &amb, 0, 1)[x];
        let sq = e * e;
        if !w.contains(&sq)? || cube.contains(&sq)? {
            return Ok(Verdict::Fail(format!("{sq} does not separate I2^3 from J^(2)")));
        }
        notes.push(format!("{sq} ∈ J^(2) \\ I2^3"));
    }
    if coords.len() >= 2 {
        let a = &j_generators(alg, &amb, 0, 1)[coords[0]];
        let b = &j_generators(alg, &amb, 1, 2)[coords[1]];
        let t = a * b;
        if !square.contains(&t)? || st.contains(&t)? {
            return Ok(Verdict::Fail(format!("{t} does not separate J^<2> from I2^2")));
        }
        notes.push(format!("{t} ∈ J01·J12 \\ J^<2>"));
    }
    Ok(if notes.is_empty() { Verdict::Pass } else { Verdict::PassWith(notes.join("; ")) })
}

/// Sorted coordinate patterns of length `len` in `k` coordinates; repeats
/// allowed only when `diagonal`.
fn patterns(len: usize, k: usize, diagonal: bool) -> Vec<Vec<usize>> {
    fn rec(len: usize, k: usize, diagonal: bool, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in start..k {
            cur.push(c);
            rec(len, k, diagonal, if diagonal { c } else { c + 1 }, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, k, diagonal, 0, &mut Vec::new(), &mut out);
    out
}

/// Monomials in the coordinate generators of degree at most `d`.
fn coordinate_monomials(s: &Settings, d: u32) -> Vec<Poly> {
    let alg = &s.algebra;
    let coords = alg.coordinates();
    let base = alg.base();
    let mut out = Vec::new();
    for deg in 0..=d {
        for m in monomials_of_degree(coords.len(), deg) {
            let mut e = vec![0u32; alg.ngens()];
            for (pos, &g) in coords.iter().enumerate() {
                e[g] = m.exponents()[pos];
            }
            out.push(Poly::monomial(alg.ring(), Monomial::from_exponents(e), base.one()));
        }
    }
    out
}

type Coord = (usize, Key, Vec<u32>);

fn table_vector(e: &crate::simplex::SimplexElement, slot: usize) -> SparseVec<Coord> {
    let mut v = BTreeMap::new();
    if let Some(t) = e.table() {
        for (k, c) in t {
            for (m, a) in c.terms() {
                v.insert((slot, k.clone(), m.exponents().to_vec()), a.clone());
            }
        }
    }
    v
}

pub(super) fn nu_iso(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let mut dims: BTreeMap<(usize, Flavor), usize> = BTreeMap::new();
    for n in degrees(s, 1) {
        for &flavor in &s.flavors {
            rec.check(format!("bijectivity n={n} {flavor}"), |_| {
                let (v, dim) = nu_bijective(s, n, flavor)?;
                dims.insert((n, flavor), dim);
                Ok(v)
            });
        }
    }
    if !s.flavors.contains(&Flavor::Weak) {
        return;
    }
    // The strong dimension is computed here when only weak forms were asked for.
    for n in degrees(s, 2) {
        let Some(&weak) = dims.get(&(n, Flavor::Weak)) else {
            continue;
        };
        let strong = dims.get(&(n, Flavor::Strong)).copied();
        rec.check(format!("flavor ranks n={n}"), |_| {
            let strong = match strong {
                Some(d) => d,
                None => nu_bijective(s, n, Flavor::Strong)?.1,
            };
            flavor_ranks(s, n, weak, strong)
        });
    }
}

/// `ν` is a bijection from classical forms with coefficients of degree at
/// most the bound onto the forms inside the span of the ε-basis with such
/// coefficients. Returns the dimension of the form space found.
fn nu_bijective(s: &Settings, n: usize, flavor: Flavor) -> Result<(Verdict, usize)> {
    let alg = &s.algebra;
    if !alg.is_localized_free() {
        return Ok((Verdict::Skip("the ε-basis needs a localized-free base algebra".into()), 0));
    }
    let base = alg.base();
    let r = SimplexRing::with_caps(alg, n, flavor, Engine::Structured, s.caps)?;
    let k = r.coords().len();
    let diagonal = flavor == Flavor::Weak && !base.two_is_unit();
    let monos = coordinate_monomials(s, s.coeff_degree);

    // Degeneracy images of every ε-basis element: their kernel is the form space.
    let mut degeneracy_images = Vec::new();
    for size in 0..=n {
        for simplices in patterns(size, n, false) {
            for p in patterns(size, k, diagonal) {
                let mut eps = r.one();
                for (t, c) in simplices.iter().zip(&p) {
                    eps = &eps * &r.eps(t + 1, *c)?;
                }
                for m in &monos {
                    let e = &r.from_base(m) * &eps;
                    let mut v = SparseVec::new();
                    for i in 0..n {
                        v.extend(table_vector(&e.pullback(&IndexMap::degeneracy(n - 1, i))?, i));
                    }
                    degeneracy_images.push(v);
                }
            }
        }
    }
    let kernel = degeneracy_images.len() - rank(base, &degeneracy_images)?;

    let full = patterns(n, k, diagonal);
    let mut images = Vec::new();
    for p in &full {
        for m in &monos {
            let form = ClassicalForm::term(alg, flavor, m, p)?;
            let f = ScalarCombForm::nu(&form, &r)?;
            if let Some((i, img)) = degeneracy_witness(f.elem())? {
                return Ok((Verdict::Fail(format!("ν({form}) = {f} survives s_{i} as {img}")), kernel));
            }
            let back = f.nu_inverse()?;
            if back != form {
                return Ok((Verdict::Fail(format!("ν⁻¹ν({form}) = {back}")), kernel));
            }
            images.push(table_vector(f.elem(), 0));
        }
    }
    let independent = rank(base, &images)?;
    if independent != images.len() {
        return Ok((Verdict::Fail(format!("ν has a kernel: rank {independent} on {} basis forms", images.len())), kernel));
    }
    if kernel != images.len() {
        return Ok((
            Verdict::Fail(format!("forms span dimension {kernel}, but ν hits only {}", images.len())),
            kernel,
        ));
    }
    Ok((Verdict::PassWith(format!("dimension {kernel}")), kernel))
}

/// Weak and strong form spaces agree when 2 is a unit; otherwise the weak one
/// is larger, witnessed by `dx⊗̃dx⊗̃…`.
fn flavor_ranks(s: &Settings, n: usize, weak: usize, strong: usize) -> Result<Verdict> {
    let alg = &s.algebra;
    if alg.base().two_is_unit() {
        return Ok(if weak == strong {
            Verdict::PassWith(format!("both dimension {weak}"))
        } else {
            Verdict::Fail(format!("weak dimension {weak} differs from strong dimension {strong}"))
        });
    }
    if weak <= strong {
        return Ok(Verdict::Fail(format!("weak dimension {weak} is not above strong dimension {strong}")));
    }
    if alg.coordinates().is_empty() {
        return Ok(Verdict::Fail("no coordinate for a diagonal witness".into()));
    }
    let one = Poly::one(alg.ring());
    let diag = ClassicalForm::term(alg, Flavor::Weak, &one, &vec![0; n])?;
    let r = SimplexRing::with_caps(alg, n, Flavor::Weak, Engine::Structured, s.caps)?;
    let f = ScalarCombForm::nu(&diag, &r)?;
    if f.is_zero() || !f.to_strong()?.is_zero() {
        return Ok(Verdict::Fail(format!("ν({diag}) = {f} is not a weak-only form")));
    }
    Ok(Verdict::PassWith(format!("dimensions {weak} > {strong}; ν({diag}) = {f} vanishes in the strong ring")))
}

pub(super) fn engine_crosscheck(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    for n in degrees(s, 1) {
        for &flavor in &s.flavors {
            if !s.algebra.is_localized_free() {
                rec.check(format!("engines n={n} {flavor}"), |_| {
                    Ok(Verdict::Skip("the structured engine needs a localized-free base algebra".into()))
                });
                continue;
            }
            rec.check(format!("random elements n={n} {flavor}"), |rng| {
                let st = SimplexRing::with_caps(&s.algebra, n, flavor, Engine::Structured, s.caps)?;
                let ge = st.with_engine(Engine::Generic)?;
                random_agreement(s, &st, &ge, rng)
            });
            rec.check(format!("presentation n={n} {flavor}"), |_| {
                let st = SimplexRing::with_caps(&s.algebra, n, flavor, Engine::Structured, s.caps)?;
                let ge = st.with_engine(Engine::Generic)?;
                Ok(presentation_agreement(&st, &ge)?.into())
            });
        }
    }
}

fn random_agreement(s: &Settings, st: &SimplexRing, ge: &SimplexRing, rng: &mut crate::rng::Lcg64) -> Result<Verdict> {
    let amb: RingRef = ge.ambient();
    let b = PolyBounds { max_degree: s.coeff_degree + 1, max_terms: 4, coeff: 3 };
    for t in 0..s.instances {
        let p = random::ring_poly(rng, &amb, b);
        let q = random::ring_poly(rng, &amb, b);
        let (sp, gp) = (st.from_ambient(&p)?, ge.from_ambient(&p)?);
        if sp.to_engine(Engine::Generic)? != gp {
            return Ok(Verdict::Fail(format!("instance {t}: {p} is {sp} (structured) but {gp} (generic)")));
        }
        let (sq, gq) = (st.from_ambient(&q)?, ge.from_ambient(&q)?);
        let (spq, gpq) = (&sp * &sq, &gp * &gq);
        if spq.to_engine(Engine::Generic)? != gpq {
            return Ok(Verdict::Fail(format!("instance {t}: ({p})·({q}) is {spq} (structured) but {gpq} (generic)")));
        }
    }
    Ok(Verdict::Pass)
}

pub(super) fn sign_action(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let base = s.algebra.base();
    for n in degrees(s, 1) {
        for &flavor in &s.flavors {
            rec.check(format!("scalar n={n} {flavor}"), |rng| {
                let r = s.ring(n, flavor)?;
                for _ in 0..s.instances {
                    let a = random::classical(rng, &s.algebra, flavor, n, s.bounds())?;
                    let f = ScalarCombForm::nu(&a, &r)?;
                    let sigma = IndexMap::permutation(random::permutation(rng, n))?;
                    let got = f.sym_action(&sigma)?;
                    let want = f.scale(&base.from_int(sign_of(&sigma)));
                    if got != want {
                        return Ok(Verdict::Fail(format!("σ = {sigma}, f = {f}: σf = {got}, expected {want}")));
                    }
                }
                Ok(Verdict::Pass)
            });
        }
    }
}

pub(super) fn wedge(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    for &flavor in &s.flavors {
        for total in degrees(s, 1) {
            for p in 0..=total {
                let q = total - p;
                rec.check(format!("star vs wedge p={p} q={q} {flavor}"), |rng| {
                    let (rp, rq, rt) = (s.ring(p, flavor)?, s.ring(q, flavor)?, s.ring(total, flavor)?);
                    for _ in 0..s.instances {
                        let a = random::classical(rng, &s.algebra, flavor, p, s.bounds())?;
                        let b = random::classical(rng, &s.algebra, flavor, q, s.bounds())?;
                        let lhs = ScalarCombForm::nu(&a, &rp)?.star(&ScalarCombForm::nu(&b, &rq)?)?;
                        let rhs = ScalarCombForm::nu(&a.wedge(&b)?, &rt)?;
                        if let Some(w) = compare(&format!("ν({a})∗ν({b})"), &lhs, &rhs) {
                            return Ok(Verdict::Fail(w));
                        }
                    }
                    Ok(Verdict::Pass)
                });
            }
        }
    }
}

pub(super) fn cech(rec: &mut Recorder<'_>) {
    let s = rec.settings();
    let base = s.algebra.base();
    let top = s.max_degree.max(1);
    for &flavor in &s.flavors {
        for p in 0..top {
            rec.check(format!("δν = νd p={p} {flavor}"), |rng| {
                let r = s.ring(p, flavor)?;
                for _ in 0..s.instances {
                    let a = random::classical(rng, &s.algebra, flavor, p, s.bounds())?;
                    let lhs = ScalarCombForm::nu(&a, &r)?.cech_delta()?;
                    let rhs = ScalarCombForm::nu(&a.exterior_d(), &r.sibling(p + 1)?)?;
                    if let Some(w) = compare(&format!("δν({a})"), &lhs, &rhs) {
                        return Ok(Verdict::Fail(w));
                    }
                }
                Ok(Verdict::Pass)
            });
        }
        for p in 0..top.saturating_sub(1) {
            rec.check(format!("δδ = 0 p={p} {flavor}"), |rng| {
                let r = s.ring(p, flavor)?;
                for _ in 0..s.instances {
                    let a = random::classical(rng, &s.algebra, flavor, p, s.bounds())?;
                    let dd = ScalarCombForm::nu(&a, &r)?.cech_delta()?.cech_delta()?;
                    if !dd.is_zero() {
                        return Ok(Verdict::Fail(format!("δδν({a}) = {dd}")));
                    }
                }
                Ok(Verdict::Pass)
            });
        }
        for p in 0..top {
            for q in 0..top - p {
                rec.check(format!("leibniz p={p} q={q} {flavor}"), |rng| {
                    let (rp, rq) = (s.ring(p, flavor)?, s.ring(q, flavor)?);
                    let sign = base.from_int(if p % 2 == 0 { 1 } else { -1 });
                    for _ in 0..s.instances {
                        let a = random::classical(rng, &s.algebra, flavor, p, s.bounds())?;
                        let b = random::classical(rng, &s.algebra, flavor, q, s.bounds())?;
                        let (f, g) = (ScalarCombForm::nu(&a, &rp)?, ScalarCombForm::nu(&b, &rq)?);
                        let lhs = f.star(&g)?.cech_delta()?;
                        let rhs = f.cech_delta()?.star(&g)?.add(&f.star(&g.cech_delta()?)?.scale(&sign))?;
                        if let Some(w) = compare(&format!("δ(ν({a})∗ν({b}))"), &lhs, &rhs) {
                            return Ok(Verdict::Fail(w));
                        }
                    }
                    Ok(Verdict::Pass)
                });
            }
        }
    }
}
