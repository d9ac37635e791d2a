//! Verification suites shared by the command-line driver and the acceptance
//! tests. Every check yields one [`Record`]; random instances are drawn from
//! an [`Lcg64`] stream derived from the seed, the suite name and the check
//! index, so a report is reproducible from its settings alone.

mod controls;
mod group;
mod scalar;

use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

pub use controls::{corrupted_groups, corrupted_presentations, presentation_agreement};

use crate::error::{Error, Result};
use crate::exactalg::{AlgebraPresentation, AlgebraRef, Caps};
use crate::hopf::{builtin_group, CoactionRef, HopfRef};
use crate::random::PolyBounds;
use crate::rng::Lcg64;
use crate::simplex::{Engine, Flavor, SimplexRing};

/// Names accepted by [`run_suite`], in report order.
pub const SUITES: [&str; 11] = [
    "ideal-identities",
    "nu-iso",
    "engine-crosscheck",
    "sign-action",
    "wedge",
    "cech",
    "bracket-laws",
    "adjoint",
    "delta-suite",
    "deformation-kernel",
    "hopf-axioms",
];

/// What the suites run over.
#[derive(Clone, Debug)]
pub struct Settings {
    pub algebra: AlgebraRef,
    /// Replaces the builtin groups in group-valued suites.
    pub group: Option<HopfRef>,
    /// Replaces the builtin coactions.
    pub action: Option<CoactionRef>,
    /// Largest simplex degree for the scalar suites.
    pub max_degree: usize,
    /// Largest coefficient degree of random and basis elements.
    pub coeff_degree: u32,
    pub seed: u64,
    /// Random instances per check.
    pub instances: usize,
    pub flavors: Vec<Flavor>,
    pub caps: Caps,
}

impl Settings {
    pub fn new(algebra: &AlgebraRef) -> Self {
        Settings {
            algebra: algebra.clone(),
            group: None,
            action: None,
            max_degree: 2,
            coeff_degree: 2,
            seed: 0,
            instances: 10,
            flavors: vec![Flavor::Weak, Flavor::Strong],
            caps: Caps::default(),
        }
    }

    pub(crate) fn bounds(&self) -> PolyBounds {
        PolyBounds { max_degree: self.coeff_degree, max_terms: 3, coeff: 3 }
    }

    /// Bounds for the group-valued suites, whose forms multiply quickly.
    pub(crate) fn small_bounds(&self) -> PolyBounds {
        PolyBounds { max_degree: self.coeff_degree.min(1), max_terms: 2, coeff: 2 }
    }

    pub(crate) fn ring(&self, n: usize, flavor: Flavor) -> Result<SimplexRing> {
        self.ring_over(&self.algebra, n, flavor)
    }

    pub(crate) fn ring_over(&self, alg: &AlgebraRef, n: usize, flavor: Flavor) -> Result<SimplexRing> {
        SimplexRing::with_caps(alg, n, flavor, engine_for(alg), self.caps)
    }

    /// The configured group, or the named builtins over the base ring.
    pub(crate) fn groups(&self, defaults: &[&str]) -> Result<Vec<HopfRef>> {
        match &self.group {
            Some(g) => Ok(vec![g.clone()]),
            None => defaults.iter().map(|n| builtin_group(n, self.algebra.base())).collect(),
        }
    }
}

/// The structured engine where it applies, otherwise the Gröbner engine.
pub fn engine_for(alg: &AlgebraRef) -> Engine {
    if alg.is_localized_free() {
        Engine::Structured
    } else {
        Engine::Generic
    }
}

/// A free algebra gets an extra invertible generator so that random group
/// points can have non-constant unit entries. Other algebras are kept.
pub(crate) fn with_unit(alg: &AlgebraRef) -> Result<AlgebraRef> {
    if !alg.is_free() {
        return Ok(alg.clone());
    }
    let taken = |s: &str| alg.generators().iter().any(|g| g == s);
    let name = ["s", "u", "w", "s0"]
        .into_iter()
        .find(|s| !taken(s) && !taken(&format!("{s}bar")))
        .ok_or_else(|| Error::Presentation("no free name for a unit generator".into()))?;
    let inv = format!("{name}bar");
    let mut names: Vec<String> = alg.generators().to_vec();
    names.push(name.to_string());
    names.push(inv.clone());
    AlgebraPresentation::new(alg.base(), names, &[], &[(name, inv.as_str())])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Result of one check. A passing check may carry a positive witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    PassWith(String),
    Fail(String),
    Skip(String),
}

impl From<Option<String>> for Verdict {
    fn from(o: Option<String>) -> Self {
        match o {
            None => Verdict::Pass,
            Some(w) => Verdict::Fail(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub suite: String,
    pub index: usize,
    pub instance: String,
    pub status: Status,
    /// Counterexample on failure, reason on skip, optional evidence on pass.
    pub witness: Option<String>,
    pub time_ms: u64,
}

fn label(suite: &str) -> u64 {
    // FNV-1a, fixed so that streams do not depend on the std hasher.
    suite.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub(crate) struct Recorder<'a> {
    suite: String,
    settings: &'a Settings,
    root: Lcg64,
    records: Vec<Record>,
}

impl<'a> Recorder<'a> {
    pub(crate) fn new(suite: &str, settings: &'a Settings) -> Self {
        Recorder {
            suite: suite.to_string(),
            settings,
            root: Lcg64::new(settings.seed).fork(label(suite)),
            records: Vec::new(),
        }
    }

    pub(crate) fn settings(&self) -> &'a Settings {
        self.settings
    }

    /// Runs one check. Resource errors become skips; other errors and
    /// panics become failures carrying the message.
    pub(crate) fn check(&mut self, instance: impl Into<String>, f: impl FnOnce(&mut Lcg64) -> Result<Verdict>) {
        let index = self.records.len();
        let mut rng = self.root.fork(index as u64 + 1);
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(|| f(&mut rng)));
        let time_ms = start.elapsed().as_millis() as u64;
        let verdict = match out {
            Ok(Ok(v)) => v,
            Ok(Err(Error::Resource(why))) => Verdict::Skip(format!("resource cap: {why}")),
            Ok(Err(e)) => Verdict::Fail(format!("error: {e}")),
            Err(p) => {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "unknown".into());
                Verdict::Fail(format!("panic: {msg}"))
            }
        };
        let (status, witness) = match verdict {
            Verdict::Pass => (Status::Pass, None),
            Verdict::PassWith(w) => (Status::Pass, Some(w)),
            Verdict::Fail(w) => (Status::Fail, Some(w)),
            Verdict::Skip(w) => (Status::Skip, Some(w)),
        };
        self.records.push(Record { suite: self.suite.clone(), index, instance: instance.into(), status, witness, time_ms });
    }

    pub(crate) fn finish(self) -> Vec<Record> {
        self.records
    }
}

/// Runs one suite by name.
pub fn run_suite(name: &str, settings: &Settings) -> Result<Vec<Record>> {
    let mut rec = Recorder::new(name, settings);
    match name {
        "ideal-identities" => scalar::ideal_identities(&mut rec),
        "nu-iso" => scalar::nu_iso(&mut rec),
        "engine-crosscheck" => scalar::engine_crosscheck(&mut rec),
        "sign-action" => {
            scalar::sign_action(&mut rec);
            group::sign_action(&mut rec);
        }
        "wedge" => scalar::wedge(&mut rec),
        "cech" => scalar::cech(&mut rec),
        "bracket-laws" => group::bracket_laws(&mut rec),
        "adjoint" => group::adjoint(&mut rec),
        "delta-suite" => group::delta_suite(&mut rec),
        "deformation-kernel" => group::deformation_kernel(&mut rec),
        "hopf-axioms" => group::hopf_axioms(&mut rec),
        _ => return Err(Error::UnknownName(format!("suite `{name}`"))),
    }
    Ok(rec.finish())
}

/// Runs several suites, merging records by suite order and check index.
pub fn run_suites(names: &[String], settings: &Settings, jobs: usize) -> Result<Vec<Record>> {
    for n in names {
        if !SUITES.contains(&n.as_str()) {
            return Err(Error::UnknownName(format!("suite `{n}`")));
        }
    }
    let jobs = jobs.max(1);
    let mut slots: Vec<Option<Result<Vec<Record>>>> = (0..names.len()).map(|_| None).collect();
    for chunk in (0..names.len()).collect::<Vec<_>>().chunks(jobs) {
        let done: Vec<(usize, Result<Vec<Record>>)> = std::thread::scope(|s| {
            let handles: Vec<_> = chunk
                .iter()
                .map(|&i| {
                    let name = &names[i];
                    s.spawn(move || (i, run_suite(name, settings)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
        });
        for (i, r) in done {
            slots[i] = Some(r);
        }
    }
    let mut out = Vec::new();
    for s in slots {
        out.extend(s.expect("every suite ran")?);
    }
    Ok(out)
}

/// `None` if equal, otherwise a witness naming both sides.
pub(crate) fn compare<T: PartialEq + fmt::Display>(what: &str, got: &T, want: &T) -> Option<String> {
    if got == want {
        None
    } else {
        Some(format!("{what}: got {got}, expected {want}"))
    }
}
