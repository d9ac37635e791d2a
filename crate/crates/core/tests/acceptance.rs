//! One line per acceptance criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use cdforms::exactalg::{AlgebraPresentation, AlgebraRef, BaseRing};
use cdforms::simplex::Flavor;
use cdforms::verify::{corrupted_groups, corrupted_presentations, run_suite, Record, Settings, Status};

fn rationals(names: &[&str]) -> AlgebraRef {
    AlgebraPresentation::free(BaseRing::Rationals, names.iter().copied())
}

fn f2(names: &[&str]) -> AlgebraRef {
    AlgebraPresentation::free(BaseRing::prime_field(2).expect("a field"), names.iter().copied())
}

fn settings(alg: &AlgebraRef, max_degree: usize, instances: usize) -> Settings {
    let mut s = Settings::new(alg);
    s.max_degree = max_degree;
    s.instances = instances;
    s.seed = 20;
    s
}

/// Outcome of a criterion: records plus extra named requirements.
struct Tally {
    records: Vec<Record>,
    problems: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { records: Vec::new(), problems: Vec::new() }
    }

    fn run(&mut self, suite: &str, s: &Settings) {
        match run_suite(suite, s) {
            Ok(r) => self.records.extend(r),
            Err(e) => self.problems.push(format!("{suite}: {e}")),
        }
    }

    /// A record whose instance starts with `prefix` must pass and carry a
    /// witness containing `needle`.
    fn require(&mut self, prefix: &str, needle: &str) {
        let found = self.records.iter().any(|r| {
            r.instance.starts_with(prefix)
                && r.status == Status::Pass
                && r.witness.as_deref().is_some_and(|w| w.contains(needle))
        });
        if !found {
            self.problems.push(format!("no passing `{prefix}` with witness containing `{needle}`"));
        }
    }

    fn verdict(&self) -> (bool, String) {
        let failed: Vec<&Record> = self.records.iter().filter(|r| r.status == Status::Fail).collect();
        let passed = self.records.iter().filter(|r| r.status == Status::Pass).count();
        let skipped = self.records.iter().filter(|r| r.status == Status::Skip).count();
        let mut notes = Vec::new();
        for r in failed.iter().take(3) {
            notes.push(format!("{} / {}: {}", r.suite, r.instance, r.witness.as_deref().unwrap_or("")));
        }
        notes.extend(self.problems.iter().cloned());
        let ok = failed.is_empty() && self.problems.is_empty() && passed > 0;
        (ok, format!("{passed} passed, {} failed, {skipped} skipped{}", failed.len(), render_notes(&notes)))
    }
}

fn render_notes(notes: &[String]) -> String {
    notes.iter().map(|n| format!("\n    {n}")).collect()
}

fn ideal_identities() -> Tally {
    let mut t = Tally::new();
    for alg in [rationals(&["x"]), rationals(&["x", "y"]), f2(&["x", "y"])] {
        t.run("ideal-identities", &settings(&alg, 3, 50));
    }
    t.require("neighborhood chain", "\\ J^<2>");
    t
}

fn nu_iso() -> Tally {
    let mut t = Tally::new();
    let names = ["x", "y", "z"];
    for k in 1..=3 {
        for alg in [rationals(&names[..k]), f2(&names[..k])] {
            let mut s = settings(&alg, 3, 1);
            s.coeff_degree = 3;
            t.run("nu-iso", &s);
        }
    }
    t.require("flavor ranks", "both dimension");
    t.require("flavor ranks", "vanishes in the strong ring");
    t
}

fn engine_crosscheck() -> Tally {
    let mut t = Tally::new();
    for alg in [rationals(&["x"]), rationals(&["x", "y"]), f2(&["x", "y"])] {
        t.run("engine-crosscheck", &settings(&alg, 3, 200));
    }
    t
}

fn each(suites: &[&str], algs: &[AlgebraRef], max_degree: usize, instances: usize) -> Tally {
    let mut t = Tally::new();
    for alg in algs {
        for suite in suites {
            t.run(suite, &settings(alg, max_degree, instances));
        }
    }
    t
}

fn negative_controls() -> Tally {
    let mut t = Tally::new();
    let mut controls = Vec::new();
    for alg in [rationals(&["x", "y"]), f2(&["x", "y"])] {
        for flavor in [Flavor::Weak, Flavor::Strong] {
            match corrupted_presentations(&alg, 2, flavor, Default::default()) {
                Ok(r) => controls.extend(r),
                Err(e) => t.problems.push(e.to_string()),
            }
        }
        match corrupted_groups(alg.base()) {
            Ok(r) => controls.extend(r),
            Err(e) => t.problems.push(e.to_string()),
        }
    }
    // A corruption is caught when its check fails with a witness.
    let caught = controls.iter().filter(|r| r.status == Status::Fail && r.witness.is_some()).count();
    for r in controls.iter().filter(|r| r.status != Status::Fail || r.witness.is_none()).take(3) {
        t.problems.push(format!("undetected: {} / {}", r.suite, r.instance));
    }
    if caught < controls.len() {
        t.problems.push(format!("{} of {} corruptions undetected", controls.len() - caught, controls.len()));
    }
    t.records.push(Record {
        suite: "negative-controls".into(),
        index: 0,
        instance: format!("{caught} corruptions detected"),
        status: Status::Pass,
        witness: controls.first().and_then(|r| r.witness.clone()),
        time_ms: 0,
    });
    t
}

fn main() -> ExitCode {
    let qxy = rationals(&["x", "y"]);
    let f2xy = f2(&["x", "y"]);
    let criteria: Vec<(&str, Box<dyn Fn() -> Tally>)> = vec![
        ("ideal identities", Box::new(ideal_identities)),
        ("nu isomorphism", Box::new(nu_iso)),
        ("dual engines", Box::new(engine_crosscheck)),
        ("sign action", {
            let algs = [qxy.clone(), f2xy.clone()];
            Box::new(move || each(&["sign-action"], &algs, 3, 50))
        }),
        ("wedge and de Rham", {
            let algs = [rationals(&["x"]), qxy.clone(), f2xy.clone()];
            Box::new(move || each(&["wedge", "cech"], &algs, 3, 50))
        }),
        ("bracket laws", {
            let algs = [qxy.clone()];
            Box::new(move || each(&["bracket-laws"], &algs, 2, 20))
        }),
        ("deformation kernel", {
            let algs = [qxy.clone(), f2xy.clone()];
            Box::new(move || each(&["deformation-kernel"], &algs, 2, 20))
        }),
        ("adjoint action", {
            let algs = [qxy.clone()];
            Box::new(move || each(&["adjoint"], &algs, 2, 20))
        }),
        ("non-abelian differentials", {
            let algs = [qxy.clone()];
            Box::new(move || {
                let mut t = each(&["delta-suite"], &algs, 2, 20);
                t.require("maurer-cartan Aff1 worked example", "-abar^2*da^db");
                t
            })
        }),
        ("negative controls", Box::new(negative_controls)),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run().verdict();
        all &= ok;
        let status = if ok { "pass" } else { "fail" };
        println!("criterion {}: {status} ({name}; {detail}; {:.1}s)", i + 1, start.elapsed().as_secs_f64());
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
