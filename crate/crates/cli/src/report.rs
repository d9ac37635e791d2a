//! Human-readable and machine-readable renderings of suite records.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cdforms::verify::{Record, Status};

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

#[derive(Default)]
struct Counts {
    pass: usize,
    fail: usize,
    skip: usize,
}

impl Counts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skip => self.skip += 1,
        }
    }
}

fn tally(records: &[Record]) -> (Counts, BTreeMap<usize, (String, Counts)>) {
    let mut total = Counts::default();
    // Keyed by first appearance so suites stay in run order.
    let mut per: BTreeMap<usize, (String, Counts)> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    for r in records {
        total.add(r.status);
        let pos = match order.iter().position(|s| *s == r.suite) {
            Some(p) => p,
            None => {
                order.push(r.suite.clone());
                order.len() - 1
            }
        };
        per.entry(pos).or_insert_with(|| (r.suite.clone(), Counts::default())).1.add(r.status);
    }
    (total, per)
}

/// One `check` line per record, then the summary block.
pub fn machine(header: &str, records: &[Record]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "report version=1 config={}", quote(header));
    for r in records {
        let _ = write!(
            out,
            "check suite={} index={} instance={} status={} time_ms={}",
            r.suite,
            r.index,
            quote(&r.instance),
            r.status,
            r.time_ms
        );
        if let Some(w) = &r.witness {
            let _ = write!(out, " witness={}", quote(w));
        }
        out.push('\n');
    }
    let (total, per) = tally(records);
    let _ = writeln!(out, "summary total={} pass={} fail={} skip={}", records.len(), total.pass, total.fail, total.skip);
    for (name, c) in per.values() {
        let _ = writeln!(out, "summary suite={name} pass={} fail={} skip={}", c.pass, c.fail, c.skip);
    }
    out
}

pub fn human(records: &[Record]) -> String {
    let mut out = String::new();
    for r in records {
        let tag = match r.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        let _ = write!(out, "{tag} {:<18} {}", r.suite, r.instance);
        match (&r.status, &r.witness) {
            (Status::Pass, Some(w)) => {
                let _ = write!(out, "  ({w})");
            }
            (_, Some(w)) => {
                let _ = write!(out, "\n     {w}");
            }
            _ => {}
        }
        out.push('\n');
    }
    let (total, _) = tally(records);
    let _ = writeln!(out, "{} checks: {} passed, {} failed, {} skipped", records.len(), total.pass, total.fail, total.skip);
    out
}

pub fn any_failed(records: &[Record]) -> bool {
    records.iter().any(|r| r.status == Status::Fail)
}
