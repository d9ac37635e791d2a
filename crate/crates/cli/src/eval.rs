//! Evaluation of expression files.
//!
//! An expression file holds the definitions header (see `config`), with the
//! `version` line optional, followed by named objects and `eval` lines:
//!
//! ```text
//! let a = x*dx^dy              # classical form
//! form f Heis3 = dx; 0; 0      # group-valued form by its classical components
//! point g Aff1 = 2; 1/2; x     # B-point by generator images
//! eval nu d x
//! eval classical bracket f f2
//! ```
//!
//! Scalar commands: `nu F`, `cech F` (δ of ν F), `dform F`, `star A B`.
//! Group expressions are prefix: `bracket A B`, `product A B`, `inverse A`,
//! `delta0 P`, `delta1 A`, `delta2 A B` and `delta3 A B` (χ = i_*A),
//! `adjoint P A`, `mc(G)`, or a name. `classical E` prints the components of
//! a group expression instead of its generator images.

use std::collections::BTreeMap;

use cdforms::exactalg::AlgebraRef;
use cdforms::forms::{ClassicalForm, ScalarCombForm};
use cdforms::gforms::{delta0, delta1, delta2, delta3, mc_form, AutForm, GroupForm};
use cdforms::hopf::GroupPoint;
use cdforms::simplex::{Flavor, SimplexRing};
use cdforms::verify::engine_for;
use cdforms::{Error, Result};

use crate::config::Config;

struct Env {
    config: Config,
    algebra: AlgebraRef,
    flavor: Flavor,
    forms: BTreeMap<String, ClassicalForm>,
    gforms: BTreeMap<String, GroupForm>,
    points: BTreeMap<String, GroupPoint<AlgebraRef>>,
}

fn lookup_err(what: &str, name: &str) -> Error {
    Error::Lookup(format!("no {what} named `{name}`"))
}

/// `NAME [GROUP] = BODY`.
fn definition(rest: &str, with_group: bool) -> Result<(String, Option<String>, String)> {
    let (lhs, body) =
        rest.split_once('=').ok_or_else(|| Error::Parse(format!("expected `=` in definition `{rest}`")))?;
    let words: Vec<&str> = lhs.split_whitespace().collect();
    match (&words[..], with_group) {
        ([name], false) => Ok((name.to_string(), None, body.trim().to_string())),
        ([name, group], true) => Ok((name.to_string(), Some(group.to_string()), body.trim().to_string())),
        _ => Err(Error::Parse(format!("malformed definition `{rest}`"))),
    }
}

impl Env {
    fn ring(&self, n: usize) -> Result<SimplexRing> {
        SimplexRing::with_caps(&self.algebra, n, Flavor::Strong, engine_for(&self.algebra), self.config.caps)
    }

    fn scalar_ring(&self, n: usize) -> Result<SimplexRing> {
        SimplexRing::with_caps(&self.algebra, n, self.flavor, engine_for(&self.algebra), self.config.caps)
    }

    fn classical(&self, text: &str) -> Result<ClassicalForm> {
        if let Some(f) = self.forms.get(text.trim()) {
            return Ok(f.clone());
        }
        ClassicalForm::parse(&self.algebra, self.flavor, None, text)
    }

    fn define(&mut self, key: &str, rest: &str) -> Result<()> {
        match key {
            "let" => {
                let (name, _, body) = definition(rest, false)?;
                let f = self.classical(&body)?;
                self.forms.insert(name, f);
            }
            "form" => {
                let (name, group, body) = definition(rest, true)?;
                let g = self.config.named_group(&group.expect("group given"))?;
                let parts: Vec<&str> = body.split(';').map(str::trim).collect();
                let parsed: Vec<ClassicalForm> = parts
                    .iter()
                    .map(|p| ClassicalForm::parse(&self.algebra, Flavor::Strong, None, p))
                    .collect::<Result<_>>()?;
                let degree = parsed.iter().filter(|f| !f.is_zero()).map(|f| f.degree()).max().unwrap_or(1);
                let rep: Vec<ClassicalForm> = parts
                    .iter()
                    .map(|p| ClassicalForm::parse(&self.algebra, Flavor::Strong, Some(degree), p))
                    .collect::<Result<_>>()?;
                let f = GroupForm::from_classical(&g, &rep, &self.ring(degree)?)?;
                self.gforms.insert(name, f);
            }
            "point" => {
                let (name, group, body) = definition(rest, true)?;
                let g = self.config.named_group(&group.expect("group given"))?;
                let images = body.split(';').map(|p| self.algebra.parse(p.trim())).collect::<Result<Vec<_>>>()?;
                self.points.insert(name, GroupPoint::new(&g, &self.algebra, images)?);
            }
            _ => unreachable!("only definition keywords are passed"),
        }
        Ok(())
    }

    fn point(&self, name: &str) -> Result<&GroupPoint<AlgebraRef>> {
        self.points.get(name).ok_or_else(|| lookup_err("point", name))
    }

    /// Parses one group expression from the front of `words`.
    fn group_expr(&self, words: &mut std::slice::Iter<'_, &str>) -> Result<GroupForm> {
        let w = *words.next().ok_or_else(|| Error::Parse("expression ended early".into()))?;
        match w {
            "bracket" => {
                let a = self.group_expr(words)?;
                a.bracket(&self.group_expr(words)?)
            }
            "product" => {
                let a = self.group_expr(words)?;
                a.product(&self.group_expr(words)?)
            }
            "inverse" => Ok(self.group_expr(words)?.inverse()),
            "delta1" => delta1(&self.group_expr(words)?),
            "delta2" | "delta3" => {
                let chi = AutForm::inner(&self.group_expr(words)?)?;
                let phi = self.group_expr(words)?;
                if w == "delta2" {
                    delta2(&chi, &phi)
                } else {
                    delta3(&chi, &phi)
                }
            }
            "delta0" => {
                let p = self.point(words.next().ok_or_else(|| Error::Parse("`delta0` needs a point".into()))?)?;
                delta0(p, &self.ring(1)?)
            }
            "adjoint" => {
                let p = self.point(words.next().ok_or_else(|| Error::Parse("`adjoint` needs a point".into()))?)?.clone();
                self.group_expr(words)?.adjoint(&p, 0)
            }
            mc if mc.starts_with("mc(") && mc.ends_with(')') => {
                let g = self.config.named_group(&mc[3..mc.len() - 1])?;
                mc_form(&g, engine_for(g.algebra()))
            }
            name => self.gforms.get(name).cloned().ok_or_else(|| lookup_err("form", name)),
        }
    }

    fn eval(&self, expr: &str) -> Result<String> {
        let expr = expr.trim();
        let (cmd, rest) = match expr.split_once(char::is_whitespace) {
            Some((c, r)) => (c, r.trim()),
            None => (expr, ""),
        };
        match cmd {
            "nu" | "cech" => {
                let f = self.classical(rest)?;
                let nu = ScalarCombForm::nu(&f, &self.scalar_ring(f.degree())?)?;
                Ok(if cmd == "nu" { nu.to_string() } else { nu.cech_delta()?.to_string() })
            }
            "dform" => Ok(self.classical(rest)?.exterior_d().to_string()),
            "star" => {
                let names: Vec<&str> = rest.split_whitespace().collect();
                let [a, b] = names[..] else {
                    return Err(Error::Parse("`star` takes two names".into()));
                };
                let (a, b) = (self.classical(a)?, self.classical(b)?);
                let fa = ScalarCombForm::nu(&a, &self.scalar_ring(a.degree())?)?;
                let fb = ScalarCombForm::nu(&b, &self.scalar_ring(b.degree())?)?;
                Ok(fa.star(&fb)?.to_string())
            }
            _ => {
                let (classical, body) = if cmd == "classical" { (true, rest) } else { (false, expr) };
                let words: Vec<&str> = body.split_whitespace().collect();
                let mut it = words.iter();
                let f = self.group_expr(&mut it)?;
                if let Some(extra) = it.next() {
                    return Err(Error::Parse(format!("unexpected `{extra}` after the expression")));
                }
                if classical {
                    let parts: Vec<String> = f.to_classical()?.iter().map(|c| c.to_string()).collect();
                    return Ok(format!("({})", parts.join(", ")));
                }
                let images = f.point().render();
                Ok(if f.is_identity() { format!("identity: {images}") } else { images })
            }
        }
    }
}

/// Evaluates every `eval` line in order, handing each result to `emit`.
pub fn run(text: &str, emit: &mut dyn FnMut(String)) -> Result<()> {
    let (config, lines) = Config::parse_with(text, false, &["let", "form", "point", "eval"])?;
    let algebra = config.algebra()?;
    let flavor = *config.flavors.first().unwrap_or(&Flavor::Strong);
    let mut env =
        Env { config, algebra, flavor, forms: BTreeMap::new(), gforms: BTreeMap::new(), points: BTreeMap::new() };
    for (line, content) in lines {
        let (key, rest) = content.split_once(char::is_whitespace).unwrap_or((content.as_str(), ""));
        let r = if key == "eval" { env.eval(rest).map(&mut *emit) } else { env.define(key, rest) };
        r.map_err(|e| at_line(line, e))?;
    }
    Ok(())
}

fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Lookup(m) => Error::Lookup(format!("line {line}: {m}")),
        Error::Parse(m) => Error::Parse(format!("line {line}: {m}")),
        other => other,
    }
}
