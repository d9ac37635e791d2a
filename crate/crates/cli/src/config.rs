//! The line-oriented definitions format shared by `verify`, `eval`,
//! `export` and `import`.
//!
//! One `keyword value...` per line; `#` starts a comment. Keywords:
//!
//! ```text
//! version 1
//! ring Q                      # Q, F<p> or Z/<m>
//! vars x y
//! rel <poly>                  # repeatable
//! inverse s sbar              # repeatable
//! group Aff1                  # builtin, or a custom name with the lines below
//! gen u v w
//! grel <poly>
//! ginverse a abar
//! counit u 0
//! comul w w_1 + w_2 + u_1*v_2
//! antipode w -w + u*v
//! action gm_scales_ga         # builtin, or `action NAME ACTING ACTED` + rho lines
//! rho x t_1*x_2
//! degree 2
//! coeff 2
//! seed 0
//! instances 10
//! flavor weak strong
//! suite nu-iso                # repeatable; none means every suite
//! cap max_degree 12
//! cap max_basis 5000
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cdforms::exactalg::{AlgebraPresentation, AlgebraRef, BaseRing, Caps};
use cdforms::hopf::{builtin_action, builtin_group, Coaction, CoactionRef, HopfAlgebra, HopfRef, HopfSpec, BUILTIN_GROUPS};
use cdforms::simplex::Flavor;
use cdforms::verify::{Settings, SUITES};
use cdforms::{Error, Result};

pub const VERSION: &str = "1";

/// A custom Hopf algebra, kept as text. Maps are keyed by generator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupDef {
    pub name: String,
    pub gens: Vec<String>,
    pub rels: Vec<String>,
    pub inverses: Vec<(String, String)>,
    pub counit: BTreeMap<String, String>,
    pub comul: BTreeMap<String, String>,
    pub antipode: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupChoice {
    Builtins,
    Builtin(String),
    Custom(GroupDef),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionChoice {
    Builtins,
    Builtin(String),
    Custom { name: String, acting: String, acted: String, rho: BTreeMap<String, String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub ring: String,
    pub vars: Vec<String>,
    pub rels: Vec<String>,
    pub inverses: Vec<(String, String)>,
    pub group: GroupChoice,
    pub action: ActionChoice,
    pub degree: usize,
    pub coeff: u32,
    pub seed: u64,
    pub instances: usize,
    pub flavors: Vec<Flavor>,
    pub suites: Vec<String>,
    pub caps: Caps,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            ring: "Q".into(),
            vars: vec!["x".into(), "y".into()],
            rels: Vec::new(),
            inverses: Vec::new(),
            group: GroupChoice::Builtins,
            action: ActionChoice::Builtins,
            degree: 2,
            coeff: 2,
            seed: 0,
            instances: 10,
            flavors: vec![Flavor::Weak, Flavor::Strong],
            suites: Vec::new(),
            caps: Caps::default(),
        }
    }
}

fn format_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Format(format!("line {line}: {msg}"))
}

fn number<T: std::str::FromStr>(line: usize, field: &str, text: &str) -> Result<T> {
    text.trim().parse().map_err(|_| format_err(line, format!("`{field}` expects a number, got `{text}`")))
}

/// Splits off the first word.
fn head(text: &str) -> (&str, &str) {
    let t = text.trim();
    match t.find(char::is_whitespace) {
        Some(i) => (&t[..i], t[i..].trim()),
        None => (t, ""),
    }
}

fn pair(line: usize, field: &str, rest: &str) -> Result<(String, String)> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    match words[..] {
        [a, b] => Ok((a.to_string(), b.to_string())),
        _ => Err(format_err(line, format!("`{field}` expects two names"))),
    }
}

pub fn parse_base(text: &str) -> Result<BaseRing> {
    let t = text.trim();
    if t == "Q" || t == "QQ" {
        return Ok(BaseRing::Rationals);
    }
    if let Some(p) = t.strip_prefix('F').or_else(|| t.strip_prefix("GF")) {
        let p: u64 = p.trim().parse().map_err(|_| Error::Format(format!("bad ring `{t}`")))?;
        return BaseRing::prime_field(p);
    }
    if let Some(m) = t.strip_prefix("Z/") {
        let m: u64 = m.trim().parse().map_err(|_| Error::Format(format!("bad ring `{t}`")))?;
        return BaseRing::integers_mod(m);
    }
    Err(Error::Format(format!("unknown ring `{t}` (use Q, F<p> or Z/<m>)")))
}

fn parse_flavor(line: usize, w: &str) -> Result<Flavor> {
    match w {
        "weak" => Ok(Flavor::Weak),
        "strong" => Ok(Flavor::Strong),
        _ => Err(format_err(line, format!("unknown flavor `{w}`"))),
    }
}

impl Config {
    /// Parses the definitions format. Lines whose keyword is in `extra` are
    /// returned untouched, with their line numbers, for the caller.
    pub fn parse_with(text: &str, require_version: bool, extra: &[&str]) -> Result<(Config, Vec<(usize, String)>)> {
        let mut c = Config::default();
        let mut passed = Vec::new();
        let mut version_seen = false;
        let mut custom: Option<GroupDef> = None;
        let mut group_name: Option<String> = None;
        let mut action: Option<(String, Option<(String, String)>)> = None;
        let mut rho = BTreeMap::new();
        let mut vars_set = false;
        let mut flavors_set = false;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, rest) = head(content);
            if !version_seen && require_version && key != "version" {
                return Err(format_err(line, "the file must start with `version`"));
            }
            let def = || custom.clone().unwrap_or_default();
            match key {
                "version" => {
                    if rest != VERSION {
                        return Err(format_err(line, format!("version `{rest}` is not supported (expected {VERSION})")));
                    }
                    version_seen = true;
                }
                "ring" => c.ring = rest.to_string(),
                "vars" => {
                    if !vars_set {
                        c.vars.clear();
                        vars_set = true;
                    }
                    c.vars.extend(rest.split_whitespace().map(String::from));
                }
                "rel" => c.rels.push(rest.to_string()),
                "inverse" => c.inverses.push(pair(line, key, rest)?),
                "group" => group_name = Some(rest.to_string()),
                "gen" | "grel" | "ginverse" | "counit" | "comul" | "antipode" => {
                    let mut d = def();
                    match key {
                        "gen" => d.gens.extend(rest.split_whitespace().map(String::from)),
                        "grel" => d.rels.push(rest.to_string()),
                        "ginverse" => d.inverses.push(pair(line, key, rest)?),
                        _ => {
                            let (g, value) = head(rest);
                            if value.is_empty() {
                                return Err(format_err(line, format!("`{key}` expects a generator and a value")));
                            }
                            let map = match key {
                                "counit" => &mut d.counit,
                                "comul" => &mut d.comul,
                                _ => &mut d.antipode,
                            };
                            map.insert(g.to_string(), value.to_string());
                        }
                    }
                    custom = Some(d);
                }
                "action" => {
                    let words: Vec<&str> = rest.split_whitespace().collect();
                    action = match words[..] {
                        [name] => Some((name.to_string(), None)),
                        [name, acting, acted] => Some((name.to_string(), Some((acting.to_string(), acted.to_string())))),
                        _ => return Err(format_err(line, "`action` expects NAME or NAME ACTING ACTED")),
                    };
                }
                "rho" => {
                    let (g, value) = head(rest);
                    rho.insert(g.to_string(), value.to_string());
                }
                "degree" => c.degree = number(line, key, rest)?,
                "coeff" => c.coeff = number(line, key, rest)?,
                "seed" => c.seed = number(line, key, rest)?,
                "instances" => c.instances = number(line, key, rest)?,
                "flavor" => {
                    if !flavors_set {
                        c.flavors.clear();
                        flavors_set = true;
                    }
                    for w in rest.split_whitespace() {
                        c.flavors.push(parse_flavor(line, w)?);
                    }
                }
                "suite" => {
                    for s in rest.split_whitespace() {
                        if !SUITES.contains(&s) {
                            return Err(format_err(line, format!("unknown suite `{s}`")));
                        }
                        c.suites.push(s.to_string());
                    }
                }
                "cap" => {
                    let (which, value) = head(rest);
                    match which {
                        "max_degree" => c.caps.max_degree = number(line, "cap max_degree", value)?,
                        "max_basis" => c.caps.max_basis = number(line, "cap max_basis", value)?,
                        _ => return Err(format_err(line, format!("unknown cap `{which}`"))),
                    }
                }
                k if extra.contains(&k) => passed.push((line, content.to_string())),
                other => return Err(format_err(line, format!("unknown field `{other}`"))),
            }
        }
        if require_version && !version_seen {
            return Err(Error::Format("missing `version` line".into()));
        }
        c.group = match (group_name, custom) {
            (None, None) => GroupChoice::Builtins,
            (Some(n), None) => GroupChoice::Builtin(n),
            (Some(n), Some(mut d)) => {
                d.name = n;
                GroupChoice::Custom(d)
            }
            (None, Some(_)) => return Err(Error::Format("group structure lines need a `group NAME` line".into())),
        };
        c.action = match action {
            None if rho.is_empty() => ActionChoice::Builtins,
            None => return Err(Error::Format("`rho` lines need an `action NAME ACTING ACTED` line".into())),
            Some((name, None)) => ActionChoice::Builtin(name),
            Some((name, Some((acting, acted)))) => ActionChoice::Custom { name, acting, acted, rho },
        };
        Ok((c, passed))
    }

    pub fn parse(text: &str) -> Result<Config> {
        Ok(Self::parse_with(text, true, &[])?.0)
    }

    /// Canonical text; `parse(render(c)) == c`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("version {VERSION}"));
        line(format!("ring {}", self.ring));
        line(format!("vars {}", self.vars.join(" ")));
        for r in &self.rels {
            line(format!("rel {r}"));
        }
        for (a, b) in &self.inverses {
            line(format!("inverse {a} {b}"));
        }
        match &self.group {
            GroupChoice::Builtins => {}
            GroupChoice::Builtin(n) => line(format!("group {n}")),
            GroupChoice::Custom(d) => {
                line(format!("group {}", d.name));
                line(format!("gen {}", d.gens.join(" ")));
                for r in &d.rels {
                    line(format!("grel {r}"));
                }
                for (a, b) in &d.inverses {
                    line(format!("ginverse {a} {b}"));
                }
                for (key, map) in [("counit", &d.counit), ("comul", &d.comul), ("antipode", &d.antipode)] {
                    for (g, v) in map {
                        line(format!("{key} {g} {v}"));
                    }
                }
            }
        }
        match &self.action {
            ActionChoice::Builtins => {}
            ActionChoice::Builtin(n) => line(format!("action {n}")),
            ActionChoice::Custom { name, acting, acted, rho } => {
                line(format!("action {name} {acting} {acted}"));
                for (g, v) in rho {
                    line(format!("rho {g} {v}"));
                }
            }
        }
        line(format!("degree {}", self.degree));
        line(format!("coeff {}", self.coeff));
        line(format!("seed {}", self.seed));
        line(format!("instances {}", self.instances));
        let flavors: Vec<String> = self.flavors.iter().map(|f| f.to_string()).collect();
        line(format!("flavor {}", flavors.join(" ")));
        for s in &self.suites {
            line(format!("suite {s}"));
        }
        line(format!("cap max_degree {}", self.caps.max_degree));
        line(format!("cap max_basis {}", self.caps.max_basis));
        out
    }

    pub fn base(&self) -> Result<BaseRing> {
        parse_base(&self.ring)
    }

    pub fn algebra(&self) -> Result<AlgebraRef> {
        let rels: Vec<&str> = self.rels.iter().map(String::as_str).collect();
        let pairs: Vec<(&str, &str)> = self.inverses.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        AlgebraPresentation::new(self.base()?, self.vars.iter().cloned(), &rels, &pairs)
    }

    /// The configured group, if any. Its axioms are left to the suites.
    pub fn group(&self) -> Result<Option<HopfRef>> {
        let base = self.base()?;
        match &self.group {
            GroupChoice::Builtins => Ok(None),
            GroupChoice::Builtin(n) => builtin_group(n, base).map(Some),
            GroupChoice::Custom(d) => custom_group(d, base, false).map(Some),
        }
    }

    /// A group by name: the custom one or a builtin.
    pub fn named_group(&self, name: &str) -> Result<HopfRef> {
        if let GroupChoice::Custom(d) = &self.group {
            if d.name == name {
                return custom_group(d, self.base()?, true);
            }
        }
        if BUILTIN_GROUPS.contains(&name) {
            return builtin_group(name, self.base()?);
        }
        Err(Error::Lookup(format!("no group named `{name}`")))
    }

    pub fn action(&self) -> Result<Option<CoactionRef>> {
        match &self.action {
            ActionChoice::Builtins => Ok(None),
            ActionChoice::Builtin(n) => builtin_action(n, self.base()?).map(Some),
            ActionChoice::Custom { name, acting, acted, rho } => {
                let acting = self.named_group(acting)?;
                let acted = self.named_group(acted)?;
                let images = acted
                    .algebra()
                    .generators()
                    .iter()
                    .map(|g| {
                        rho.get(g)
                            .map(String::as_str)
                            .ok_or_else(|| Error::Format(format!("`rho` is missing generator `{g}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Coaction::new(name, &acting, &acted, &images).map(Some)
            }
        }
    }

    pub fn settings(&self) -> Result<Settings> {
        let mut s = Settings::new(&self.algebra()?);
        s.group = self.group()?;
        s.action = self.action()?;
        s.max_degree = self.degree;
        s.coeff_degree = self.coeff;
        s.seed = self.seed;
        s.instances = self.instances;
        s.flavors = self.flavors.clone();
        s.caps = self.caps;
        Ok(s)
    }

    pub fn suite_names(&self) -> Vec<String> {
        if self.suites.is_empty() {
            SUITES.iter().map(|s| s.to_string()).collect()
        } else {
            self.suites.clone()
        }
    }

    /// One-line description used in report headers.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{}[{}]", self.ring, self.vars.join(","));
        if !self.rels.is_empty() {
            let _ = write!(s, "/({})", self.rels.join(", "));
        }
        s
    }
}

/// With `check` off a broken structure is built anyway, so that the
/// `hopf-axioms` suite can report it.
fn custom_group(d: &GroupDef, base: BaseRing, check: bool) -> Result<HopfRef> {
    let lookup = |key: &str, map: &BTreeMap<String, String>| -> Result<Vec<String>> {
        if let Some(extra) = map.keys().find(|g| !d.gens.contains(g)) {
            return Err(Error::Format(format!("`{key}` names unknown generator `{extra}`")));
        }
        d.gens
            .iter()
            .map(|g| map.get(g).cloned().ok_or_else(|| Error::Format(format!("`{key}` is missing generator `{g}`"))))
            .collect()
    };
    let counit = lookup("counit", &d.counit)?;
    let comul = lookup("comul", &d.comul)?;
    let antipode = lookup("antipode", &d.antipode)?;
    fn strs(v: &[String]) -> Vec<&str> {
        v.iter().map(String::as_str).collect()
    }
    let gens = strs(&d.gens);
    let rels = strs(&d.rels);
    let pairs: Vec<(&str, &str)> = d.inverses.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let spec = HopfSpec {
        name: &d.name,
        base,
        generators: &gens,
        relations: &rels,
        inverse_pairs: &pairs,
        comult: &strs(&comul),
        counit: &strs(&counit),
        antipode: &strs(&antipode),
    };
    HopfAlgebra::from_spec(&spec, check)
}
