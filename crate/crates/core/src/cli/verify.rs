//! Property suites run by `verify`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::groves::{
    asm_triangle, check_grove, enumerate_bruteforce, enumerate_local_moves, from_simplified, grove_from_monomial,
    is_acyclic, monomial_sum, to_simplified, Grove, GroveError, Window,
};
use crate::lattice::{InitialConditions, Preset};
use crate::laurent::{LaurentPoly, VarKey};
use crate::recurrence::{f_symbolic, f_via_substitution, octahedron_check, RecurrenceMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    MainTheorem,
    Oracle,
    Substitution,
    Roundtrip,
    Injectivity,
    Degrees,
    Triineq,
    Abc,
    Coeffone,
    Acyclic,
    Simplified,
    Octahedron,
    CutoffIndependence,
    Counting,
    Asm,
}

impl Property {
    pub const ALL: [Property; 15] = [
        Property::MainTheorem,
        Property::Oracle,
        Property::Substitution,
        Property::Roundtrip,
        Property::Injectivity,
        Property::Degrees,
        Property::Triineq,
        Property::Abc,
        Property::Coeffone,
        Property::Acyclic,
        Property::Simplified,
        Property::Octahedron,
        Property::CutoffIndependence,
        Property::Counting,
        Property::Asm,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Property::MainTheorem => "main-theorem",
            Property::Oracle => "oracle",
            Property::Substitution => "substitution",
            Property::Roundtrip => "roundtrip",
            Property::Injectivity => "injectivity",
            Property::Degrees => "degrees",
            Property::Triineq => "triineq",
            Property::Abc => "abc",
            Property::Coeffone => "coeffone",
            Property::Acyclic => "acyclic",
            Property::Simplified => "simplified",
            Property::Octahedron => "octahedron",
            Property::CutoffIndependence => "cutoff-independence",
            Property::Counting => "counting",
            Property::Asm => "asm",
        }
    }

    pub fn from_name(s: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == s)
    }

    /// Parses a comma-separated list; `all` selects every property.
    pub fn parse_list(s: &str) -> Result<Vec<Property>, String> {
        let mut out = BTreeSet::new();
        for name in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if name == "all" {
                out.extend(Property::ALL);
            } else {
                out.insert(Property::from_name(name).ok_or_else(|| format!("unknown property `{name}`"))?);
            }
        }
        Ok(out.into_iter().collect())
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub property: Property,
    pub status: Status,
}

impl CheckResult {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }

    pub fn to_json(&self) -> Value {
        let (status, witness) = match &self.status {
            Status::Pass => ("pass", Value::Null),
            Status::Fail(w) => ("fail", json!(w)),
            Status::Skipped(w) => ("skipped", json!(w)),
        };
        json!({"property": self.property.name(), "status": status, "witness": witness})
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Cutoff for the brute-force oracle; the minimal cutoff when `None`.
    pub cutoff: Option<i32>,
    pub brute_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            cutoff: None,
            brute_cap: crate::groves::DEFAULT_BRUTE_CAP,
        }
    }
}

fn first_difference(a: &LaurentPoly, b: &LaurentPoly) -> String {
    let diff = a - b;
    let first = diff.monomials().next().map(|m| format!("difference has term {m}"));
    first.unwrap_or_else(|| "equal".into())
}

/// Runs the selected properties against one set of initial conditions.
pub fn run_checks(ic: &InitialConditions, props: &[Property], opts: &VerifyOptions) -> Vec<CheckResult> {
    let ic = Arc::new(ic.clone());
    let mut ctx = Context {
        ic,
        opts: opts.clone(),
        groves: None,
        f: None,
    };
    props
        .iter()
        .map(|&property| {
            let status = match ctx.run(property) {
                Ok(None) => Status::Pass,
                Ok(Some(reason)) => Status::Skipped(reason),
                Err(w) => Status::Fail(w),
            };
            CheckResult { property, status }
        })
        .collect()
}

struct Context {
    ic: Arc<InitialConditions>,
    opts: VerifyOptions,
    groves: Option<Result<BTreeSet<Grove>, GroveError>>,
    f: Option<Result<LaurentPoly, String>>,
}

impl Context {
    fn groves(&mut self) -> Result<&BTreeSet<Grove>, String> {
        let ic = &self.ic;
        self.groves
            .get_or_insert_with(|| enumerate_local_moves(ic))
            .as_ref()
            .map_err(|e| e.to_string())
    }

    fn f(&mut self) -> Result<LaurentPoly, String> {
        let ic = &self.ic;
        self.f
            .get_or_insert_with(|| f_symbolic(ic, &RecurrenceMode::EdgeVars).map_err(|e| e.to_string()))
            .clone()
    }

    fn window(&self, cutoff: i32) -> Result<Window, String> {
        Window::new(&self.ic, cutoff).map_err(|e| e.to_string())
    }

    /// `Ok(None)` on success, `Ok(Some(reason))` when not applicable.
    fn run(&mut self, p: Property) -> Result<Option<String>, String> {
        let n = self.ic.min_cutoff();
        match p {
            Property::MainTheorem => {
                let f = self.f()?;
                let sum = monomial_sum(self.groves()?);
                if sum != f {
                    return Err(first_difference(&sum, &f));
                }
            }
            Property::Oracle => {
                let cutoff = self.opts.cutoff.unwrap_or(n);
                let brute = match enumerate_bruteforce(&self.ic, cutoff, self.opts.brute_cap) {
                    Err(GroveError::TooLarge { free, cap }) => {
                        return Ok(Some(format!("{free} free rhombi exceed cap {cap}")))
                    }
                    other => other.map_err(|e| e.to_string())?,
                };
                let local = self.groves()?;
                if let Some(g) = brute.symmetric_difference(local).next() {
                    return Err(format!("methods disagree on {}", g.to_json_line()));
                }
            }
            Property::Substitution => {
                let f = self.f()?;
                let s = f_via_substitution(&self.ic, &RecurrenceMode::EdgeVars).map_err(|e| e.to_string())?;
                if s != f {
                    return Err(first_difference(&s, &f));
                }
            }
            Property::Roundtrip => {
                let ic = Arc::clone(&self.ic);
                for g in self.groves()? {
                    match grove_from_monomial(Arc::clone(&ic), &g.monomial()) {
                        Ok(h) if &h == g => {}
                        _ => return Err(g.to_json_line()),
                    }
                }
            }
            Property::Injectivity => {
                let f = self.f()?;
                if let Some((e, c)) = f.terms().find(|(_, c)| **c != 1.into()) {
                    return Err(format!("coefficient {c} on {e}"));
                }
                let mut seen = HashSet::new();
                for g in self.groves()? {
                    if !seen.insert(g.stats().degree) {
                        return Err(g.to_json_line());
                    }
                }
            }
            Property::Degrees => {
                let window = self.window(n)?;
                for g in self.groves()? {
                    let degrees = window.degrees(g.long_edges());
                    if let Some((q, d)) = degrees.iter().find(|(_, d)| !(1..=6).contains(*d)) {
                        return Err(format!("degree {d} at {q} in {}", g.to_json_line()));
                    }
                }
                let f = self.f()?;
                for (e, _) in f.terms() {
                    if let Some((v, k)) = e.iter().find(|(v, k)| v.is_x() && !(-1..=4).contains(k)) {
                        return Err(format!("exponent {k} on {v}"));
                    }
                }
            }
            Property::Triineq => {
                for g in self.groves()? {
                    if !g.stats().triangle_inequality_holds() {
                        return Err(g.to_json_line());
                    }
                }
            }
            Property::Abc => {
                f_symbolic(&self.ic, &RecurrenceMode::AlphaBetaGamma).map_err(|e| e.to_string())?;
            }
            Property::Coeffone => {
                let window = self.window(n)?;
                for g in self.groves()? {
                    for (r, s) in window.coeffone_sums(g.long_edges()) {
                        let want = if g.long_edges().contains(&r) { -1 } else { 0 };
                        if s != want {
                            return Err(format!("sum {s} for {r} in {}", g.to_json_line()));
                        }
                    }
                }
            }
            Property::Acyclic => {
                for g in self.groves()? {
                    if !is_acyclic(g, n).map_err(|e| e.to_string())? {
                        return Err(g.to_json_line());
                    }
                }
            }
            Property::Simplified => {
                let odd = self.ic.min_odd_cutoff();
                let want = ((3 * odd + 5) / 2) as usize;
                for g in self.groves()? {
                    let s = to_simplified(g, odd).map_err(|e| e.to_string())?;
                    let back = from_simplified(&s).map_err(|e| e.to_string())?;
                    if &back != g {
                        return Err(format!("roundtrip changed {}", g.to_json_line()));
                    }
                    if let Err(v) = s.check() {
                        return Err(format!("{v} in {}", g.to_json_line()));
                    }
                    if s.component_count() != want {
                        return Err(format!("{} components in {}", s.component_count(), g.to_json_line()));
                    }
                }
            }
            Property::Octahedron => {
                let rep = octahedron_check(&self.ic).map_err(|e| e.to_string())?;
                if !rep.equal {
                    return Err(first_difference(&rep.shift_octa, &rep.g_transform));
                }
                let filtered: LaurentPoly = self
                    .groves()?
                    .iter()
                    .filter(|g| {
                        let st = g.stats();
                        st.n_a + st.n_b == st.n_c
                    })
                    .map(|g| LaurentPoly::from(g.monomial()))
                    .sum::<LaurentPoly>()
                    .map_exponents(|e| e.filter(|v: VarKey| !v.is_edge()));
                if filtered != rep.shift_octa {
                    return Err(first_difference(&filtered, &rep.shift_octa));
                }
            }
            Property::CutoffIndependence => {
                let windows = [self.window(n)?, self.window(n + 1)?, self.window(n + 2)?];
                for g in self.groves()? {
                    let m = windows[0].monomial_of(g.long_edges());
                    for w in &windows {
                        if let Err(v) = w.check(g.long_edges()) {
                            return Err(format!("N = {}: {v}", w.cutoff()));
                        }
                        if w.monomial_of(g.long_edges()) != m {
                            return Err(format!("monomial changes at N = {}", w.cutoff()));
                        }
                    }
                    if check_grove(g, n).is_err() {
                        return Err(g.to_json_line());
                    }
                }
            }
            Property::Counting => {
                for cutoff in n..=n + 4 {
                    let m = cutoff as usize;
                    let points = self.ic.points_in_j(cutoff).map_err(|e| e.to_string())?.len();
                    let rhombi = self.ic.rhombi_in_j(cutoff).map_err(|e| e.to_string())?.len();
                    let want_points = 3 * (m + 3) * (m + 2) / 2 + 1;
                    let want_rhombi = 3 * (m + 2) * (m + 1) / 2;
                    if (points, rhombi) != (want_points, want_rhombi) {
                        return Err(format!("N = {cutoff}: {points} points, {rhombi} rhombi"));
                    }
                }
            }
            Property::Asm => {
                let standard = Preset::standard((n + 1) as u32).build().map_err(|e| e.to_string())?;
                if *self.ic != standard {
                    return Ok(Some("initial conditions are not standard".into()));
                }
                for g in self.groves()? {
                    let t = asm_triangle(g).map_err(|e| e.to_string())?;
                    if t.iter().flatten().any(|v| !(-1..=1).contains(v)) {
                        return Err(format!("{t:?}"));
                    }
                }
            }
        }
        Ok(None)
    }
}
