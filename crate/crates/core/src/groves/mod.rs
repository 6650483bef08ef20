//! Groves: the subgraphs of the rhombus graph whose monomials make up the
//! cube-recurrence polynomials.
//!
//! A grove is stored as its set of rhombi that use the long edge; every other
//! rhombus of the initial conditions uses its short edge.

mod enumerate;
mod simplified;
mod window;

pub use enumerate::{apply_local_move, enumerate_bruteforce, enumerate_local_moves, DEFAULT_BRUTE_CAP};
pub use simplified::{from_simplified, to_simplified, SimplifiedGrove};
pub use window::Window;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::lattice::{Axis, InitialConditions, LatticeError, Point3, Preset, Rhombus};
use crate::laurent::{LaurentPoly, Monomial};

/// The first grove axiom that fails, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroveViolation {
    #[error("{0} is not a rhombus of the initial conditions")]
    NotARhombus(Rhombus),
    #[error("{0} lies below the cutoff but uses its long edge")]
    NotCompact(Rhombus),
    #[error("boundary class split: {first} and {second} are in different components")]
    ClassSplit { first: Point3, second: Point3 },
    #[error("boundary classes of {first} and {second} share a component")]
    ClassesMerged { first: Point3, second: Point3 },
    #[error("the component of {0} contains no boundary class")]
    StrayComponent(Point3),
    #[error("cycle through {0:?}")]
    Cycle(Vec<Point3>),
    #[error("{0:?} is not the even edge of a rhombus in the window")]
    NotAnEvenEdge(crate::lattice::Edge),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroveError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("not a grove: {0}")]
    Violation(#[from] GroveViolation),
    #[error("all three rhombi at {0} use their long edge")]
    CorrespondenceMismatch(Point3),
    #[error("{free} free rhombi give more than {cap} configurations")]
    TooLarge { free: usize, cap: u64 },
    #[error("monomial {0} is not the monomial of a grove")]
    RoundTripMismatch(Monomial),
    #[error("simplified groves need an odd cutoff, got {0}")]
    CutoffNotOdd(i32),
    #[error("initial conditions are not standard")]
    NotStandard,
    #[error("malformed grove record: {0}")]
    BadRecord(String),
}

#[derive(Clone, Debug)]
pub struct Grove {
    ic: Arc<InitialConditions>,
    long_edges: BTreeSet<Rhombus>,
}

impl PartialEq for Grove {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Grove {}

impl PartialOrd for Grove {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Grove {
    fn cmp(&self, other: &Self) -> Ordering {
        self.long_edges
            .cmp(&other.long_edges)
            .then_with(|| self.ic.u_fin().cmp(other.ic.u_fin()))
    }
}

impl Grove {
    /// Wraps a long-edge set without checking it; see [`check_grove`].
    pub fn new(ic: Arc<InitialConditions>, long_edges: BTreeSet<Rhombus>) -> Self {
        Grove { ic, long_edges }
    }

    /// The grove with every rhombus short.
    pub fn base(ic: Arc<InitialConditions>) -> Self {
        Grove::new(ic, BTreeSet::new())
    }

    pub fn ic(&self) -> &Arc<InitialConditions> {
        &self.ic
    }

    pub fn long_edges(&self) -> &BTreeSet<Rhombus> {
        &self.long_edges
    }

    /// The window at the minimal cutoff.
    pub fn window(&self) -> Window {
        Window::new(&self.ic, self.ic.min_cutoff()).expect("minimal cutoff is a cutoff")
    }

    pub fn monomial(&self) -> Monomial {
        monomial_of(self)
    }

    pub fn stats(&self) -> GroveStats {
        stats(self)
    }

    /// One JSON line:
    /// `{"long_edges":[["a",-1,0,0],...],"n":[na,nb,nc],"degrees":{"(0,-1,0)":3,...}}`.
    /// Only degrees other than 2 are listed.
    pub fn to_json_line(&self) -> String {
        let st = self.stats();
        let long: Vec<Value> = self
            .long_edges
            .iter()
            .map(|r| json!([r.axis.letter(), r.top.i, r.top.j, r.top.k]))
            .collect();
        let degrees: serde_json::Map<String, Value> =
            st.degree.iter().map(|(p, d)| (p.to_string(), json!(d))).collect();
        json!({
            "long_edges": long,
            "n": [st.n_a, st.n_b, st.n_c],
            "degrees": degrees,
        })
        .to_string()
    }

    /// Reads the `long_edges` field of a line written by [`Grove::to_json_line`].
    pub fn from_json_line(ic: Arc<InitialConditions>, line: &str) -> Result<Self, GroveError> {
        let bad = |m: &str| GroveError::BadRecord(m.to_string());
        let v: Value = serde_json::from_str(line).map_err(|e| bad(&e.to_string()))?;
        let list = v["long_edges"].as_array().ok_or_else(|| bad("missing long_edges"))?;
        let mut long = BTreeSet::new();
        for item in list {
            let parsed = (|| {
                let a = item.as_array()?;
                let axis = Axis::from_letter(a.first()?.as_str()?)?;
                let c = |n: usize| a.get(n)?.as_i64().map(|x| x as i32);
                Some(Rhombus::new(axis, Point3::new(c(1)?, c(2)?, c(3)?)))
            })();
            long.insert(parsed.ok_or_else(|| bad(&item.to_string()))?);
        }
        Ok(Grove::new(ic, long))
    }
}

/// Long-edge counts per axis and the degrees that differ from 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroveStats {
    pub n_a: usize,
    pub n_b: usize,
    pub n_c: usize,
    pub degree: BTreeMap<Point3, u32>,
}

impl GroveStats {
    /// `[n_a+n_b-n_c, n_b+n_c-n_a, n_c+n_a-n_b]`.
    pub fn triangle_combinations(&self) -> [i64; 3] {
        let (a, b, c) = (self.n_a as i64, self.n_b as i64, self.n_c as i64);
        [a + b - c, b + c - a, c + a - b]
    }

    pub fn triangle_inequality_holds(&self) -> bool {
        self.triangle_combinations().iter().all(|&v| v >= 0 && v % 2 == 0)
    }
}

/// `m(G)`: the product of the long-edge variables and `x^(deg-2)` over all
/// initial points.
pub fn monomial_of(g: &Grove) -> Monomial {
    g.window().monomial_of(&g.long_edges)
}

/// The grove whose long edges carry the edge variables of `m`; fails unless
/// the grove's monomial is exactly `m`.
pub fn grove_from_monomial(ic: Arc<InitialConditions>, m: &Monomial) -> Result<Grove, GroveError> {
    let mismatch = || GroveError::RoundTripMismatch(m.clone());
    let mut long = BTreeSet::new();
    for (v, e) in m.exps.iter().filter(|(v, _)| v.is_edge()) {
        if e != 1 {
            return Err(mismatch());
        }
        long.insert(ic.variable_rhombus(v).map_err(|_| mismatch())?);
    }
    let g = Grove::new(ic, long);
    if &monomial_of(&g) == m {
        Ok(g)
    } else {
        Err(mismatch())
    }
}

/// Checks compactness and connectivity within radius `cutoff`.
pub fn check_grove(g: &Grove, cutoff: i32) -> Result<(), GroveError> {
    Window::new(&g.ic, cutoff)?.check(&g.long_edges)?;
    Ok(())
}

/// Whether the grove restricted to the window has no cycle. Outside the
/// window the grove consists of forced short edges forming disjoint paths.
pub fn is_acyclic(g: &Grove, cutoff: i32) -> Result<bool, GroveError> {
    Ok(Window::new(&g.ic, cutoff)?.is_acyclic(&g.long_edges))
}

pub fn stats(g: &Grove) -> GroveStats {
    let count = |axis: Axis| g.long_edges.iter().filter(|r| r.axis == axis).count();
    let degree = g
        .window()
        .degrees(&g.long_edges)
        .into_iter()
        .filter(|&(_, d)| d != 2)
        .collect();
    GroveStats {
        n_a: count(Axis::A),
        n_b: count(Axis::B),
        n_c: count(Axis::C),
        degree,
    }
}

/// For `r = r_a(i0,j0,k0)`: `sum (deg - 2)` over initial points with
/// `j < j0` and `k < k0` (and the analogues for `r_b`, `r_c`). Equals `-1`
/// when `r` is long and `0` otherwise.
pub fn coeffone_sum(g: &Grove, r: &Rhombus) -> Result<i64, GroveError> {
    if !g.ic.contains_rhombus(r) {
        return Err(GroveViolation::NotARhombus(*r).into());
    }
    Ok(g.window().coeffone_sum(&g.long_edges, r))
}

/// Sum of `m(G)` over a set of groves.
pub fn monomial_sum<'a>(groves: impl IntoIterator<Item = &'a Grove>) -> LaurentPoly {
    let mut window: Option<Window> = None;
    groves
        .into_iter()
        .map(|g| {
            let w = window.get_or_insert_with(|| g.window());
            LaurentPoly::from(w.monomial_of(&g.long_edges))
        })
        .sum()
}

/// Exponents `deg - 2` on the top layer `i+j+k = 1-n` of a standard grove
/// of order `n`. Row `r` (from 0) has `k = -r` and `n - r` entries ordered
/// by `j - i` ascending.
pub fn asm_triangle(g: &Grove) -> Result<Vec<Vec<i32>>, GroveError> {
    let n = g.ic.min_cutoff() + 1;
    if *g.ic.as_ref() != Preset::standard(n as u32).build()? {
        return Err(GroveError::NotStandard);
    }
    let deg = g.window().degrees(&g.long_edges);
    let s = 1 - n;
    let rows = (0..n)
        .map(|r| {
            let k = -r;
            (s - k..=0)
                .map(|j| {
                    let p = Point3::new(s - k - j, j, k);
                    deg[&p] as i32 - 2
                })
                .collect()
        })
        .collect();
    Ok(rows)
}
