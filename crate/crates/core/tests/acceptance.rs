//! Acceptance criteria 1-11, one line per criterion.
//!
//! Runs without the libtest harness so the report is always printed:
//! `cargo test --test acceptance`.

use std::cell::Cell;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Debug;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use cube_recurrence::groves::{
    enumerate_bruteforce, enumerate_local_moves, from_simplified, is_acyclic, monomial_sum, to_simplified, Grove,
    Window, DEFAULT_BRUTE_CAP,
};
use cube_recurrence::lattice::{InitialConditions, Point3, Preset, Rhombus};
use cube_recurrence::laurent::{LaurentPoly, VarKey};
use cube_recurrence::recurrence::{
    f_numeric, f_symbolic, f_via_substitution, octahedron_check, Assignment, RecurrenceMode,
};
use cube_recurrence::sequences::{gr_certificate, gr_symbolic_direct, gr_terms, GaleRobinsonSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

thread_local! {
    static REMAINDERS: Cell<usize> = const { Cell::new(0) };
}

/// Unwraps a library result, counting any inexact division seen on the way.
fn ok<T, E: Debug>(r: Result<T, E>, what: &str) -> Result<T, String> {
    r.map_err(|e| {
        let text = format!("{e:?}");
        if text.contains("NonzeroRemainder") {
            REMAINDERS.with(|c| c.set(c.get() + 1));
        }
        format!("{what}: {text}")
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(p: Preset) -> Result<Arc<InitialConditions>, String> {
    Ok(Arc::new(ok(p.build(), "build")?))
}

fn groves_of(ic: &Arc<InitialConditions>) -> Result<BTreeSet<Grove>, String> {
    ok(enumerate_local_moves(ic), "enumerate_local_moves")
}

fn binomial2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// `f(0,0,0)` with every variable 1, by memoized recursion on the cube
/// recurrence. Points outside `U` are initial or lower and carry value 1.
fn all_ones_oracle(ic: &InitialConditions) -> BigRational {
    fn go(ic: &InitialConditions, p: Point3, memo: &mut HashMap<Point3, BigRational>) -> BigRational {
        if !ic.in_upper(p) {
            return BigRational::one();
        }
        if let Some(v) = memo.get(&p) {
            return v.clone();
        }
        let mut at = |di: i32, dj: i32, dk: i32| go(ic, p.offset(-di, -dj, -dk), memo);
        let num = at(1, 0, 0) * at(0, 1, 1) + at(0, 1, 0) * at(1, 0, 1) + at(0, 0, 1) * at(1, 1, 0);
        let v = num / at(1, 1, 1);
        memo.insert(p, v.clone());
        v
    }
    go(ic, Point3::ORIGIN, &mut HashMap::new())
}

/// Gale-Robinson terms with all ones, recomputed with plain big integers.
fn gale_robinson_oracle(p: usize, q: usize, r: usize, count: usize) -> Vec<Option<BigInt>> {
    let n = p + q + r;
    let mut y: Vec<BigInt> = vec![BigInt::one(); n];
    let mut out: Vec<Option<BigInt>> = y.iter().cloned().map(Some).collect();
    while out.len() < count {
        let l = y.len() - n;
        let num = &y[l + p] * &y[l + n - p] + &y[l + q] * &y[l + n - q] + &y[l + r] * &y[l + n - r];
        let exact = (&num % &y[l]).is_zero();
        let v = num / &y[l];
        out.push(exact.then(|| v.clone()));
        y.push(v);
    }
    out.truncate(count);
    out
}

/// The upward closure inside `C(0,0,0)` of a random subset of the box
/// `[-depth, 0]^3`, each point kept with probability `keep`.
fn random_upper_set(rng: &mut ChaCha8Rng, depth: i32, keep: f64) -> BTreeSet<Point3> {
    let mut u = BTreeSet::new();
    for gi in -depth..=0 {
        for gj in -depth..=0 {
            for gk in -depth..=0 {
                if !rng.gen_bool(keep) {
                    continue;
                }
                for i in gi..=0 {
                    for j in gj..=0 {
                        for k in gk..=0 {
                            u.insert(Point3::new(i, j, k));
                        }
                    }
                }
            }
        }
    }
    u
}

/// A forest has exactly `|V| - components` edges.
fn is_forest(window: &Window, long: &BTreeSet<Rhombus>) -> bool {
    let edges = window.edges(long);
    let mut adj: HashMap<Point3, Vec<Point3>> = HashMap::new();
    for e in &edges {
        adj.entry(e.0).or_default().push(e.1);
        adj.entry(e.1).or_default().push(e.0);
    }
    let mut seen = HashSet::new();
    let mut components = 0;
    for &start in window.points() {
        if !seen.insert(start) {
            continue;
        }
        components += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in adj.get(&v).into_iter().flatten() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    edges.len() == window.points().len() - components
}

/// Initial conditions exercised by criteria 2 and 3, with their groves.
struct Corpus {
    cases: Vec<(String, Arc<InitialConditions>, BTreeSet<Grove>)>,
}

fn criterion_1(_: &mut Corpus) -> Result<String, String> {
    let want = [3u64, 9, 81, 729, 19683];
    let mut got = Vec::new();
    for (n, w) in (2..=6u32).zip(want) {
        let ic = build(Preset::standard(n))?;
        let v = ok(f_numeric(&ic, &Assignment::all_ones()), "f_numeric")?;
        let formula = BigInt::from(3u32).pow(n * n / 4);
        ensure(formula == BigInt::from(w), || {
            format!("formula gives {formula} at n = {n}")
        })?;
        ensure(v == BigRational::from_integer(formula.clone()), || {
            format!("n = {n}: {v}, want {formula}")
        })?;
        let oracle = all_ones_oracle(&ic);
        ensure(oracle == v, || format!("n = {n}: recursion oracle {oracle}, got {v}"))?;
        got.push(v.to_string());
    }
    Ok(got.join(", "))
}

fn criterion_2(corpus: &mut Corpus) -> Result<String, String> {
    let mut cases: Vec<(String, InitialConditions)> = vec![
        ("empty".into(), ok(Preset::explicit([]).build(), "build")?),
        ("{0}".into(), ok(Preset::explicit([Point3::ORIGIN]).build(), "build")?),
        ("standard(2)".into(), ok(Preset::standard(2).build(), "build")?),
        ("standard(3)".into(), ok(Preset::standard(3).build(), "build")?),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut draws = 0;
    let mut distinct = BTreeSet::new();
    while draws < 12 {
        let u = random_upper_set(&mut rng, 1, 0.3);
        let ic = ok(InitialConditions::new(u.clone()), "random ic")?;
        if ic.min_cutoff() > 2 {
            continue;
        }
        draws += 1;
        distinct.insert(u.clone());
        cases.push((format!("random {u:?}"), ic));
    }
    for (name, ic) in cases {
        let ic = Arc::new(ic);
        let cutoff = ic.min_cutoff();
        let brute = ok(enumerate_bruteforce(&ic, cutoff, DEFAULT_BRUTE_CAP), "brute force")?;
        let local = groves_of(&ic)?;
        ensure(brute == local, || {
            format!("{name}: {} brute vs {} local", brute.len(), local.len())
        })?;
        let sum = monomial_sum(&local);
        let f = ok(f_symbolic(&ic, &RecurrenceMode::EdgeVars), "f_symbolic")?;
        let subst = ok(f_via_substitution(&ic, &RecurrenceMode::EdgeVars), "f_via_substitution")?;
        ensure(sum == f, || format!("{name}: grove sum differs from f"))?;
        ensure(subst == f, || format!("{name}: substitution differs from f"))?;
        corpus.cases.push((name, ic, local));
    }
    Ok(format!("{draws} random draws, {} distinct upper sets", distinct.len()))
}

fn criterion_3(corpus: &mut Corpus) -> Result<String, String> {
    let presets = (1..=5).map(|n| (format!("standard({n})"), Preset::standard(n))).chain([
        ("kleber(2,2,2)".to_string(), Preset::kleber(2, 2, 2)),
        ("kleber(2,3,2)".to_string(), Preset::kleber(2, 3, 2)),
    ]);
    let mut sizes = Vec::new();
    for (name, preset) in presets {
        let ic = build(preset)?;
        let f = ok(f_symbolic(&ic, &RecurrenceMode::EdgeVars), "f_symbolic")?;
        ensure(f.terms().all(|(_, c)| c.is_one()), || {
            format!("{name}: coefficient other than 1")
        })?;
        let groves = groves_of(&ic)?;
        let tables: HashSet<_> = groves.iter().map(|g| g.stats().degree).collect();
        ensure(tables.len() == groves.len(), || {
            format!("{name}: repeated degree table")
        })?;
        ensure(f.len() == groves.len(), || {
            format!("{name}: {} terms, {} groves", f.len(), groves.len())
        })?;
        sizes.push(format!("{name}:{}", groves.len()));
        corpus.cases.push((name, ic, groves));
    }
    Ok(sizes.join(" "))
}

fn criterion_4(corpus: &mut Corpus) -> Result<String, String> {
    let mut groves = 0;
    for (name, ic, gs) in &corpus.cases {
        let f = ok(f_symbolic(ic, &RecurrenceMode::EdgeVars), "f_symbolic")?;
        for (e, _) in f.terms() {
            if let Some((v, k)) = e.iter().find(|(v, k)| v.is_x() && !(-1..=4).contains(k)) {
                return Err(format!("{name}: exponent {k} on {v}"));
            }
        }
        for g in gs {
            groves += 1;
            if let Some((p, d)) = g.stats().degree.iter().find(|(_, d)| !(1..=6).contains(*d)) {
                return Err(format!("{name}: degree {d} at {p}"));
            }
        }
    }
    Ok(format!("{groves} groves"))
}

fn criterion_5(corpus: &mut Corpus) -> Result<String, String> {
    for (name, ic, gs) in &corpus.cases {
        for g in gs {
            let s = g.stats();
            let (a, b, c) = (s.n_a as i64, s.n_b as i64, s.n_c as i64);
            for v in [a + b - c, b + c - a, c + a - b] {
                ensure(v >= 0 && v % 2 == 0, || format!("{name}: ({a},{b},{c})"))?;
            }
        }
        ok(f_symbolic(ic, &RecurrenceMode::AlphaBetaGamma), "alpha-beta-gamma")?;
    }
    Ok(format!("{} initial conditions", corpus.cases.len()))
}

fn criterion_6(corpus: &mut Corpus) -> Result<String, String> {
    for (name, ic, gs) in &corpus.cases {
        let n = ic.min_cutoff();
        let window = ok(Window::new(ic, n), "window")?;
        for g in gs {
            ensure(ok(is_acyclic(g, n), "is_acyclic")?, || format!("{name}: cycle"))?;
            ensure(is_forest(&window, g.long_edges()), || {
                format!("{name}: edge count says cycle")
            })?;
        }
    }
    Ok("every grove is a forest".into())
}

fn criterion_7(_: &mut Corpus) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ics = vec![InitialConditions::full_cone()];
    while ics.len() < 12 {
        let ic = ok(InitialConditions::new(random_upper_set(&mut rng, 3, 0.05)), "random ic")?;
        if ic.min_cutoff() <= 4 {
            ics.push(ic);
        }
    }
    let mut checked = 0;
    for ic in &ics {
        for n in 0..=8 {
            if n < ic.min_cutoff() {
                ensure(ic.points_in_j(n).is_err(), || {
                    format!("{n} accepted below the minimal cutoff")
                })?;
                continue;
            }
            let m = n as usize;
            let points = ok(ic.points_in_j(n), "points")?.len();
            let rhombi = ok(ic.rhombi_in_j(n), "rhombi")?.len();
            ensure(points == 3 * binomial2(m + 3) + 1, || {
                format!("N = {n}: {points} points")
            })?;
            ensure(rhombi == 3 * binomial2(m + 2), || format!("N = {n}: {rhombi} rhombi"))?;
            checked += 1;
        }
    }
    Ok(format!("{} ics, {checked} (ic, N) pairs", ics.len()))
}

fn criterion_8(_: &mut Corpus) -> Result<String, String> {
    let ic = build(Preset::standard(4))?;
    let groves = groves_of(&ic)?;
    for g in &groves {
        let s = ok(to_simplified(g, 3), "to_simplified")?;
        let back = ok(from_simplified(&s), "from_simplified")?;
        ensure(&back == g, || format!("roundtrip changed {}", g.to_json_line()))?;
        ensure(s.component_count() == 7, || {
            format!("{} components", s.component_count())
        })?;
    }
    Ok(format!("{} groves", groves.len()))
}

fn criterion_9(_: &mut Corpus) -> Result<String, String> {
    for (spec, (p, q, r)) in [
        (GaleRobinsonSpec::somos6(), (1, 2, 3)),
        (GaleRobinsonSpec::somos7(), (4, 1, 2)),
    ] {
        let terms = ok(gr_terms(&spec, 15), "gr_terms")?;
        let oracle = gale_robinson_oracle(p, q, r, 15);
        for (t, o) in terms.iter().zip(&oracle) {
            let o = o
                .as_ref()
                .ok_or_else(|| format!("oracle: y({}) not integral", t.index))?;
            ensure(t.integral && t.value == BigRational::from_integer(o.clone()), || {
                format!("({p},{q},{r}) y({}) = {}, oracle {o}", t.index, t.value)
            })?;
        }
        for l in 0..=9 {
            let y = ok(gr_symbolic_direct(p as u32, q as u32, r as u32, l), "symbolic")?;
            let only_abc_y = y
                .variables()
                .iter()
                .all(|v| matches!(v, VarKey::Alpha | VarKey::Beta | VarKey::Gamma | VarKey::Y(_)));
            ensure(only_abc_y, || format!("({p},{q},{r}) y({l}) has stray variables"))?;
            let nonnegative_abc = y.terms().all(|(e, c)| {
                c.is_positive()
                    && [VarKey::Alpha, VarKey::Beta, VarKey::Gamma]
                        .iter()
                        .all(|&v| e.get(v) >= 0)
            });
            ensure(nonnegative_abc, || {
                format!("({p},{q},{r}) y({l}) not in Z>=0[alpha,beta,gamma]")
            })?;
        }
    }
    let oracle = gale_robinson_oracle(4, 1, 2, 12);
    let mut counts = Vec::new();
    for l in 7..=11u32 {
        let c = ok(gr_certificate(4, 1, 2, l, 200), "certificate")?;
        let want = oracle[l as usize].clone().expect("integral");
        ensure(BigInt::from(c.grove_count) == want, || {
            format!("l = {l}: {} groves, y = {want}", c.grove_count)
        })?;
        ensure(c.holds(), || format!("l = {l}: certificate fails"))?;
        counts.push(c.grove_count.to_string());
    }
    ensure(counts.last().map(String::as_str) == Some("41"), || "y(11) != 41".into())?;
    Ok(format!("Somos-7 groves l=7..11: {}", counts.join(", ")))
}

fn criterion_10(_: &mut Corpus) -> Result<String, String> {
    for n in 1..=4 {
        let ic = build(Preset::standard(n))?;
        let shift = ok(f_symbolic(&ic, &RecurrenceMode::ShiftOcta), "shift-octa")?;
        let rep = ok(octahedron_check(&ic), "octahedron")?;
        ensure(rep.g_transform == shift, || {
            format!("standard({n}): g-transform differs")
        })?;
        let filtered: LaurentPoly = groves_of(&ic)?
            .iter()
            .filter(|g| {
                let s = g.stats();
                s.n_a + s.n_b == s.n_c
            })
            .map(|g| LaurentPoly::from(g.monomial()).map_exponents(|e| e.filter(|v| v.is_x())))
            .sum();
        ensure(filtered == shift, || {
            format!("standard({n}): filtered grove sum differs")
        })?;
    }
    Ok("standard(1..4)".into())
}

fn criterion_11(_: &mut Corpus) -> Result<String, String> {
    let seen = REMAINDERS.with(Cell::get);
    ensure(seen == 0, || format!("{seen} inexact divisions"))?;
    Ok("no NonzeroRemainder in criteria 1-10".into())
}

type Criterion = fn(&mut Corpus) -> Result<String, String>;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 11] = [
        ("standard grove counts 3^floor(n^2/4)", criterion_1),
        ("brute force = local moves, grove sum = f", criterion_2),
        ("coefficients 1, degree tables distinct", criterion_3),
        ("exponent and degree bounds", criterion_4),
        ("triangle inequality and parity", criterion_5),
        ("groves are acyclic", criterion_6),
        ("window and rhombus counts", criterion_7),
        ("simplified grove bijection", criterion_8),
        ("Gale-Robinson integrality and certificates", criterion_9),
        ("octahedron specialization", criterion_10),
        ("Laurent divisions exact", criterion_11),
    ];
    let mut corpus = Corpus { cases: Vec::new() };
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check(&mut corpus);
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{secs:.2}s]", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} [{secs:.2}s]", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
