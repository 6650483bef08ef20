use std::collections::BTreeSet;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use super::{Grove, GroveError, Window};
use crate::lattice::{Axis, InitialConditions, Point3, Rhombus};

/// Default bound on the number of long/short configurations the brute-force
/// enumerator may face.
pub const DEFAULT_BRUTE_CAP: u64 = 1 << 18;

/// Rewrites a grove for the initial conditions before `u` joins the upper
/// set into the groves after.
///
/// The rhombi `r_a(u)`, `r_b(u)`, `r_c(u)` disappear and
/// `r_a(u-(1,0,0))`, `r_b(u-(0,1,0))`, `r_c(u-(0,0,1))` appear, carrying the
/// same three edge variables. With `s` of the old rhombi short, `u` has
/// degree `s`:
///
/// - degree 3: three groves, each making two of the new rhombi long;
/// - degree 2: the new rhombus on the axis of the old long one is long;
/// - degree 1: all new rhombi short (three inputs share this output).
pub fn apply_local_move(u: Point3, long: &BTreeSet<Rhombus>) -> Result<Vec<BTreeSet<Rhombus>>, GroveError> {
    let old = Axis::ALL.map(|axis| Rhombus::new(axis, u));
    let new = [
        Rhombus::new(Axis::A, u.offset(-1, 0, 0)),
        Rhombus::new(Axis::B, u.offset(0, -1, 0)),
        Rhombus::new(Axis::C, u.offset(0, 0, -1)),
    ];
    let was_long = old.map(|r| long.contains(&r));
    let mut rest = long.clone();
    for r in &old {
        rest.remove(r);
    }
    let with = |add: &[Rhombus]| {
        let mut g = rest.clone();
        g.extend(add.iter().copied());
        g
    };
    match was_long.iter().filter(|&&l| l).count() {
        0 => Ok(vec![
            with(&[new[1], new[2]]),
            with(&[new[0], new[2]]),
            with(&[new[0], new[1]]),
        ]),
        1 => {
            let x = was_long.iter().position(|&l| l).expect("one long rhombus");
            Ok(vec![with(&[new[x]])])
        }
        2 => Ok(vec![rest]),
        _ => Err(GroveError::CorrespondenceMismatch(u)),
    }
}

/// All groves, grown from the base grove of the full cone by adding the
/// points of `U_fin` one at a time in reverse peel order.
pub fn enumerate_local_moves(ic: &Arc<InitialConditions>) -> Result<BTreeSet<Grove>, GroveError> {
    let mut current: BTreeSet<BTreeSet<Rhombus>> = BTreeSet::from([BTreeSet::new()]);
    for u in ic.peel_sequence().into_iter().rev() {
        let mut next = BTreeSet::new();
        for g in &current {
            next.extend(apply_local_move(u, g)?);
        }
        current = next;
    }
    Ok(current
        .into_iter()
        .map(|long| Grove::new(Arc::clone(ic), long))
        .collect())
}

/// Every choice of long/short edges on the rhombi of the window that passes
/// the grove check. Branches that close a cycle or join two boundary classes
/// are cut early.
pub fn enumerate_bruteforce(ic: &Arc<InitialConditions>, cutoff: i32, cap: u64) -> Result<BTreeSet<Grove>, GroveError> {
    let window = Window::new(ic, cutoff)?;
    let mut free: Vec<Rhombus> = window.rhombi().to_vec();
    let too_large = GroveError::TooLarge { free: free.len(), cap };
    if free.len() >= 64 || (1u64 << free.len()) > cap {
        return Err(too_large);
    }
    // Bottom layers first: class merges show up soonest there.
    free.sort_by_key(|r| (r.top.sum(), *r));

    let index = window.index();
    let mut label = vec![None; index.len()];
    for (c, class) in window.classes().iter().enumerate() {
        for p in class {
            label[index[p]] = Some(c);
        }
    }
    let mut search = Search {
        window: &window,
        free: &free,
        chosen: Vec::with_capacity(free.len()),
        found: BTreeSet::new(),
    };
    search.descend(UnionFind::new(index.len()), label);
    Ok(search
        .found
        .into_iter()
        .map(|long| Grove::new(Arc::clone(ic), long))
        .collect())
}

struct Search<'a> {
    window: &'a Window,
    free: &'a [Rhombus],
    chosen: Vec<bool>,
    found: BTreeSet<BTreeSet<Rhombus>>,
}

impl Search<'_> {
    fn descend(&mut self, uf: UnionFind<usize>, label: Vec<Option<usize>>) {
        let depth = self.chosen.len();
        if depth == self.free.len() {
            let long: BTreeSet<Rhombus> = self
                .free
                .iter()
                .zip(&self.chosen)
                .filter(|(_, &l)| l)
                .map(|(r, _)| *r)
                .collect();
            if self.window.check(&long).is_ok() {
                self.found.insert(long);
            }
            return;
        }
        let r = self.free[depth];
        for long in [false, true] {
            let e = r.edge(long);
            let (x, y) = (self.window.index()[&e.0], self.window.index()[&e.1]);
            let (rx, ry) = (uf.find(x), uf.find(y));
            if rx == ry {
                continue;
            }
            let merged = match (label[rx], label[ry]) {
                (Some(a), Some(b)) if a != b => continue,
                (a, b) => a.or(b),
            };
            let mut uf = uf.clone();
            let mut label = label.clone();
            uf.union(x, y);
            label[uf.find(x)] = merged;
            self.chosen.push(long);
            self.descend(uf, label);
            self.chosen.pop();
        }
    }
}
