use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use petgraph::unionfind::UnionFind;

use super::{GroveError, GroveViolation};
use crate::lattice::{Edge, InitialConditions, Point3, Rhombus};
use crate::laurent::{Exponents, Monomial, VarKey};

/// The finite window `J = {p in I : sum(p) >= -N-2}` for a fixed cutoff `N`.
///
/// Rhombi with top sum `>= -N` lie inside `J` and are free to use either
/// edge. Rhombi with top sum `-N-1` or `-N-2` are forced short by
/// compactness and only matter for the degrees of the bottom two layers.
#[derive(Clone, Debug)]
pub struct Window {
    cutoff: i32,
    points: Vec<Point3>,
    index: HashMap<Point3, usize>,
    free: Vec<Rhombus>,
    free_set: BTreeSet<Rhombus>,
    forced: Vec<Rhombus>,
    classes: Vec<Vec<Point3>>,
}

impl Window {
    pub fn new(ic: &InitialConditions, cutoff: i32) -> Result<Self, GroveError> {
        let points: Vec<Point3> = ic.points_in_j(cutoff)?.into_iter().collect();
        let index = points.iter().enumerate().map(|(n, &p)| (p, n)).collect();
        let free_set = ic.rhombi_in_j(cutoff)?;
        let forced = ic
            .rhombi_with_top_above(-cutoff - 2)
            .into_iter()
            .filter(|r| r.top.sum() < -cutoff)
            .collect();
        Ok(Window {
            cutoff,
            points,
            index,
            free: free_set.iter().copied().collect(),
            free_set,
            forced,
            classes: boundary_classes(cutoff),
        })
    }

    pub fn cutoff(&self) -> i32 {
        self.cutoff
    }

    /// The points of `J`, sorted.
    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    /// Rhombi inside `J`.
    pub fn rhombi(&self) -> &[Rhombus] {
        &self.free
    }

    pub fn contains_rhombus(&self, r: &Rhombus) -> bool {
        self.free_set.contains(r)
    }

    /// The `3N+7` vertex classes on the bottom two layers of `J` that must
    /// end up in distinct components.
    pub fn classes(&self) -> &[Vec<Point3>] {
        &self.classes
    }

    /// Edges of the induced subgraph `H` on `J`.
    pub fn edges(&self, long: &BTreeSet<Rhombus>) -> Vec<Edge> {
        self.free.iter().map(|r| r.edge(long.contains(r))).collect()
    }

    /// Degree of every point of `J` in the full grove.
    pub fn degrees(&self, long: &BTreeSet<Rhombus>) -> BTreeMap<Point3, u32> {
        let mut deg: BTreeMap<Point3, u32> = self.points.iter().map(|&p| (p, 0)).collect();
        let forced = self.forced.iter().map(Rhombus::short_edge);
        for e in self.edges(long).into_iter().chain(forced) {
            for p in [e.0, e.1] {
                if let Some(d) = deg.get_mut(&p) {
                    *d += 1;
                }
            }
        }
        deg
    }

    /// `m(G)`: long-edge variables times `x^(deg-2)` over `J`. Points below
    /// `J` always have degree 2.
    pub fn monomial_of(&self, long: &BTreeSet<Rhombus>) -> Monomial {
        let edge_vars = long.iter().map(|r| (r.edge_variable(), 1));
        let xs = self.degrees(long).into_iter().map(|(p, d)| (p.x_var(), d as i32 - 2));
        Monomial::new(1, Exponents::from_pairs(edge_vars.chain(xs)))
    }

    /// Verifies compactness and the connectivity condition.
    pub fn check(&self, long: &BTreeSet<Rhombus>) -> Result<(), GroveViolation> {
        for r in long {
            if !self.free_set.contains(r) {
                return Err(if r.top.sum() < -self.cutoff {
                    GroveViolation::NotCompact(*r)
                } else {
                    GroveViolation::NotARhombus(*r)
                });
            }
        }
        check_partition(&self.index, &self.edges(long), &self.classes)
    }

    /// A cycle of `H`, as its vertex sequence, if there is one.
    pub fn find_cycle(&self, long: &BTreeSet<Rhombus>) -> Option<Vec<Point3>> {
        find_cycle(&self.index, &self.edges(long))
    }

    pub fn is_acyclic(&self, long: &BTreeSet<Rhombus>) -> bool {
        self.find_cycle(long).is_none()
    }

    pub fn component_count(&self, long: &BTreeSet<Rhombus>) -> usize {
        component_count(&self.index, &self.edges(long))
    }

    pub(crate) fn index(&self) -> &HashMap<Point3, usize> {
        &self.index
    }

    /// `sum (deg - 2)` over the points strictly below `r` in the two
    /// coordinates that define its edge variable.
    pub fn coeffone_sum(&self, long: &BTreeSet<Rhombus>, r: &Rhombus) -> i64 {
        sum_below(&self.degrees(long), r)
    }

    /// [`Window::coeffone_sum`] for every rhombus with top in `J`, free or forced.
    pub fn coeffone_sums(&self, long: &BTreeSet<Rhombus>) -> BTreeMap<Rhombus, i64> {
        let deg = self.degrees(long);
        self.free
            .iter()
            .chain(&self.forced)
            .map(|r| (*r, sum_below(&deg, r)))
            .collect()
    }
}

fn sum_below(deg: &BTreeMap<Point3, u32>, r: &Rhombus) -> i64 {
    let t = r.top;
    let below = |p: &Point3| match r.edge_variable() {
        VarKey::A(..) => p.j < t.j && p.k < t.k,
        VarKey::B(..) => p.i < t.i && p.k < t.k,
        _ => p.i < t.i && p.j < t.j,
    };
    deg.iter().filter(|(p, _)| below(p)).map(|(_, &d)| d as i64 - 2).sum()
}

fn union_find(index: &HashMap<Point3, usize>, edges: &[Edge]) -> UnionFind<usize> {
    let mut uf = UnionFind::new(index.len());
    for e in edges {
        uf.union(index[&e.0], index[&e.1]);
    }
    uf
}

pub(crate) fn component_count(index: &HashMap<Point3, usize>, edges: &[Edge]) -> usize {
    let labels = union_find(index, edges).into_labeling();
    labels.into_iter().collect::<BTreeSet<_>>().len()
}

/// Each class inside one component, no two classes sharing a component,
/// and no component without a class. `index` numbers the vertices `0..n`.
pub(crate) fn check_partition(
    index: &HashMap<Point3, usize>,
    edges: &[Edge],
    classes: &[Vec<Point3>],
) -> Result<(), GroveViolation> {
    let uf = union_find(index, edges);
    let mut owner: HashMap<usize, Point3> = HashMap::new();
    for class in classes {
        let roots: Vec<usize> = class.iter().map(|p| uf.find(index[p])).collect();
        if let Some(n) = roots.iter().position(|&r| r != roots[0]) {
            return Err(GroveViolation::ClassSplit {
                first: class[0],
                second: class[n],
            });
        }
        if let Some(&other) = owner.get(&roots[0]) {
            return Err(GroveViolation::ClassesMerged {
                first: other,
                second: class[0],
            });
        }
        owner.insert(roots[0], class[0]);
    }
    let mut stray: Vec<(Point3, usize)> = index.iter().map(|(&p, &n)| (p, n)).collect();
    stray.sort();
    for (p, n) in stray {
        if !owner.contains_key(&uf.find(n)) {
            return Err(GroveViolation::StrayComponent(p));
        }
    }
    Ok(())
}

pub(crate) fn find_cycle(index: &HashMap<Point3, usize>, edges: &[Edge]) -> Option<Vec<Point3>> {
    let mut uf = UnionFind::new(index.len());
    let mut adj: HashMap<Point3, Vec<Point3>> = HashMap::new();
    for e in edges {
        if !uf.union(index[&e.0], index[&e.1]) {
            return Some(forest_path(&adj, e.1, e.0));
        }
        adj.entry(e.0).or_default().push(e.1);
        adj.entry(e.1).or_default().push(e.0);
    }
    None
}

/// Path from `from` to `to` in a forest given by adjacency lists, listed
/// from `to` back to `from`.
fn forest_path(adj: &HashMap<Point3, Vec<Point3>>, from: Point3, to: Point3) -> Vec<Point3> {
    let mut prev: HashMap<Point3, Point3> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    prev.insert(from, from);
    while let Some(p) = queue.pop_front() {
        if p == to {
            break;
        }
        for &q in adj.get(&p).into_iter().flatten() {
            if let std::collections::hash_map::Entry::Vacant(e) = prev.entry(q) {
                e.insert(p);
                queue.push_back(q);
            }
        }
    }
    let mut path = vec![to];
    let mut p = to;
    while p != from {
        p = prev[&p];
        path.push(p);
    }
    path
}

/// Pairs `{(0,p,q),(p,0,q)}` and rotations for `0 > p > q`, the diagonal
/// triple, and the three axis singletons, on the layers `-N-1` and `-N-2`.
pub(crate) fn boundary_classes(cutoff: i32) -> Vec<Vec<Point3>> {
    let pt = Point3::new;
    let mut out = Vec::new();
    for s in [-cutoff - 1, -cutoff - 2] {
        for p in (s / 2..0).rev() {
            let q = s - p;
            if q >= p {
                continue;
            }
            out.push(vec![pt(0, p, q), pt(p, 0, q)]);
            out.push(vec![pt(p, q, 0), pt(0, q, p)]);
            out.push(vec![pt(q, 0, p), pt(q, p, 0)]);
        }
        if s % 2 == 0 {
            let p = s / 2;
            out.push(vec![pt(0, p, p), pt(p, 0, p), pt(p, p, 0)]);
        }
        out.push(vec![pt(0, 0, s)]);
        out.push(vec![pt(0, s, 0)]);
        out.push(vec![pt(s, 0, 0)]);
    }
    out
}
