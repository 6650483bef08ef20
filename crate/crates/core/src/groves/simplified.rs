use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::window::{boundary_classes, check_partition, component_count, find_cycle};
use super::{Grove, GroveError, GroveViolation, Window};
use crate::lattice::{Edge, InitialConditions, Point3};

/// The even half of a grove within an odd radius `N`: the even edges among
/// the even initial points with coordinate sum `>= -N-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplifiedGrove {
    ic: Arc<InitialConditions>,
    cutoff: i32,
    edges: BTreeSet<Edge>,
}

fn odd_window(ic: &InitialConditions, cutoff: i32) -> Result<Window, GroveError> {
    ic.require_cutoff(cutoff)?;
    if cutoff % 2 == 0 {
        return Err(GroveError::CutoffNotOdd(cutoff));
    }
    Window::new(ic, cutoff)
}

pub fn to_simplified(g: &Grove, cutoff: i32) -> Result<SimplifiedGrove, GroveError> {
    let window = odd_window(g.ic(), cutoff)?;
    let edges = window
        .rhombi()
        .iter()
        .filter(|r| g.long_edges().contains(r) == r.long_is_even())
        .map(|r| r.even_edge())
        .collect();
    Ok(SimplifiedGrove {
        ic: Arc::clone(g.ic()),
        cutoff,
        edges,
    })
}

/// Restores the odd edges: a rhombus uses its odd edge exactly when its even
/// edge is missing.
pub fn from_simplified(s: &SimplifiedGrove) -> Result<Grove, GroveError> {
    let window = odd_window(&s.ic, s.cutoff)?;
    let even: BTreeSet<Edge> = window.rhombi().iter().map(|r| r.even_edge()).collect();
    if let Some(e) = s.edges.iter().find(|e| !even.contains(e)) {
        return Err(GroveViolation::NotAnEvenEdge(*e).into());
    }
    let long = window
        .rhombi()
        .iter()
        .filter(|r| s.edges.contains(&r.even_edge()) == r.long_is_even())
        .copied()
        .collect();
    Ok(Grove::new(Arc::clone(&s.ic), long))
}

impl SimplifiedGrove {
    pub fn new(ic: Arc<InitialConditions>, cutoff: i32, edges: BTreeSet<Edge>) -> Self {
        SimplifiedGrove { ic, cutoff, edges }
    }

    pub fn cutoff(&self) -> i32 {
        self.cutoff
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn ic(&self) -> &Arc<InitialConditions> {
        &self.ic
    }

    /// Even initial points with coordinate sum `>= -N-1`.
    pub fn vertices(&self) -> Vec<Point3> {
        self.ic
            .initial_points_above(-self.cutoff - 1)
            .into_iter()
            .filter(Point3::is_even)
            .collect()
    }

    fn index(&self) -> HashMap<Point3, usize> {
        self.vertices().into_iter().enumerate().map(|(n, p)| (p, n)).collect()
    }

    pub fn component_count(&self) -> usize {
        let edges: Vec<Edge> = self.edges.iter().copied().collect();
        component_count(&self.index(), &edges)
    }

    /// The even boundary classes on the layer `-N-1`.
    pub fn classes(&self) -> Vec<Vec<Point3>> {
        let s = -self.cutoff - 1;
        boundary_classes(self.cutoff)
            .into_iter()
            .filter(|c| c[0].sum() == s)
            .collect()
    }

    /// Acyclicity and the boundary partition condition.
    pub fn check(&self) -> Result<(), GroveViolation> {
        let index = self.index();
        let edges: Vec<Edge> = self.edges.iter().copied().collect();
        for e in &edges {
            if !index.contains_key(&e.0) || !index.contains_key(&e.1) {
                return Err(GroveViolation::NotAnEvenEdge(*e));
            }
        }
        if let Some(cycle) = find_cycle(&index, &edges) {
            return Err(GroveViolation::Cycle(cycle));
        }
        check_partition(&index, &edges, &self.classes())
    }
}
