use std::fmt;

use super::Point3;
use crate::laurent::VarKey;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    A,
    B,
    C,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::A, Axis::B, Axis::C];

    pub fn letter(&self) -> &'static str {
        match self {
            Axis::A => "a",
            Axis::B => "b",
            Axis::C => "c",
        }
    }

    pub fn from_letter(s: &str) -> Option<Axis> {
        match s {
            "a" => Some(Axis::A),
            "b" => Some(Axis::B),
            "c" => Some(Axis::C),
            _ => None,
        }
    }
}

/// An unordered pair of lattice points, stored with the smaller point first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Point3, pub Point3);

impl Edge {
    pub fn new(p: Point3, q: Point3) -> Self {
        if p <= q {
            Edge(p, q)
        } else {
            Edge(q, p)
        }
    }

    pub fn contains(&self, p: Point3) -> bool {
        self.0 == p || self.1 == p
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }
}

/// `r_a`, `r_b` or `r_c` at a top point `(i,j,k)`.
///
/// - `r_a(i,j,k) = {(i,j,k), (i,j-1,k), (i,j,k-1), (i,j-1,k-1)}`
/// - `r_b(i,j,k) = {(i,j,k), (i-1,j,k), (i,j,k-1), (i-1,j,k-1)}`
/// - `r_c(i,j,k) = {(i,j,k), (i-1,j,k), (i,j-1,k), (i-1,j-1,k)}`
///
/// The long edge joins the two middle vertices; the short edge joins the top
/// to the bottom vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rhombus {
    pub axis: Axis,
    pub top: Point3,
}

impl Rhombus {
    pub fn new(axis: Axis, top: Point3) -> Self {
        Rhombus { axis, top }
    }

    pub fn a(i: i32, j: i32, k: i32) -> Self {
        Rhombus::new(Axis::A, Point3::new(i, j, k))
    }

    pub fn b(i: i32, j: i32, k: i32) -> Self {
        Rhombus::new(Axis::B, Point3::new(i, j, k))
    }

    pub fn c(i: i32, j: i32, k: i32) -> Self {
        Rhombus::new(Axis::C, Point3::new(i, j, k))
    }

    /// The two middle vertices (endpoints of the long edge).
    pub fn middle(&self) -> [Point3; 2] {
        let t = self.top;
        match self.axis {
            Axis::A => [t.offset(0, -1, 0), t.offset(0, 0, -1)],
            Axis::B => [t.offset(-1, 0, 0), t.offset(0, 0, -1)],
            Axis::C => [t.offset(-1, 0, 0), t.offset(0, -1, 0)],
        }
    }

    pub fn bottom(&self) -> Point3 {
        let t = self.top;
        match self.axis {
            Axis::A => t.offset(0, -1, -1),
            Axis::B => t.offset(-1, 0, -1),
            Axis::C => t.offset(-1, -1, 0),
        }
    }

    /// Top, the two middle vertices, bottom.
    pub fn vertices(&self) -> [Point3; 4] {
        let [m1, m2] = self.middle();
        [self.top, m1, m2, self.bottom()]
    }

    pub fn long_edge(&self) -> Edge {
        let [m1, m2] = self.middle();
        Edge::new(m1, m2)
    }

    pub fn short_edge(&self) -> Edge {
        Edge::new(self.top, self.bottom())
    }

    pub fn edge(&self, long: bool) -> Edge {
        if long {
            self.long_edge()
        } else {
            self.short_edge()
        }
    }

    /// The edge whose endpoints have even coordinate sum.
    pub fn even_edge(&self) -> Edge {
        self.edge(!self.top.is_even())
    }

    /// Whether the long edge is the even one.
    pub fn long_is_even(&self) -> bool {
        !self.top.is_even()
    }

    /// `a(j,k)`, `b(i,k)` or `c(i,j)`.
    pub fn edge_variable(&self) -> VarKey {
        let Point3 { i, j, k } = self.top;
        match self.axis {
            Axis::A => VarKey::A(j, k),
            Axis::B => VarKey::B(i, k),
            Axis::C => VarKey::C(i, j),
        }
    }

    /// The coordinate along which the rhombus is free to slide while keeping
    /// its edge variable.
    pub fn with_free_coord(&self, v: i32) -> Rhombus {
        let t = self.top;
        let top = match self.axis {
            Axis::A => Point3::new(v, t.j, t.k),
            Axis::B => Point3::new(t.i, v, t.k),
            Axis::C => Point3::new(t.i, t.j, v),
        };
        Rhombus::new(self.axis, top)
    }
}

impl fmt::Display for Rhombus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r_{}{}", self.axis.letter(), self.top)
    }
}
