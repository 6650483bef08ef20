//! Lattice geometry: order ideals in the lower cone, the induced initial
//! conditions, rhombi, cutoffs, peel order and the planar projection.

mod ic;
mod preset;
mod projection;
mod rhombus;

pub use ic::InitialConditions;
pub use preset::Preset;
pub use projection::{project, PlanePoint};
pub use rhombus::{Axis, Edge, Rhombus};

use std::fmt;

use thiserror::Error;

use crate::laurent::VarKey;

/// A point of the integer lattice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point3 {
    pub i: i32,
    pub j: i32,
    pub k: i32,
}

impl Point3 {
    pub const ORIGIN: Point3 = Point3 { i: 0, j: 0, k: 0 };

    pub const fn new(i: i32, j: i32, k: i32) -> Self {
        Point3 { i, j, k }
    }

    pub fn sum(&self) -> i32 {
        self.i + self.j + self.k
    }

    pub fn is_even(&self) -> bool {
        self.sum().rem_euclid(2) == 0
    }

    pub fn max_coord(&self) -> i32 {
        self.i.max(self.j).max(self.k)
    }

    pub fn offset(&self, di: i32, dj: i32, dk: i32) -> Point3 {
        Point3::new(self.i + di, self.j + dj, self.k + dk)
    }

    /// Shift along the main diagonal.
    pub fn diag(&self, h: i32) -> Point3 {
        self.offset(h, h, h)
    }

    /// Componentwise `<=`.
    pub fn le(&self, other: &Point3) -> bool {
        self.i <= other.i && self.j <= other.j && self.k <= other.k
    }

    /// Lies in the lower cone of the origin.
    pub fn in_cone(&self) -> bool {
        self.max_coord() <= 0
    }

    pub fn x_var(&self) -> VarKey {
        VarKey::X(self.i, self.j, self.k)
    }

    /// The three lower neighbours `(i-1,j,k)`, `(i,j-1,k)`, `(i,j,k-1)`.
    pub fn lower_steps(&self) -> [Point3; 3] {
        [self.offset(-1, 0, 0), self.offset(0, -1, 0), self.offset(0, 0, -1)]
    }

    /// The three lower neighbours `(i,j-1,k-1)`, `(i-1,j,k-1)`, `(i-1,j-1,k)`.
    pub fn lower_pairs(&self) -> [Point3; 3] {
        [self.offset(0, -1, -1), self.offset(-1, 0, -1), self.offset(-1, -1, 0)]
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

impl From<[i32; 3]> for Point3 {
    fn from(a: [i32; 3]) -> Self {
        Point3::new(a[0], a[1], a[2])
    }
}

impl From<(i32, i32, i32)> for Point3 {
    fn from(a: (i32, i32, i32)) -> Self {
        Point3::new(a.0, a.1, a.2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("point {0} is not in the lower cone of the origin")]
    NotInCone(Point3),
    #[error("upper set is not upward closed: {point} is present but {missing} is not")]
    NotUpwardClosed { point: Point3, missing: Point3 },
    #[error("cutoff property ({property}) fails at {point} for N = {cutoff}")]
    CutoffProperty {
        property: &'static str,
        cutoff: i32,
        point: Point3,
    },
    #[error("{cutoff} is not a cutoff (the minimal cutoff is {min})")]
    NotACutoff { cutoff: i32, min: i32 },
    #[error("no rhombus of the initial conditions carries the variable {0}")]
    NoSuchRhombus(VarKey),
    #[error("invalid preset: {0}")]
    InvalidPreset(String),
}
