use std::collections::{BTreeSet, HashSet};

use super::{Axis, LatticeError, Point3, Rhombus};
use crate::laurent::VarKey;

/// Initial conditions induced by an order ideal `L` inside the lower cone of
/// the origin.
///
/// Stored as the finite set `U_fin` of cone points that are *not* in `L`.
/// A point is in the upper set `U` when it lies outside the cone or in
/// `U_fin`; it is an initial point when it is in `L` and its diagonal
/// successor `(i+1,j+1,k+1)` is in `U`.
#[derive(Clone, Debug)]
pub struct InitialConditions {
    u_fin: BTreeSet<Point3>,
    lookup: HashSet<Point3>,
    min_cutoff: i32,
}

impl PartialEq for InitialConditions {
    fn eq(&self, other: &Self) -> bool {
        self.u_fin == other.u_fin
    }
}

impl Eq for InitialConditions {}

impl InitialConditions {
    /// Validates and wraps a finite upper set.
    pub fn new(u_fin: impl IntoIterator<Item = Point3>) -> Result<Self, LatticeError> {
        let u_fin: BTreeSet<Point3> = u_fin.into_iter().collect();
        let min_sum = u_fin.iter().map(Point3::sum).min();
        let ic = InitialConditions {
            lookup: u_fin.iter().copied().collect(),
            min_cutoff: min_sum.map_or(0, |s| (1 - s).max(0)),
            u_fin,
        };
        ic.validate()?;
        Ok(ic)
    }

    /// `L` equal to the whole cone.
    pub fn full_cone() -> Self {
        InitialConditions {
            u_fin: BTreeSet::new(),
            lookup: HashSet::new(),
            min_cutoff: 0,
        }
    }

    /// Checks cone membership, upward closure inside the cone and the two
    /// cutoff properties at the minimal cutoff.
    pub fn validate(&self) -> Result<(), LatticeError> {
        for &u in &self.u_fin {
            if !u.in_cone() {
                return Err(LatticeError::NotInCone(u));
            }
        }
        for &u in &self.u_fin {
            for w in [u.offset(1, 0, 0), u.offset(0, 1, 0), u.offset(0, 0, 1)] {
                if w.in_cone() && !self.lookup.contains(&w) {
                    return Err(LatticeError::NotUpwardClosed { point: u, missing: w });
                }
            }
        }
        self.check_cutoff_properties(self.min_cutoff)
    }

    /// Verifies properties (i) and (ii) of a cutoff on the band of sums
    /// where they could fail: (i) every cone point with `max = 0` and sum
    /// `<= -N` is initial; (ii) no point with `max < 0` and sum `<= -N-3`
    /// is initial. Beyond the band both follow from `U_fin` being above it.
    pub fn check_cutoff_properties(&self, n: i32) -> Result<(), LatticeError> {
        let deepest = -n - 6 - self.u_fin.iter().map(|p| -p.sum()).max().unwrap_or(0);
        for s in deepest..=0 {
            for p in cone_layer(s) {
                if s <= -n && p.max_coord() == 0 && !self.is_initial(p) {
                    return Err(LatticeError::CutoffProperty {
                        property: "i",
                        cutoff: n,
                        point: p,
                    });
                }
                if s <= -n - 3 && p.max_coord() < 0 && self.is_initial(p) {
                    return Err(LatticeError::CutoffProperty {
                        property: "ii",
                        cutoff: n,
                        point: p,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn u_fin(&self) -> &BTreeSet<Point3> {
        &self.u_fin
    }

    pub fn in_upper(&self, p: Point3) -> bool {
        !p.in_cone() || self.lookup.contains(&p)
    }

    pub fn in_lower(&self, p: Point3) -> bool {
        !self.in_upper(p)
    }

    pub fn is_initial(&self, p: Point3) -> bool {
        self.in_lower(p) && self.in_upper(p.diag(1))
    }

    pub fn min_cutoff(&self) -> i32 {
        self.min_cutoff
    }

    /// Smallest odd cutoff.
    pub fn min_odd_cutoff(&self) -> i32 {
        self.min_cutoff | 1
    }

    /// Every `N >= min_cutoff` satisfies both cutoff properties, and no
    /// smaller `N` does.
    pub fn is_cutoff(&self, n: i32) -> bool {
        n >= self.min_cutoff
    }

    pub fn require_cutoff(&self, n: i32) -> Result<(), LatticeError> {
        if self.is_cutoff(n) {
            Ok(())
        } else {
            Err(LatticeError::NotACutoff {
                cutoff: n,
                min: self.min_cutoff,
            })
        }
    }

    /// The window `J`: initial points with coordinate sum `>= -N-2`.
    pub fn points_in_j(&self, n: i32) -> Result<BTreeSet<Point3>, LatticeError> {
        self.require_cutoff(n)?;
        Ok(self.initial_points_above(-n - 2))
    }

    /// Initial points with coordinate sum `>= min_sum`.
    pub fn initial_points_above(&self, min_sum: i32) -> BTreeSet<Point3> {
        (min_sum..=0)
            .flat_map(cone_layer)
            .filter(|&p| self.is_initial(p))
            .collect()
    }

    pub fn contains_rhombus(&self, r: &Rhombus) -> bool {
        r.vertices().iter().all(|&p| self.is_initial(p))
    }

    /// Rhombi all of whose vertices lie in `J`, i.e. with top sum `>= -N`.
    pub fn rhombi_in_j(&self, n: i32) -> Result<BTreeSet<Rhombus>, LatticeError> {
        self.require_cutoff(n)?;
        Ok(self.rhombi_with_top_above(-n))
    }

    /// Rhombi whose top vertex has coordinate sum `>= min_sum`.
    pub fn rhombi_with_top_above(&self, min_sum: i32) -> BTreeSet<Rhombus> {
        self.initial_points_above(min_sum)
            .into_iter()
            .flat_map(|top| Axis::ALL.map(|axis| Rhombus::new(axis, top)))
            .filter(|r| self.contains_rhombus(r))
            .collect()
    }

    /// The unique rhombus of these initial conditions carrying the edge
    /// variable `v`.
    pub fn variable_rhombus(&self, v: VarKey) -> Result<Rhombus, LatticeError> {
        let probe = match v {
            VarKey::A(j, k) => Rhombus::a(0, j, k),
            VarKey::B(i, k) => Rhombus::b(i, 0, k),
            VarKey::C(i, j) => Rhombus::c(i, j, 0),
            _ => return Err(LatticeError::NoSuchRhombus(v)),
        };
        let t = probe.top;
        let fixed = t.i.min(0) + t.j.min(0) + t.k.min(0);
        if t.max_coord() > 0 {
            return Err(LatticeError::NoSuchRhombus(v));
        }
        // Every vertex of a rhombus is initial, so its bottom vertex has sum
        // at least -N-2 unless its largest coordinate is 0.
        let lowest = fixed - self.min_cutoff - 4;
        (lowest..=0)
            .rev()
            .map(|c| probe.with_free_coord(c))
            .find(|r| self.contains_rhombus(r))
            .ok_or(LatticeError::NoSuchRhombus(v))
    }

    /// `U_fin` ordered by coordinate sum, ties broken lexicographically.
    /// Moving the points from `U` to `L` in this order always removes a
    /// point whose seven lower neighbours are currently initial.
    pub fn peel_sequence(&self) -> Vec<Point3> {
        let mut seq: Vec<Point3> = self.u_fin.iter().copied().collect();
        seq.sort_by_key(|p| (p.sum(), *p));
        seq
    }

    /// The unique `h` with `p + h(1,1,1)` initial.
    pub fn height(&self, p: Point3) -> i32 {
        // Start above the cone and walk down to the first point of L.
        let mut h = 1 - p.max_coord();
        while self.in_upper(p.diag(h)) {
            h -= 1;
        }
        h
    }

    /// Initial conditions with one extra point moved from `L` to `U`.
    pub fn with_upper_point(&self, p: Point3) -> Result<Self, LatticeError> {
        InitialConditions::new(self.u_fin.iter().copied().chain([p]))
    }
}

/// All cone points with coordinate sum `s`.
pub(crate) fn cone_layer(s: i32) -> impl Iterator<Item = Point3> {
    (s..=0).flat_map(move |i| {
        (s - i..=0).filter_map(move |j| {
            let k = s - i - j;
            (k <= 0).then_some(Point3::new(i, j, k))
        })
    })
}
