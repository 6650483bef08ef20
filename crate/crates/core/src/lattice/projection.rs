use super::Point3;

/// A point of the projection plane in exact coordinates.
///
/// The actual position is `(m * s, n / 2)` with `s = sqrt(3)/2`. A unit step
/// in `k` moves by `(0, 1)`, in `i` by `(-s, -1/2)` and in `j` by
/// `(s, -1/2)`; the diagonal `(1,1,1)` is collapsed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePoint {
    pub m: i64,
    pub n: i64,
}

impl PlanePoint {
    /// Floating-point coordinates, for rendering only.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.m as f64 * 3f64.sqrt() / 2.0, self.n as f64 / 2.0)
    }

    /// Squared Euclidean distance from the origin times four (exact).
    pub fn norm4(&self) -> i64 {
        3 * self.m * self.m + self.n * self.n
    }
}

pub fn project(p: Point3) -> PlanePoint {
    let (i, j, k) = (p.i as i64, p.j as i64, p.k as i64);
    PlanePoint {
        m: j - i,
        n: 2 * k - i - j,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_and_diagonal() {
        assert_eq!(project(Point3::ORIGIN), PlanePoint { m: 0, n: 0 });
        for h in -5..=5 {
            assert_eq!(project(Point3::ORIGIN.diag(h)), PlanePoint { m: 0, n: 0 });
        }
    }

    #[test]
    fn symmetric_pair() {
        let p = project(Point3::new(0, -1, -1));
        let q = project(Point3::new(-1, 0, -1));
        assert_ne!(p, q);
        assert_eq!(p.norm4(), q.norm4());
    }

    #[test]
    fn unit_steps_have_unit_length() {
        for p in [Point3::new(1, 0, 0), Point3::new(0, 1, 0), Point3::new(0, 0, 1)] {
            assert_eq!(project(p).norm4(), 4);
        }
    }
}
