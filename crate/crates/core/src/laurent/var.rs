use std::fmt;
use std::str::FromStr;

use super::LaurentError;

/// A formal variable of the cube recurrence.
///
/// The derived ordering compares the variant tag first (in declaration
/// order) and then the indices lexicographically; every canonical form in
/// this crate is built on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarKey {
    /// Initial-condition variable `x(i,j,k)`.
    X(i32, i32, i32),
    /// Edge variable `a(j,k)`.
    A(i32, i32),
    /// Edge variable `b(i,k)`.
    B(i32, i32),
    /// Edge variable `c(i,j)`.
    C(i32, i32),
    Alpha,
    Beta,
    Gamma,
    /// Auxiliary indeterminate used by specializations.
    T,
    /// Gale-Robinson sequence term `y(l)`.
    Y(i32),
}

impl VarKey {
    pub fn is_x(&self) -> bool {
        matches!(self, VarKey::X(..))
    }

    pub fn is_edge(&self) -> bool {
        matches!(self, VarKey::A(..) | VarKey::B(..) | VarKey::C(..))
    }
}

impl fmt::Display for VarKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            VarKey::X(i, j, k) => write!(f, "x({i},{j},{k})"),
            VarKey::A(j, k) => write!(f, "a({j},{k})"),
            VarKey::B(i, k) => write!(f, "b({i},{k})"),
            VarKey::C(i, j) => write!(f, "c({i},{j})"),
            VarKey::Alpha => f.write_str("alpha"),
            VarKey::Beta => f.write_str("beta"),
            VarKey::Gamma => f.write_str("gamma"),
            VarKey::T => f.write_str("t"),
            VarKey::Y(l) => write!(f, "y({l})"),
        }
    }
}

impl FromStr for VarKey {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LaurentError::BadVariable(s.to_string());
        match s {
            "alpha" => return Ok(VarKey::Alpha),
            "beta" => return Ok(VarKey::Beta),
            "gamma" => return Ok(VarKey::Gamma),
            "t" => return Ok(VarKey::T),
            _ => {}
        }
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let idx = inner
            .split(',')
            .map(|t| t.trim().parse::<i32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        match (&s[..open], idx.as_slice()) {
            ("x", &[i, j, k]) => Ok(VarKey::X(i, j, k)),
            ("a", &[j, k]) => Ok(VarKey::A(j, k)),
            ("b", &[i, k]) => Ok(VarKey::B(i, k)),
            ("c", &[i, j]) => Ok(VarKey::C(i, j)),
            ("y", &[l]) => Ok(VarKey::Y(l)),
            _ => Err(bad()),
        }
    }
}
