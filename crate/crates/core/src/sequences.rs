//! Gale-Robinson sequences
//!
//! ```text
//! y(l+n) y(l) = alpha y(l+p) y(l+n-p) + beta y(l+q) y(l+n-q) + gamma y(l+r) y(l+n-r)
//! ```
//!
//! with `n = p+q+r`, and their reading as grove counts: the initial
//! conditions `{p i + q j + r k >= n - l}` turn the cube recurrence into this
//! one under `x(i,j,k) -> y(p i + q j + r k + l)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::groves::{enumerate_local_moves, GroveError};
use crate::lattice::{LatticeError, Preset};
use crate::laurent::{LaurentError, LaurentPoly, VarKey};
use crate::recurrence::{f_symbolic, RecurrenceError, RecurrenceMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("y({0}) vanished and was needed as a divisor")]
    DivisionByZero(usize),
    #[error("invalid parameters: {0}")]
    BadSpec(String),
    #[error("{points} points to peel exceed the enumeration bound of {bound}")]
    TooLarge { points: usize, bound: usize },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Grove(#[from] GroveError),
    #[error(transparent)]
    Recurrence(#[from] RecurrenceError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Parameters of a Gale-Robinson sequence with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaleRobinsonSpec {
    pub p: u32,
    pub q: u32,
    pub r: u32,
    pub alpha: BigRational,
    pub beta: BigRational,
    pub gamma: BigRational,
    /// `y(0), ..., y(n-1)`; `None` means all ones.
    pub initial: Option<Vec<BigRational>>,
}

impl GaleRobinsonSpec {
    /// Coefficients 1 and initial terms 1.
    pub fn new(p: u32, q: u32, r: u32) -> Result<Self, SequenceError> {
        if p == 0 || q == 0 || r == 0 {
            return Err(SequenceError::BadSpec(format!("({p},{q},{r}) must be positive")));
        }
        Ok(GaleRobinsonSpec {
            p,
            q,
            r,
            alpha: BigRational::one(),
            beta: BigRational::one(),
            gamma: BigRational::one(),
            initial: None,
        })
    }

    pub fn somos6() -> Self {
        Self::new(1, 2, 3).expect("positive")
    }

    pub fn somos7() -> Self {
        Self::new(4, 1, 2).expect("positive")
    }

    pub fn n(&self) -> usize {
        (self.p + self.q + self.r) as usize
    }

    pub fn with_coefficients(mut self, alpha: BigRational, beta: BigRational, gamma: BigRational) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self.gamma = gamma;
        self
    }

    pub fn with_initial(mut self, initial: Vec<BigRational>) -> Result<Self, SequenceError> {
        if initial.len() != self.n() {
            return Err(SequenceError::BadSpec(format!(
                "{} initial terms given, {} needed",
                initial.len(),
                self.n()
            )));
        }
        self.initial = Some(initial);
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub index: usize,
    pub value: BigRational,
    pub integral: bool,
}

/// The first `count` terms by exact rational recursion.
pub fn gr_terms(spec: &GaleRobinsonSpec, count: usize) -> Result<Vec<Term>, SequenceError> {
    let n = spec.n();
    let (p, q, r) = (spec.p as usize, spec.q as usize, spec.r as usize);
    let mut y: Vec<BigRational> = match &spec.initial {
        Some(init) => init.clone(),
        None => vec![BigRational::one(); n],
    };
    while y.len() < count {
        let l = y.len() - n;
        if y[l].is_zero() {
            return Err(SequenceError::DivisionByZero(l));
        }
        let num = &spec.alpha * &y[l + p] * &y[l + n - p]
            + &spec.beta * &y[l + q] * &y[l + n - q]
            + &spec.gamma * &y[l + r] * &y[l + n - r];
        y.push(num / &y[l]);
    }
    y.truncate(count);
    Ok(y.into_iter()
        .enumerate()
        .map(|(index, value)| Term {
            index,
            integral: value.is_integer(),
            value,
        })
        .collect())
}

/// `y(l)` as a Laurent polynomial in `y(0), ..., y(n-1)` with symbolic
/// `alpha`, `beta`, `gamma`, by direct recursion.
pub fn gr_symbolic_direct(p: u32, q: u32, r: u32, l: usize) -> Result<LaurentPoly, SequenceError> {
    let n = (p + q + r) as usize;
    let (p, q, r) = (p as usize, q as usize, r as usize);
    let mut y: Vec<LaurentPoly> = (0..n).map(|m| LaurentPoly::var(VarKey::Y(m as i32))).collect();
    let (alpha, beta, gamma) = (
        LaurentPoly::var(VarKey::Alpha),
        LaurentPoly::var(VarKey::Beta),
        LaurentPoly::var(VarKey::Gamma),
    );
    while y.len() <= l {
        let m = y.len() - n;
        let num = &(&(&alpha * &y[m + p]) * &y[m + n - p])
            + &(&(&(&beta * &y[m + q]) * &y[m + n - q]) + &(&(&gamma * &y[m + r]) * &y[m + n - r]));
        let next = num.div_exact(&y[m])?;
        y.push(next);
    }
    Ok(y.swap_remove(l))
}

/// `f(0,0,0)` for the Gale-Robinson initial conditions with coefficients
/// `alpha`, `beta`, `gamma`, renamed by `x(i,j,k) -> y(p i + q j + r k + l)`.
pub fn gr_symbolic_from_cube(p: u32, q: u32, r: u32, l: u32) -> Result<LaurentPoly, SequenceError> {
    let ic = Preset::gale_robinson(p, q, r, l).build()?;
    let f = f_symbolic(&ic, &RecurrenceMode::AlphaBetaGamma)?;
    let (p, q, r, l) = (p as i32, q as i32, r as i32, l as i32);
    Ok(f.rename(|v| match v {
        VarKey::X(i, j, k) => VarKey::Y(p * i + q * j + r * k + l),
        other => other,
    }))
}

/// Comparison of `y(l)` with the number of groves of the matching initial
/// conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrCertificate {
    pub l: u32,
    /// `y(l)` with all initial terms and coefficients 1.
    pub value: BigInt,
    pub grove_count: usize,
    pub counts_match: bool,
    /// The renamed cube polynomial equals the direct symbolic recursion.
    pub symbolic_match: bool,
}

impl GrCertificate {
    pub fn holds(&self) -> bool {
        self.counts_match && self.symbolic_match
    }
}

/// Default bound on `|U_fin|` for certificates.
pub const DEFAULT_CERTIFICATE_BOUND: usize = 40;

pub fn gr_certificate(p: u32, q: u32, r: u32, l: u32, bound: usize) -> Result<GrCertificate, SequenceError> {
    let spec = GaleRobinsonSpec::new(p, q, r)?;
    let ic = Arc::new(Preset::gale_robinson(p, q, r, l).build()?);
    if ic.u_fin().len() > bound {
        return Err(SequenceError::TooLarge {
            points: ic.u_fin().len(),
            bound,
        });
    }
    let term = gr_terms(&spec, l as usize + 1)?.pop().expect("count >= 1");
    let value = term.value.to_integer();
    let grove_count = enumerate_local_moves(&ic)?.len();
    let symbolic_match = gr_symbolic_from_cube(p, q, r, l)? == gr_symbolic_direct(p, q, r, l as usize)?;
    Ok(GrCertificate {
        l,
        counts_match: term.integral && BigInt::from(grove_count) == value,
        value,
        grove_count,
        symbolic_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(spec: &GaleRobinsonSpec, count: usize) -> Vec<i64> {
        gr_terms(spec, count)
            .unwrap()
            .into_iter()
            .map(|t| {
                assert!(t.integral);
                i64::try_from(t.value.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn somos6_terms() {
        assert_eq!(
            values(&GaleRobinsonSpec::somos6(), 12),
            [1, 1, 1, 1, 1, 1, 3, 5, 9, 23, 75, 421]
        );
    }

    #[test]
    fn somos7_terms() {
        assert_eq!(
            values(&GaleRobinsonSpec::somos7(), 12),
            [1, 1, 1, 1, 1, 1, 1, 3, 5, 9, 17, 41]
        );
    }

    #[test]
    fn short_count_returns_initial_terms() {
        let init: Vec<BigRational> = (1..=7).map(|m| BigRational::from_integer(m.into())).collect();
        let spec = GaleRobinsonSpec::somos7().with_initial(init.clone()).unwrap();
        let got: Vec<BigRational> = gr_terms(&spec, 5).unwrap().into_iter().map(|t| t.value).collect();
        assert_eq!(got, init[..5]);
    }

    #[test]
    fn zero_initial_term_is_reported() {
        let mut init = vec![BigRational::one(); 6];
        init[0] = BigRational::zero();
        let spec = GaleRobinsonSpec::somos6().with_initial(init).unwrap();
        assert_eq!(gr_terms(&spec, 7), Err(SequenceError::DivisionByZero(0)));
    }

    #[test]
    fn certificates_somos7() {
        let c = gr_certificate(4, 1, 2, 7, DEFAULT_CERTIFICATE_BOUND).unwrap();
        assert_eq!((c.grove_count, c.value.clone()), (3, BigInt::from(3)));
        assert!(c.holds());
        let trivial = gr_certificate(4, 1, 2, 3, DEFAULT_CERTIFICATE_BOUND).unwrap();
        assert_eq!(trivial.grove_count, 1);
        assert!(trivial.holds());
    }

    #[test]
    fn bad_spec() {
        assert!(GaleRobinsonSpec::new(0, 1, 2).is_err());
        assert!(GaleRobinsonSpec::somos6().with_initial(vec![]).is_err());
    }
}
