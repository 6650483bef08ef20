//! The cube recurrence
//!
//! ```text
//! f(i,j,k) f(i-1,j-1,k-1) = b(i,k) c(i,j) f(i-1,j,k) f(i,j-1,k-1)
//!                         + c(i,j) a(j,k) f(i,j-1,k) f(i-1,j,k-1)
//!                         + a(j,k) b(i,k) f(i,j,k-1) f(i-1,j-1,k)
//! ```
//!
//! evaluated at the origin over arbitrary order-ideal initial conditions,
//! together with its specializations and two independent evaluators.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::lattice::{InitialConditions, Point3};
use crate::laurent::{Exponents, LaurentError, LaurentPoly, VarKey};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecurrenceError {
    #[error("exact division left a remainder while computing f{0}")]
    NonzeroRemainder(Point3),
    #[error("edge-variable exponents give a half-integer power of alpha/beta/gamma in {0}")]
    HalfIntegerExponent(Exponents),
    #[error("edge-variable exponents give a negative power of alpha/beta/gamma in {0}")]
    NegativeExponent(Exponents),
    #[error("f{0} vanished and was needed as a divisor")]
    DivisionByZeroDuringRecursion(Point3),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Values for the edge variables in [`RecurrenceMode::Custom`]: one default
/// per axis plus per-variable overrides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAssignment {
    pub a: LaurentPoly,
    pub b: LaurentPoly,
    pub c: LaurentPoly,
    pub overrides: BTreeMap<VarKey, LaurentPoly>,
}

impl EdgeAssignment {
    pub fn uniform(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> Self {
        EdgeAssignment {
            a,
            b,
            c,
            overrides: BTreeMap::new(),
        }
    }

    pub fn ones() -> Self {
        Self::uniform(LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::one())
    }

    pub fn with(mut self, v: VarKey, value: LaurentPoly) -> Self {
        self.overrides.insert(v, value);
        self
    }

    pub fn value(&self, v: VarKey) -> &LaurentPoly {
        self.overrides.get(&v).unwrap_or(match v {
            VarKey::A(..) => &self.a,
            VarKey::B(..) => &self.b,
            _ => &self.c,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurrenceMode {
    /// Full recurrence with edge variables.
    EdgeVars,
    /// Coefficients `alpha`, `beta`, `gamma` on the three terms, obtained
    /// from the edge-variable polynomial by `a -> sqrt(beta gamma / alpha)`
    /// and its rotations.
    AlphaBetaGamma,
    /// Every variable set to 1; the result is a constant.
    AllOnes,
    /// The `t = 0` limit of `a = b = t, c = 1/t`: the third term is dropped.
    ShiftOcta,
    Custom(EdgeAssignment),
}

/// Term coefficients of one recurrence step.
enum Scheme<'a> {
    EdgeVars,
    Assigned(&'a EdgeAssignment),
    ShiftOcta,
    AlphaBetaGamma,
}

impl Scheme<'_> {
    fn coefficients(&self, u: Point3) -> [Option<LaurentPoly>; 3] {
        let (a, b, c) = (VarKey::A(u.j, u.k), VarKey::B(u.i, u.k), VarKey::C(u.i, u.j));
        match self {
            Scheme::EdgeVars => {
                let m = |p: VarKey, q: VarKey| {
                    Some(LaurentPoly::from(crate::laurent::Monomial::new(
                        1,
                        Exponents::from_pairs([(p, 1), (q, 1)]),
                    )))
                };
                [m(b, c), m(c, a), m(a, b)]
            }
            Scheme::Assigned(asg) => [
                Some(asg.value(b) * asg.value(c)),
                Some(asg.value(c) * asg.value(a)),
                Some(asg.value(a) * asg.value(b)),
            ],
            Scheme::ShiftOcta => [Some(LaurentPoly::one()), Some(LaurentPoly::one()), None],
            Scheme::AlphaBetaGamma => [
                Some(LaurentPoly::var(VarKey::Alpha)),
                Some(LaurentPoly::var(VarKey::Beta)),
                Some(LaurentPoly::var(VarKey::Gamma)),
            ],
        }
    }
}

fn x(p: Point3) -> LaurentPoly {
    LaurentPoly::var(p.x_var())
}

/// Numerator of one recurrence step, with `value` supplying the lower
/// neighbours.
fn step_numerator(scheme: &Scheme, u: Point3, mut value: impl FnMut(Point3) -> LaurentPoly) -> LaurentPoly {
    let steps = u.lower_steps();
    let pairs = u.lower_pairs();
    scheme
        .coefficients(u)
        .into_iter()
        .enumerate()
        .filter_map(|(t, c)| c.map(|c| &(&c * &value(steps[t])) * &value(pairs[t])))
        .sum()
}

/// Runs the recurrence over `U_fin` in peel order (coordinate sum
/// ascending), so every right-hand side is already known.
fn run_symbolic(ic: &InitialConditions, scheme: &Scheme) -> Result<LaurentPoly, RecurrenceError> {
    let mut memo: HashMap<Point3, LaurentPoly> = HashMap::new();
    let lookup = |memo: &HashMap<Point3, LaurentPoly>, p: Point3| -> LaurentPoly {
        if ic.is_initial(p) {
            x(p)
        } else {
            memo[&p].clone()
        }
    };
    for u in ic.peel_sequence() {
        let num = step_numerator(scheme, u, |p| lookup(&memo, p));
        let den = lookup(&memo, u.diag(-1));
        let f = num.div_exact(&den).map_err(|e| match e {
            LaurentError::NonzeroRemainder => RecurrenceError::NonzeroRemainder(u),
            other => other.into(),
        })?;
        memo.insert(u, f);
    }
    Ok(lookup(&memo, Point3::ORIGIN))
}

/// `f(0,0,0)` as an exact Laurent polynomial.
pub fn f_symbolic(ic: &InitialConditions, mode: &RecurrenceMode) -> Result<LaurentPoly, RecurrenceError> {
    match mode {
        RecurrenceMode::EdgeVars => run_symbolic(ic, &Scheme::EdgeVars),
        RecurrenceMode::AlphaBetaGamma => edge_vars_to_alpha_beta_gamma(&run_symbolic(ic, &Scheme::EdgeVars)?),
        RecurrenceMode::AllOnes => {
            let v = f_numeric(ic, &Assignment::all_ones())?;
            Ok(LaurentPoly::constant(v.to_integer()))
        }
        RecurrenceMode::ShiftOcta => run_symbolic(ic, &Scheme::ShiftOcta),
        RecurrenceMode::Custom(asg) => run_symbolic(ic, &Scheme::Assigned(asg)),
    }
}

/// The recurrence written directly with `alpha`, `beta`, `gamma` as term
/// coefficients. Used to cross-check [`RecurrenceMode::AlphaBetaGamma`].
pub fn f_alpha_beta_gamma_direct(ic: &InitialConditions) -> Result<LaurentPoly, RecurrenceError> {
    run_symbolic(ic, &Scheme::AlphaBetaGamma)
}

/// Rewrites each term `a^na b^nb c^nc X` as
/// `alpha^((nb+nc-na)/2) beta^((nc+na-nb)/2) gamma^((na+nb-nc)/2) X`.
/// Exponents are kept doubled until the final parity check.
pub fn edge_vars_to_alpha_beta_gamma(p: &LaurentPoly) -> Result<LaurentPoly, RecurrenceError> {
    let mut terms = Vec::with_capacity(p.len());
    for (e, c) in p.terms() {
        let (mut na, mut nb, mut nc) = (0, 0, 0);
        for (v, k) in e.iter() {
            match v {
                VarKey::A(..) => na += k,
                VarKey::B(..) => nb += k,
                VarKey::C(..) => nc += k,
                _ => {}
            }
        }
        let doubled = [nb + nc - na, nc + na - nb, na + nb - nc];
        if doubled.iter().any(|d| d % 2 != 0) {
            return Err(RecurrenceError::HalfIntegerExponent(e.clone()));
        }
        if doubled.iter().any(|&d| d < 0) {
            return Err(RecurrenceError::NegativeExponent(e.clone()));
        }
        let rest = e.filter(|v| !v.is_edge());
        let greek = Exponents::from_pairs([
            (VarKey::Alpha, doubled[0] / 2),
            (VarKey::Beta, doubled[1] / 2),
            (VarKey::Gamma, doubled[2] / 2),
        ]);
        terms.push((rest.mul(&greek), c.clone()));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// Second evaluator: start from `x(0,0,0)` on the full cone and re-insert
/// the points of `U_fin` in reverse peel order, substituting
/// `x(u) <- (numerator) / x(u-(1,1,1))` each time.
pub fn f_via_substitution(ic: &InitialConditions, mode: &RecurrenceMode) -> Result<LaurentPoly, RecurrenceError> {
    let ones = EdgeAssignment::ones();
    let scheme = match mode {
        RecurrenceMode::EdgeVars | RecurrenceMode::AlphaBetaGamma => Scheme::EdgeVars,
        RecurrenceMode::AllOnes => Scheme::Assigned(&ones),
        RecurrenceMode::ShiftOcta => Scheme::ShiftOcta,
        RecurrenceMode::Custom(asg) => Scheme::Assigned(asg),
    };
    let mut f = x(Point3::ORIGIN);
    for u in ic.peel_sequence().into_iter().rev() {
        let xu = u.x_var();
        let num = step_numerator(&scheme, u, x);
        let den = x(u.diag(-1));
        let value = num.div_exact(&den)?;
        f = match f.degree_range(xu) {
            None => f,
            Some((lo, _)) if lo >= 0 => f.substitute(xu, &value, None)?,
            Some((lo, _)) => {
                // Clear the negative powers, substitute, then divide the
                // numerator's power back out exactly.
                let k = (-lo) as u32;
                let lifted = f.scale_monomial(&Exponents::power(xu, -lo), &BigInt::one());
                let sub = lifted.substitute(xu, &value, None)?;
                let top = &sub * &den.pow(k);
                top.div_exact(&num.pow(k)).map_err(|e| match e {
                    LaurentError::NonzeroRemainder => RecurrenceError::NonzeroRemainder(u),
                    other => other.into(),
                })?
            }
        };
    }
    match mode {
        RecurrenceMode::AlphaBetaGamma => edge_vars_to_alpha_beta_gamma(&f),
        RecurrenceMode::AllOnes => {
            let assign = f.variables().into_iter().map(|v| (v, BigRational::one())).collect();
            Ok(LaurentPoly::constant(f.evaluate(&assign)?.to_integer()))
        }
        _ => Ok(f),
    }
}

/// How the three term coefficients are formed in [`f_numeric`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoefficientForm {
    /// `b c`, `c a`, `a b` from the edge variables.
    EdgeVars,
    /// `alpha`, `beta`, `gamma`.
    AlphaBetaGamma,
}

/// Rational values for the variables of the recurrence; anything not listed
/// takes `default`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub default: BigRational,
    pub values: BTreeMap<VarKey, BigRational>,
    pub form: CoefficientForm,
}

impl Assignment {
    pub fn all_ones() -> Self {
        Assignment {
            default: BigRational::one(),
            values: BTreeMap::new(),
            form: CoefficientForm::EdgeVars,
        }
    }

    pub fn alpha_beta_gamma(alpha: BigRational, beta: BigRational, gamma: BigRational) -> Self {
        Assignment {
            default: BigRational::one(),
            values: BTreeMap::from([(VarKey::Alpha, alpha), (VarKey::Beta, beta), (VarKey::Gamma, gamma)]),
            form: CoefficientForm::AlphaBetaGamma,
        }
    }

    pub fn with(mut self, v: VarKey, value: BigRational) -> Self {
        self.values.insert(v, value);
        self
    }

    pub fn value(&self, v: VarKey) -> &BigRational {
        self.values.get(&v).unwrap_or(&self.default)
    }
}

/// `f(0,0,0)` by exact rational recursion, without symbolic expansion.
pub fn f_numeric(ic: &InitialConditions, assign: &Assignment) -> Result<BigRational, RecurrenceError> {
    let mut memo: HashMap<Point3, BigRational> = HashMap::new();
    let val = |memo: &HashMap<Point3, BigRational>, p: Point3| -> BigRational {
        if ic.is_initial(p) {
            assign.value(p.x_var()).clone()
        } else {
            memo[&p].clone()
        }
    };
    for u in ic.peel_sequence() {
        let coeffs: [BigRational; 3] = match assign.form {
            CoefficientForm::EdgeVars => {
                let a = assign.value(VarKey::A(u.j, u.k));
                let b = assign.value(VarKey::B(u.i, u.k));
                let c = assign.value(VarKey::C(u.i, u.j));
                [b * c, c * a, a * b]
            }
            CoefficientForm::AlphaBetaGamma => [
                assign.value(VarKey::Alpha).clone(),
                assign.value(VarKey::Beta).clone(),
                assign.value(VarKey::Gamma).clone(),
            ],
        };
        let steps = u.lower_steps();
        let pairs = u.lower_pairs();
        let mut num = BigRational::zero();
        for t in 0..3 {
            num += &coeffs[t] * val(&memo, steps[t]) * val(&memo, pairs[t]);
        }
        let den = val(&memo, u.diag(-1));
        if den.is_zero() {
            return Err(RecurrenceError::DivisionByZeroDuringRecursion(u.diag(-1)));
        }
        memo.insert(u, num / den);
    }
    Ok(val(&memo, Point3::ORIGIN))
}

/// Result of evaluating the shifted-octahedron specialization two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctahedronReport {
    /// Via `f(i,j,k) f(i-1,j-1,k-1) = f(i-1,j,k) f(i,j-1,k-1) + f(i,j-1,k) f(i-1,j,k-1)`.
    pub shift_octa: LaurentPoly,
    /// Via the octahedron recurrence on `g(x,y,z) = f((x+y-z)/2, (x-y+z)/2, (x-y-z)/2)`.
    pub g_transform: LaurentPoly,
    pub equal: bool,
}

/// Coordinates of `g` for a point `(i,j,k)`: `x = i+j`, `y = i-k`, `z = j-k`.
fn to_octa(p: Point3) -> (i32, i32, i32) {
    (p.i + p.j, p.i - p.k, p.j - p.k)
}

fn from_octa(x: i32, y: i32, z: i32) -> Point3 {
    debug_assert!((x + y + z) % 2 == 0);
    Point3::new((x + y - z) / 2, (x - y + z) / 2, (x - y - z) / 2)
}

/// `g(x,y,z) g(x-2,y,z) = g(x-1,y-1,z) g(x-1,y+1,z) + g(x-1,y,z-1) g(x-1,y,z+1)`,
/// run over `U_fin` ordered by `x`.
fn g_transform(ic: &InitialConditions) -> Result<LaurentPoly, RecurrenceError> {
    let mut memo: HashMap<(i32, i32, i32), LaurentPoly> = HashMap::new();
    let g = |memo: &HashMap<(i32, i32, i32), LaurentPoly>, x: i32, y: i32, z: i32| {
        let p = from_octa(x, y, z);
        if ic.is_initial(p) {
            LaurentPoly::var(p.x_var())
        } else {
            memo[&(x, y, z)].clone()
        }
    };
    let mut order: Vec<(i32, i32, i32)> = ic.u_fin().iter().map(|&p| to_octa(p)).collect();
    order.sort();
    for (x, y, z) in order {
        let num = &(&g(&memo, x - 1, y - 1, z) * &g(&memo, x - 1, y + 1, z))
            + &(&g(&memo, x - 1, y, z - 1) * &g(&memo, x - 1, y, z + 1));
        let den = g(&memo, x - 2, y, z);
        let v = num.div_exact(&den).map_err(|e| match e {
            LaurentError::NonzeroRemainder => RecurrenceError::NonzeroRemainder(from_octa(x, y, z)),
            other => other.into(),
        })?;
        memo.insert((x, y, z), v);
    }
    Ok(g(&memo, 0, 0, 0))
}

pub fn octahedron_check(ic: &InitialConditions) -> Result<OctahedronReport, RecurrenceError> {
    let shift_octa = run_symbolic(ic, &Scheme::ShiftOcta)?;
    let g = g_transform(ic)?;
    Ok(OctahedronReport {
        equal: shift_octa == g,
        shift_octa,
        g_transform: g,
    })
}

/// Exact integer value of `f(0,0,0)` with every variable set to 1.
pub fn all_ones_count(ic: &InitialConditions) -> Result<BigInt, RecurrenceError> {
    Ok(f_numeric(ic, &Assignment::all_ones())?.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Preset;
    use crate::laurent::Monomial;

    fn p(i: i32, j: i32, k: i32) -> Point3 {
        Point3::new(i, j, k)
    }

    fn mono(pairs: &[(VarKey, i32)]) -> LaurentPoly {
        Monomial::new(1, Exponents::from_pairs(pairs.iter().copied())).into()
    }

    fn one_step_edge_vars() -> LaurentPoly {
        let d = (p(-1, -1, -1).x_var(), -1);
        let (a, b, c) = (VarKey::A(0, 0), VarKey::B(0, 0), VarKey::C(0, 0));
        &(&mono(&[(b, 1), (c, 1), (p(-1, 0, 0).x_var(), 1), (p(0, -1, -1).x_var(), 1), d])
            + &mono(&[(c, 1), (a, 1), (p(0, -1, 0).x_var(), 1), (p(-1, 0, -1).x_var(), 1), d]))
            + &mono(&[(a, 1), (b, 1), (p(0, 0, -1).x_var(), 1), (p(-1, -1, 0).x_var(), 1), d])
    }

    #[test]
    fn base_case_is_x000() {
        let ic = InitialConditions::full_cone();
        for mode in [
            RecurrenceMode::EdgeVars,
            RecurrenceMode::ShiftOcta,
            RecurrenceMode::AlphaBetaGamma,
        ] {
            assert_eq!(f_symbolic(&ic, &mode).unwrap(), x(Point3::ORIGIN));
            assert_eq!(f_via_substitution(&ic, &mode).unwrap(), x(Point3::ORIGIN));
        }
        assert_eq!(f_numeric(&ic, &Assignment::all_ones()).unwrap(), BigRational::one());
    }

    #[test]
    fn one_step_matches_hand_expansion() {
        let ic = Preset::standard(2).build().unwrap();
        let want = one_step_edge_vars();
        assert_eq!(f_symbolic(&ic, &RecurrenceMode::EdgeVars).unwrap(), want);
        assert_eq!(f_via_substitution(&ic, &RecurrenceMode::EdgeVars).unwrap(), want);
    }

    #[test]
    fn one_step_octahedron() {
        let ic = Preset::standard(2).build().unwrap();
        let d = (p(-1, -1, -1).x_var(), -1);
        let want = &mono(&[(p(-1, 0, 0).x_var(), 1), (p(0, -1, -1).x_var(), 1), d])
            + &mono(&[(p(0, -1, 0).x_var(), 1), (p(-1, 0, -1).x_var(), 1), d]);
        let rep = octahedron_check(&ic).unwrap();
        assert!(rep.equal);
        assert_eq!(rep.shift_octa, want);
        assert_eq!(f_symbolic(&ic, &RecurrenceMode::ShiftOcta).unwrap(), want);
    }

    #[test]
    fn octa_coordinates_roundtrip() {
        for q in [p(0, 0, 0), p(-1, 0, -3), p(-2, -5, -1)] {
            let (x, y, z) = to_octa(q);
            assert_eq!(from_octa(x, y, z), q);
        }
    }

    #[test]
    fn standard_counts_small() {
        for (n, want) in [(1u32, 1u64), (2, 3), (3, 9), (4, 81), (5, 729)] {
            let ic = Preset::standard(n).build().unwrap();
            assert_eq!(all_ones_count(&ic).unwrap(), BigInt::from(want), "n = {n}");
        }
        let ic = Preset::standard(5).build().unwrap();
        assert_eq!(
            f_symbolic(&ic, &RecurrenceMode::AllOnes).unwrap(),
            LaurentPoly::constant(729)
        );
    }

    #[test]
    fn alpha_beta_gamma_routes_agree() {
        for preset in [Preset::standard(3), Preset::standard(4), Preset::kleber(2, 2, 2)] {
            let ic = preset.build().unwrap();
            let via_edges = f_symbolic(&ic, &RecurrenceMode::AlphaBetaGamma).unwrap();
            let direct = f_alpha_beta_gamma_direct(&ic).unwrap();
            assert_eq!(via_edges, direct);
        }
    }

    #[test]
    fn half_integer_exponent_is_reported() {
        let p = LaurentPoly::var(VarKey::A(0, 0));
        assert!(matches!(
            edge_vars_to_alpha_beta_gamma(&p),
            Err(RecurrenceError::HalfIntegerExponent(_))
        ));
    }

    #[test]
    fn numeric_zero_divisor_is_reported() {
        let ic = Preset::standard(2).build().unwrap();
        let assign = Assignment::all_ones().with(p(-1, -1, -1).x_var(), BigRational::zero());
        assert_eq!(
            f_numeric(&ic, &assign),
            Err(RecurrenceError::DivisionByZeroDuringRecursion(p(-1, -1, -1)))
        );
    }

    #[test]
    fn substitution_route_matches_on_standard4() {
        let ic = Preset::standard(4).build().unwrap();
        assert_eq!(
            f_symbolic(&ic, &RecurrenceMode::EdgeVars).unwrap(),
            f_via_substitution(&ic, &RecurrenceMode::EdgeVars).unwrap()
        );
    }
}
