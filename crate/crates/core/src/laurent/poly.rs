use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Exponents, LaurentError, VarKey};

/// A single term: nonzero integer coefficient times a Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub coeff: BigInt,
    pub exps: Exponents,
}

impl Monomial {
    pub fn new(coeff: impl Into<BigInt>, exps: Exponents) -> Self {
        Monomial {
            coeff: coeff.into(),
            exps,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_one() {
            write!(f, "{}", self.coeff)
        } else if self.coeff.is_one() {
            write!(f, "{}", self.exps)
        } else if self.coeff == -BigInt::one() {
            write!(f, "-{}", self.exps)
        } else {
            write!(f, "{}*{}", self.coeff, self.exps)
        }
    }
}

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. The zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_monomial(Monomial::new(c, Exponents::one()))
    }

    pub fn var(v: VarKey) -> Self {
        Self::from_monomial(Monomial::new(1, Exponents::var(v)))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !m.coeff.is_zero() {
            terms.insert(m.exps, m.coeff);
        }
        LaurentPoly { terms }
    }

    /// Sums arbitrary terms, merging like monomials.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigInt)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().next().is_some_and(|(e, c)| e.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &BigInt)> + '_ {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| Monomial::new(c.clone(), e.clone()))
    }

    pub fn coeff(&self, exps: &Exponents) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Exponents, &BigInt)> {
        self.terms.last_key_value()
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(e, _)| e.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<Monomial> {
        (self.terms.len() == 1).then(|| {
            let (e, c) = self.terms.iter().next().unwrap();
            Monomial::new(c.clone(), e.clone())
        })
    }

    /// All variables occurring in some term, in `VarKey` order.
    pub fn variables(&self) -> Vec<VarKey> {
        let mut vs: Vec<VarKey> = self.terms.keys().flat_map(|e| e.iter().map(|p| p.0)).collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Componentwise minimum exponent over all terms: the largest monomial
    /// dividing every term.
    pub fn monomial_content(&self) -> Exponents {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Exponents::one();
        };
        it.fold(first.clone(), |acc, e| acc.meet(e))
    }

    /// Minimum and maximum exponent of `v` across the terms.
    pub fn degree_range(&self, v: VarKey) -> Option<(i32, i32)> {
        self.terms.keys().map(|e| e.get(v)).fold(None, |acc, e| match acc {
            None => Some((e, e)),
            Some((lo, hi)) => Some((lo.min(e), hi.max(e))),
        })
    }

    fn add_term(&mut self, exps: Exponents, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_monomial(&self, exps: &Exponents, coeff: &BigInt) -> LaurentPoly {
        if coeff.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.mul(exps), c * coeff)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / d`.
    ///
    /// Both operands are shifted by monomials so they become ordinary
    /// polynomials (the divisor with trivial monomial content), the quotient
    /// is found by long division under graded lex, and the shift is undone.
    /// A nonzero remainder is an error.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if d.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some(m) = d.as_monomial() {
            let inv = m.exps.inverse();
            let mut terms = BTreeMap::new();
            for (e, c) in &self.terms {
                let (q, r) = c.div_rem(&m.coeff);
                if !r.is_zero() {
                    return Err(LaurentError::NonzeroRemainder);
                }
                terms.insert(e.mul(&inv), q);
            }
            return Ok(LaurentPoly { terms });
        }

        let d_shift = d.monomial_content();
        let p_shift = self.monomial_content();
        let d0 = d.scale_monomial(&d_shift.inverse(), &BigInt::one());
        let mut rem = self.scale_monomial(&p_shift.inverse(), &BigInt::one()).terms;

        let (lead_e, lead_c) = d0.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let rest: Vec<(Exponents, BigInt)> = d0
            .terms
            .iter()
            .rev()
            .skip(1)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();

        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.pop_last() {
            if !lead_e.divides(&e) {
                return Err(LaurentError::NonzeroRemainder);
            }
            let (qc, r) = c.div_rem(&lead_c);
            if !r.is_zero() {
                return Err(LaurentError::NonzeroRemainder);
            }
            let qe = e.div(&lead_e);
            for (de, dc) in &rest {
                let key = qe.mul(de);
                let delta = -(&qc * dc);
                use std::collections::btree_map::Entry;
                match rem.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(delta);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() += delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            quot.insert(qe, qc);
        }
        let q0 = LaurentPoly { terms: quot };
        Ok(q0.scale_monomial(&p_shift.div(&d_shift), &BigInt::one()))
    }

    /// Replaces every occurrence of `v` by `value`.
    ///
    /// Negative powers of `v` need `inverse_value`, which must be a monomial
    /// whose product with `value` is 1.
    pub fn substitute(
        &self,
        v: VarKey,
        value: &LaurentPoly,
        inverse_value: Option<&LaurentPoly>,
    ) -> Result<LaurentPoly, LaurentError> {
        let needs_inverse = self.terms.keys().any(|e| e.get(v) < 0);
        if needs_inverse {
            let inv = inverse_value.ok_or(LaurentError::MissingInverse(v))?;
            if inv.as_monomial().is_none() || !(value * inv).is_one() {
                return Err(LaurentError::InvalidInverse(v));
            }
        }
        let mut powers: HashMap<i32, LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let (k, rest) = e.split(v);
            let factor = powers.entry(k).or_insert_with(|| {
                if k >= 0 {
                    value.pow(k as u32)
                } else {
                    inverse_value.unwrap().pow((-k) as u32)
                }
            });
            for (fe, fc) in &factor.terms {
                out.add_term(rest.mul(fe), c * fc);
            }
        }
        Ok(out)
    }

    /// Applies `f` to every exponent vector (for variable renamings and
    /// specializations by monomials) and collects like terms.
    pub fn map_exponents(&self, mut f: impl FnMut(&Exponents) -> Exponents) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Renames variables one by one.
    pub fn rename(&self, mut f: impl FnMut(VarKey) -> VarKey) -> LaurentPoly {
        self.map_exponents(|e| Exponents::from_pairs(e.iter().map(|(v, k)| (f(v), k))))
    }

    /// Exact value under a rational assignment.
    pub fn evaluate(&self, assign: &BTreeMap<VarKey, BigRational>) -> Result<BigRational, LaurentError> {
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, k) in e.iter() {
                let val = assign.get(&v).ok_or(LaurentError::UnassignedVariable(v))?;
                if val.is_zero() {
                    if k < 0 {
                        return Err(LaurentError::ZeroToNegativePower(v));
                    }
                    term = BigRational::zero();
                    continue;
                }
                term *= pow_rational(val, k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Whether every coefficient is positive.
    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

fn pow_rational(base: &BigRational, k: i32) -> BigRational {
    let p = num_traits::pow(base.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, m) in self.monomials().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::from_monomial(m)
    }
}

impl From<VarKey> for LaurentPoly {
    fn from(v: VarKey) -> Self {
        LaurentPoly::var(v)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(self.len() * rhs.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                *acc.entry(ea.mul(eb)).or_default() += ca * cb;
            }
        }
        LaurentPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut out = LaurentPoly::zero();
        for p in iter {
            for (e, c) in p.terms {
                out.add_term(e, c);
            }
        }
        out
    }
}
