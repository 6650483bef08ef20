use std::cmp::Ordering;
use std::fmt;

use super::VarKey;

/// Sparse exponent vector of a Laurent monomial.
///
/// Stored sorted by [`VarKey`] with no zero entries. Ordering is graded
/// lexicographic: total degree first, then the dense exponent vectors
/// compared variable by variable in `VarKey` order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Exponents(Vec<(VarKey, i32)>);

impl Exponents {
    pub fn one() -> Self {
        Exponents(Vec::new())
    }

    pub fn var(v: VarKey) -> Self {
        Exponents(vec![(v, 1)])
    }

    pub fn power(v: VarKey, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Exponents(vec![(v, e)])
        }
    }

    /// Builds an exponent vector from arbitrary pairs, merging repeated
    /// variables and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarKey, i32)>) -> Self {
        let mut v: Vec<(VarKey, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|p| p.0);
        let mut out: Vec<(VarKey, i32)> = Vec::with_capacity(v.len());
        for (k, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == k => last.1 += e,
                _ => out.push((k, e)),
            }
        }
        out.retain(|p| p.1 != 0);
        Exponents(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarKey, i32)> + '_ {
        self.0.iter().copied()
    }

    pub fn get(&self, v: VarKey) -> i32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        self.merge(other, 1)
    }

    pub fn div(&self, other: &Exponents) -> Exponents {
        self.merge(other, -1)
    }

    pub fn inverse(&self) -> Exponents {
        Exponents(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Exponents {
        if k == 0 {
            return Self::one();
        }
        Exponents(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Whether every exponent is nonnegative.
    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|p| p.1 >= 0)
    }

    /// Componentwise `self <= other`, with absent variables read as zero.
    pub fn divides(&self, other: &Exponents) -> bool {
        self.div(other).0.iter().all(|p| p.1 <= 0)
    }

    /// Componentwise minimum, absent variables read as zero.
    pub fn meet(&self, other: &Exponents) -> Exponents {
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        let mut out = Vec::new();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(va, ea)), Some(&&(vb, eb))) => match va.cmp(&vb) {
                    Ordering::Less => {
                        if ea < 0 {
                            out.push((va, ea));
                        }
                        a.next();
                    }
                    Ordering::Greater => {
                        if eb < 0 {
                            out.push((vb, eb));
                        }
                        b.next();
                    }
                    Ordering::Equal => {
                        let m = ea.min(eb);
                        if m != 0 {
                            out.push((va, m));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(&&(va, ea)), None) => {
                    if ea < 0 {
                        out.push((va, ea));
                    }
                    a.next();
                }
                (None, Some(&&(vb, eb))) => {
                    if eb < 0 {
                        out.push((vb, eb));
                    }
                    b.next();
                }
                (None, None) => break,
            }
        }
        Exponents(out)
    }

    /// Splits off the exponent of `v`.
    pub fn split(&self, v: VarKey) -> (i32, Exponents) {
        match self.0.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(i);
                (e, Exponents(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }

    /// Keeps only the variables accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(VarKey) -> bool) -> Exponents {
        Exponents(self.0.iter().copied().filter(|p| keep(p.0)).collect())
    }

    fn merge(&self, other: &Exponents, sign: i32) -> Exponents {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < other.0.len() {
            let (va, ea) = self.0[a];
            let (vb, eb) = other.0[b];
            match va.cmp(&vb) {
                Ordering::Less => {
                    out.push((va, ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((vb, sign * eb));
                    b += 1;
                }
                Ordering::Equal => {
                    let e = ea + sign * eb;
                    if e != 0 {
                        out.push((va, e));
                    }
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[a..]);
        out.extend(other.0[b..].iter().map(|&(v, e)| (v, sign * e)));
        Exponents(out)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // Dense lex: at the first variable where the exponents differ,
            // the larger exponent wins.
            let (mut a, mut b) = (self.0.iter(), other.0.iter());
            let (mut pa, mut pb) = (a.next(), b.next());
            loop {
                match (pa, pb) {
                    (None, None) => return Ordering::Equal,
                    (Some(&(_, ea)), None) => return ea.cmp(&0),
                    (None, Some(&(_, eb))) => return 0.cmp(&eb),
                    (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                        Ordering::Less => return ea.cmp(&0),
                        Ordering::Greater => return 0.cmp(&eb),
                        Ordering::Equal => {
                            if ea != eb {
                                return ea.cmp(&eb);
                            }
                            pa = a.next();
                            pb = b.next();
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, (v, e)) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> VarKey {
        VarKey::X(0, 0, 0)
    }
    fn y() -> VarKey {
        VarKey::X(0, 0, -1)
    }

    #[test]
    fn grlex_degree_first() {
        let x2 = Exponents::power(x(), 2);
        let xy = Exponents::from_pairs([(x(), 1), (y(), 1)]);
        let y3 = Exponents::power(y(), 3);
        assert!(y3 > x2);
        // x(0,0,-1) sorts before x(0,0,0), so it leads at equal degree.
        assert!(Exponents::power(y(), 2) > xy);
        assert!(xy > x2);
    }

    #[test]
    fn negative_exponents_compare_densely() {
        let a = Exponents::from_pairs([(y(), -1), (x(), 2)]);
        let b = Exponents::from_pairs([(x(), 1)]);
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(b.cmp(&a), Ordering::Greater);
    }

    #[test]
    fn merge_cancels() {
        let a = Exponents::from_pairs([(x(), 1), (y(), 2)]);
        let b = Exponents::from_pairs([(x(), -1)]);
        assert_eq!(a.mul(&b), Exponents::power(y(), 2));
        assert!(a.mul(&a.inverse()).is_one());
    }

    #[test]
    fn meet_and_divides() {
        let a = Exponents::from_pairs([(x(), 2), (y(), -1)]);
        let b = Exponents::from_pairs([(x(), 1)]);
        assert_eq!(a.meet(&b), Exponents::from_pairs([(x(), 1), (y(), -1)]));
        assert!(b.divides(&Exponents::power(x(), 3)));
        assert!(!Exponents::power(x(), 3).divides(&b));
    }
}
