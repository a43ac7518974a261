//! Exact integer Laurent polynomials in one variable.
//!
//! The coefficient map stores no zero coefficients, so equality is plain
//! structural equality. All arithmetic is exact over `i64`; diagram sizes in
//! this crate keep coefficients far below overflow.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Integer Laurent polynomial: a finite map exponent → nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial `coeff * t^exp` (zero coefficient yields the zero polynomial).
    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0) == Some(&1)
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    /// Iterate terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// max_exp − min_exp, or 0 for the zero polynomial.
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    /// Multiply by `t^k`.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    /// Substitute t → 1/t.
    pub fn inverted(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn scaled(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
        }
    }

    /// Evaluate at an integer point. Requires all exponents ≥ 0 unless `t = ±1`.
    pub fn eval(&self, t: i64) -> i64 {
        match t {
            1 => self.terms.values().sum(),
            -1 => self
                .terms
                .iter()
                .map(|(&e, &c)| if e.rem_euclid(2) == 0 { c } else { -c })
                .sum(),
            _ => self
                .terms
                .iter()
                .map(|(&e, &c)| {
                    assert!(e >= 0, "negative exponent at t={t}");
                    c * t.pow(e as u32)
                })
                .sum(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True iff p(t) = p(1/t).
    pub fn is_palindromic(&self) -> bool {
        *self == self.inverted()
    }

    /// Whether every exponent is divisible by `k`; if so, replace t^k by t.
    pub fn compress_exponents(&self, k: i64) -> Option<Self> {
        assert!(k != 0);
        let mut terms = BTreeMap::new();
        for (&e, &c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            terms.insert(e / k, c);
        }
        Some(Self { terms })
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        self.scaled(-1)
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// Text form used by the CLI: `c*t^e` terms from highest to lowest exponent,
/// e.g. `-t^4+t^3+t`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.terms.iter().rev() {
            if c > 0 && !first {
                write!(f, "+")?;
            }
            let unit = c == 1 || c == -1;
            match (unit, e) {
                (false, _) => write!(f, "{c}")?,
                (true, 0) => write!(f, "{c}")?,
                (true, _) => {
                    if c == -1 {
                        write!(f, "-")?;
                    }
                }
            }
            match e {
                0 => {}
                1 => {
                    if !unit {
                        write!(f, "*")?;
                    }
                    write!(f, "t")?;
                }
                _ => {
                    if !unit {
                        write!(f, "*")?;
                    }
                    write!(f, "t^{e}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = LaurentPolynomial::from_terms([(0, 1), (1, 2)]);
        let q = LaurentPolynomial::from_terms([(-1, 1), (1, -2)]);
        let sum = &p + &q;
        assert_eq!(sum, LaurentPolynomial::from_terms([(-1, 1), (0, 1)]));
        let prod = &p * &q;
        // (1 + 2t)(t^-1 - 2t) = t^-1 + 2 - 2t - 4t^2
        assert_eq!(
            prod,
            LaurentPolynomial::from_terms([(-1, 1), (0, 2), (1, -2), (2, -4)])
        );
    }

    #[test]
    fn zero_coefficients_vanish() {
        let mut p = LaurentPolynomial::monomial(3, 5);
        p.add_term(3, -5);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
    }

    #[test]
    fn display_matches_cli_form() {
        // Jones of one trefoil chirality.
        let v = LaurentPolynomial::from_terms([(4, -1), (3, 1), (1, 1)]);
        assert_eq!(v.to_string(), "-t^4+t^3+t");
        let a = LaurentPolynomial::from_terms([(1, -1), (0, 3), (-1, -1)]);
        assert_eq!(a.to_string(), "-t+3-t^-1");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
        assert_eq!(LaurentPolynomial::from_terms([(0, -2)]).to_string(), "-2");
        assert_eq!(
            LaurentPolynomial::from_terms([(2, 3), (0, 1)]).to_string(),
            "3*t^2+1"
        );
    }

    #[test]
    fn eval_and_invert() {
        let p = LaurentPolynomial::from_terms([(-2, 1), (1, 4)]);
        assert_eq!(p.eval(1), 5);
        assert_eq!(p.eval(-1), -3);
        assert_eq!(p.inverted(), LaurentPolynomial::from_terms([(2, 1), (-1, 4)]));
        assert!(!p.is_palindromic());
        let q = LaurentPolynomial::from_terms([(-1, 2), (0, -3), (1, 2)]);
        assert!(q.is_palindromic());
    }
}
