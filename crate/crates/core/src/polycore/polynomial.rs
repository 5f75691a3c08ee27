use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{format_rational, Monomial, Rational};
use crate::{Error, Result};

/// A multivariate polynomial over ℚ in a fixed number of variables.
/// Terms are kept in a sorted map keyed by graded-lex order; zero
/// coefficients are never stored, so equality is term-map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, Rational::one())
    }

    /// x_i (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(Monomial::var(n, i), Rational::one());
        p
    }

    pub fn monomial(n: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.n_vars(), n);
        let mut p = Polynomial::zero(n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n_vars(), n);
            p.add_term(m, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The common degree of all terms, if the polynomial is homogeneous.
    /// The zero polynomial counts as homogeneous of every degree (returns
    /// Some(0) by convention only through [`Polynomial::is_zero`] checks;
    /// here it yields None).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let first = it.next()?.degree();
        for m in it {
            if m.degree() != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn homogeneous_component(&self, d: usize) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let mut out = Polynomial::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb);
            }
        }
        Ok(out)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(ma, ca)| (ma.mul(m), ca.clone() * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Polynomial {
        let mut out = Polynomial::one(self.n);
        for _ in 0..k {
            out = out.mul(self).expect("same ambient");
        }
        out
    }

    /// Partial derivative with respect to x_i (1-based).
    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let dm = m.div_var(i).expect("positive exponent");
            out.add_term(dm, c.clone() * Rational::from_integer(e.into()));
        }
        out
    }

    /// Ring-homomorphic substitution x_var ↦ replacement. The replacement
    /// must be homogeneous of degree 1 (or zero) so homogeneity is
    /// preserved degree for degree.
    pub fn substitute_linear(&self, var: usize, replacement: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(replacement)?;
        if !replacement.is_zero() && replacement.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidArgument(
                "replacement must be homogeneous of degree 1 or zero".into(),
            ));
        }
        let mut out = Polynomial::zero(self.n);
        // Powers of the replacement are computed once per needed exponent.
        let max_e = self
            .terms
            .keys()
            .map(|m| m.exponent(var))
            .max()
            .unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Polynomial::one(self.n));
        for k in 1..=max_e as usize {
            let next = powers[k - 1].mul(replacement)?;
            powers.push(next);
        }
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            let mut rest_exp = m.exponents().to_vec();
            rest_exp[var - 1] = 0;
            let rest = Monomial::new(rest_exp);
            let contrib = powers[e as usize].mul_monomial(&rest, c);
            out = out.add(&contrib)?;
        }
        Ok(out)
    }

    /// Evaluates at a rational point (for test oracles).
    pub fn evaluate(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n);
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }
}

/// Prints terms leading-first (graded-lex descending); coefficient 1 is
/// suppressed except on the constant term. `parse_polynomial` accepts
/// everything this emits.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        use num_traits::Signed;
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, ratio};

    fn p(text: &str, n: usize) -> Polynomial {
        crate::polycore::parse_polynomial(text, n).unwrap()
    }

    #[test]
    fn multiply_difference_of_squares() {
        let a = p("x1 + x2", 2);
        let b = p("x1 - x2", 2);
        assert_eq!(a.mul(&b).unwrap(), p("x1^2 - x2^2", 2));
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = p("3*x1^2 - 1/2*x2*x3", 3);
        let sum = a.add(&a.scale(&rat(-1))).unwrap();
        assert!(sum.is_zero());
    }

    #[test]
    fn e1_squared_expansion() {
        let e1 = p("x1 + x2 + x3", 3);
        let sq = e1.mul(&e1).unwrap();
        let expected = p(
            "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3",
            3,
        );
        assert_eq!(sq, expected);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = p("x1", 2);
        let b = p("x1", 3);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn homogeneous_degree_detection() {
        assert_eq!(p("x1^2 + x2^2", 2).homogeneous_degree(), Some(2));
        assert_eq!(p("x1^2 + x2", 2).homogeneous_degree(), None);
        assert!(p("0", 2).is_homogeneous());
    }

    #[test]
    fn substitute_square_expansion() {
        // x1^2 under x1 ↦ -(x2+x3) becomes x2^2 + 2*x2*x3 + x3^2
        let q = p("x1^2", 3);
        let repl = p("-x2 - x3", 3);
        assert_eq!(
            q.substitute_linear(1, &repl).unwrap(),
            p("x2^2 + 2*x2*x3 + x3^2", 3)
        );
    }

    #[test]
    fn substitute_absent_variable_is_identity() {
        let q = p("x2^2 + x3^2", 3);
        let repl = p("x2 + x3", 3);
        assert_eq!(q.substitute_linear(1, &repl).unwrap(), q);
    }

    #[test]
    fn substitute_kills_e1_by_construction() {
        let e1 = p("x1 + x2 + x3 + x4", 4);
        let repl = p("-x2 - x3 - x4", 4);
        assert!(e1.substitute_linear(1, &repl).unwrap().is_zero());
    }

    #[test]
    fn substitute_rejects_nonlinear_replacement() {
        let q = p("x1", 2);
        assert!(q.substitute_linear(1, &p("x2^2", 2)).is_err());
    }

    #[test]
    fn partial_derivative_basic() {
        let q = p("x1^3 + 2*x1*x2", 2);
        assert_eq!(q.partial_derivative(1), p("3*x1^2 + 2*x2", 2));
        assert_eq!(q.partial_derivative(2), p("2*x1", 2));
    }

    #[test]
    fn display_suppresses_unit_coefficients() {
        assert_eq!(p("1*x1 + 1", 2).to_string(), "x1 + 1");
        assert_eq!(p("-x1^2 + 3/2*x2^2", 2).to_string(), "-x1^2 + 3/2*x2^2");
        assert_eq!(Polynomial::zero(2).to_string(), "0");
        assert_eq!(
            Polynomial::constant(2, ratio(-1, 3)).to_string(),
            "-1/3"
        );
    }
}
