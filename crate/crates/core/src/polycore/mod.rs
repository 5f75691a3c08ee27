//! Exact rationals, monomials, multivariate polynomials over ℚ, the
//! permutation action of S_n, classical symmetric and Specht polynomials,
//! and a text parser/printer for polynomial input.

mod classical;
mod monomial;
mod parser;
mod perm;
mod polynomial;

pub use classical::{elementary_symmetric, jacobian_determinant, power_sum, specht_basis};
pub use monomial::{monomials_of_degree, Monomial};
pub use parser::parse_polynomial;
pub use perm::Permutation;
pub use polynomial::Polynomial;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator; arithmetic never rounds.
pub type Rational = num_rational::BigRational;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(text: &str) -> crate::Result<Rational> {
    let s = text.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let mk_err = || crate::Error::InvalidArgument(format!("invalid rational `{text}`"));
    let value = match body.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.trim().parse().map_err(|_| mk_err())?;
            let d: BigInt = den.trim().parse().map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(crate::Error::InvalidArgument(format!(
                    "zero denominator in `{text}`"
                )));
            }
            Rational::new(n, d)
        }
        None => {
            let n: BigInt = body.trim().parse().map_err(|_| mk_err())?;
            Rational::from_integer(n)
        }
    };
    Ok(if neg { -value } else { value })
}

/// Exact conversion to a non-negative machine integer, if the value is one.
pub fn rational_to_usize(r: &Rational) -> Option<usize> {
    if r.denom().is_one() && !r.is_negative() {
        use num_traits::ToPrimitive;
        r.numer().to_usize()
    } else {
        None
    }
}
