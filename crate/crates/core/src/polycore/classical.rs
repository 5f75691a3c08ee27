use itertools::Itertools;
use num_traits::One;

use super::{Monomial, Polynomial, Rational};
use crate::{Error, Result};

/// Elementary symmetric polynomial e_d in the given subset of variables
/// (1-based indices) of the ambient n-variable ring.
pub fn elementary_symmetric(n: usize, d: usize, subset: &[usize]) -> Result<Polynomial> {
    validate_subset(n, subset)?;
    if d < 1 || d > subset.len() {
        return Err(Error::InvalidArgument(format!(
            "elementary symmetric degree {d} out of 1..={}",
            subset.len()
        )));
    }
    let terms = subset.iter().copied().combinations(d).map(|vars| {
        let mut e = vec![0u32; n];
        for v in vars {
            e[v - 1] = 1;
        }
        (Monomial::new(e), Rational::one())
    });
    Ok(Polynomial::from_terms(n, terms))
}

/// Power sum p_d = Σ x_i^d over the subset.
pub fn power_sum(n: usize, d: usize, subset: &[usize]) -> Result<Polynomial> {
    validate_subset(n, subset)?;
    if subset.is_empty() {
        return Err(Error::InvalidArgument("empty subset for power sum".into()));
    }
    if d < 1 {
        return Err(Error::InvalidArgument("power sum degree must be >= 1".into()));
    }
    let terms = subset.iter().map(|&v| {
        let mut e = vec![0u32; n];
        e[v - 1] = d as u32;
        (Monomial::new(e), Rational::one())
    });
    Ok(Polynomial::from_terms(n, terms))
}

fn validate_subset(n: usize, subset: &[usize]) -> Result<()> {
    for &v in subset {
        if v < 1 || v > n {
            return Err(Error::InvalidArgument(format!(
                "variable index {v} out of 1..{n}"
            )));
        }
    }
    Ok(())
}

/// The Specht polynomials of shape (n−2, 2): the standard basis of the
/// corresponding irreducible inside R_2,
/// {(x1−xj)(x2−xk) : 3 ≤ j < k ≤ n} ∪ {(x1−x2)(x3−xk) : 4 ≤ k ≤ n}.
pub fn specht_basis(n: usize) -> Result<Vec<Polynomial>> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!(
            "shape (n-2,2) needs n >= 4, got {n}"
        )));
    }
    let diff = |a: usize, b: usize| {
        Polynomial::var(n, a)
            .sub(&Polynomial::var(n, b))
            .expect("same ambient")
    };
    let mut out = Vec::new();
    for j in 3..=n {
        for k in (j + 1)..=n {
            out.push(diff(1, j).mul(&diff(2, k)).expect("same ambient"));
        }
    }
    for k in 4..=n {
        out.push(diff(1, 2).mul(&diff(3, k)).expect("same ambient"));
    }
    Ok(out)
}

/// Exact determinant of the Jacobian matrix (∂f_i/∂x_j) of n polynomials
/// in n variables. Laplace expansion with memoization over column
/// subsets; intended for n ≤ 8.
pub fn jacobian_determinant(fs: &[Polynomial]) -> Result<Polynomial> {
    let n = match fs.first() {
        Some(f) => f.n_vars(),
        None => return Err(Error::InvalidArgument("no polynomials given".into())),
    };
    if fs.len() != n {
        return Err(Error::GeneratorCount {
            expected: n,
            got: fs.len(),
        });
    }
    for f in fs {
        if f.n_vars() != n {
            return Err(Error::AmbientMismatch(n, f.n_vars()));
        }
    }
    let entries: Vec<Vec<Polynomial>> = fs
        .iter()
        .map(|f| (1..=n).map(|j| f.partial_derivative(j)).collect())
        .collect();
    Ok(determinant(&entries, n))
}

fn determinant(entries: &[Vec<Polynomial>], n: usize) -> Polynomial {
    // memo[mask] = determinant of the submatrix using the last popcount(mask)
    // rows and the column set given by mask.
    let mut memo: Vec<Option<Polynomial>> = vec![None; 1 << n];
    memo[0] = Some(Polynomial::one(n));
    det_rec(entries, n, (1 << n) - 1, &mut memo)
}

fn det_rec(entries: &[Vec<Polynomial>], n: usize, mask: usize, memo: &mut Vec<Option<Polynomial>>) -> Polynomial {
    if let Some(p) = &memo[mask] {
        return p.clone();
    }
    let cols: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
    let row = n - cols.len();
    let mut acc = Polynomial::zero(n);
    for (pos, &col) in cols.iter().enumerate() {
        let entry = &entries[row][col];
        if entry.is_zero() {
            continue;
        }
        let minor = det_rec(entries, n, mask & !(1 << col), memo);
        let signed = if pos % 2 == 0 {
            entry.mul(&minor).expect("same ambient")
        } else {
            entry.mul(&minor).expect("same ambient").neg()
        };
        acc = acc.add(&signed).expect("same ambient");
    }
    memo[mask] = Some(acc.clone());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, n).unwrap()
    }

    #[test]
    fn e2_in_three_variables() {
        let e2 = elementary_symmetric(3, 2, &[1, 2, 3]).unwrap();
        assert_eq!(e2, p("x1*x2 + x1*x3 + x2*x3", 3));
    }

    #[test]
    fn e1_is_the_variable_sum() {
        let e1 = elementary_symmetric(4, 1, &[1, 2, 3, 4]).unwrap();
        assert_eq!(e1, p("x1 + x2 + x3 + x4", 4));
    }

    #[test]
    fn elementary_term_count_is_binomial() {
        // number of terms of e_d over a subset of size s is C(s, d)
        let subset = [2, 3, 4, 5, 6];
        for d in 1..=5 {
            let e = elementary_symmetric(6, d, &subset).unwrap();
            let binom = (0..d).fold(1usize, |acc, i| acc * (5 - i) / (i + 1));
            assert_eq!(e.num_terms(), binom, "d={d}");
        }
        assert!(elementary_symmetric(6, 6, &subset).is_err());
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(2, 2, &[1, 2]).unwrap(), p("x1^2 + x2^2", 2));
        assert_eq!(
            power_sum(3, 1, &[1, 2, 3]).unwrap(),
            elementary_symmetric(3, 1, &[1, 2, 3]).unwrap()
        );
        assert!(power_sum(3, 2, &[]).is_err());
    }

    #[test]
    fn newton_identity_p3() {
        // p3 = e1^3 - 3 e1 e2 + 3 e3, expanded symbolically
        for n in 3..=6 {
            let all: Vec<usize> = (1..=n).collect();
            let e1 = elementary_symmetric(n, 1, &all).unwrap();
            let e2 = elementary_symmetric(n, 2, &all).unwrap();
            let e3 = elementary_symmetric(n, 3, &all).unwrap();
            let p3 = power_sum(n, 3, &all).unwrap();
            let rhs = e1
                .pow(3)
                .sub(&e1.mul(&e2).unwrap().scale(&crate::polycore::rat(3)))
                .unwrap()
                .add(&e3.scale(&crate::polycore::rat(3)))
                .unwrap();
            assert_eq!(p3, rhs, "n={n}");
        }
    }

    #[test]
    fn specht_shape_counts() {
        assert!(specht_basis(3).is_err());
        let s4 = specht_basis(4).unwrap();
        assert_eq!(s4.len(), 2);
        assert_eq!(s4[0], p("x1*x2 - x1*x4 - x2*x3 + x3*x4", 4));
        assert_eq!(s4[1], p("x1*x3 - x1*x4 - x2*x3 + x2*x4", 4));
        assert_eq!(specht_basis(5).unwrap().len(), 5);
        assert_eq!(specht_basis(6).unwrap().len(), 9);
        for n in 4..=7 {
            assert_eq!(specht_basis(n).unwrap().len(), n * (n - 3) / 2);
        }
    }

    #[test]
    fn jacobian_of_squares_is_monomial() {
        let fs: Vec<Polynomial> = (1..=3).map(|i| p(&format!("x{i}^2"), 3)).collect();
        assert_eq!(jacobian_determinant(&fs).unwrap(), p("8*x1*x2*x3", 3));
    }

    #[test]
    fn jacobian_with_repeated_rows_vanishes() {
        let f = p("x1^2 + x2*x3", 3);
        let g = p("x2^2 - x1*x3", 3);
        let fs = vec![f.clone(), f, g];
        assert!(jacobian_determinant(&fs).unwrap().is_zero());
    }

    #[test]
    fn jacobian_requires_square_system() {
        let fs = vec![p("x1", 2)];
        assert!(jacobian_determinant(&fs).is_err());
    }
}
