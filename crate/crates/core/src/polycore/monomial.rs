use std::cmp::Ordering;
use std::fmt;

/// A monomial in a fixed number of variables, stored as its exponent
/// vector. The total degree is cached at construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { exponents, degree }
    }

    /// The constant monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// x_i (1-based index) in `n` variables.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index out of range");
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Monomial::new(e)
    }

    pub fn n_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Exponent of x_i (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.exponents[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exponents.len(), other.exponents.len());
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exponents,
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().map(|e| e * k).collect(),
            degree: self.degree * k,
        }
    }

    /// Divides by x_i once; None if the exponent is zero.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponents[i - 1] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[i - 1] -= 1;
        Some(Monomial::new(e))
    }
}

/// Graded lexicographic order with x1 > x2 > ... > xn. Higher degree
/// compares greater; within a degree the first differing exponent decides.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (idx, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", idx + 1)?;
            } else {
                write!(f, "x{}^{}", idx + 1, e)?;
            }
        }
        Ok(())
    }
}

/// All monomials of total degree `d` in `n` variables, in graded-lex
/// descending order (x1^d first). This is the column order used for all
/// row reductions.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(&mut out, &mut current, 0, d as u32, n);
    out
}

fn fill(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32, n: usize) {
    if pos == n - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    let mut e = remaining;
    loop {
        current[pos] = e;
        fill(out, current, pos + 1, remaining - e, n);
        if e == 0 {
            break;
        }
        e -= 1;
    }
    current[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_count_matches_binomial() {
        // dim R_d = C(n+d-1, d)
        let binom = |n: u64, k: u64| -> u64 {
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n - i) / (i + 1);
            }
            r
        };
        for n in 1..=6usize {
            for d in 0..=6usize {
                let count = monomials_of_degree(n, d).len() as u64;
                assert_eq!(count, binom((n + d - 1) as u64, d as u64), "n={n} d={d}");
            }
        }
    }

    #[test]
    fn enumeration_is_strictly_descending() {
        for n in 2..=5 {
            for d in 1..=5 {
                let ms = monomials_of_degree(n, d);
                for w in ms.windows(2) {
                    assert!(w[0] > w[1]);
                }
            }
        }
    }

    #[test]
    fn graded_lex_examples() {
        // x1^2 > x1*x2 > x2^2 in two variables, and any degree-2 monomial
        // beats any degree-1 monomial.
        let x1x1 = Monomial::new(vec![2, 0]);
        let x1x2 = Monomial::new(vec![1, 1]);
        let x2x2 = Monomial::new(vec![0, 2]);
        let x1 = Monomial::new(vec![1, 0]);
        assert!(x1x1 > x1x2 && x1x2 > x2x2 && x2x2 > x1);
    }
}
