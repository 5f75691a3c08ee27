//! Weak and strong Lefschetz checks for a graded quotient or any
//! ×ℓ-stable family of graded subspaces of one, plus Sperner numbers and
//! the coinvariant-dimension certificate.

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use serde::Serialize;

use crate::polycore::{rat, Polynomial, Rational};
use crate::quotient::rref::{sparse_from_dense, Echelon};
use crate::quotient::GradedQuotient;
use crate::{Error, Result};

/// A graded subspace V = ⊕V_d of a built quotient, each piece given by a
/// basis of coordinate vectors in the standard basis of A_d. The family
/// must be ×ℓ-stable for the ℓ under test; this is checked, not assumed.
pub struct GradedSubspaceFamily<'a> {
    quotient: &'a GradedQuotient,
    bases: Vec<Vec<Vec<Rational>>>,
}

impl<'a> GradedSubspaceFamily<'a> {
    /// The full quotient as a family: V_d = A_d with the standard basis.
    pub fn full(quotient: &'a GradedQuotient) -> Self {
        let bases = (0..=quotient.top_degree())
            .map(|d| {
                let dim = quotient.dim(d).expect("built degree");
                (0..dim)
                    .map(|i| {
                        let mut v = vec![Rational::zero(); dim];
                        v[i] = rat(1);
                        v
                    })
                    .collect()
            })
            .collect();
        GradedSubspaceFamily { quotient, bases }
    }

    /// A family from explicit per-degree bases (index = degree).
    pub fn from_bases(quotient: &'a GradedQuotient, bases: Vec<Vec<Vec<Rational>>>) -> Self {
        GradedSubspaceFamily { quotient, bases }
    }

    pub fn quotient(&self) -> &GradedQuotient {
        self.quotient
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }

    pub fn basis(&self, d: usize) -> &[Vec<Rational>] {
        static EMPTY: &[Vec<Rational>] = &[];
        self.bases.get(d).map(|b| b.as_slice()).unwrap_or(EMPTY)
    }

    /// First and last degrees with a nonzero piece, if any.
    pub fn support(&self) -> Option<(usize, usize)> {
        let first = self.bases.iter().position(|b| !b.is_empty())?;
        let last = self.bases.iter().rposition(|b| !b.is_empty())?;
        Some((first, last))
    }

    fn span_echelon(&self, d: usize) -> Echelon {
        let ncols = self.quotient.dim(d).unwrap_or(0);
        let mut ech = Echelon::new(ncols);
        for v in self.basis(d) {
            ech.insert(sparse_from_dense(v));
        }
        ech
    }

    /// Verifies ×ℓ maps each piece into the span of the next. Returns the
    /// witness degree on failure.
    pub fn check_stability(&self, ell: &Polynomial) -> Result<()> {
        let Some((a, b)) = self.support() else {
            return Ok(());
        };
        if ell.is_zero() {
            return Ok(());
        }
        for d in a..=b {
            if d + 1 > self.quotient.top_degree() {
                // Callers build one degree past the support; if not, the
                // unverifiable end step is skipped.
                continue;
            }
            let target = self.span_echelon(d + 1);
            for v in self.basis(d) {
                let image = self.quotient.multiply_class(d, v, ell)?;
                if !target.contains(sparse_from_dense(&image)) {
                    return Err(Error::NotStable(d));
                }
            }
        }
        Ok(())
    }

    /// Rank of ×(ell) : V_i → A_{i+deg ell} restricted to the family.
    fn map_rank(&self, ell: &Polynomial, i: usize) -> Result<usize> {
        let k = if ell.is_zero() {
            return Ok(0);
        } else {
            ell.homogeneous_degree().ok_or(Error::NotHomogeneous)?
        };
        let ncols = self.quotient.dim(i + k)?;
        let mut ech = Echelon::new(ncols);
        for v in self.basis(i) {
            let image = self.quotient.multiply_class(i, v, ell)?;
            ech.insert(sparse_from_dense(&image));
        }
        Ok(ech.rank())
    }
}

/// Outcome of the weak/strong Lefschetz checks for one linear form.
#[derive(Debug, Clone, Serialize)]
pub struct LefschetzReport {
    pub element: String,
    pub weak: bool,
    pub strong: bool,
    /// c = initial + end degree of the family.
    pub c: usize,
    /// Ranks of the one-step maps ×ℓ : V_d → V_{d+1}, as (d, rank).
    pub ranks: Vec<(usize, usize)>,
    pub failures: Vec<String>,
    pub symmetric_hilbert: bool,
}

/// Computes both the weak and the strong Lefschetz data for ℓ on the
/// family. ℓ must be homogeneous of degree 1 (the zero form is allowed
/// and fails weakly wherever two consecutive pieces are nonzero).
pub fn lefschetz_report(
    family: &GradedSubspaceFamily<'_>,
    ell: &Polynomial,
) -> Result<LefschetzReport> {
    if !ell.is_zero() && ell.homogeneous_degree() != Some(1) {
        return Err(Error::InvalidArgument(
            "Lefschetz element must be homogeneous of degree 1".into(),
        ));
    }
    family.check_stability(ell)?;
    let element = ell.to_string();
    let Some((a, b)) = family.support() else {
        return Ok(LefschetzReport {
            element,
            weak: true,
            strong: true,
            c: 0,
            ranks: vec![],
            failures: vec![],
            symmetric_hilbert: true,
        });
    };
    let dims = family.dims();
    let dim_at = |d: usize| dims.get(d).copied().unwrap_or(0);
    let c = a + b;
    let mut failures = Vec::new();

    let symmetric_hilbert = (a..=b).all(|d| dim_at(d) == dim_at(c - d));
    if !symmetric_hilbert {
        failures.push("hilbert function is not symmetric about c/2".to_string());
    }

    let mut weak = true;
    let mut ranks = Vec::new();
    for d in a..b {
        let rank = if ell.is_zero() {
            0
        } else {
            family.map_rank(ell, d)?
        };
        ranks.push((d, rank));
        let full = rank == dim_at(d).min(dim_at(d + 1));
        if !full {
            weak = false;
            failures.push(format!(
                "weak: map V_{d} -> V_{} has rank {rank}, expected {}",
                d + 1,
                dim_at(d).min(dim_at(d + 1))
            ));
        }
    }

    let mut strong = true;
    for i in a..=c / 2 {
        let j = c - i;
        if dim_at(i) != dim_at(j) {
            strong = false;
            failures.push(format!(
                "strong: dim V_{i} = {} differs from dim V_{j} = {}",
                dim_at(i),
                dim_at(j)
            ));
            continue;
        }
        if i == j || dim_at(i) == 0 {
            continue;
        }
        let power = ell.pow(j - i);
        let rank = if power.is_zero() {
            0
        } else {
            family.map_rank(&power, i)?
        };
        if rank != dim_at(i) {
            strong = false;
            failures.push(format!(
                "strong: power map V_{i} -> V_{j} has rank {rank}, expected {}",
                dim_at(i)
            ));
        }
    }

    Ok(LefschetzReport {
        element,
        weak,
        strong,
        c,
        ranks,
        failures,
        symmetric_hilbert,
    })
}

/// Weak-Lefschetz decision (full report computed; `weak` is the verdict).
pub fn is_weak_lefschetz(
    family: &GradedSubspaceFamily<'_>,
    ell: &Polynomial,
) -> Result<LefschetzReport> {
    lefschetz_report(family, ell)
}

/// Strong-Lefschetz decision (full report computed; `strong` is the verdict).
pub fn is_strong_lefschetz(
    family: &GradedSubspaceFamily<'_>,
    ell: &Polynomial,
) -> Result<LefschetzReport> {
    lefschetz_report(family, ell)
}

/// Sperner number: the maximum of dim V_d over all degrees.
pub fn sperner_number(family: &GradedSubspaceFamily<'_>) -> usize {
    family.dims().into_iter().max().unwrap_or(0)
}

/// dim_K(A/ℓA) = Σ_d (dim A_d − rank(×ℓ : A_{d−1} → A_d)). Equality with
/// the Sperner number certifies the weak Lefschetz property.
pub fn coinvariant_dimension(q: &GradedQuotient, ell: &Polynomial) -> Result<usize> {
    if !ell.is_zero() && ell.homogeneous_degree() != Some(1) {
        return Err(Error::InvalidArgument(
            "coinvariant dimension needs a degree-1 form".into(),
        ));
    }
    let family = GradedSubspaceFamily::full(q);
    let mut total = 0usize;
    for d in 0..=q.top_degree() {
        let dim = q.dim(d)?;
        let rank = if d == 0 || ell.is_zero() {
            0
        } else {
            family.map_rank(ell, d - 1)?
        };
        total += dim - rank;
    }
    Ok(total)
}

/// Best-effort search for a strong Lefschetz element: e₁ first, then 20
/// deterministic pseudo-random rational linear forms from a fixed seed.
pub fn find_strong_lefschetz(
    family: &GradedSubspaceFamily<'_>,
) -> Result<Option<(Polynomial, LefschetzReport)>> {
    find_strong_lefschetz_with(family, true)
}

/// Search variant that can leave e₁ out of the candidate list (used when
/// e₁² lies in the ideal, where e₁ cannot work).
pub fn find_strong_lefschetz_with(
    family: &GradedSubspaceFamily<'_>,
    include_e1: bool,
) -> Result<Option<(Polynomial, LefschetzReport)>> {
    let n = family.quotient().n_vars();
    let mut candidates = Vec::new();
    if include_e1 {
        let e1 = crate::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())?;
        candidates.push(e1);
    }
    let target = candidates.len() + 20;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x4c_45_46_46);
    while candidates.len() < target {
        let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        if coeffs.iter().all(|&c| c == 0) {
            continue;
        }
        let ell = Polynomial::from_terms(
            n,
            coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, &c)| (crate::polycore::Monomial::var(n, i + 1), rat(c))),
        );
        candidates.push(ell);
    }
    for ell in candidates {
        match lefschetz_report(family, &ell) {
            Ok(report) if report.strong => return Ok(Some((ell, report))),
            Ok(_) => {}
            Err(Error::NotStable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}
