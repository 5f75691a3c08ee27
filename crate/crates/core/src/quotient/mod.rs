//! Degree-by-degree construction of A = R/I for a homogeneous ideal I by
//! exact row reduction: Hilbert functions, complete-intersection
//! detection, normal forms, multiplication matrices, and socle checks.

pub mod rref;

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::polycore::{monomials_of_degree, Monomial, Polynomial, Rational};
use crate::{Error, Result};
use rref::{Echelon, SparseVec};

/// A homogeneous ideal given by generators, with ambient variable count
/// and generator degrees recorded.
#[derive(Debug, Clone)]
pub struct GradedIdealPresentation {
    n: usize,
    generators: Vec<Polynomial>,
    degrees: Vec<usize>,
}

impl GradedIdealPresentation {
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut degrees = Vec::with_capacity(generators.len());
        for g in &generators {
            if g.n_vars() != n {
                return Err(Error::AmbientMismatch(n, g.n_vars()));
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator);
            }
            match g.homogeneous_degree() {
                Some(d) => degrees.push(d),
                None => return Err(Error::NotHomogeneous),
            }
        }
        Ok(GradedIdealPresentation {
            n,
            generators,
            degrees,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Socle degree bound Σ(deg f_i − 1) of a complete intersection cut
    /// out by these generators.
    pub fn ci_socle_degree(&self) -> usize {
        self.degrees.iter().map(|d| d - 1).sum()
    }
}

/// One graded piece: the monomial basis of R_d (graded-lex descending),
/// the reduced echelon basis of I_d, and the standard monomials spanning
/// A_d.
#[derive(Debug, Clone)]
pub struct DegreePiece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ideal: Echelon,
    standard_cols: Vec<usize>,
    std_position: HashMap<usize, usize>,
}

impl DegreePiece {
    fn build(n: usize, d: usize, pres: &GradedIdealPresentation) -> Self {
        let monomials = monomials_of_degree(n, d);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut ideal = Echelon::new(monomials.len());
        for (g, &gd) in pres.generators.iter().zip(&pres.degrees) {
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(n, d - gd) {
                let row: SparseVec = {
                    let mut entries: Vec<(usize, Rational)> = g
                        .terms()
                        .map(|(gm, c)| (index[&gm.mul(&m)], c.clone()))
                        .collect();
                    entries.sort_unstable_by_key(|(c, _)| *c);
                    entries
                };
                ideal.insert(row);
            }
        }
        let standard_cols = ideal.free_cols();
        let std_position = standard_cols
            .iter()
            .enumerate()
            .map(|(pos, col)| (*col, pos))
            .collect();
        DegreePiece {
            monomials,
            index,
            ideal,
            standard_cols,
            std_position,
        }
    }

    pub fn dim_ambient(&self) -> usize {
        self.monomials.len()
    }

    pub fn dim_quotient(&self) -> usize {
        self.standard_cols.len()
    }

    pub fn ideal(&self) -> &Echelon {
        &self.ideal
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Standard monomials (the basis of A_d), in graded-lex descending order.
    pub fn standard_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.standard_cols.iter().map(|c| &self.monomials[*c])
    }
}

/// A graded Artinian quotient A = R/I built up to a fixed top degree.
/// Immutable once built; all queries are pure.
#[derive(Debug, Clone)]
pub struct GradedQuotient {
    pres: GradedIdealPresentation,
    top_degree: usize,
    pieces: Vec<DegreePiece>,
}

/// The sequence d ↦ dim A_d with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFunction(pub Vec<usize>);

impl HilbertFunction {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn is_symmetric(&self) -> bool {
        let v = &self.0;
        (0..v.len()).all(|i| v[i] == v[v.len() - 1 - i])
    }
}

/// Builds A = R/I degree by degree: I_d is spanned by {m·f_i} with
/// deg m = d − deg f_i, reduced to echelon form; the standard monomials
/// (non-pivot columns) form the basis of A_d.
pub fn build_quotient(pres: GradedIdealPresentation, top_degree: usize) -> Result<GradedQuotient> {
    if let Some(&max) = pres.degrees.iter().max() {
        if top_degree < max {
            return Err(Error::InvalidArgument(format!(
                "top degree {top_degree} below max generator degree {max}"
            )));
        }
    }
    let n = pres.n;
    // degree pieces are independent of each other; build them in parallel
    use rayon::prelude::*;
    let pieces = (0..=top_degree)
        .into_par_iter()
        .map(|d| DegreePiece::build(n, d, &pres))
        .collect();
    Ok(GradedQuotient {
        pres,
        top_degree,
        pieces,
    })
}

/// Outcome of the Artinian-ness test for n forms in n variables.
#[derive(Debug, Clone, Serialize)]
pub struct CiReport {
    pub is_ci: bool,
    pub socle_degree: usize,
    /// First degree where dim A_d deviates from the complete-intersection
    /// Hilbert series, with (degree, expected, actual).
    pub first_deviation: Option<(usize, usize, usize)>,
}

impl GradedQuotient {
    pub fn presentation(&self) -> &GradedIdealPresentation {
        &self.pres
    }

    pub fn n_vars(&self) -> usize {
        self.pres.n
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn piece(&self, d: usize) -> Result<&DegreePiece> {
        self.pieces
            .get(d)
            .ok_or(Error::DegreeOutOfRange(d, self.top_degree))
    }

    pub fn dim(&self, d: usize) -> Result<usize> {
        Ok(self.piece(d)?.dim_quotient())
    }

    pub fn hilbert_function(&self) -> HilbertFunction {
        let mut values: Vec<usize> = self.pieces.iter().map(|p| p.dim_quotient()).collect();
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFunction(values)
    }

    /// Standard monomial basis of A_d.
    pub fn basis(&self, d: usize) -> Result<Vec<Monomial>> {
        Ok(self.piece(d)?.standard_monomials().cloned().collect())
    }

    /// Normal form of a homogeneous polynomial as coordinates in the
    /// standard-monomial basis of its degree. The zero polynomial reduces
    /// to the zero vector of A_0.
    pub fn normal_form(&self, p: &Polynomial) -> Result<(usize, Vec<Rational>)> {
        if p.is_zero() {
            return Ok((0, vec![Rational::zero(); self.dim(0)?]));
        }
        let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        Ok((d, self.normal_form_in_degree(d, p)?))
    }

    /// Normal form of a polynomial that is zero or homogeneous of degree d.
    pub fn normal_form_in_degree(&self, d: usize, p: &Polynomial) -> Result<Vec<Rational>> {
        if !p.is_zero() && p.homogeneous_degree() != Some(d) {
            return Err(Error::NotHomogeneous);
        }
        let piece = self.piece(d)?;
        let row = self.to_row(d, p)?;
        let reduced = piece.ideal.reduce(row);
        let mut coords = vec![Rational::zero(); piece.dim_quotient()];
        for (col, c) in reduced {
            let pos = piece.std_position[&col];
            coords[pos] = c;
        }
        Ok(coords)
    }

    /// Sparse R_d coordinate row of a homogeneous polynomial.
    pub fn to_row(&self, d: usize, p: &Polynomial) -> Result<SparseVec> {
        let piece = self.piece(d)?;
        let mut entries: Vec<(usize, Rational)> = Vec::with_capacity(p.num_terms());
        for (m, c) in p.terms() {
            let idx = piece
                .monomial_index(m)
                .ok_or_else(|| Error::InvalidArgument(format!("monomial {m} not of degree {d}")))?;
            entries.push((idx, c.clone()));
        }
        entries.sort_unstable_by_key(|(c, _)| *c);
        Ok(entries)
    }

    /// The polynomial Σ coords_i · (i-th standard monomial of A_d): the
    /// canonical representative of a residue class.
    pub fn lift(&self, d: usize, coords: &[Rational]) -> Result<Polynomial> {
        let piece = self.piece(d)?;
        assert_eq!(coords.len(), piece.dim_quotient());
        Ok(Polynomial::from_terms(
            self.pres.n,
            piece
                .standard_monomials()
                .zip(coords)
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    /// Multiplication of a residue class (coords in A_d) by a homogeneous
    /// polynomial of degree k, landing in A_{d+k}.
    pub fn multiply_class(
        &self,
        d: usize,
        coords: &[Rational],
        by: &Polynomial,
    ) -> Result<Vec<Rational>> {
        let k = if by.is_zero() {
            0
        } else {
            by.homogeneous_degree().ok_or(Error::NotHomogeneous)?
        };
        let rep = self.lift(d, coords)?;
        let product = rep.mul(by)?;
        self.normal_form_in_degree(d + k, &product)
    }

    /// Exact matrix of ×ell : A_d → A_{d+k} in the standard bases, stored
    /// column-major: column j is the image of the j-th standard monomial.
    pub fn mult_map_matrix(&self, ell: &Polynomial, d: usize) -> Result<ExactMatrix> {
        let k = if ell.is_zero() {
            0
        } else {
            ell.homogeneous_degree().ok_or(Error::NotHomogeneous)?
        };
        if d + k > self.top_degree {
            return Err(Error::DegreeOutOfRange(d + k, self.top_degree));
        }
        let source = self.piece(d)?;
        let target_dim = self.dim(d + k)?;
        let mut cols = Vec::with_capacity(source.dim_quotient());
        for m in source.standard_monomials() {
            let image = ell.mul_monomial(m, &Rational::one());
            cols.push(self.normal_form_in_degree(d + k, &image)?);
        }
        Ok(ExactMatrix::from_columns(target_dim, cols))
    }

    /// Artinian-ness check for exactly n homogeneous forms in n variables:
    /// builds a fresh quotient to degree D = Σ(deg f_i − 1) + 1 and tests
    /// dim A_D = 0, which for such systems is equivalent to the generators
    /// forming a regular sequence.
    pub fn complete_intersection_report(pres: &GradedIdealPresentation) -> Result<CiReport> {
        let n = pres.n;
        if pres.generators.len() != n {
            return Err(Error::GeneratorCount {
                expected: n,
                got: pres.generators.len(),
            });
        }
        let socle = pres.ci_socle_degree();
        let q = build_quotient(pres.clone(), socle + 1)?;
        let expected = ci_hilbert_series(&pres.degrees, socle + 1);
        let mut first_deviation = None;
        for d in 0..=socle + 1 {
            let actual = q.dim(d)?;
            let want = expected.get(d).copied().unwrap_or(0);
            if actual != want {
                first_deviation = Some((d, want, actual));
                break;
            }
        }
        Ok(CiReport {
            is_ci: q.dim(socle + 1)? == 0,
            socle_degree: socle,
            first_deviation,
        })
    }

    /// True iff `candidate` (homogeneous of the socle degree c) spans the
    /// one-dimensional socle: nonzero normal form, dim A_c = 1, and every
    /// x_i · candidate lies in the ideal.
    pub fn socle_check(&self, candidate: &Polynomial) -> Result<bool> {
        let c = self.pres.ci_socle_degree();
        if candidate.is_zero() {
            return Ok(false);
        }
        if candidate.homogeneous_degree() != Some(c) {
            return Err(Error::InvalidArgument(format!(
                "socle candidate must be homogeneous of degree {c}"
            )));
        }
        if self.dim(c)? != 1 {
            return Ok(false);
        }
        let nf = self.normal_form_in_degree(c, candidate)?;
        if nf.iter().all(|v| v.is_zero()) {
            return Ok(false);
        }
        if c + 1 > self.top_degree {
            return Err(Error::DegreeOutOfRange(c + 1, self.top_degree));
        }
        for i in 1..=self.pres.n {
            let xi = Polynomial::var(self.pres.n, i);
            let prod = candidate.mul(&xi)?;
            let up = self.normal_form_in_degree(c + 1, &prod)?;
            if !up.iter().all(|v| v.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Coefficients of Π_i (1 + T + ... + T^{d_i − 1}) up to degree `top`:
/// the Hilbert series of a complete intersection of forms of degrees d_i.
pub fn ci_hilbert_series(degrees: &[usize], top: usize) -> Vec<usize> {
    let mut coeffs = vec![0usize; top + 1];
    coeffs[0] = 1;
    for &g in degrees {
        let mut next = vec![0usize; top + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for e in 0..g {
                if i + e <= top {
                    next[i + e] += c;
                }
            }
        }
        coeffs = next;
    }
    coeffs
}

/// Dense exact matrix, row-major. Columns are images of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl ExactMatrix {
    pub fn from_columns(rows: usize, columns: Vec<Vec<Rational>>) -> Self {
        let cols = columns.len();
        let mut data = vec![vec![Rational::zero(); cols]; rows];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                data[i][j] = v.clone();
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    pub fn rank(&self) -> usize {
        rref::rank_of(
            self.data.iter().map(|r| rref::sparse_from_dense(r)),
            self.cols,
        )
    }

    /// Matrix product self · other.
    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows);
        let mut data = vec![vec![Rational::zero(); other.cols]; self.rows];
        for (out_row, row) in data.iter_mut().zip(&self.data) {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (acc, b) in out_row.iter_mut().zip(&other.data[k]) {
                    if !b.is_zero() {
                        *acc += a.clone() * b;
                    }
                }
            }
        }
        ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .map(|(a, b)| a.clone() * b)
                    .sum::<Rational>()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn pres(n: usize, gens: &[&str]) -> GradedIdealPresentation {
        GradedIdealPresentation::new(
            n,
            gens.iter()
                .map(|g| parse_polynomial(g, n).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn monomial_ci_bases_n2() {
        let q = build_quotient(pres(2, &["x1^2", "x2^2"]), 3).unwrap();
        assert_eq!(q.hilbert_function().values(), &[1, 2, 1]);
        let b2 = q.basis(2).unwrap();
        assert_eq!(b2.len(), 1);
        assert_eq!(b2[0].to_string(), "x1*x2");
        assert_eq!(q.dim(3).unwrap(), 0);
    }

    #[test]
    fn repeated_generators_collapse() {
        let e1sq = "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3";
        let q = build_quotient(pres(3, &[e1sq, e1sq, e1sq]), 2).unwrap();
        assert_eq!(q.piece(2).unwrap().ideal().rank(), 1);
    }

    #[test]
    fn squares_ideal_hilbert_function_n5() {
        let gens: Vec<String> = (1..=5).map(|i| format!("x{i}^2")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let q = build_quotient(pres(5, &refs), 6).unwrap();
        assert_eq!(q.hilbert_function().values(), &[1, 5, 10, 10, 5, 1]);
    }

    #[test]
    fn cubes_hilbert_function_matches_series() {
        let gens: Vec<String> = (1..=3).map(|i| format!("x{i}^3")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let q = build_quotient(pres(3, &refs), 7).unwrap();
        let series = ci_hilbert_series(&[3, 3, 3], 7);
        assert_eq!(
            q.hilbert_function().values(),
            &series[..=6],
            "coefficients of (1+T+T^2)^3"
        );
    }

    #[test]
    fn non_ci_detected() {
        let e1sq = "x1^2 + x2^2 + x3^2 + 2*x1*x2 + 2*x1*x3 + 2*x2*x3";
        let report =
            GradedQuotient::complete_intersection_report(&pres(3, &[e1sq, e1sq, e1sq])).unwrap();
        assert!(!report.is_ci);
        assert!(report.first_deviation.is_some());
        // dimensions never reach zero by degree 4
        let q = build_quotient(pres(3, &[e1sq, e1sq, e1sq]), 4).unwrap();
        assert!(q.dim(4).unwrap() > 0);
    }

    #[test]
    fn squares_are_a_ci() {
        let gens: Vec<String> = (1..=5).map(|i| format!("x{i}^2")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let report = GradedQuotient::complete_intersection_report(&pres(5, &refs)).unwrap();
        assert!(report.is_ci);
        assert_eq!(report.socle_degree, 5);
        assert!(report.first_deviation.is_none());
    }

    #[test]
    fn normal_forms_in_monomial_ci() {
        let q = build_quotient(pres(2, &["x1^2", "x2^2"]), 3).unwrap();
        let (d, nf) = q
            .normal_form(&parse_polynomial("x1^2", 2).unwrap())
            .unwrap();
        assert_eq!(d, 2);
        assert!(nf.iter().all(|c| c.is_zero()));
        let (_, nf) = q
            .normal_form(&parse_polynomial("x1*x2", 2).unwrap())
            .unwrap();
        assert_eq!(nf, vec![Rational::one()]);
        assert!(q
            .normal_form(&parse_polynomial("x1 + x2^2", 2).unwrap())
            .is_err());
    }

    #[test]
    fn mult_map_examples() {
        // ×e1 : A_0 → A_1 in the n=3 monomial quadratic CI is the all-ones column
        let gens: Vec<String> = (1..=3).map(|i| format!("x{i}^2")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let q = build_quotient(pres(3, &refs), 4).unwrap();
        let e1 = parse_polynomial("x1 + x2 + x3", 3).unwrap();
        let m = q.mult_map_matrix(&e1, 0).unwrap();
        assert_eq!((m.nrows(), m.ncols()), (3, 1));
        assert!((0..3).all(|i| m.entry(i, 0).is_one()));

        // ×x1 : A_1 → A_2 in the n=2 monomial quadratic CI has rank 1
        let q2 = build_quotient(pres(2, &["x1^2", "x2^2"]), 3).unwrap();
        let x1 = parse_polynomial("x1", 2).unwrap();
        assert_eq!(q2.mult_map_matrix(&x1, 1).unwrap().rank(), 1);
    }

    #[test]
    fn mult_map_composition_law() {
        let gens: Vec<String> = (1..=5).map(|i| format!("x{i}^2")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let q = build_quotient(pres(5, &refs), 6).unwrap();
        let e1 = parse_polynomial("x1 + x2 + x3 + x4 + x5", 5).unwrap();
        let cube = e1.pow(3);
        let direct = q.mult_map_matrix(&cube, 1).unwrap();
        let step1 = q.mult_map_matrix(&e1, 1).unwrap();
        let step2 = q.mult_map_matrix(&e1, 2).unwrap();
        let step3 = q.mult_map_matrix(&e1, 3).unwrap();
        assert_eq!(step3.mul(&step2).mul(&step1), direct);
    }

    #[test]
    fn socle_checks() {
        let gens: Vec<String> = (1..=3).map(|i| format!("x{i}^2")).collect();
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let q = build_quotient(pres(3, &refs), 4).unwrap();
        let jac = crate::polycore::jacobian_determinant(q.presentation().generators()).unwrap();
        assert!(q.socle_check(&jac).unwrap());
        // e1^3 reduces to 6·x1x2x3 mod (x1^2, x2^2, x3^2)
        let e1 = parse_polynomial("x1 + x2 + x3", 3).unwrap();
        let nf = q.normal_form_in_degree(3, &e1.pow(3)).unwrap();
        assert_eq!(nf, vec![crate::polycore::rat(6)]);
        assert!(q.socle_check(&e1.pow(3)).unwrap());
        assert!(!q.socle_check(&Polynomial::zero(3)).unwrap());
    }

    #[test]
    fn rejects_bad_presentations() {
        assert!(GradedIdealPresentation::new(
            2,
            vec![parse_polynomial("x1 + x2^2", 2).unwrap()]
        )
        .is_err());
        assert!(
            GradedIdealPresentation::new(2, vec![Polynomial::zero(2)]).is_err()
        );
    }

    #[test]
    fn empty_presentation_gives_polynomial_ring() {
        let q = build_quotient(GradedIdealPresentation::new(3, vec![]).unwrap(), 3).unwrap();
        assert_eq!(q.hilbert_function().values(), &[1, 3, 6, 10]);
    }
}
