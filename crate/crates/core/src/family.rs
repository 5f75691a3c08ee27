//! The S_n-equivariant four-parameter family of quadrics
//! f_1 = p0·x1² + p1·(x2+…+xn)x1 + p2·(x2²+…+xn²) + p3·Σ_{2≤i<j} xixj,
//! with f_i obtained by cyclically permuting the variables: construction,
//! membership tests, the n=3 resultant subfamily, fiber restriction, and
//! the parameter-space scanner.

use std::collections::{HashMap, HashSet};

use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::invariants::YoungSubgroup;
use crate::polycore::{format_rational, rat, Monomial, Permutation, Polynomial, Rational};
use crate::quotient::rref::rank_of;
use crate::quotient::{build_quotient, GradedIdealPresentation, GradedQuotient};
use crate::{Error, Result};

/// The parameter tuple (p0, p1, p2, p3), a point of ℙ³ stored affinely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    pub p0: Rational,
    pub p1: Rational,
    pub p2: Rational,
    pub p3: Rational,
}

impl FamilyParams {
    pub fn new(p0: Rational, p1: Rational, p2: Rational, p3: Rational) -> Result<Self> {
        let params = FamilyParams { p0, p1, p2, p3 };
        if params.as_array().iter().all(|p| p.is_zero()) {
            return Err(Error::InvalidArgument(
                "family parameters must not all be zero".into(),
            ));
        }
        Ok(params)
    }

    pub fn from_integers(p: [i64; 4]) -> Result<Self> {
        FamilyParams::new(rat(p[0]), rat(p[1]), rat(p[2]), rat(p[3]))
    }

    pub fn as_array(&self) -> [&Rational; 4] {
        [&self.p0, &self.p1, &self.p2, &self.p3]
    }

    /// Projective normalization: divides by the first nonzero coordinate,
    /// giving the canonical representative used for deduplication.
    pub fn projective_normal(&self) -> FamilyParams {
        let pivot = self
            .as_array()
            .into_iter()
            .find(|p| !p.is_zero())
            .expect("not all zero")
            .clone();
        FamilyParams {
            p0: self.p0.clone() / pivot.clone(),
            p1: self.p1.clone() / pivot.clone(),
            p2: self.p2.clone() / pivot.clone(),
            p3: self.p3.clone() / pivot,
        }
    }

    pub fn render(&self) -> Vec<String> {
        self.as_array().into_iter().map(format_rational).collect()
    }
}

/// A built member of the family: generators, quotient (to socle + 1),
/// and the two classification flags.
pub struct FamilyInstance {
    n: usize,
    params: FamilyParams,
    fs: Vec<Polynomial>,
    quotient: GradedQuotient,
    is_ci: bool,
    e1sq_in_ideal: bool,
}

impl FamilyInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.fs
    }

    pub fn quotient(&self) -> &GradedQuotient {
        &self.quotient
    }

    pub fn is_ci(&self) -> bool {
        self.is_ci
    }

    pub fn e1sq_in_ideal(&self) -> bool {
        self.e1sq_in_ideal
    }
}

/// The first generator per the four-parameter closed form.
pub fn family_first_generator(n: usize, params: &FamilyParams) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::InvalidArgument("family needs n >= 2".into()));
    }
    let rest: Vec<usize> = (2..=n).collect();
    let x1 = Polynomial::var(n, 1);
    let mut f = Polynomial::monomial(n, Monomial::var(n, 1).pow(2), params.p0.clone());
    let linear_rest = crate::polycore::elementary_symmetric(n, 1, &rest)?;
    f = f.add(&linear_rest.mul(&x1)?.scale(&params.p1))?;
    let squares_rest = crate::polycore::power_sum(n, 2, &rest)?;
    f = f.add(&squares_rest.scale(&params.p2))?;
    if n >= 3 {
        let pairs_rest = crate::polycore::elementary_symmetric(n, 2, &rest)?;
        f = f.add(&pairs_rest.scale(&params.p3))?;
    }
    Ok(f)
}

/// The generators f_i = f_1^{σ^{i−1}} with σ = (1 2 … n), equivariance
/// verified; no quotient is built.
pub fn family_generators(n: usize, params: &FamilyParams) -> Result<Vec<Polynomial>> {
    let f1 = family_first_generator(n, params)?;
    let sigma = Permutation::cycle(n, &(1..=n).collect::<Vec<_>>());
    let mut fs = Vec::with_capacity(n);
    let mut current = f1;
    for _ in 0..n {
        fs.push(current.clone());
        current = sigma.apply(&current)?;
    }
    let (equivariant, witness) = crate::symmetry::equivariance_check(&fs)?;
    if !equivariant {
        return Err(Error::InvalidArgument(format!(
            "family generators failed the equivariance check at {witness:?}"
        )));
    }
    Ok(fs)
}

/// Builds the instance: generators, quotient up to socle degree + 1
/// (= n + 1), and the CI and e1²-membership flags. The CI decision reads
/// dim A_{n+1} = 0 off the single build.
pub fn build_family(n: usize, params: FamilyParams) -> Result<FamilyInstance> {
    let fs = family_generators(n, &params)?;
    let e1sq = e1sq_in_span(&fs)?;
    let pres = GradedIdealPresentation::new(n, fs.clone())?;
    let quotient = build_quotient(pres, n + 1)?;
    let is_ci = quotient.dim(n + 1)? == 0;
    Ok(FamilyInstance {
        n,
        params,
        fs,
        quotient,
        is_ci,
        e1sq_in_ideal: e1sq,
    })
}

/// Degree-2 membership e1² ∈ span{f_1,…,f_n}, as a rank test on the
/// (n+1)-row coefficient matrix. Membership in the span of the quadrics
/// is the same as membership in I since I has no degree-1 part.
pub fn e1sq_in_span(fs: &[Polynomial]) -> Result<bool> {
    let n = match fs.first() {
        Some(f) => f.n_vars(),
        None => return Ok(false),
    };
    let monomials = crate::polycore::monomials_of_degree(n, 2);
    let index: HashMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_row = |p: &Polynomial| {
        let mut row: Vec<(usize, Rational)> =
            p.terms().map(|(m, c)| (index[m], c.clone())).collect();
        row.sort_unstable_by_key(|(c, _)| *c);
        row
    };
    let e1 = crate::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>())?;
    let e1sq = e1.mul(&e1)?;
    let base_rank = rank_of(fs.iter().map(&to_row), monomials.len());
    let augmented = rank_of(
        fs.iter().chain(std::iter::once(&e1sq)).map(&to_row),
        monomials.len(),
    );
    Ok(base_rank == augmented)
}

/// The §4 three-variable subfamily value
/// ab(a−3)(b−3)(ab−a−2b)(ab−2a−b), together with the quadrics
/// f=(e−ax)(e−bx), g=(e−ay)(e−by), h=(e−az)(e−bz) and their Artinian-ness.
pub struct ResultantProbe {
    pub value: Rational,
    pub is_ci: bool,
    pub fs: Vec<Polynomial>,
}

pub fn n3_resultant_value(a: &Rational, b: &Rational) -> Result<ResultantProbe> {
    let value = a.clone()
        * b.clone()
        * (a.clone() - rat(3))
        * (b.clone() - rat(3))
        * (a.clone() * b - a.clone() - rat(2) * b.clone())
        * (a.clone() * b - rat(2) * a - b.clone());

    let e = crate::polycore::elementary_symmetric(3, 1, &[1, 2, 3])?;
    let quadric = |var: usize| -> Result<Polynomial> {
        let x = Polynomial::var(3, var);
        let left = e.sub(&x.scale(a))?;
        let right = e.sub(&x.scale(b))?;
        left.mul(&right)
    };
    let fs = vec![quadric(1)?, quadric(2)?, quadric(3)?];
    let pres = GradedIdealPresentation::new(3, fs.clone())?;
    let report = GradedQuotient::complete_intersection_report(&pres)?;
    Ok(ResultantProbe {
        value,
        is_ci: report.is_ci,
        fs,
    })
}

/// Substitutes x1 ↦ −(x2+…+xn) into f_2,…,f_n and re-indexes the
/// variables down by one, producing the fiber presentation in n−1
/// variables.
pub fn fiber_restriction(inst: &FamilyInstance) -> Result<GradedIdealPresentation> {
    let n = inst.n;
    if n < 2 {
        return Err(Error::InvalidArgument("fiber needs n >= 2".into()));
    }
    let replacement = crate::polycore::elementary_symmetric(n, 1, &(2..=n).collect::<Vec<_>>())?
        .scale(&rat(-1));
    let mut restricted = Vec::with_capacity(n - 1);
    for f in &inst.fs[1..] {
        let substituted = f.substitute_linear(1, &replacement)?;
        restricted.push(drop_first_variable(&substituted)?);
    }
    GradedIdealPresentation::new(n - 1, restricted)
}

/// Removes the (unused) variable x1, relabelling x_{k+1} ↦ x_k.
fn drop_first_variable(p: &Polynomial) -> Result<Polynomial> {
    let n = p.n_vars();
    let mut terms = Vec::with_capacity(p.num_terms());
    for (m, c) in p.terms() {
        if m.exponent(1) != 0 {
            return Err(Error::InvalidArgument(
                "polynomial still involves the substituted variable".into(),
            ));
        }
        terms.push((Monomial::new(m.exponents()[1..].to_vec()), c.clone()));
    }
    Ok(Polynomial::from_terms(n - 1, terms))
}

/// Classification of a parameter point by the scanner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PointClass {
    #[serde(rename = "not-ci")]
    NotCi,
    #[serde(rename = "e1sq-in-ideal")]
    E1SqInIdeal,
    #[serde(rename = "standard-grading")]
    StandardGrading,
    #[serde(rename = "non-standard-grading")]
    NonStandardGrading,
}

/// One scanner row, serialized into the scan output array.
#[derive(Debug, Clone, Serialize)]
pub struct ScanRow {
    pub params: Vec<String>,
    pub class: PointClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariant_hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_one_hilbert: Option<Vec<usize>>,
}

/// Classifies one parameter point for the given blocks.
pub fn classify_point(n: usize, params: &FamilyParams, blocks: &YoungSubgroup) -> Result<ScanRow> {
    let rendered = params.render();
    let inst = build_family(n, params.clone())?;
    if !inst.is_ci() {
        return Ok(ScanRow {
            params: rendered,
            class: PointClass::NotCi,
            invariant_hilbert: None,
            degree_one_hilbert: None,
        });
    }
    let inv = crate::invariants::invariant_hilbert_function(inst.quotient(), blocks)?;
    let gen1 = crate::invariants::degree_one_generated_hf(inst.quotient(), blocks)?;
    // Precedence: the grading verdict outranks the membership flag — the
    // degenerate tuples of interest all lie on the hyperplane where
    // e1² ∈ I, and their non-standard grading is the finding to report.
    let class = if inv != gen1 {
        PointClass::NonStandardGrading
    } else if inst.e1sq_in_ideal() {
        PointClass::E1SqInIdeal
    } else {
        PointClass::StandardGrading
    };
    Ok(ScanRow {
        params: rendered,
        class,
        invariant_hilbert: Some(inv.values().to_vec()),
        degree_one_hilbert: Some(gen1.values().to_vec()),
    })
}

/// A rational grid: per-coordinate inclusive integer ranges with an
/// optional denominator, e.g. `0..8` or `-4..4/2`.
#[derive(Debug, Clone)]
pub struct GridSpec {
    pub ranges: [(i64, i64, i64); 4],
}

impl GridSpec {
    /// Parses `lo..hi[/den]` entries, comma-separated; a single entry
    /// applies to all four coordinates.
    pub fn parse(text: &str) -> Result<GridSpec> {
        let entries: Vec<&str> = text.split(',').collect();
        let parse_one = |s: &str| -> Result<(i64, i64, i64)> {
            let (range, den) = match s.split_once('/') {
                Some((r, d)) => (
                    r,
                    d.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidArgument(format!("bad denominator in `{s}`")))?,
                ),
                None => (s, 1),
            };
            if den <= 0 {
                return Err(Error::InvalidArgument(format!(
                    "denominator must be positive in `{s}`"
                )));
            }
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| Error::InvalidArgument(format!("bad range `{s}`")))?;
            let lo: i64 = lo
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad range `{s}`")))?;
            let hi: i64 = hi
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad range `{s}`")))?;
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range `{s}`")));
            }
            Ok((lo, hi, den))
        };
        let ranges: Vec<(i64, i64, i64)> = match entries.len() {
            1 => vec![parse_one(entries[0])?; 4],
            4 => entries
                .iter()
                .map(|e| parse_one(e))
                .collect::<Result<_>>()?,
            k => {
                return Err(Error::InvalidArgument(format!(
                    "grid spec needs 1 or 4 ranges, got {k}"
                )))
            }
        };
        Ok(GridSpec {
            ranges: [ranges[0], ranges[1], ranges[2], ranges[3]],
        })
    }

    /// The default scanning grid {0..8}⁴, wide enough to contain every
    /// degenerate tuple listed for the n=5 example.
    pub fn default_grid() -> GridSpec {
        GridSpec {
            ranges: [(0, 8, 1); 4],
        }
    }

    /// All grid points minus the all-zero tuple, in lexicographic order.
    pub fn points(&self) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        let coords: Vec<Vec<Rational>> = self
            .ranges
            .iter()
            .map(|&(lo, hi, den)| {
                (lo..=hi)
                    .map(|v| Rational::new(v.into(), den.into()))
                    .collect()
            })
            .collect();
        for p0 in &coords[0] {
            for p1 in &coords[1] {
                for p2 in &coords[2] {
                    for p3 in &coords[3] {
                        if p0.is_zero() && p1.is_zero() && p2.is_zero() && p3.is_zero() {
                            continue;
                        }
                        out.push(FamilyParams {
                            p0: p0.clone(),
                            p1: p1.clone(),
                            p2: p2.clone(),
                            p3: p3.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        let total: i64 = self.ranges.iter().map(|&(lo, hi, _)| hi - lo + 1).product();
        let has_zero = self.ranges.iter().all(|&(lo, hi, _)| lo <= 0 && hi >= 0);
        (total - if has_zero { 1 } else { 0 }) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Scan summary alongside the per-point rows.
#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub rows: Vec<ScanRow>,
    /// Projectively-normalized representatives of the non-standard
    /// grading (degenerate) points, deduplicated and sorted.
    pub degenerate: Vec<Vec<String>>,
    pub counts: ScanCounts,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanCounts {
    pub total: usize,
    pub not_ci: usize,
    pub e1sq_in_ideal: usize,
    pub standard_grading: usize,
    pub non_standard_grading: usize,
}

/// Classifies every grid point (deduplicating computation along
/// projective rays) in deterministic grid order.
pub fn scan_parameters(n: usize, blocks: &YoungSubgroup, grid: &GridSpec) -> Result<ScanReport> {
    let points = grid.points();
    // classify one representative per projective class
    let mut class_reps: Vec<FamilyParams> = Vec::new();
    let mut rep_index: HashMap<String, usize> = HashMap::new();
    let mut point_to_rep: Vec<usize> = Vec::with_capacity(points.len());
    for p in &points {
        let canon = p.projective_normal();
        let key = canon.render().join(",");
        let idx = *rep_index.entry(key).or_insert_with(|| {
            class_reps.push(canon);
            class_reps.len() - 1
        });
        point_to_rep.push(idx);
    }
    let rep_rows: Vec<Result<ScanRow>> = class_reps
        .par_iter()
        .map(|rep| classify_point(n, rep, blocks))
        .collect();
    let rep_rows: Vec<ScanRow> = rep_rows.into_iter().collect::<Result<_>>()?;

    let mut rows = Vec::with_capacity(points.len());
    let mut counts = ScanCounts {
        total: points.len(),
        not_ci: 0,
        e1sq_in_ideal: 0,
        standard_grading: 0,
        non_standard_grading: 0,
    };
    let mut degenerate: Vec<Vec<String>> = Vec::new();
    for (p, &rep) in points.iter().zip(&point_to_rep) {
        let template = &rep_rows[rep];
        match template.class {
            PointClass::NotCi => counts.not_ci += 1,
            PointClass::E1SqInIdeal => counts.e1sq_in_ideal += 1,
            PointClass::StandardGrading => counts.standard_grading += 1,
            PointClass::NonStandardGrading => counts.non_standard_grading += 1,
        }
        if template.class == PointClass::NonStandardGrading {
            let canon = p.projective_normal().render();
            if !degenerate.contains(&canon) {
                degenerate.push(canon);
            }
        }
        rows.push(ScanRow {
            params: p.render(),
            class: template.class,
            invariant_hilbert: template.invariant_hilbert.clone(),
            degree_one_hilbert: template.degree_one_hilbert.clone(),
        });
    }
    degenerate.sort();
    Ok(ScanReport {
        rows,
        degenerate,
        counts,
    })
}

/// Strong-Lefschetz element search for a built instance. When e1² lies
/// in the ideal, e1 cannot work and is skipped; otherwise it is tried
/// first, then the deterministic random candidates.
pub fn find_slp_element(
    inst: &FamilyInstance,
) -> Result<Option<(Polynomial, crate::lefschetz::LefschetzReport)>> {
    let family = crate::lefschetz::GradedSubspaceFamily::full(inst.quotient());
    crate::lefschetz::find_strong_lefschetz_with(&family, !inst.e1sq_in_ideal())
}

/// Deterministic sample of `count` points from the {0..7}⁴ grid (minus
/// the all-zero tuple), drawn with a fixed seed.
pub fn deterministic_grid_sample(count: usize) -> Vec<FamilyParams> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5343414e);
    let mut out = Vec::with_capacity(count);
    let mut seen = HashSet::new();
    while out.len() < count {
        let p: [i64; 4] = [
            rng.gen_range(0..=7),
            rng.gen_range(0..=7),
            rng.gen_range(0..=7),
            rng.gen_range(0..=7),
        ];
        if p == [0, 0, 0, 0] || !seen.insert(p) {
            continue;
        }
        out.push(FamilyParams::from_integers(p).expect("nonzero"));
    }
    out
}
