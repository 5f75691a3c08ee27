//! Young-subgroup invariant rings A^G: Reynolds (fixed-subspace) bases,
//! invariant Hilbert functions, the standard-grading decision, minimal
//! generator degrees by graded Nakayama, block-Vandermonde uniform
//! generators, and the ideal-intersection identity
//! (g_1,…,g_n) = (f_1,…,f_n) ∩ R^G.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::lefschetz::{is_strong_lefschetz, GradedSubspaceFamily, LefschetzReport};
use crate::polycore::{rat, Monomial, Permutation, Polynomial, Rational};
use crate::quotient::rref::{dense_from_sparse, sparse_from_dense, Echelon, SparseVec};
use crate::quotient::{GradedQuotient, HilbertFunction};
use crate::symmetry::factorial;
use crate::{Error, Result};

/// A Young subgroup S_{n1} × ... × S_{nr} acting block-wise on
/// consecutive variable indices: block i permutes the n_i variables
/// following the first n_1 + ... + n_{i−1}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungSubgroup {
    blocks: Vec<usize>,
}

impl YoungSubgroup {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "block sizes must be positive: {blocks:?}"
            )));
        }
        Ok(YoungSubgroup { blocks })
    }

    /// The full symmetric group as a single block.
    pub fn full(n: usize) -> Self {
        YoungSubgroup { blocks: vec![n] }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn order(&self) -> BigInt {
        self.blocks.iter().map(|&b| factorial(b)).product()
    }

    /// 1-based variable ranges (start, end) inclusive, one per block.
    pub fn block_ranges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let mut start = 1;
        for &b in &self.blocks {
            out.push((start, start + b - 1));
            start += b;
        }
        out
    }

    /// Adjacent transpositions within blocks; they generate the subgroup.
    pub fn generators(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut out = Vec::new();
        for (start, end) in self.block_ranges() {
            for k in start..end {
                out.push(Permutation::transposition(n, k, k + 1));
            }
        }
        out
    }

    /// All |G| elements, as block-wise products of permutations.
    pub fn elements(&self) -> Vec<Permutation> {
        let n = self.n();
        let mut result = vec![Permutation::identity(n)];
        for (block, (start, _)) in self.blocks.iter().zip(self.block_ranges()) {
            let block_perms = Permutation::all(*block);
            let mut next = Vec::with_capacity(result.len() * block_perms.len());
            for base in &result {
                for bp in &block_perms {
                    let mut images: Vec<usize> = (1..=n).map(|i| base.image(i)).collect();
                    for j in 0..*block {
                        images[start - 1 + j] = base.image(start + bp.image(j + 1) - 1);
                    }
                    next.push(Permutation::from_images(&images).expect("block product"));
                }
            }
            result = next;
        }
        result
    }

    /// Orbit-canonical representative: exponents sorted descending within
    /// each block.
    pub fn canonical_monomial(&self, m: &Monomial) -> Monomial {
        let mut e = m.exponents().to_vec();
        for (start, end) in self.block_ranges() {
            e[start - 1..end].sort_unstable_by(|a, b| b.cmp(a));
        }
        Monomial::new(e)
    }

    pub fn is_canonical(&self, m: &Monomial) -> bool {
        let e = m.exponents();
        self.block_ranges()
            .iter()
            .all(|&(start, end)| e[start - 1..end].windows(2).all(|w| w[0] >= w[1]))
    }

    /// The G-orbit of a monomial: all distinct block-wise rearrangements.
    pub fn orbit(&self, m: &Monomial) -> Vec<Monomial> {
        let mut partials: Vec<Vec<u32>> = vec![vec![]];
        for (start, end) in self.block_ranges() {
            let segment = &m.exponents()[start - 1..end];
            let arrangements = distinct_permutations(segment);
            let mut next = Vec::with_capacity(partials.len() * arrangements.len());
            for p in &partials {
                for a in &arrangements {
                    let mut v = p.clone();
                    v.extend_from_slice(a);
                    next.push(v);
                }
            }
            partials = next;
        }
        partials.into_iter().map(Monomial::new).collect()
    }

    /// Orbit sum: the invariant polynomial Σ_{m' ∈ orbit(m)} m'.
    pub fn orbit_sum(&self, m: &Monomial) -> Polynomial {
        Polynomial::from_terms(self.n(), self.orbit(m).into_iter().map(|m| (m, rat(1))))
    }

    /// Canonical monomials of degree d: an index for the orbit-sum basis
    /// of (R^G)_d, in graded-lex descending order of representatives.
    pub fn canonical_monomials(&self, d: usize) -> Vec<Monomial> {
        crate::polycore::monomials_of_degree(self.n(), d)
            .into_iter()
            .filter(|m| self.is_canonical(m))
            .collect()
    }

    /// Reynolds average (1/|G|) Σ_{σ∈G} p^σ.
    pub fn reynolds(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.n());
        let elements = self.elements();
        for sigma in &elements {
            acc = acc.add(&sigma.apply(p)?)?;
        }
        Ok(acc.scale(&(rat(1) / rat(elements.len() as i64))))
    }
}

fn distinct_permutations(values: &[u32]) -> Vec<Vec<u32>> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    permute_distinct(&mut sorted, 0, &mut seen, &mut out);
    out
}

fn permute_distinct(
    values: &mut Vec<u32>,
    k: usize,
    seen: &mut HashSet<Vec<u32>>,
    out: &mut Vec<Vec<u32>>,
) {
    if k == values.len() {
        if seen.insert(values.clone()) {
            out.push(values.clone());
        }
        return;
    }
    for i in k..values.len() {
        values.swap(k, i);
        permute_distinct(values, k + 1, seen, out);
        values.swap(k, i);
    }
}

/// Per-degree bases of (A^G)_d as coordinate vectors in the standard
/// basis of A_d (index = degree).
#[derive(Debug, Clone)]
pub struct InvariantSlice {
    pub bases: Vec<Vec<Vec<Rational>>>,
}

impl InvariantSlice {
    pub fn family<'a>(&self, q: &'a GradedQuotient) -> GradedSubspaceFamily<'a> {
        GradedSubspaceFamily::from_bases(q, self.bases.clone())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(|b| b.len()).collect()
    }
}

fn check_g_stable(q: &GradedQuotient, group: &YoungSubgroup) -> Result<()> {
    for t in group.generators() {
        if !crate::symmetry::ideal_stable_under(q, &t)? {
            return Err(Error::NonStableIdeal(format!("block transposition {t:?}")));
        }
    }
    Ok(())
}

/// Echelonized basis of the G-fixed subspace of A_d: the kernel of the
/// stacked maps (σ − id) over the adjacent block transpositions, which
/// generate G.
pub fn reynolds_basis(
    q: &GradedQuotient,
    group: &YoungSubgroup,
    d: usize,
) -> Result<Vec<Vec<Rational>>> {
    if group.n() != q.n_vars() {
        return Err(Error::AmbientMismatch(group.n(), q.n_vars()));
    }
    check_g_stable(q, group)?;
    let piece = q.piece(d)?;
    let dim = piece.dim_quotient();
    if dim == 0 {
        return Ok(vec![]);
    }
    let n = q.n_vars();
    let std_monomials: Vec<Monomial> = piece.standard_monomials().cloned().collect();
    let mut equations = Echelon::new(dim);
    for t in group.generators() {
        // rows of (M_t − I), assembled from the columns NF(t·m_j)
        let mut mat = vec![vec![Rational::from_integer(0.into()); dim]; dim];
        for (j, m) in std_monomials.iter().enumerate() {
            let image = t.apply_monomial(m);
            let col = q.normal_form_in_degree(d, &Polynomial::monomial(n, image, rat(1)))?;
            for (i, v) in col.iter().enumerate() {
                mat[i][j] = v.clone();
            }
            mat[j][j] -= rat(1);
        }
        for row in mat {
            equations.insert(sparse_from_dense(&row));
        }
    }
    let kernel = equations.kernel_basis();
    // echelonize the kernel vectors deterministically
    let mut ech = Echelon::new(dim);
    for v in kernel {
        ech.insert(v);
    }
    ech.back_substitute();
    Ok((0..ech.rank())
        .map(|j| dense_from_sparse(&ech.row_as_rational(j), dim))
        .collect())
}

/// All invariant pieces up to the quotient's top degree.
pub fn invariant_slice(q: &GradedQuotient, group: &YoungSubgroup) -> Result<InvariantSlice> {
    let bases = (0..=q.top_degree())
        .map(|d| reynolds_basis(q, group, d))
        .collect::<Result<_>>()?;
    Ok(InvariantSlice { bases })
}

/// Hilbert function of A^G: values[d] = dim (A^G)_d.
pub fn invariant_hilbert_function(
    q: &GradedQuotient,
    group: &YoungSubgroup,
) -> Result<HilbertFunction> {
    let slice = invariant_slice(q, group)?;
    let mut values = slice.dims();
    while values.last() == Some(&0) {
        values.pop();
    }
    Ok(HilbertFunction(values))
}

/// Hilbert function of the subalgebra K[(A^G)_1] ⊆ A^G generated by the
/// degree-one invariants: B_d = (A^G)_1 · B_{d−1}. The grading of A^G is
/// standard iff this equals the invariant Hilbert function everywhere.
pub fn degree_one_generated_hf(
    q: &GradedQuotient,
    group: &YoungSubgroup,
) -> Result<HilbertFunction> {
    let degree_one = reynolds_basis(q, group, 1)?;
    let gens: Vec<Polynomial> = degree_one
        .iter()
        .map(|v| q.lift(1, v))
        .collect::<Result<_>>()?;
    let mut values = vec![1usize];
    // previous-degree basis, held as representative polynomials
    let mut prev: Vec<Polynomial> = vec![Polynomial::one(q.n_vars())];
    for d in 1..=q.top_degree() {
        let mut ech = Echelon::new(q.dim(d)?);
        let mut basis = Vec::new();
        for b in &prev {
            for g in &gens {
                let nf = q.normal_form_in_degree(d, &b.mul(g)?)?;
                if ech.insert(sparse_from_dense(&nf)) {
                    basis.push(q.lift(d, &nf)?);
                }
            }
        }
        values.push(basis.len());
        prev = basis;
    }
    while values.last() == Some(&0) {
        values.pop();
    }
    Ok(HilbertFunction(values))
}

/// Minimal generator degrees of A^G by graded Nakayama: the count in
/// degree d is dim (A^G)_d − dim Σ_{0<e<d} (A^G)_e · (A^G)_{d−e}.
/// Returns the multiset of degrees, sorted.
pub fn minimal_generator_degrees(q: &GradedQuotient, group: &YoungSubgroup) -> Result<Vec<usize>> {
    let slice = invariant_slice(q, group)?;
    let reps: Vec<Vec<Polynomial>> = slice
        .bases
        .iter()
        .enumerate()
        .map(|(d, basis)| basis.iter().map(|v| q.lift(d, v)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for d in 1..=q.top_degree() {
        let dim_inv = slice.bases[d].len();
        if dim_inv == 0 {
            continue;
        }
        let mut ech = Echelon::new(q.dim(d)?);
        for e in 1..d {
            for b in &reps[e] {
                for c in &reps[d - e] {
                    let nf = q.normal_form_in_degree(d, &b.mul(c)?)?;
                    ech.insert(sparse_from_dense(&nf));
                }
            }
        }
        let new_gens = dim_inv - ech.rank();
        out.extend(std::iter::repeat_n(d, new_gens));
    }
    Ok(out)
}

/// Uniform G-invariant generators obtained from the block-diagonal
/// Vandermonde matrix: within block i over variables (v_1,…,v_{n_i}),
/// g_{offset+k+1} = Σ_j v_j^k · f_{offset+j} for k = 0..n_i−1.
#[derive(Debug, Clone)]
pub struct VandermondeGenerators {
    pub gs: Vec<Polynomial>,
    pub degrees: Vec<usize>,
}

pub fn vandermonde_generators(
    fs: &[Polynomial],
    group: &YoungSubgroup,
) -> Result<VandermondeGenerators> {
    let n = group.n();
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
    // equivariance restricted to G: f_i^σ = f_{σ(i)} over the generators
    for sigma in group.generators() {
        for (i, f) in fs.iter().enumerate() {
            if sigma.apply(f)? != fs[sigma.image(i + 1) - 1] {
                return Err(Error::InvalidArgument(format!(
                    "generators are not G-equivariant at index {}",
                    i + 1
                )));
            }
        }
    }
    let mut gs = Vec::with_capacity(n);
    for (start, end) in group.block_ranges() {
        let size = end - start + 1;
        for k in 0..size {
            let mut g = Polynomial::zero(n);
            for j in 0..size {
                let var = start + j;
                let weight = Monomial::var(n, var).pow(k as u32);
                g = g.add(&fs[var - 1].mul_monomial(&weight, &rat(1)))?;
            }
            gs.push(g);
        }
    }
    // every g must be fixed by every block transposition
    for g in &gs {
        for t in group.generators() {
            if t.apply(g)? != *g {
                return Err(Error::InvalidArgument(
                    "Vandermonde generator failed the invariance check".into(),
                ));
            }
        }
    }
    let degrees = gs
        .iter()
        .map(|g| g.homogeneous_degree().ok_or(Error::NotHomogeneous))
        .collect::<Result<_>>()?;
    Ok(VandermondeGenerators { gs, degrees })
}

/// Per-degree outcome of the ideal-intersection comparison.
#[derive(Debug, Clone, Serialize)]
pub struct IntersectionReport {
    pub equal: bool,
    /// (degree, g-side rank, projected-ideal rank, equal-in-degree)
    pub per_degree: Vec<(usize, usize, usize, bool)>,
    pub warning: Option<String>,
}

/// Checks (g_1,…,g_n) = (f_1,…,f_n) ∩ R^G degree by degree up to `bound`:
/// the span of {h·g_k : h an orbit-sum basis element of (R^G)_{d−deg g_k}}
/// must equal the Reynolds projection of I_d, both inside (R^G)_d.
pub fn ideal_intersection_equality(
    q: &GradedQuotient,
    group: &YoungSubgroup,
    gens: &VandermondeGenerators,
    bound: usize,
) -> Result<IntersectionReport> {
    let n = q.n_vars();
    if group.n() != n {
        return Err(Error::AmbientMismatch(group.n(), n));
    }
    let safe =
        q.presentation().ci_socle_degree() + gens.degrees.iter().max().copied().unwrap_or(0);
    let warning = (bound < safe)
        .then(|| format!("bound {bound} is below the safe threshold {safe}; the check still runs"));

    let elements = group.elements();
    let order = rat(elements.len() as i64);
    // Past the socle degree of an Artinian quotient, I_d = R_d and the
    // projection is all of (R^G)_d; only the g-side rank needs computing.
    let socle = q.presentation().ci_socle_degree();
    let artinian = q.top_degree() > socle && q.dim(socle + 1)? == 0;
    let mut per_degree = Vec::new();
    let mut equal = true;
    for d in 0..=bound {
        let canonical = group.canonical_monomials(d);
        let orbit_index: HashMap<&Monomial, usize> =
            canonical.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let ncols = canonical.len();
        let to_orbit_coords = |p: &Polynomial| -> SparseVec {
            let mut row: Vec<(usize, Rational)> = p
                .terms()
                .filter_map(|(m, c)| orbit_index.get(m).map(|&i| (i, c.clone())))
                .collect();
            row.sort_unstable_by_key(|(c, _)| *c);
            row
        };

        // span of the g-multiples inside (R^G)_d
        let mut g_side = Echelon::new(ncols);
        for (g, &gd) in gens.gs.iter().zip(&gens.degrees) {
            if gd > d {
                continue;
            }
            for h in group.canonical_monomials(d - gd) {
                let product = g.mul(&group.orbit_sum(&h))?;
                g_side.insert(to_orbit_coords(&product));
            }
        }

        if artinian && d > socle {
            let ok = g_side.rank() == ncols;
            equal &= ok;
            per_degree.push((d, g_side.rank(), ncols, ok));
            continue;
        }

        // Reynolds projection of I_d: averages of the spanning rows m·f_i
        let mut ideal_side = Echelon::new(ncols);
        for f in q.presentation().generators() {
            let fd = f.homogeneous_degree().expect("validated homogeneous");
            if fd > d {
                continue;
            }
            for m in crate::polycore::monomials_of_degree(n, d - fd) {
                let row_poly = f.mul_monomial(&m, &rat(1));
                let mut avg = Polynomial::zero(n);
                for sigma in &elements {
                    avg = avg.add(&sigma.apply(&row_poly)?)?;
                }
                avg = avg.scale(&(rat(1) / order.clone()));
                ideal_side.insert(to_orbit_coords(&avg));
            }
        }

        let ok = crate::quotient::rref::same_span(&g_side, &ideal_side);
        equal &= ok;
        per_degree.push((d, g_side.rank(), ideal_side.rank(), ok));
    }
    Ok(IntersectionReport {
        equal,
        per_degree,
        warning,
    })
}

/// Default verification bound for the intersection identity.
pub fn default_intersection_bound(q: &GradedQuotient) -> usize {
    2 * q.presentation().ci_socle_degree() + 2
}

/// Strong Lefschetz check on the invariant slice, for an invariant ℓ.
pub fn invariant_slp_check(
    q: &GradedQuotient,
    group: &YoungSubgroup,
    ell: &Polynomial,
) -> Result<LefschetzReport> {
    for t in group.generators() {
        if t.apply(ell)? != *ell {
            return Err(Error::NotInvariant);
        }
    }
    let slice = invariant_slice(q, group)?;
    let family = slice.family(q);
    is_strong_lefschetz(&family, ell)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;
    use crate::quotient::{build_quotient, GradedIdealPresentation};

    fn monomial_ci(n: usize, power: u32, top: usize) -> GradedQuotient {
        let gens = (1..=n)
            .map(|i| parse_polynomial(&format!("x{i}^{power}"), n).unwrap())
            .collect();
        build_quotient(GradedIdealPresentation::new(n, gens).unwrap(), top).unwrap()
    }

    fn e1(n: usize) -> Polynomial {
        crate::polycore::elementary_symmetric(n, 1, &(1..=n).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn young_subgroup_structure() {
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.block_ranges(), vec![(1, 2), (3, 5)]);
        assert_eq!(g.generators().len(), 3);
        assert_eq!(g.elements().len(), 12);
        assert_eq!(g.order(), BigInt::from(12));
    }

    #[test]
    fn orbit_and_canonical() {
        let g = YoungSubgroup::new(vec![2, 2]).unwrap();
        let m = Monomial::new(vec![0, 1, 2, 0]);
        let canon = g.canonical_monomial(&m);
        assert_eq!(canon.exponents(), &[1, 0, 2, 0]);
        let orbit = g.orbit(&m);
        assert_eq!(orbit.len(), 4);
        let sum = g.orbit_sum(&m);
        assert_eq!(sum.num_terms(), 4);
        for t in g.generators() {
            assert_eq!(t.apply(&sum).unwrap(), sum);
        }
    }

    #[test]
    fn reynolds_basis_degree_one() {
        // n=5, G=S2×S3: (A^G)_1 is spanned by x1+x2 and x3+x4+x5
        let q = monomial_ci(5, 2, 6);
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        let basis = reynolds_basis(&q, &g, 1).unwrap();
        assert_eq!(basis.len(), 2);
        let mut ech = Echelon::new(q.dim(1).unwrap());
        for v in &basis {
            ech.insert(sparse_from_dense(v));
        }
        let block1 = parse_polynomial("x1 + x2", 5).unwrap();
        let block2 = parse_polynomial("x3 + x4 + x5", 5).unwrap();
        for target in [block1, block2] {
            let coords = q.normal_form_in_degree(1, &target).unwrap();
            assert!(ech.contains(sparse_from_dense(&coords)));
        }
    }

    #[test]
    fn trivial_blocks_give_everything_and_full_gives_e1() {
        let q = monomial_ci(3, 2, 4);
        let trivial = YoungSubgroup::new(vec![1, 1, 1]).unwrap();
        for d in 0..=3 {
            assert_eq!(
                reynolds_basis(&q, &trivial, d).unwrap().len(),
                q.dim(d).unwrap()
            );
        }
        let full = YoungSubgroup::full(3);
        let basis = reynolds_basis(&q, &full, 1).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(q.lift(1, &basis[0]).unwrap(), e1(3));
    }

    #[test]
    fn invariant_hilbert_function_s2xs3() {
        let q = monomial_ci(5, 2, 6);
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        let hf = invariant_hilbert_function(&q, &g).unwrap();
        assert_eq!(hf.values(), &[1, 2, 3, 3, 2, 1]);
        assert!(hf.is_symmetric());
    }

    #[test]
    fn monomial_fiber_hilbert_functions() {
        // For the squares ideal the invariant ring is the monomial CI
        // K[y_i]/(y_i^{n_i+1}); its Hilbert function is Π(1+T+...+T^{n_i}).
        let cases: Vec<(usize, Vec<usize>)> = vec![
            (4, vec![2, 2]),
            (5, vec![2, 3]),
            (6, vec![3, 3]),
            (6, vec![1, 2, 3]),
        ];
        for (n, blocks) in cases {
            let q = monomial_ci(n, 2, n + 1);
            let g = YoungSubgroup::new(blocks.clone()).unwrap();
            let hf = invariant_hilbert_function(&q, &g).unwrap();
            let expected = crate::quotient::ci_hilbert_series(
                &blocks.iter().map(|b| b + 1).collect::<Vec<_>>(),
                n,
            );
            assert_eq!(hf.values(), &expected[..=n], "n={n} blocks={blocks:?}");
        }
    }

    #[test]
    fn degree_one_generation_of_monomial_fiber() {
        // standard grading holds for the squares ideal
        let q = monomial_ci(5, 2, 6);
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        let inv = invariant_hilbert_function(&q, &g).unwrap();
        let gen1 = degree_one_generated_hf(&q, &g).unwrap();
        assert_eq!(inv, gen1);
    }

    #[test]
    fn minimal_generators_of_monomial_fiber() {
        let q = monomial_ci(5, 2, 6);
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        assert_eq!(minimal_generator_degrees(&q, &g).unwrap(), vec![1, 1]);
    }

    #[test]
    fn vandermonde_full_group_gives_power_sums() {
        for n in 2..=5 {
            let fs: Vec<Polynomial> = (1..=n)
                .map(|i| parse_polynomial(&format!("x{i}^2"), n).unwrap())
                .collect();
            let g = YoungSubgroup::full(n);
            let vg = vandermonde_generators(&fs, &g).unwrap();
            for (k, gpoly) in vg.gs.iter().enumerate() {
                let expected =
                    crate::polycore::power_sum(n, k + 2, &(1..=n).collect::<Vec<_>>()).unwrap();
                assert_eq!(*gpoly, expected, "n={n} k={k}");
            }
            assert_eq!(vg.degrees, (2..n + 2).collect::<Vec<_>>());
        }
    }

    #[test]
    fn vandermonde_n2_explicit() {
        let fs = vec![
            parse_polynomial("x1^2", 2).unwrap(),
            parse_polynomial("x2^2", 2).unwrap(),
        ];
        let vg = vandermonde_generators(&fs, &YoungSubgroup::full(2)).unwrap();
        assert_eq!(vg.gs[0], parse_polynomial("x1^2 + x2^2", 2).unwrap());
        assert_eq!(vg.gs[1], parse_polynomial("x1^3 + x2^3", 2).unwrap());
    }

    #[test]
    fn vandermonde_block_degrees() {
        let fs: Vec<Polynomial> = (1..=5)
            .map(|i| parse_polynomial(&format!("x{i}^2"), 5).unwrap())
            .collect();
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        let vg = vandermonde_generators(&fs, &g).unwrap();
        assert_eq!(vg.degrees, vec![2, 3, 2, 3, 4]);
    }

    #[test]
    fn intersection_identity_for_squares() {
        let q = monomial_ci(3, 2, 4);
        let g = YoungSubgroup::full(3);
        let vg = vandermonde_generators(q.presentation().generators(), &g).unwrap();
        let report = ideal_intersection_equality(&q, &g, &vg, 8).unwrap();
        assert!(report.equal, "{:?}", report.per_degree);
        assert!(report.warning.is_none());
    }

    #[test]
    fn dropping_a_generator_breaks_the_identity() {
        let q = monomial_ci(3, 2, 4);
        let g = YoungSubgroup::full(3);
        let mut vg = vandermonde_generators(q.presentation().generators(), &g).unwrap();
        vg.gs.pop();
        vg.degrees.pop();
        let report = ideal_intersection_equality(&q, &g, &vg, 8).unwrap();
        assert!(!report.equal);
    }

    #[test]
    fn invariant_slp_for_monomial_fibers() {
        for (n, blocks) in [(4usize, vec![2usize, 2]), (5, vec![2, 3])] {
            let q = monomial_ci(n, 2, n + 1);
            let g = YoungSubgroup::new(blocks).unwrap();
            let report = invariant_slp_check(&q, &g, &e1(n)).unwrap();
            assert!(report.strong, "n={n}");
        }
    }

    #[test]
    fn non_invariant_element_is_rejected() {
        let q = monomial_ci(4, 2, 5);
        let g = YoungSubgroup::new(vec![2, 2]).unwrap();
        let x1 = parse_polynomial("x1", 4).unwrap();
        assert!(matches!(
            invariant_slp_check(&q, &g, &x1),
            Err(Error::NotInvariant)
        ));
    }

    #[test]
    fn jacobian_socle_generator_is_invariant() {
        let q = monomial_ci(4, 2, 5);
        let g = YoungSubgroup::new(vec![2, 2]).unwrap();
        let jac = crate::polycore::jacobian_determinant(q.presentation().generators()).unwrap();
        let c = q.presentation().ci_socle_degree();
        let nf = q.normal_form_in_degree(c, &jac).unwrap();
        assert!(nf.iter().any(|v| !num_traits::Zero::is_zero(v)));
        let basis = reynolds_basis(&q, &g, c).unwrap();
        let mut ech = Echelon::new(q.dim(c).unwrap());
        for v in &basis {
            ech.insert(sparse_from_dense(v));
        }
        assert!(ech.contains(sparse_from_dense(&nf)));
    }

    #[test]
    fn invariant_dims_bounded_by_ambient() {
        let q = monomial_ci(4, 2, 5);
        for blocks in [vec![2, 2], vec![1, 3], vec![4], vec![1, 1, 1, 1]] {
            let g = YoungSubgroup::new(blocks.clone()).unwrap();
            let slice = invariant_slice(&q, &g).unwrap();
            for (d, dim) in slice.dims().iter().enumerate() {
                assert!(*dim <= q.dim(d).unwrap());
                if blocks.iter().all(|&b| b == 1) {
                    assert_eq!(*dim, q.dim(d).unwrap());
                }
            }
        }
    }
}
