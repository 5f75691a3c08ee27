//! S_n character theory (Murnaghan–Nakayama recursion), hook-length
//! dimensions, traces on graded quotient pieces, isotypic multiplicities
//! and Hilbert functions, equivariance checks, and the fixed-line
//! computation inside R_1·e_1.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::polycore::{rat, Monomial, Permutation, Polynomial, Rational};
use crate::quotient::{GradedQuotient, HilbertFunction};
use crate::{Error, Result};

/// A partition of n: non-increasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionOfN {
    parts: Vec<usize>,
}

impl PartitionOfN {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "not a partition: {parts:?}"
            )));
        }
        Ok(PartitionOfN { parts })
    }

    /// The two-row shape (n−i, i); i = 0 gives the one-row shape (n).
    pub fn two_row(n: usize, i: usize) -> Result<Self> {
        if i > n - i {
            return Err(Error::InvalidArgument(format!(
                "(n-i, i) needs i <= n/2, got i={i}, n={n}"
            )));
        }
        if i == 0 {
            PartitionOfN::new(vec![n])
        } else {
            PartitionOfN::new(vec![n - i, i])
        }
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn conjugate(&self) -> PartitionOfN {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        PartitionOfN { parts }
    }

    /// Dimension of the irreducible V^λ by the hook length formula
    /// n! / Π hooks; for (n−i, i) this equals C(n,i) − C(n,i−1).
    pub fn irrep_dimension(&self) -> BigInt {
        let n = self.n();
        let conj = self.conjugate();
        let mut denom = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let hook = row - j + conj.parts[j - 1] - (i + 1) + 1;
                denom *= BigInt::from(hook);
            }
        }
        factorial(n) / denom
    }
}

impl fmt::Display for PartitionOfN {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of n in descending lexicographic order:
/// (n), (n−1,1), (n−2,2), (n−2,1,1), ...
pub fn partitions(n: usize) -> Vec<PartitionOfN> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<PartitionOfN>) {
        if remaining == 0 {
            out.push(PartitionOfN {
                parts: current.clone(),
            });
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(n, n, &mut current, &mut out);
    out
}

/// A conjugacy class of S_n, named by its cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    partition: PartitionOfN,
}

impl CycleType {
    pub fn new(partition: PartitionOfN) -> Self {
        CycleType { partition }
    }

    pub fn partition(&self) -> &PartitionOfN {
        &self.partition
    }

    /// z_μ = Π i^{m_i} · m_i! over part multiplicities.
    pub fn centralizer_order(&self) -> BigInt {
        let mut mult: HashMap<usize, usize> = HashMap::new();
        for &p in self.partition.parts() {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut z = BigInt::one();
        for (i, m) in mult {
            z *= BigInt::from(i).pow(m as u32) * factorial(m);
        }
        z
    }

    pub fn class_size(&self) -> BigInt {
        factorial(self.partition.n()) / self.centralizer_order()
    }

    /// Canonical representative: consecutive cycles (1..c1)(c1+1..c1+c2)...
    pub fn representative(&self) -> Permutation {
        let n = self.partition.n();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0usize;
        for &c in self.partition.parts() {
            for k in 0..c {
                images[start + k] = start + (k + 1) % c;
            }
            start += c;
        }
        Permutation::from_images(&images.iter().map(|i| i + 1).collect::<Vec<_>>())
            .expect("valid by construction")
    }
}

/// The character table of S_n, built once by the Murnaghan–Nakayama
/// border-strip recursion on beta-numbers.
pub struct CharacterTable {
    n: usize,
    partitions: Vec<PartitionOfN>,
    index: HashMap<PartitionOfN, usize>,
    /// values[λ_idx][μ_idx] = χ_λ(μ)
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let parts = partitions(n);
        let index: HashMap<PartitionOfN, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let values = parts
            .iter()
            .map(|lambda| {
                let beta = beta_numbers(lambda);
                let mut memo = HashMap::new();
                parts
                    .iter()
                    .map(|mu| mn_eval(&beta, mu.parts(), 0, &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions: parts,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[PartitionOfN] {
        &self.partitions
    }

    pub fn partition_index(&self, lambda: &PartitionOfN) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// χ_λ(μ) for λ indexing the irreducible and μ the cycle type.
    pub fn value(&self, lambda: &PartitionOfN, mu: &PartitionOfN) -> Result<i64> {
        let li = self.partition_index(lambda).ok_or_else(|| {
            Error::InvalidArgument(format!("{lambda} is not a partition of {}", self.n))
        })?;
        let mi = self.partition_index(mu).ok_or_else(|| {
            Error::InvalidArgument(format!("{mu} is not a partition of {}", self.n))
        })?;
        Ok(self.values[li][mi])
    }
}

/// Exact character value χ_λ(μ). Use [`CharacterTable`] when many values
/// are needed; this recomputes the recursion each call.
pub fn character_value(lambda: &PartitionOfN, mu: &PartitionOfN) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::InvalidArgument(format!(
            "size mismatch: |{lambda}| = {} vs |{mu}| = {}",
            lambda.n(),
            mu.n()
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn_eval(&beta_numbers(lambda), mu.parts(), 0, &mut memo))
}

fn beta_numbers(lambda: &PartitionOfN) -> Vec<usize> {
    let l = lambda.parts().len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect()
}

/// Murnaghan–Nakayama on beta-numbers: removing a border strip of length
/// k replaces some beta-number b by b−k (which must be absent), with sign
/// (−1)^{#beta strictly between b−k and b}. The memo is keyed by the
/// beta set together with the remaining cycle parts.
fn mn_eval(
    beta: &[usize],
    parts: &[usize],
    part_idx: usize,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if part_idx == parts.len() {
        return 1;
    }
    let key = (beta.to_vec(), parts[part_idx..].to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = parts[part_idx];
    let mut total = 0i64;
    for (pos, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<usize> = beta.to_vec();
        next[pos] = b - k;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_eval(&next, parts, part_idx + 1, memo);
    }
    memo.insert(key, total);
    total
}

/// Dimension of V^λ as a machine integer (desk scale: n ≤ 8).
pub fn irrep_dimension(lambda: &PartitionOfN) -> usize {
    use num_traits::ToPrimitive;
    lambda.irrep_dimension().to_usize().expect("desk-scale dims")
}

/// Checks the ideal of `q` is stable under σ: every generator maps back
/// into the ideal.
pub fn ideal_stable_under(q: &GradedQuotient, sigma: &Permutation) -> Result<bool> {
    for g in q.presentation().generators() {
        let image = sigma.apply(g)?;
        let d = image.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
        let nf = q.normal_form_in_degree(d, &image)?;
        if !nf.iter().all(|c| c.is_zero()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Trace of the map induced by σ on A_d, computed as
/// trace(σ | R_d) − trace(σ | I_d). The R_d trace counts monomials with
/// exponents constant on the cycles of σ; the I_d trace expands each
/// permuted basis row in the echelon basis and sums the diagonal
/// coefficients.
pub fn trace_on_degree(q: &GradedQuotient, sigma: &Permutation, d: usize) -> Result<Rational> {
    if sigma.len() != q.n_vars() {
        return Err(Error::PermutationLength(sigma.len(), q.n_vars()));
    }
    if !ideal_stable_under(q, sigma)? {
        return Err(Error::NonStableIdeal(format!("{sigma:?}")));
    }
    let trace_r = trace_on_polynomial_ring(&sigma.cycle_lengths(), d);
    let piece = q.piece(d)?;
    let mut trace_i = Rational::zero();
    for (j, row) in piece.ideal().rows().iter().enumerate() {
        let mut image: Vec<(usize, Rational)> = row
            .iter()
            .map(|(col, c)| {
                let m = sigma.apply_monomial(&piece.monomials()[*col]);
                let idx = piece
                    .monomial_index(&m)
                    .expect("permuted monomial stays in degree");
                (idx, Rational::from_integer(c.clone()))
            })
            .collect();
        image.sort_unstable_by_key(|(c, _)| *c);
        let coords = piece
            .ideal()
            .coordinates(&image)
            .ok_or_else(|| Error::NonStableIdeal(format!("{sigma:?}")))?;
        trace_i += &coords[j];
    }
    Ok(Rational::from_integer(BigInt::from(trace_r)) - trace_i)
}

/// Number of degree-d monomials fixed by a permutation with the given
/// cycle lengths: solutions of Σ c_j a_j = d.
fn trace_on_polynomial_ring(cycle_lengths: &[usize], d: usize) -> u64 {
    let mut ways = vec![0u64; d + 1];
    ways[0] = 1;
    for &c in cycle_lengths {
        for i in c..=d {
            ways[i] += ways[i - c];
        }
    }
    ways[d]
}

/// Multiplicity of each irreducible V^λ in A_d, by class sums:
/// m_λ = Σ_μ (1/z_μ) χ_λ(μ) tr(σ_μ | A_d). Non-integer or negative
/// results are a hard failure.
pub fn isotypic_multiplicities(
    q: &GradedQuotient,
    table: &CharacterTable,
    d: usize,
) -> Result<Vec<(PartitionOfN, usize)>> {
    let mut traces = Vec::new();
    for mu in table.partitions() {
        let class = CycleType::new(mu.clone());
        let rep = class.representative();
        traces.push((class.centralizer_order(), trace_on_degree(q, &rep, d)?));
    }
    let mut out = Vec::new();
    for lambda in table.partitions() {
        let mut m = Rational::zero();
        for (mu, (z, trace)) in table.partitions().iter().zip(&traces) {
            let chi = table.value(lambda, mu)?;
            m += Rational::new(BigInt::from(chi), z.clone()) * trace;
        }
        if !m.denom().is_one() || m.is_negative() {
            return Err(Error::NonIntegerMultiplicity {
                partition: lambda.to_string(),
                degree: d,
                value: crate::polycore::format_rational(&m),
            });
        }
        let mult = crate::polycore::rational_to_usize(&m).expect("integer checked");
        out.push((lambda.clone(), mult));
    }
    Ok(out)
}

/// Hilbert function of the λ-isotypic component Y^λ(A), counted with
/// dimension: values[d] = m_λ(A_d) · dim V^λ.
pub fn isotypic_hilbert_function(
    q: &GradedQuotient,
    table: &CharacterTable,
    lambda: &PartitionOfN,
) -> Result<HilbertFunction> {
    let dim = irrep_dimension(lambda);
    let mut values = Vec::new();
    for d in 0..=q.top_degree() {
        let mults = isotypic_multiplicities(q, table, d)?;
        let m = mults
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, m)| *m)
            .unwrap_or(0);
        values.push(m * dim);
    }
    while values.last() == Some(&0) {
        values.pop();
    }
    Ok(HilbertFunction(values))
}

/// Basis of the isotypic component Y^λ(A_d) as vectors in the standard
/// basis of A_d, via the character projector
/// P_λ = (dim λ / n!) Σ_σ χ_λ(σ) σ.
pub fn isotypic_component_basis(
    q: &GradedQuotient,
    table: &CharacterTable,
    lambda: &PartitionOfN,
    d: usize,
) -> Result<Vec<Vec<Rational>>> {
    let n = q.n_vars();
    let piece = q.piece(d)?;
    let dim_a = piece.dim_quotient();
    if dim_a == 0 {
        return Ok(vec![]);
    }
    // normal forms of every monomial of R_d, indexed by column
    let monomials = piece.monomials().to_vec();
    let nf_table: Vec<Vec<Rational>> = monomials
        .iter()
        .map(|m| q.normal_form_in_degree(d, &Polynomial::monomial(n, m.clone(), rat(1))))
        .collect::<Result<_>>()?;
    let std_cols: Vec<usize> = piece
        .standard_monomials()
        .map(|m| piece.monomial_index(m).expect("standard monomial"))
        .collect();

    let mut columns = vec![vec![Rational::zero(); dim_a]; dim_a];
    for sigma in Permutation::all(n) {
        if !ideal_stable_under(q, &sigma)? {
            return Err(Error::NonStableIdeal(format!("{sigma:?}")));
        }
        let mu = PartitionOfN::new(sigma.cycle_lengths())?;
        let chi = table.value(lambda, &mu)?;
        if chi == 0 {
            continue;
        }
        let chi = rat(chi);
        for (j, &col) in std_cols.iter().enumerate() {
            let image = sigma.apply_monomial(&monomials[col]);
            let image_idx = piece.monomial_index(&image).expect("same degree");
            for (acc, v) in columns[j].iter_mut().zip(&nf_table[image_idx]) {
                if !v.is_zero() {
                    *acc += chi.clone() * v;
                }
            }
        }
    }
    let scale = Rational::new(PartitionOfN::irrep_dimension(lambda), factorial(n));
    let mut ech = crate::quotient::rref::Echelon::new(dim_a);
    for col in &mut columns {
        for v in col.iter_mut() {
            *v *= scale.clone();
        }
        ech.insert(crate::quotient::rref::sparse_from_dense(col));
    }
    ech.back_substitute();
    Ok((0..ech.rank())
        .map(|j| crate::quotient::rref::dense_from_sparse(&ech.row_as_rational(j), dim_a))
        .collect())
}

/// §4 condition (2) over the generating transpositions: true iff
/// f_i^{(k k+1)} = f_{(k k+1)(i)} for all i and all adjacent k. Returns
/// the witness (k, i) on failure.
pub fn equivariance_check(fs: &[Polynomial]) -> Result<(bool, Option<(usize, usize)>)> {
    let n = match fs.first() {
        Some(f) => f.n_vars(),
        None => return Ok((true, None)),
    };
    if fs.len() != n {
        return Err(Error::GeneratorCount {
            expected: n,
            got: fs.len(),
        });
    }
    for k in 1..n {
        let sigma = Permutation::transposition(n, k, k + 1);
        for (i, f) in fs.iter().enumerate() {
            let lhs = sigma.apply(f)?;
            let target = sigma.image(i + 1) - 1;
            if lhs != fs[target] {
                return Ok((false, Some((k, i + 1))));
            }
        }
    }
    Ok((true, None))
}

/// Result of the fixed-line computation in R_1·e_1.
#[derive(Debug)]
pub struct FixedLineReport {
    pub ok: bool,
    /// Basis of the S_n-fixed subspace of R_1·e_1 (expected: e_1^2 alone).
    pub fixed_basis: Vec<Polynomial>,
    /// For n = 2 only: basis of the sign-isotypic line (e_1(x_1−x_2)).
    pub sign_basis: Vec<Polynomial>,
}

/// Computes the S_n-fixed subspace of U = R_1·e_1 ⊂ R_2 by averaging and
/// compares it with span{e_1^2}. For n = 2 the sign-isotypic line is also
/// computed and compared with span{e_1(x_1−x_2)}.
pub fn fixed_line_check(n: usize) -> Result<FixedLineReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "fixed-line check needs n >= 2".into(),
        ));
    }
    let all: Vec<usize> = (1..=n).collect();
    let e1 = crate::polycore::elementary_symmetric(n, 1, &all)?;
    let basis_u: Vec<Polynomial> = (1..=n)
        .map(|i| e1.mul(&Polynomial::var(n, i)).expect("same ambient"))
        .collect();
    let group = Permutation::all(n);
    let order = rat(group.len() as i64);

    let average = |signed: bool| -> Result<Vec<Polynomial>> {
        let mut projected = Vec::new();
        for u in &basis_u {
            let mut acc = Polynomial::zero(n);
            for sigma in &group {
                let mut term = sigma.apply(u)?;
                if signed && permutation_sign(sigma) < 0 {
                    term = term.neg();
                }
                acc = acc.add(&term)?;
            }
            projected.push(acc.scale(&(rat(1) / order.clone())));
        }
        Ok(projected)
    };

    let span_of = |polys: &[Polynomial]| -> Vec<Polynomial> {
        let monoms = crate::polycore::monomials_of_degree(n, 2);
        let index: HashMap<&Monomial, usize> =
            monoms.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut ech = crate::quotient::rref::Echelon::new(monoms.len());
        for p in polys {
            let mut row: Vec<(usize, Rational)> =
                p.terms().map(|(m, c)| (index[m], c.clone())).collect();
            row.sort_unstable_by_key(|(c, _)| *c);
            ech.insert(row);
        }
        ech.back_substitute();
        (0..ech.rank())
            .map(|j| {
                Polynomial::from_terms(
                    n,
                    ech.row_as_rational(j)
                        .into_iter()
                        .map(|(c, v)| (monoms[c].clone(), v)),
                )
            })
            .collect()
    };

    let fixed_basis = span_of(&average(false)?);
    let e1_sq = e1.mul(&e1)?;
    let mut ok =
        fixed_basis.len() == 1 && span_of(&[fixed_basis[0].clone(), e1_sq.clone()]).len() == 1;

    let mut sign_basis = Vec::new();
    if n == 2 {
        sign_basis = span_of(&average(true)?);
        let sign_target = e1.mul(
            &Polynomial::var(2, 1)
                .sub(&Polynomial::var(2, 2))
                .expect("same ambient"),
        )?;
        ok = ok
            && sign_basis.len() == 1
            && span_of(&[sign_basis[0].clone(), sign_target]).len() == 1;
    }

    Ok(FixedLineReport {
        ok,
        fixed_basis,
        sign_basis,
    })
}

/// Sign of a permutation from its cycle type: (−1)^{n − #cycles}.
pub fn permutation_sign(sigma: &Permutation) -> i64 {
    let cycles = sigma.cycle_lengths();
    let transpositions: usize = cycles.iter().map(|c| c - 1).sum();
    if transpositions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
