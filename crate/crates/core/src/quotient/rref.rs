use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polycore::Rational;

/// Sparse rational row: (column, coefficient) pairs sorted by column,
/// coefficients nonzero. Columns follow graded-lex descending monomial
/// order, so the leading entry of a row corresponds to its leading
/// monomial.
pub type SparseVec = Vec<(usize, Rational)>;

/// Stored basis row: a primitive integer vector (content 1, positive
/// leading coefficient). Scaling a basis row does not change the span,
/// and integer rows keep the elimination fraction-free.
pub type IntRow = Vec<(usize, BigInt)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn dense_from_sparse(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Clears denominators and strips integer content, returning a primitive
/// integer row with positive leading coefficient (or empty).
fn primitive_int_row(row: &SparseVec) -> IntRow {
    if row.is_empty() {
        return vec![];
    }
    let mut lcm = BigInt::one();
    for (_, c) in row {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: IntRow = row
        .iter()
        .map(|(i, c)| (*i, c.numer() * (&lcm / c.denom())))
        .collect();
    let mut content = BigInt::zero();
    for (_, v) in &ints {
        content = content.gcd(v);
    }
    if !content.is_one() {
        for (_, v) in ints.iter_mut() {
            *v /= &content;
        }
    }
    if ints[0].1.is_negative() {
        for (_, v) in ints.iter_mut() {
            *v = -v.clone();
        }
    }
    ints
}

/// A row space held in echelon form over ℚ: every stored row is a
/// primitive integer vector with a distinct pivot (leading) column.
/// Reduction is fraction-free: the working vector is an integer vector
/// together with a running denominator.
#[derive(Debug, Clone)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<IntRow>,
    pivot_of_col: Vec<Option<usize>>,
    reduced: bool,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_of_col: vec![None; ncols],
            reduced: true,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The stored primitive integer basis rows.
    pub fn rows(&self) -> &[IntRow] {
        &self.rows
    }

    pub fn row_as_rational(&self, j: usize) -> SparseVec {
        self.rows[j]
            .iter()
            .map(|(c, v)| (*c, Rational::from_integer(v.clone())))
            .collect()
    }

    /// Pivot columns in increasing column order.
    pub fn pivot_cols(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        cols.sort_unstable();
        cols
    }

    /// Non-pivot columns in increasing column order.
    pub fn free_cols(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| self.pivot_of_col[*c].is_none())
            .collect()
    }

    /// Core sweep: eliminates every pivot column from `row` by
    /// fraction-free combinations, returning the integer remainder and
    /// the scale s such that remainder/s is the exact normal form. When
    /// `coords` is given, records the rational coefficient of each basis
    /// row in the expansion of the input.
    fn reduce_scaled(
        &self,
        row: &SparseVec,
        mut coords: Option<&mut Vec<Rational>>,
    ) -> (BTreeMap<usize, BigInt>, BigInt) {
        let ints = primitive_int_row_with_denoms(row);
        let (mut work, mut scale) = ints;
        let mut ops = 0usize;
        let mut done: Vec<(usize, BigInt)> = Vec::new();
        while let Some((&col, _)) = work.iter().next() {
            let value = work.remove(&col).expect("present");
            if value.is_zero() {
                continue;
            }
            let Some(r) = self.pivot_of_col[col] else {
                done.push((col, value));
                continue;
            };
            let pivot_val = &self.rows[r][0].1;
            if let Some(c) = coords.as_deref_mut() {
                c[r] += Rational::new(value.clone(), scale.clone() * pivot_val);
            }
            let g = value.gcd(pivot_val);
            let mult = pivot_val / &g;
            let sub = &value / &g;
            if !mult.is_one() {
                for v in work.values_mut() {
                    *v *= &mult;
                }
                for (_, v) in done.iter_mut() {
                    *v *= &mult;
                }
                scale *= &mult;
            }
            for (c, v) in self.rows[r].iter().skip(1) {
                let entry = work.entry(*c).or_insert_with(BigInt::zero);
                *entry -= &sub * v;
                if entry.is_zero() {
                    work.remove(c);
                }
            }
            ops += 1;
            if ops.is_multiple_of(64) {
                strip_partial(&mut work, &mut done, &mut scale);
            }
        }
        for (c, v) in done {
            work.insert(c, v);
        }
        (work, scale)
    }

    /// Canonical normal form of the vector modulo the span: all pivot
    /// columns eliminated, exact rational coefficients.
    pub fn reduce(&self, row: SparseVec) -> SparseVec {
        let (work, scale) = self.reduce_scaled(&row, None);
        work.into_iter()
            .map(|(c, v)| (c, Rational::new(v, scale.clone())))
            .collect()
    }

    /// Inserts a row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let (work, _scale) = self.reduce_scaled(&row, None);
        if work.is_empty() {
            return false;
        }
        let as_sparse: SparseVec = work
            .into_iter()
            .map(|(c, v)| (c, Rational::from_integer(v)))
            .collect();
        let rem = primitive_int_row(&as_sparse);
        let pivot = rem[0].0;
        self.pivot_of_col[pivot] = Some(self.rows.len());
        self.rows.push(rem);
        self.reduced = false;
        true
    }

    pub fn contains(&self, row: SparseVec) -> bool {
        let (work, _) = self.reduce_scaled(&row, None);
        work.is_empty()
    }

    /// Coordinates of `row` along the stored basis rows, or None if the
    /// vector is not in the span. Works on any echelon form.
    pub fn coordinates(&self, row: &SparseVec) -> Option<Vec<Rational>> {
        let mut coords = vec![Rational::zero(); self.rows.len()];
        let (work, _) = self.reduce_scaled(row, Some(&mut coords));
        if work.is_empty() {
            Some(coords)
        } else {
            None
        }
    }

    /// Full back-substitution: clears every pivot column from every other
    /// row. Rows stay primitive integer vectors.
    pub fn back_substitute(&mut self) {
        if self.reduced {
            return;
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by(|a, b| self.rows[*b][0].0.cmp(&self.rows[*a][0].0));
        for &r in &order {
            let row = std::mem::take(&mut self.rows[r]);
            let pivot = row[0].0;
            let as_sparse: SparseVec = row
                .into_iter()
                .map(|(c, v)| (c, Rational::from_integer(v)))
                .collect();
            // mask the row's own pivot so the sweep only eliminates the
            // later pivot columns
            self.pivot_of_col[pivot] = None;
            let reduced = self.reduce(as_sparse);
            self.rows[r] = primitive_int_row(&reduced);
            self.pivot_of_col[pivot] = Some(r);
        }
        self.reduced = true;
    }

    /// Basis of the kernel of the matrix whose rows were inserted, one
    /// echelonized vector per free column.
    pub fn kernel_basis(&mut self) -> Vec<SparseVec> {
        self.back_substitute();
        let mut out = Vec::new();
        for free in self.free_cols() {
            let mut v: SparseVec = vec![(free, Rational::one())];
            for row in &self.rows {
                if let Some((_, coeff)) = row.iter().find(|(c, _)| *c == free) {
                    v.push((
                        row[0].0,
                        -Rational::new(coeff.clone(), row[0].1.clone()),
                    ));
                }
            }
            v.sort_unstable_by_key(|(c, _)| *c);
            out.push(v);
        }
        out
    }
}

fn strip_partial(
    work: &mut BTreeMap<usize, BigInt>,
    done: &mut [(usize, BigInt)],
    scale: &mut BigInt,
) {
    let mut g = scale.clone();
    for v in work.values() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    for (_, v) in done.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_one() && !g.is_zero() {
        *scale /= &g;
        for v in work.values_mut() {
            *v /= &g;
        }
        for (_, v) in done.iter_mut() {
            *v /= &g;
        }
    }
}

/// Clears denominators: returns the integer work vector and the scale s
/// with work/s equal to the input row.
fn primitive_int_row_with_denoms(row: &SparseVec) -> (BTreeMap<usize, BigInt>, BigInt) {
    let mut lcm = BigInt::one();
    for (_, c) in row {
        lcm = lcm.lcm(c.denom());
    }
    let work: BTreeMap<usize, BigInt> = row
        .iter()
        .map(|(i, c)| (*i, c.numer() * (&lcm / c.denom())))
        .collect();
    (work, lcm)
}

/// Rank of an arbitrary family of sparse rows.
pub fn rank_of(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> usize {
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Two row sets span the same subspace.
pub fn same_span(a: &Echelon, b: &Echelon) -> bool {
    a.rank() == b.rank()
        && (0..a.rank()).all(|j| b.contains(a.row_as_rational(j)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, ratio};

    fn row(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|(c, v)| (*c, rat(*v))).collect()
    }

    #[test]
    fn rank_and_reduce() {
        let mut e = Echelon::new(3);
        assert!(e.insert(row(&[(0, 1), (1, 2), (2, 3)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 2), (1, 5), (2, 7)]))); // sum of the two
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_cols(), vec![0, 1]);
        assert_eq!(e.free_cols(), vec![2]);
    }

    #[test]
    fn reduce_gives_zero_on_members() {
        let mut e = Echelon::new(4);
        e.insert(row(&[(0, 2), (3, 4)]));
        e.insert(row(&[(1, 1), (2, 1)]));
        assert!(e.contains(row(&[(0, 1), (1, 3), (2, 3), (3, 2)])));
        assert!(!e.contains(row(&[(0, 1), (1, 3), (2, 2), (3, 2)])));
    }

    #[test]
    fn reduce_is_exact_normal_form() {
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 2), (2, 1)]));
        // NF of (1, 0, 0) must be (0, 0, -1/2): subtract 1/2 of the row
        let nf = e.reduce(row(&[(0, 1)]));
        assert_eq!(nf, vec![(2usize, ratio(-1, 2))]);
    }

    #[test]
    fn back_substitution_clears_pivot_columns() {
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 1), (1, 1), (2, 1)]));
        e.insert(row(&[(1, 2), (2, 2)]));
        e.back_substitute();
        let r0 = &e.rows()[0];
        assert!(r0.iter().all(|(c, _)| *c != 1));
    }

    #[test]
    fn coordinates_in_any_echelon_basis() {
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 1), (2, 1)]));
        e.insert(row(&[(1, 1), (2, -1)]));
        let v = row(&[(0, 2), (1, 3), (2, -1)]);
        let coords = e.coordinates(&v).unwrap();
        assert_eq!(coords, vec![rat(2), rat(3)]);
        assert!(e.coordinates(&row(&[(2, 1)])).is_none());
        // coordinates must reconstruct the vector for scaled bases too
        let mut e2 = Echelon::new(2);
        e2.insert(vec![(0, ratio(2, 3)), (1, ratio(5, 7))]);
        let target = vec![(0usize, rat(4)), (1, ratio(30, 7))];
        let coords = e2.coordinates(&target).unwrap();
        let rebuilt: Vec<Rational> = {
            let r = e2.row_as_rational(0);
            vec![
                coords[0].clone() * &r[0].1,
                coords[0].clone() * &r[1].1,
            ]
        };
        assert_eq!(rebuilt[0], rat(4));
        assert_eq!(rebuilt[1], ratio(30, 7));
    }

    #[test]
    fn kernel_of_projection() {
        // single equation x0 + x1 + x2 = 0 over 3 columns
        let mut e = Echelon::new(3);
        e.insert(row(&[(0, 1), (1, 1), (2, 1)]));
        let ker = e.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let s: Rational = v.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(s, rat(0));
        }
    }

    #[test]
    fn fractional_arithmetic_is_exact() {
        let mut e = Echelon::new(2);
        e.insert(vec![(0, ratio(1, 3)), (1, ratio(1, 7))]);
        e.insert(vec![(0, ratio(2, 3)), (1, ratio(2, 7))]);
        assert_eq!(e.rank(), 1);
        // stored as the primitive integer row (7, 3)
        assert_eq!(
            e.rows()[0],
            vec![(0usize, BigInt::from(7)), (1usize, BigInt::from(3))]
        );
    }

    #[test]
    fn random_member_round_trip() {
        // coordinates() recombines to the original vector
        let mut e = Echelon::new(5);
        let basis = [
            row(&[(0, 3), (2, -2), (4, 7)]),
            row(&[(1, 2), (2, 5)]),
            row(&[(3, 1), (4, -1)]),
        ];
        for b in &basis {
            e.insert(b.clone());
        }
        let combo: Vec<Rational> = {
            let mut dense = vec![rat(0); 5];
            let weights = [ratio(1, 2), rat(-3), ratio(5, 7)];
            for (w, b) in weights.iter().zip(&basis) {
                for (c, v) in b {
                    dense[*c] += w.clone() * v;
                }
            }
            dense
        };
        let sparse = sparse_from_dense(&combo);
        let coords = e.coordinates(&sparse).expect("member of span");
        // rebuild from the stored (rescaled) basis rows
        let mut rebuilt = vec![rat(0); 5];
        for (j, w) in coords.iter().enumerate() {
            for (c, v) in e.row_as_rational(j) {
                rebuilt[c] += w.clone() * v;
            }
        }
        assert_eq!(rebuilt, combo);
    }
}
