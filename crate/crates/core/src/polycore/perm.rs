use super::{Monomial, Polynomial};
use crate::{Error, Result};

/// A permutation of {1, ..., n}, stored as the image sequence.
///
/// Composition convention: `(s.compose(&t))(i) = s(t(i))` — apply `t`
/// first. Acting on polynomials, `apply(sigma, f)` substitutes
/// x_i ↦ x_{sigma(i)}, so `apply(tau, apply(sigma, f)) =
/// apply(tau.compose(&sigma)... )` — see the action-law test which pins
/// the convention.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    /// images[i] = σ(i+1) − 1, i.e. 0-based image table.
    images: Vec<usize>,
}

impl Permutation {
    /// Builds from 1-based images; validates bijectivity.
    pub fn from_images(images_one_based: &[usize]) -> Result<Self> {
        let n = images_one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &v in images_one_based {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidArgument(format!(
                    "not a permutation of 1..{n}: {images_one_based:?}"
                )));
            }
            seen[v - 1] = true;
            images.push(v - 1);
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// The transposition (a b), 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && a <= n && b >= 1 && b <= n && a != b);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// A single cycle (c1 c2 ... ck), 1-based: c1 ↦ c2 ↦ ... ↦ ck ↦ c1.
    pub fn cycle(n: usize, cyc: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for w in 0..cyc.len() {
            let from = cyc[w] - 1;
            let to = cyc[(w + 1) % cyc.len()] - 1;
            images[from] = to;
        }
        Permutation { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// σ(i), 1-based.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.images.len(), other.images.len());
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Cycle lengths, sorted descending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                len += 1;
                cur = self.images[cur];
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Image of a monomial under x_i ↦ x_{σ(i)}.
    pub fn apply_monomial(&self, m: &Monomial) -> Monomial {
        debug_assert_eq!(m.n_vars(), self.images.len());
        let old = m.exponents();
        let mut e = vec![0u32; old.len()];
        for (i, &img) in self.images.iter().enumerate() {
            e[img] = old[i];
        }
        Monomial::new(e)
    }

    /// f^σ: substitutes x_i ↦ x_{σ(i)} in every term. A ring automorphism.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.n_vars() != self.images.len() {
            return Err(Error::PermutationLength(self.images.len(), p.n_vars()));
        }
        Ok(Polynomial::from_terms(
            p.n_vars(),
            p.terms().map(|(m, c)| (self.apply_monomial(m), c.clone())),
        ))
    }

    /// All n! elements of S_n in a deterministic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut items: Vec<usize> = (0..n).collect();
        permute(&mut items, 0, &mut out);
        out
    }
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Permutation>) {
    if k == items.len() {
        out.push(Permutation {
            images: items.clone(),
        });
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn p(text: &str, n: usize) -> Polynomial {
        parse_polynomial(text, n).unwrap()
    }

    #[test]
    fn transposition_action() {
        let sigma = Permutation::transposition(3, 1, 2);
        let f = p("x1^2*x3", 3);
        assert_eq!(sigma.apply(&f).unwrap(), p("x2^2*x3", 3));
    }

    #[test]
    fn identity_acts_trivially() {
        let id = Permutation::identity(4);
        let f = p("x1*x2 - 3*x3^2 + x4", 4);
        assert_eq!(id.apply(&f).unwrap(), f);
    }

    #[test]
    fn cycle_action_convention() {
        // σ = (1 2 3) sends x1 ↦ x2, x2 ↦ x3, x3 ↦ x1.
        let sigma = Permutation::cycle(3, &[1, 2, 3]);
        let f = p("x1 + 2*x2 + 3*x3", 3);
        assert_eq!(sigma.apply(&f).unwrap(), p("x2 + 2*x3 + 3*x1", 3));
    }

    #[test]
    fn action_law_matches_composition_convention() {
        // (f^σ)^τ = f^{τ∘σ} with (τ∘σ)(i) = τ(σ(i)): applying σ then τ
        // composes through `tau.compose(&sigma)`.
        let sigma = Permutation::cycle(4, &[1, 2, 3]);
        let tau = Permutation::transposition(4, 2, 4);
        let f = p("x1^2*x2 + 5*x3*x4 - x2^3", 4);
        let lhs = tau.apply(&sigma.apply(&f).unwrap()).unwrap();
        let rhs = tau.compose(&sigma).apply(&f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let sigma = Permutation::from_images(&[3, 1, 4, 2, 5]).unwrap();
        assert!(sigma.compose(&sigma.inverse()).is_identity());
        assert!(sigma.inverse().compose(&sigma).is_identity());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let sigma = Permutation::identity(3);
        assert!(sigma.apply(&p("x1", 2)).is_err());
    }

    #[test]
    fn all_elements_has_factorial_size() {
        assert_eq!(Permutation::all(4).len(), 24);
        let mut set = std::collections::HashSet::new();
        for g in Permutation::all(4) {
            set.insert(g);
        }
        assert_eq!(set.len(), 24);
    }

    #[test]
    fn cycle_lengths_sorted() {
        let sigma = Permutation::cycle(6, &[1, 2, 3]).compose(&Permutation::transposition(6, 4, 5));
        assert_eq!(sigma.cycle_lengths(), vec![3, 2, 1]);
    }
}
