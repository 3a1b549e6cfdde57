//! Sparse polynomials in the exterior-power symbols and the Newton/gamma
//! basis changes.
//!
//! A [`LambdaPoly`] is a finite sum of monomials `lam^I` indexed by
//! partitions `I` (the empty partition is the constant term). Multiplication
//! merges the part multisets, so the symbols behave like independent
//! indeterminates `lam^1, lam^2, ..` and a partition names the product of
//! one indeterminate per part.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::linalg::{rat, Rational};
use crate::partitions::Partition;

/// Sparse polynomial in the `lam^i` symbols with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LambdaPoly {
    terms: BTreeMap<Partition, Rational>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly::default()
    }

    pub fn one() -> Self {
        LambdaPoly::monomial(Partition::empty())
    }

    pub fn monomial(i: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(i, Rational::one());
        LambdaPoly { terms }
    }

    pub fn single(i: u32) -> Self {
        LambdaPoly::monomial(Partition::from_parts(vec![i]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: &Partition) -> Rational {
        self.terms.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, i: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(i.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&i);
        }
    }

    pub fn add(&self, other: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LambdaPoly) -> LambdaPoly {
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.add_term(i.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LambdaPoly {
        if c.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            terms: self
                .terms
                .iter()
                .map(|(i, v)| (i.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &LambdaPoly) -> LambdaPoly {
        let mut out = LambdaPoly::zero();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                out.add_term(i.merge(j), a * b);
            }
        }
        out
    }

    /// All coefficients integral?
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom() == &BigInt::one())
    }

    /// Leading monomial: maximal weight, then maximal in the canonical
    /// partition order. `None` for the zero polynomial.
    pub fn leading_by_weight(&self) -> Option<(&Partition, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.weight().cmp(&b.weight()).then(a.cmp(b)))
    }
}

/// Partitions of `k` in the canonical table order: lexicographic on the
/// weakly increasing part lists (`(1,1,1) < (1,2) < (3)`).
pub fn weight_basis(k: u32) -> Vec<Partition> {
    let mut basis = crate::partitions::enumerate(k, crate::partitions::Constraint::All);
    basis.sort();
    basis
}

/// Partitions of every weight `1..=k`, in increasing weight then canonical
/// order.
pub fn filtered_basis(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    for w in 1..=k {
        out.extend(weight_basis(w));
    }
    out
}

/// The power-sum symbol `psi^i` expressed in the `lam` symbols through
/// Newton's identity
/// `psi^i = lam^1 psi^{i-1} - lam^2 psi^{i-2} + .. + (-1)^{i-1} i lam^i`.
pub fn newton_psi(i: u32) -> LambdaPoly {
    assert!(i >= 1, "power sums are indexed from 1");
    let mut table: Vec<LambdaPoly> = vec![LambdaPoly::one()];
    for m in 1..=i {
        let mut acc = LambdaPoly::zero();
        for t in 1..m {
            let sign = if t % 2 == 1 { rat(1) } else { rat(-1) };
            let term = LambdaPoly::single(t).mul(&table[(m - t) as usize]).scale(&sign);
            acc = acc.add(&term);
        }
        let sign = if m % 2 == 1 { rat(m as i64) } else { rat(-(m as i64)) };
        acc.add_term(Partition::from_parts(vec![m]), sign);
        table.push(acc);
    }
    table.pop().expect("table has i+1 entries")
}

/// `psi^J`: the product of `newton_psi` over the parts of `J`.
pub fn psi_product(j: &Partition) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for &part in j.parts() {
        acc = acc.mul(&newton_psi(part));
    }
    acc
}

/// The gamma symbol `gamma^i` in the `lam` symbols:
/// `gamma^i = sum_k C(i-1, k-1) lam^k`, from the re-indexing generating
/// function `gamma_t = lam_{t/(1-t)}`.
pub fn gamma_single(i: u32) -> LambdaPoly {
    assert!(i >= 1);
    let mut out = LambdaPoly::zero();
    // binomial(i-1, k-1) computed incrementally
    let mut binom = BigInt::one();
    for k in 1..=i {
        out.add_term(
            Partition::from_parts(vec![k]),
            Rational::from_integer(binom.clone()),
        );
        // C(i-1, k) = C(i-1, k-1) * (i-k) / k
        binom = binom * BigInt::from(i - k) / BigInt::from(k);
    }
    out
}

/// `gamma^I` expanded in the `lam` monomials (weights `<= |I|`).
pub fn gamma_product(i: &Partition) -> LambdaPoly {
    let mut acc = LambdaPoly::one();
    for &part in i.parts() {
        acc = acc.mul(&gamma_single(part));
    }
    acc
}

/// Rewrites a polynomial in the `gamma` monomial basis by filtered
/// elimination: `gamma^I = lam^I +` lower-weight terms, so repeatedly
/// subtracting the gamma expansion of the leading monomial terminates.
/// Returns the gamma-basis coefficients.
pub fn to_gamma_basis(f: &LambdaPoly) -> BTreeMap<Partition, Rational> {
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while let Some((lead, coeff)) = rest.leading_by_weight() {
        let lead = lead.clone();
        let coeff = coeff.clone();
        if lead.is_empty() {
            // constant term: gamma^{empty} = 1
            out.insert(lead.clone(), coeff.clone());
            rest.add_term(lead, -coeff);
            continue;
        }
        out.insert(lead.clone(), coeff.clone());
        rest = rest.sub(&gamma_product(&lead).scale(&coeff));
    }
    out
}
