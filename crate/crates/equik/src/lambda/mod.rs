//! Universal structure constants of exterior-power operations.
//!
//! The representation-ring side of the crate. Products of the dual symbols
//! are governed by the same integer constants `c` that express
//! `lam^L(xy)` in terms of `lam^I(x) lam^J(y)` in any lambda-ring, and
//! those constants are computed here through the Newton basis change:
//! power sums are multiplicative on products, so transporting the
//! one-line coproduct of the `psi` basis back through the triangular
//! matrices `theta`/`omega` yields every `c` table. The gamma re-indexing
//! produces the `u` tables, whose weight-`n`, distinct-part slice is the
//! module action on the rank basis.
//!
//! Everything is exact; the [`oracle`] module provides the independent
//! brute-force expansion that the table route is checked against.

pub mod oracle;
pub mod poly;

pub use oracle::oracle_c;
pub use poly::{
    filtered_basis, gamma_product, gamma_single, newton_psi, psi_product, to_gamma_basis,
    weight_basis, LambdaPoly,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::linalg::{Matrix, Rational};
use crate::partitions::Partition;
use crate::{Error, Result};

/// Default guard on table degrees.
pub const DEFAULT_DEGREE_GUARD: u32 = 10;

/// Which table a [`ConstantsTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableKind {
    /// `psi^J = sum_I theta[I, J] lam^I` over partitions of `k`.
    Theta,
    /// `lam^I = sum_J omega[J, I] psi^J` over partitions of `k`.
    Omega,
    /// `lam^L(xy) = sum_{I,J} c[I, J] lam^I(x) lam^J(y)`, `L` fixed.
    C,
    /// `gamma^L(xy) = sum_{I,J} u[I, J] gamma^I(x) gamma^J(y)`, `L` fixed;
    /// entries run over all weights `<= |L|`.
    U,
    /// `gamma^I = sum_T table[T, I] lam^T` for `|I| <= k`.
    GammaInLambda,
    /// `lam^I = sum_T table[T, I] gamma^T` for `|I| <= k`.
    LambdaInGamma,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Theta => "theta",
            TableKind::Omega => "omega",
            TableKind::C => "c",
            TableKind::U => "u",
            TableKind::GammaInLambda => "gamma_in_lambda",
            TableKind::LambdaInGamma => "lambda_in_gamma",
        }
    }
}

/// An exact table of structure constants keyed by partition pairs.
#[derive(Debug, Clone)]
pub struct ConstantsTable {
    pub kind: TableKind,
    /// Weight `k` of the basis, or `|L|` for the `c`/`u` tables.
    pub weight: u32,
    /// The fixed partition `L` for the `c`/`u` tables.
    pub label: Option<Partition>,
    entries: BTreeMap<(Partition, Partition), Rational>,
}

impl ConstantsTable {
    fn new(kind: TableKind, weight: u32, label: Option<Partition>) -> Self {
        ConstantsTable {
            kind,
            weight,
            label,
            entries: BTreeMap::new(),
        }
    }

    fn insert(&mut self, a: Partition, b: Partition, v: Rational) {
        if !v.is_zero() {
            self.entries.insert((a, b), v);
        }
    }

    pub fn get(&self, a: &Partition, b: &Partition) -> Rational {
        self.entries
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &Rational)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|v| v.denom() == &BigInt::one())
    }
}

fn check_degree(k: u32, what: &'static str) -> Result<()> {
    if k == 0 || k > DEFAULT_DEGREE_GUARD {
        return Err(Error::SizeLimit {
            what,
            limit: DEFAULT_DEGREE_GUARD as usize,
            requested: k as usize,
        });
    }
    Ok(())
}

/// The integral triangular matrix expressing each `psi^J` over the `lam^I`
/// monomials of weight `k`. Entry `(I, J)` is the coefficient of `lam^I`
/// in `psi^J`.
pub fn theta(k: u32) -> Result<ConstantsTable> {
    check_degree(k, "theta table degree")?;
    let basis = weight_basis(k);
    let mut table = ConstantsTable::new(TableKind::Theta, k, None);
    for j in &basis {
        let expansion = psi_product(j);
        for i in &basis {
            table.insert(i.clone(), j.clone(), expansion.coeff(i));
        }
    }
    debug_assert!(table.is_integral());
    Ok(table)
}

/// The rational inverse of [`theta`]: entry `(J, I)` is the coefficient of
/// `psi^J` in `lam^I`. The product of the two matrices is checked to be
/// the identity.
pub fn omega(k: u32) -> Result<ConstantsTable> {
    check_degree(k, "omega table degree")?;
    let basis = weight_basis(k);
    let th = theta(k)?;
    let n = basis.len();
    // rows = expanded symbol J, cols = monomial I
    let mut m = Matrix::zero(n, n);
    for (jj, j) in basis.iter().enumerate() {
        for (ii, i) in basis.iter().enumerate() {
            m.set(jj, ii, th.get(i, j));
        }
    }
    let inv = m.inverse().expect("theta is triangular with nonzero diagonal");
    debug_assert_eq!(m.mul(&inv), Matrix::identity(n));
    let mut table = ConstantsTable::new(TableKind::Omega, k, None);
    for (ii, i) in basis.iter().enumerate() {
        for (jj, j) in basis.iter().enumerate() {
            table.insert(j.clone(), i.clone(), inv.get(ii, jj).clone());
        }
    }
    Ok(table)
}

/// Structure constants for `lam^L(xy)`: the table of integers `c[I, J]`
/// over partitions `I, J` of weight `|L|`, computed as
/// `sum_K theta[I, K] theta[J, K] omega[K, L]`.
pub fn c_constants(l: &Partition) -> Result<ConstantsTable> {
    let k = l.weight();
    check_degree(k, "c table degree")?;
    let basis = weight_basis(k);
    let th = theta(k)?;
    let om = omega(k)?;
    let mut table = ConstantsTable::new(TableKind::C, k, Some(l.clone()));
    for i in &basis {
        for j in &basis {
            let mut acc = Rational::zero();
            for kk in &basis {
                let w = om.get(kk, l);
                if w.is_zero() {
                    continue;
                }
                acc += th.get(i, kk) * th.get(j, kk) * w;
            }
            table.insert(i.clone(), j.clone(), acc);
        }
    }
    if !table.is_integral() {
        return Err(Error::NonIntegral(format!("c table for {l}")));
    }
    Ok(table)
}

/// A sum of `lam^I (x) lam^J` tensor monomials with exact coefficients.
pub type LambdaTensor = BTreeMap<(Partition, Partition), Rational>;

fn tensor_add(acc: &mut LambdaTensor, key: (Partition, Partition), v: Rational) {
    if v.is_zero() {
        return;
    }
    let entry = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *entry += v;
    if entry.is_zero() {
        acc.remove(&key);
    }
}

fn tensor_mul(a: &LambdaTensor, b: &LambdaTensor) -> LambdaTensor {
    let mut out = LambdaTensor::new();
    for ((i1, j1), c1) in a {
        for ((i2, j2), c2) in b {
            tensor_add(&mut out, (i1.merge(i2), j1.merge(j2)), c1 * c2);
        }
    }
    out
}

/// The product coproduct on a single symbol: `m(lam^n)` as a tensor, read
/// off the `c` table for the one-part partition `(n)`.
pub fn coproduct_lambda(n: u32) -> Result<LambdaTensor> {
    coproduct_monomial(&Partition::from_parts(vec![n]))
}

/// `m(lam^I)` for a general monomial, using multiplicativity
/// `m(uv) = m(u) m(v)` over the parts.
pub fn coproduct_monomial(i: &Partition) -> Result<LambdaTensor> {
    let mut acc: LambdaTensor = LambdaTensor::new();
    acc.insert((Partition::empty(), Partition::empty()), Rational::one());
    for &part in i.parts() {
        let c = c_constants(&Partition::from_parts(vec![part]))?;
        let mut single = LambdaTensor::new();
        for ((a, b), v) in c.entries() {
            single.insert((a.clone(), b.clone()), v.clone());
        }
        acc = tensor_mul(&acc, &single);
    }
    Ok(acc)
}

/// Coproduct of an arbitrary polynomial, by linearity over its monomials.
pub fn coproduct_poly(f: &LambdaPoly) -> Result<LambdaTensor> {
    let mut acc = LambdaTensor::new();
    for (i, coeff) in f.terms() {
        for (key, v) in coproduct_monomial(i)? {
            tensor_add(&mut acc, key, v * coeff);
        }
    }
    Ok(acc)
}

/// Both gamma basis-change tables up to weight `k`: the expansions of
/// `gamma^I` in `lam` monomials and of `lam^I` in `gamma` monomials.
/// Both are integral and unitriangular by weight.
pub fn gamma_tables(k: u32) -> Result<(ConstantsTable, ConstantsTable)> {
    check_degree(k, "gamma table degree")?;
    let mut g2l = ConstantsTable::new(TableKind::GammaInLambda, k, None);
    let mut l2g = ConstantsTable::new(TableKind::LambdaInGamma, k, None);
    for i in filtered_basis(k) {
        let expansion = gamma_product(&i);
        for (t, c) in expansion.terms() {
            g2l.insert(t.clone(), i.clone(), c.clone());
        }
        let back = to_gamma_basis(&LambdaPoly::monomial(i.clone()));
        for (t, c) in back {
            l2g.insert(t, i.clone(), c);
        }
    }
    if !g2l.is_integral() || !l2g.is_integral() {
        return Err(Error::NonIntegral("gamma conversion".into()));
    }
    Ok((g2l, l2g))
}

/// Structure constants for `gamma^L(xy)` over `gamma^I(x) gamma^J(y)`:
/// expand `gamma^L` in `lam` monomials, apply the coproduct, and convert
/// both tensor legs back to the gamma basis. Entries span all weights
/// `<= |L|`; the weight-`|L|` slice coincides with the `c` table.
pub fn u_constants(l: &Partition) -> Result<ConstantsTable> {
    let k = l.weight();
    check_degree(k, "u table degree")?;
    let expansion = gamma_product(l);
    let tensor = coproduct_poly(&expansion)?;
    // convert both legs lam -> gamma, caching conversions
    let mut cache: BTreeMap<Partition, BTreeMap<Partition, Rational>> = BTreeMap::new();
    let mut convert = |p: &Partition| -> BTreeMap<Partition, Rational> {
        cache
            .entry(p.clone())
            .or_insert_with(|| to_gamma_basis(&LambdaPoly::monomial(p.clone())))
            .clone()
    };
    let mut out = ConstantsTable::new(TableKind::U, k, Some(l.clone()));
    let mut acc = LambdaTensor::new();
    for ((i, j), v) in tensor {
        let ci = convert(&i);
        let cj = convert(&j);
        for (gi, a) in &ci {
            for (gj, b) in &cj {
                tensor_add(&mut acc, (gi.clone(), gj.clone()), &v * a * b);
            }
        }
    }
    for ((i, j), v) in acc {
        out.insert(i, j, v);
    }
    if !out.is_integral() {
        return Err(Error::NonIntegral(format!("u table for {l}")));
    }
    Ok(out)
}

/// The module-action vector: coefficients of `gamma_J` in
/// `gamma_I . gamma_S`, over partitions `J` of `n` with distinct parts
/// (the rank basis). `S` must be a distinct partition of the same weight
/// as `I`. Constants with non-distinct `J` are dropped, which reflects
/// squares vanishing in odd degree.
pub fn module_action(i: &Partition, s: &Partition) -> Result<Vec<(Partition, BigInt)>> {
    if !s.is_distinct() {
        return Err(Error::InvalidBasis(format!(
            "{s} has repeated parts; the rank basis needs distinct parts"
        )));
    }
    if i.weight() != s.weight() {
        return Err(Error::InvalidBasis(format!(
            "weights differ: |{i}| = {} but |{s}| = {}",
            i.weight(),
            s.weight()
        )));
    }
    let n = s.weight();
    let u = u_constants(s)?;
    let mut out = Vec::new();
    for j in weight_basis(n) {
        if !j.is_distinct() {
            continue;
        }
        let v = u.get(i, &j);
        debug_assert!(v.denom() == &BigInt::one());
        out.push((j, v.numer().clone()));
    }
    Ok(out)
}

/// Degree of the rank-basis symbol `gamma_S`: the parity of the number of
/// parts (0 for even, 1 for odd).
pub fn symbol_degree(s: &Partition) -> u8 {
    (s.len() % 2) as u8
}

/// Transports the `c` constants to the power-sum basis:
/// `psi^S(xy) = sum v[I, J] psi^I(x) psi^J(y)`. Multiplicativity of the
/// power sums means the result must be the Kronecker delta on `I = J = S`;
/// the table route is validated against that.
pub fn psi_coproduct(s: &Partition) -> Result<LambdaTensor> {
    let k = s.weight();
    check_degree(k, "psi coproduct degree")?;
    let om = omega(k)?;
    let basis = weight_basis(k);
    let tensor = coproduct_poly(&psi_product(s))?;
    // convert legs lam -> psi via omega
    let mut out = LambdaTensor::new();
    for ((i, j), v) in tensor {
        for pi in &basis {
            let a = om.get(pi, &i);
            if a.is_zero() {
                continue;
            }
            for pj in &basis {
                let b = om.get(pj, &j);
                if b.is_zero() {
                    continue;
                }
                tensor_add(&mut out, (pi.clone(), pj.clone()), &v * &a * b);
            }
        }
    }
    Ok(out)
}

/// True when `psi_coproduct(s)` is exactly `psi^S (x) psi^S`.
pub fn psi_diagonality_holds(s: &Partition) -> Result<bool> {
    let t = psi_coproduct(s)?;
    let mut expected = LambdaTensor::new();
    expected.insert((s.clone(), s.clone()), Rational::one());
    Ok(t == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts.to_vec())
    }

    #[test]
    fn theta_k2_rows() {
        let th = theta(2).unwrap();
        // psi^{(2)} = -2 lam^{(2)} + lam^{(1,1)}
        assert_eq!(th.get(&p(&[2]), &p(&[2])), rat(-2));
        assert_eq!(th.get(&p(&[1, 1]), &p(&[2])), rat(1));
        // psi^{(1,1)} = lam^{(1,1)}
        assert_eq!(th.get(&p(&[1, 1]), &p(&[1, 1])), rat(1));
        assert_eq!(th.get(&p(&[2]), &p(&[1, 1])), rat(0));
    }

    #[test]
    fn omega_k2_entries() {
        let om = omega(2).unwrap();
        // lam^{(2)} = (psi^{(1,1)} - psi^{(2)})/2
        assert_eq!(om.get(&p(&[1, 1]), &p(&[2])), ratio(1, 2));
        assert_eq!(om.get(&p(&[2]), &p(&[2])), ratio(-1, 2));
        assert_eq!(om.get(&p(&[1, 1]), &p(&[1, 1])), rat(1));
    }

    #[test]
    fn omega_k3_entries() {
        let om = omega(3).unwrap();
        // lam^{(3)} = psi^{(1,1,1)}/6 - psi^{(1,2)}/2 + psi^{(3)}/3
        assert_eq!(om.get(&p(&[1, 1, 1]), &p(&[3])), ratio(1, 6));
        assert_eq!(om.get(&p(&[1, 2]), &p(&[3])), ratio(-1, 2));
        assert_eq!(om.get(&p(&[3]), &p(&[3])), ratio(1, 3));
    }

    #[test]
    fn theta_omega_inverse_up_to_six() {
        for k in 1..=6u32 {
            let basis = weight_basis(k);
            let th = theta(k).unwrap();
            let om = omega(k).unwrap();
            for a in &basis {
                for b in &basis {
                    // expanding lam^a over psi then back over lam gives delta
                    let mut acc = Rational::zero();
                    for kk in &basis {
                        acc += om.get(kk, a) * th.get(b, kk);
                    }
                    let expected = if a == b { rat(1) } else { rat(0) };
                    assert_eq!(acc, expected, "k={k} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn theta_is_triangular_with_part_product_diagonal() {
        for k in 1..=6u32 {
            let basis = weight_basis(k);
            let th = theta(k).unwrap();
            assert!(th.is_integral());
            for (ji, j) in basis.iter().enumerate() {
                // diagonal: product over parts of (-1)^{part-1} * part
                let mut expected = 1i64;
                for &part in j.parts() {
                    let signed = if part % 2 == 0 { -(part as i64) } else { part as i64 };
                    expected *= signed;
                }
                assert_eq!(th.get(j, j), rat(expected), "diagonal at {j}");
                // triangularity: entries vanish above the diagonal
                for i in basis.iter().skip(ji + 1) {
                    assert_eq!(th.get(i, j), rat(0), "theta[{i}, {j}] should vanish");
                }
            }
        }
    }

    #[test]
    fn c_table_degree_two_matches_displayed_formula() {
        let c = c_constants(&p(&[2])).unwrap();
        assert_eq!(c.get(&p(&[2]), &p(&[1, 1])), rat(1));
        assert_eq!(c.get(&p(&[1, 1]), &p(&[2])), rat(1));
        assert_eq!(c.get(&p(&[2]), &p(&[2])), rat(-2));
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn c_table_degree_one_is_trivial() {
        let c = c_constants(&p(&[1])).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get(&p(&[1]), &p(&[1])), rat(1));
    }

    #[test]
    fn c_tables_integral_to_six() {
        for k in 1..=6u32 {
            for l in weight_basis(k) {
                let c = c_constants(&l).unwrap();
                assert!(c.is_integral(), "c table for {l}");
            }
        }
    }

    #[test]
    fn c_symmetric_in_lower_indices() {
        for k in 1..=4u32 {
            for l in weight_basis(k) {
                let c = c_constants(&l).unwrap();
                for ((i, j), v) in c.entries() {
                    assert_eq!(&c.get(j, i), v, "c[{i},{j}] for {l}");
                }
            }
        }
    }

    #[test]
    fn c_tables_match_oracle_to_four() {
        for k in 1..=4u32 {
            for l in weight_basis(k) {
                let table = c_constants(&l).unwrap();
                let brute = oracle_c(&l, k as usize, k as usize).unwrap();
                let mut count = 0;
                for ((i, j), v) in brute.iter() {
                    assert_eq!(
                        table.get(i, j),
                        Rational::from_integer(v.clone()),
                        "L={l} I={i} J={j}"
                    );
                    count += 1;
                }
                assert_eq!(count, table.len(), "support differs for {l}");
            }
        }
    }

    #[test]
    fn coproduct_formula_route_matches_product_route() {
        // c tables for multi-part L vs products of single coproducts
        for k in 1..=4u32 {
            for l in weight_basis(k) {
                let via_table = c_constants(&l).unwrap();
                let via_product = coproduct_monomial(&l).unwrap();
                for ((i, j), v) in &via_product {
                    assert_eq!(&via_table.get(i, j), v, "L={l}");
                }
                assert_eq!(via_product.len(), via_table.len(), "L={l}");
            }
        }
    }

    #[test]
    fn coproduct_lambda_examples() {
        let m1 = coproduct_lambda(1).unwrap();
        assert_eq!(m1.len(), 1);
        assert_eq!(m1[&(p(&[1]), p(&[1]))], rat(1));

        let m2 = coproduct_lambda(2).unwrap();
        assert_eq!(m2[&(p(&[2]), p(&[1, 1]))], rat(1));
        assert_eq!(m2[&(p(&[1, 1]), p(&[2]))], rat(1));
        assert_eq!(m2[&(p(&[2]), p(&[2]))], rat(-2));
    }

    #[test]
    fn coproduct_is_coassociative_to_four() {
        // (m x id) m = (id x m) m on lam^n, as triple tensors
        for n in 1..=4u32 {
            let m = coproduct_lambda(n).unwrap();
            let mut left: BTreeMap<(Partition, Partition, Partition), Rational> = BTreeMap::new();
            let mut right: BTreeMap<(Partition, Partition, Partition), Rational> = BTreeMap::new();
            for ((i, j), v) in &m {
                for ((a, b), w) in coproduct_monomial(i).unwrap() {
                    let e = left.entry((a, b, j.clone())).or_insert_with(Rational::zero);
                    *e += v * &w;
                }
                for ((a, b), w) in coproduct_monomial(j).unwrap() {
                    let e = right.entry((i.clone(), a, b)).or_insert_with(Rational::zero);
                    *e += v * &w;
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            assert_eq!(left, right, "n = {n}");
        }
    }

    #[test]
    fn psi_diagonality_to_five() {
        for k in 1..=5u32 {
            for s in weight_basis(k) {
                assert!(psi_diagonality_holds(&s).unwrap(), "psi^{s}");
            }
        }
    }

    #[test]
    fn u_table_degree_two_frozen() {
        let u = u_constants(&p(&[2])).unwrap();
        let expect: &[(&[u32], &[u32], i64)] = &[
            (&[2], &[1, 1], 1),
            (&[1, 1], &[2], 1),
            (&[2], &[2], -2),
            (&[2], &[1], 2),
            (&[1], &[2], 2),
            (&[1], &[1, 1], -1),
            (&[1, 1], &[1], -1),
            (&[1], &[1], -1),
        ];
        assert_eq!(u.len(), expect.len());
        for (i, j, v) in expect {
            assert_eq!(u.get(&p(i), &p(j)), rat(*v), "u[{i:?},{j:?}]");
        }
    }

    #[test]
    fn u_tables_integral_to_six() {
        for k in 1..=6u32 {
            for l in weight_basis(k) {
                let u = u_constants(&l).unwrap();
                assert!(u.is_integral(), "u table for {l}");
            }
        }
    }

    #[test]
    fn u_top_weight_slice_equals_c() {
        for k in 1..=4u32 {
            for l in weight_basis(k) {
                let u = u_constants(&l).unwrap();
                let c = c_constants(&l).unwrap();
                for i in weight_basis(k) {
                    for j in weight_basis(k) {
                        assert_eq!(u.get(&i, &j), c.get(&i, &j), "L={l} I={i} J={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_tables_unitriangular() {
        let (g2l, l2g) = gamma_tables(5).unwrap();
        assert!(g2l.is_integral() && l2g.is_integral());
        for i in filtered_basis(5) {
            assert_eq!(g2l.get(&i, &i), rat(1), "diagonal at {i}");
            assert_eq!(l2g.get(&i, &i), rat(1), "diagonal at {i}");
        }
        // no entries of weight above the expanded symbol
        for (key, _) in g2l.entries() {
            assert!(key.0.weight() <= key.1.weight());
        }
        // gamma^2 = lam^1 + lam^2
        assert_eq!(g2l.get(&p(&[1]), &p(&[2])), rat(1));
        assert_eq!(g2l.get(&p(&[2]), &p(&[2])), rat(1));
        // lam^2 = gamma^2 - gamma^1
        assert_eq!(l2g.get(&p(&[1]), &p(&[2])), rat(-1));
        assert_eq!(l2g.get(&p(&[2]), &p(&[2])), rat(1));
    }

    #[test]
    fn module_action_examples() {
        // n = 3, S = (3): vector over J in {(1,2), (3)}
        let act = module_action(&p(&[1, 1, 1]), &p(&[3])).unwrap();
        assert_eq!(
            act,
            vec![(p(&[1, 2]), BigInt::from(0)), (p(&[3]), BigInt::from(1))]
        );
        let act2 = module_action(&p(&[1, 2]), &p(&[3])).unwrap();
        assert_eq!(
            act2,
            vec![(p(&[1, 2]), BigInt::from(1)), (p(&[3]), BigInt::from(-3))]
        );
        let act3 = module_action(&p(&[3]), &p(&[3])).unwrap();
        assert_eq!(
            act3,
            vec![(p(&[1, 2]), BigInt::from(-3)), (p(&[3]), BigInt::from(3))]
        );
    }

    #[test]
    fn module_action_defined_for_all_ones_to_five() {
        for n in 1..=5u32 {
            let ones = Partition::from_parts(vec![1; n as usize]);
            for s in weight_basis(n) {
                if !s.is_distinct() {
                    continue;
                }
                let act = module_action(&ones, &s).unwrap();
                assert!(!act.is_empty());
            }
        }
    }

    #[test]
    fn module_action_rejects_bad_bases() {
        assert!(matches!(
            module_action(&p(&[1, 1]), &p(&[1, 1])),
            Err(Error::InvalidBasis(_))
        ));
        assert!(matches!(
            module_action(&p(&[1]), &p(&[2])),
            Err(Error::InvalidBasis(_))
        ));
    }

    #[test]
    fn rank_basis_parity_counts_match_partition_statistics() {
        use num_traits::ToPrimitive;
        for n in 1..=8u32 {
            let st = crate::partitions::stats(n);
            let distinct: Vec<Partition> = weight_basis(n)
                .into_iter()
                .filter(|s| s.is_distinct())
                .collect();
            let even = distinct.iter().filter(|s| symbol_degree(s) == 0).count();
            let odd = distinct.iter().filter(|s| symbol_degree(s) == 1).count();
            assert_eq!(even, st.distinct_even.to_usize().unwrap());
            assert_eq!(odd, st.distinct_odd.to_usize().unwrap());
        }
    }

    #[test]
    fn degree_guard_is_enforced() {
        assert!(theta(11).is_err());
        assert!(theta(0).is_err());
        assert!(c_constants(&Partition::from_parts(vec![11])).is_err());
    }

    #[test]
    fn dual_product_is_merge() {
        // the product of dual symbols concatenates and sorts part lists
        assert_eq!(p(&[1]).merge(&p(&[2])), p(&[1, 2]));
        assert_eq!(p(&[2]).merge(&p(&[1])), p(&[1, 2]));
        assert_eq!(weight_basis(3).len(), 3);
    }
}
