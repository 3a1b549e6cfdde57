//! Brute-force oracle for the product structure constants.
//!
//! Realizes `x` as a sum of `a` line-bundle classes `t_1 + .. + t_a` and
//! `y` as `u_1 + .. + u_b`, so that `lam^i(xy)` is the elementary symmetric
//! polynomial of degree `i` in the `a*b` products `t_r u_s`. The expansion
//! of `prod_t e_{l_t}({t_r u_s})` over products `e_I(t) e_J(u)` is then
//! extracted greedily by leading monomials; the resulting table must match
//! the structure constants computed through the Newton basis change.

use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

use crate::partitions::Partition;
use crate::{Error, Result};

/// Sparse multivariate polynomial over the integers; keys are exponent
/// vectors of fixed length.
type MPoly = BTreeMap<Vec<u32>, BigInt>;

fn mpoly_add_term(p: &mut MPoly, exps: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let entry = p.entry(exps.clone()).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&exps);
    }
}

fn mpoly_mul(p: &MPoly, q: &MPoly) -> MPoly {
    let mut out = MPoly::new();
    for (e1, c1) in p {
        for (e2, c2) in q {
            let exps: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
            mpoly_add_term(&mut out, exps, c1 * c2);
        }
    }
    out
}

fn mpoly_one(nvars: usize) -> MPoly {
    let mut p = MPoly::new();
    p.insert(vec![0; nvars], BigInt::from(1));
    p
}

/// Elementary symmetric polynomials `e_0 .. e_max` of a list of monomial
/// items, by the one-item-at-a-time recurrence.
fn elementary_of_items(items: &[Vec<u32>], nvars: usize, max: usize) -> Vec<MPoly> {
    let mut table: Vec<MPoly> = vec![MPoly::new(); max + 1];
    table[0] = mpoly_one(nvars);
    for item in items {
        for m in (1..=max).rev() {
            let (lower, upper) = table.split_at_mut(m);
            let prev = &lower[m - 1];
            let mut addition = MPoly::new();
            for (e, c) in prev {
                let exps: Vec<u32> = e.iter().zip(item).map(|(a, b)| a + b).collect();
                addition.insert(exps, c.clone());
            }
            for (e, c) in addition {
                mpoly_add_term(&mut upper[0], e, c);
            }
        }
    }
    table
}

/// Reads the partition `I` with `e_I`'s leading monomial equal to the given
/// weakly decreasing exponent pattern: the conjugate partition.
fn partition_from_leading_exponents(exps: &[u32]) -> Partition {
    let nonzero: Vec<u32> = exps.iter().copied().filter(|&e| e > 0).collect();
    debug_assert!(
        nonzero.windows(2).all(|w| w[0] >= w[1]),
        "leading monomial of a symmetric polynomial must have sorted exponents"
    );
    Partition::from_parts(nonzero).conjugate()
}

/// Expands `lam^L(xy)` over products `e_I(t) e_J(u)` with `a` and `b`
/// realization variables. Requires `a, b >= |L|` so the expansion is
/// unique. Returns the exact integer table; it must equal the
/// structure-constant table for `L`.
pub fn oracle_c(l: &Partition, a: usize, b: usize) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    let k = l.weight() as usize;
    if k == 0 {
        return Err(Error::InvalidInput("oracle needs a nonempty partition".into()));
    }
    if a < k || b < k {
        return Err(Error::InvalidInput(format!(
            "oracle needs at least |L| = {k} variables on each side, got {a} and {b}"
        )));
    }
    if k > 6 {
        return Err(Error::SizeLimit {
            what: "oracle partition weight",
            limit: 6,
            requested: k,
        });
    }
    let nvars = a + b;
    // items t_r * u_s as exponent vectors
    let mut items = Vec::with_capacity(a * b);
    for r in 0..a {
        for s in 0..b {
            let mut e = vec![0u32; nvars];
            e[r] = 1;
            e[a + s] = 1;
            items.push(e);
        }
    }
    let max_part = *l.parts().last().expect("nonempty") as usize;
    let e_products = elementary_of_items(&items, nvars, max_part);
    let mut lhs = mpoly_one(nvars);
    for &part in l.parts() {
        lhs = mpoly_mul(&lhs, &e_products[part as usize]);
    }
    // e_i over the t block alone and the u block alone
    let t_items: Vec<Vec<u32>> = (0..a)
        .map(|r| {
            let mut e = vec![0u32; nvars];
            e[r] = 1;
            e
        })
        .collect();
    let u_items: Vec<Vec<u32>> = (0..b)
        .map(|s| {
            let mut e = vec![0u32; nvars];
            e[a + s] = 1;
            e
        })
        .collect();
    let e_t = elementary_of_items(&t_items, nvars, k);
    let e_u = elementary_of_items(&u_items, nvars, k);
    let e_basis = |table: &[MPoly], i: &Partition| -> MPoly {
        let mut acc = mpoly_one(nvars);
        for &part in i.parts() {
            acc = mpoly_mul(&acc, &table[part as usize]);
        }
        acc
    };

    let mut out = BTreeMap::new();
    while let Some((lead, coeff)) = lhs.iter().next_back() {
        let lead = lead.clone();
        let coeff = coeff.clone();
        let i = partition_from_leading_exponents(&lead[..a]);
        let j = partition_from_leading_exponents(&lead[a..]);
        debug_assert_eq!(i.weight() as usize, k);
        debug_assert_eq!(j.weight() as usize, k);
        let basis_elem = mpoly_mul(&e_basis(&e_t, &i), &e_basis(&e_u, &j));
        for (e, c) in &basis_elem {
            mpoly_add_term(&mut lhs, e.clone(), -(c * &coeff));
        }
        out.insert((i, j), coeff);
    }
    Ok(out)
}
