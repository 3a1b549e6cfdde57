//! Integer partitions and the counting functions behind every rank formula.
//!
//! Four counts of partitions of `n` drive the rest of the crate:
//!
//! - `P(n)`: all partitions,
//! - `p(n)`: partitions into distinct parts with an even number of parts,
//! - `i(n)`: partitions into distinct parts with an odd number of parts,
//! - `j(n)`: partitions into odd parts.
//!
//! Classically `j = p + i` (Euler) and `p - i` is the coefficient of the
//! pentagonal-number series `prod (1 - q^m)`. Both identities are checked
//! exactly by [`verify_identities`], with counts produced two independent
//! ways (direct enumeration and dynamic programming).

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// A partition of a non-negative integer, stored with weakly increasing
/// parts. The empty partition (of 0) is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts (sorted internally).
    ///
    /// Panics if any part is zero.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// True when all parts are pairwise distinct.
    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] < w[1])
    }

    /// True when every part is odd.
    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// The concatenate-and-sort product of two partitions.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable();
        Partition { parts }
    }

    /// Conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::new();
        if let Some(&max) = self.parts.last() {
            for r in 1..=max {
                let count = self.parts.iter().filter(|&&p| p >= r).count() as u32;
                if count > 0 {
                    parts.push(count);
                }
            }
        }
        parts.sort_unstable();
        Partition { parts }
    }

    /// Renders as `"1+2+4"`; the empty partition renders as `"0"`.
    pub fn to_plus_string(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("+")
        }
    }

    /// Parses `"1+2+4"` or `"1,2,4"` (whitespace tolerated).
    pub fn parse(s: &str) -> crate::Result<Partition> {
        let cleaned = s.trim();
        if cleaned.is_empty() || cleaned == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in cleaned.split(['+', ',']) {
            let tok = tok.trim();
            let v: u32 = tok
                .parse()
                .map_err(|_| crate::Error::InvalidInput(format!("bad partition part {tok:?}")))?;
            if v == 0 {
                return Err(crate::Error::InvalidInput(
                    "partition parts must be positive".into(),
                ));
            }
            parts.push(v);
        }
        Ok(Partition::from_parts(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_plus_string())
    }
}

/// Which family of partitions to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    All,
    Distinct,
    OddParts,
}

/// Counting report for a single `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionStats {
    pub n: u32,
    /// `P(n)`: all partitions.
    pub total: BigUint,
    /// `p(n)`: distinct parts, even number of parts.
    pub distinct_even: BigUint,
    /// `i(n)`: distinct parts, odd number of parts.
    pub distinct_odd: BigUint,
    /// `j(n)`: all parts odd.
    pub odd_parts: BigUint,
}

/// Enumerates partitions of `n` under the constraint, largest part first, so
/// the output is sorted descending by the decreasing-part representation
/// (the conventional listing order: `(5), (1,4), (2,3)` for distinct parts
/// of 5). Each partition itself is stored weakly increasing.
pub fn enumerate(n: u32, constraint: Constraint) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    rec_enumerate(n, n, constraint, &mut stack, &mut out);
    out
}

fn rec_enumerate(
    remaining: u32,
    max_part: u32,
    constraint: Constraint,
    stack: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let mut parts = stack.clone();
        parts.reverse();
        out.push(Partition { parts });
        return;
    }
    let mut part = remaining.min(max_part);
    while part >= 1 {
        let ok = match constraint {
            Constraint::All => true,
            Constraint::Distinct => stack.last().is_none_or(|&prev| part < prev),
            Constraint::OddParts => part % 2 == 1,
        };
        if ok {
            stack.push(part);
            rec_enumerate(remaining - part, part, constraint, stack, out);
            stack.pop();
        }
        part -= 1;
    }
}

/// Counts for all `m <= n` by dynamic programming, in one pass.
struct CountTables {
    total: Vec<BigUint>,
    distinct_even: Vec<BigUint>,
    distinct_odd: Vec<BigUint>,
    odd_parts: Vec<BigUint>,
}

fn count_tables(n: u32) -> CountTables {
    let n = n as usize;
    let mut total = vec![BigUint::zero(); n + 1];
    total[0] = BigUint::one();
    for k in 1..=n {
        for j in k..=n {
            let add = total[j - k].clone();
            total[j] += add;
        }
    }
    // Distinct parts, tracking the parity of the number of parts.
    let mut even = vec![BigUint::zero(); n + 1];
    let mut odd = vec![BigUint::zero(); n + 1];
    even[0] = BigUint::one();
    for k in 1..=n {
        for j in (k..=n).rev() {
            let from_even = even[j - k].clone();
            let from_odd = odd[j - k].clone();
            odd[j] += from_even;
            even[j] += from_odd;
        }
    }
    let mut odd_parts = vec![BigUint::zero(); n + 1];
    odd_parts[0] = BigUint::one();
    for k in (1..=n).step_by(2) {
        for j in k..=n {
            let add = odd_parts[j - k].clone();
            odd_parts[j] += add;
        }
    }
    CountTables {
        total,
        distinct_even: even,
        distinct_odd: odd,
        odd_parts,
    }
}

/// Partition statistics for a single `n >= 1`, via the recurrence tables.
pub fn stats(n: u32) -> PartitionStats {
    let t = count_tables(n);
    let idx = n as usize;
    PartitionStats {
        n,
        total: t.total[idx].clone(),
        distinct_even: t.distinct_even[idx].clone(),
        distinct_odd: t.distinct_odd[idx].clone(),
        odd_parts: t.odd_parts[idx].clone(),
    }
}

/// Statistics for all `1 <= m <= n`; one DP pass instead of `n` passes.
pub fn stats_upto(n: u32) -> Vec<PartitionStats> {
    let t = count_tables(n);
    (1..=n)
        .map(|m| {
            let idx = m as usize;
            PartitionStats {
                n: m,
                total: t.total[idx].clone(),
                distinct_even: t.distinct_even[idx].clone(),
                distinct_odd: t.distinct_odd[idx].clone(),
                odd_parts: t.odd_parts[idx].clone(),
            }
        })
        .collect()
}

/// Same statistics by direct enumeration; the independent slow route.
pub fn stats_by_enumeration(n: u32) -> PartitionStats {
    let all = enumerate(n, Constraint::All);
    let distinct = enumerate(n, Constraint::Distinct);
    let count = |pred: &dyn Fn(&Partition) -> bool, set: &[Partition]| -> BigUint {
        BigUint::from(set.iter().filter(|p| pred(p)).count())
    };
    PartitionStats {
        n,
        total: BigUint::from(all.len()),
        distinct_even: count(&|p| p.len() % 2 == 0, &distinct),
        distinct_odd: count(&|p| p.len() % 2 == 1, &distinct),
        odd_parts: count(&|p| p.all_parts_odd(), &all),
    }
}

/// Coefficient of `q^n` in `prod_m (1 - q^m)`: `(-1)^m` when
/// `n = m(3m-1)/2` or `m(3m+1)/2` is a generalized pentagonal number,
/// else 0.
pub fn pentagonal_coefficient(n: u32) -> i32 {
    let n = n as u64;
    let mut m = 1u64;
    loop {
        let low = m * (3 * m - 1) / 2;
        if low > n {
            return 0;
        }
        let high = m * (3 * m + 1) / 2;
        if low == n || high == n {
            return if m.is_multiple_of(2) { 1 } else { -1 };
        }
        m += 1;
    }
}

/// Outcome of [`verify_identities`]: failures are data, not panics.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub checked_to: u32,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks, for all `n <= limit`:
/// `j(n) = p(n) + i(n)`, `p(n) - i(n) =` pentagonal coefficient, and that
/// the truncated series `prod_{m<=limit} (1+x^m)(1-x^{2m-1})` is 1 through
/// degree `limit`.
pub fn verify_identities(limit: u32) -> IdentityReport {
    let mut failures = Vec::new();
    let table = stats_upto(limit);
    for st in &table {
        if st.odd_parts != &st.distinct_even + &st.distinct_odd {
            failures.push(format!(
                "odd-parts count mismatch at n={}: j={} but p+i={}",
                st.n,
                st.odd_parts,
                &st.distinct_even + &st.distinct_odd
            ));
        }
        let diff = st.distinct_even.to_i64().unwrap_or(i64::MAX)
            - st.distinct_odd.to_i64().unwrap_or(i64::MAX);
        if diff.abs() > 1 || diff != pentagonal_coefficient(st.n) as i64 {
            failures.push(format!(
                "pentagonal coefficient mismatch at n={}: p-i={} expected {}",
                st.n,
                diff,
                pentagonal_coefficient(st.n)
            ));
        }
    }
    // Truncated product prod (1+x^m)(1-x^{2m-1}) over integer polynomials.
    let deg = limit as usize;
    let mut poly = vec![num_bigint::BigInt::from(0); deg + 1];
    poly[0] = num_bigint::BigInt::from(1);
    for m in 1..=deg {
        // multiply by (1 + x^m)
        for j in (m..=deg).rev() {
            let add = poly[j - m].clone();
            poly[j] += add;
        }
        let e = 2 * m - 1;
        if e <= deg {
            // multiply by (1 - x^e)
            for j in (e..=deg).rev() {
                let sub = poly[j - e].clone();
                poly[j] -= sub;
            }
        }
    }
    for (d, c) in poly.iter().enumerate() {
        let expect = num_bigint::BigInt::from(if d == 0 { 1 } else { 0 });
        if *c != expect {
            failures.push(format!(
                "series product not 1: coefficient of x^{d} is {c}"
            ));
        }
    }
    IdentityReport {
        checked_to: limit,
        failures,
    }
}

/// `p(n)` divided by the leading-term approximation
/// `exp(pi sqrt(n/3)) / (8 * 3^(1/4) * n^(3/4))`.
pub fn asymptotic_ratio(n: u32) -> f64 {
    let st = stats(n);
    let p = st.distinct_even.to_f64().expect("count fits in f64 range");
    let x = n as f64;
    let approx = (std::f64::consts::PI * (x / 3.0).sqrt()).exp()
        / (8.0 * 3f64.powf(0.25) * x.powf(0.75));
    p / approx
}
