//! Partition enumeration and the counting identities.
//!
//! Run with: cargo run --example partitions

use equik::partitions::{self, Constraint};
use num_traits::ToPrimitive;

fn main() {
    // The three families for n = 8
    for (label, constraint) in [
        ("all", Constraint::All),
        ("distinct", Constraint::Distinct),
        ("odd parts", Constraint::OddParts),
    ] {
        let list = partitions::enumerate(8, constraint);
        println!("partitions of 8 ({label}), {} total:", list.len());
        for p in &list {
            println!("  {p}");
        }
    }

    // The four counting functions
    println!("\n n    P(n)   p(n)   i(n)   j(n)  p-i  pentagonal");
    for st in partitions::stats_upto(20) {
        let p = st.distinct_even.to_i64().unwrap();
        let i = st.distinct_odd.to_i64().unwrap();
        println!(
            "{:2}  {:>6} {:>6} {:>6} {:>6} {:>4} {:>5}",
            st.n,
            st.total,
            st.distinct_even,
            st.distinct_odd,
            st.odd_parts,
            p - i,
            partitions::pentagonal_coefficient(st.n)
        );
    }

    // Identities checked exactly up to 60
    let report = partitions::verify_identities(60);
    println!(
        "\nidentities j = p + i, p - i = pentagonal, series product = 1: {}",
        if report.all_pass() {
            "all hold to n = 60"
        } else {
            "FAILED"
        }
    );

    // Leading-term asymptotics of p(n)
    for n in [50, 100, 200, 400] {
        println!(
            "p({n}) / leading-term approximation = {:.6}",
            partitions::asymptotic_ratio(n)
        );
    }
}
