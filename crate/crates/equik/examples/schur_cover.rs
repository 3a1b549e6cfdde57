//! Which conjugacy classes split in the double cover, decided two ways,
//! and the crossed-product ranks they determine.
//!
//! Run with: cargo run --example schur_cover

use equik::groups::{builtins, Group};
use equik::{clifford, schur};

fn main() {
    // Per-class verdicts for the symmetric group on 5 letters: the
    // determinant criterion and the Clifford-algebra brute force agree.
    let s5 = Group::symmetric(5).unwrap();
    let report = schur::decomposition_report(&s5, true).unwrap();
    println!(
        "symmetric group on 5 letters: {} classes, {} split in the cover",
        report.class_count, report.decomposed_count
    );
    println!("cycle type   det  criterion  oracle");
    for class in &report.classes {
        let s5_class = s5
            .conjugacy_classes()
            .into_iter()
            .find(|c| c.rep == class.rep)
            .unwrap();
        println!(
            "  {:9}  {:+}   {:5}      {:5}",
            s5_class.cycle_type.unwrap().to_plus_string(),
            class.det,
            class.criterion,
            class.oracle.unwrap()
        );
    }

    // The cover class count equals classes + split classes.
    for (name, group) in [
        ("alternating group on 4 letters", builtins::alternating4()),
        ("sign group (Z/2)^3", builtins::sign_group(3)),
        ("full signed permutations B_3", builtins::hyperoctahedral(3).unwrap()),
    ] {
        let classes = group.conjugacy_classes().len();
        let split = schur::decomposed_count(&group);
        let cover = clifford::schur_cover_class_count(&group).unwrap();
        println!("{name}: {classes} + {split} = {cover} cover classes");
        assert_eq!(cover, classes + split);
    }

    // Crossed-product ranks for the symmetric family match the partition
    // closed forms (p + 2i, 2p + i).
    println!("\n n   R_V  R_V1   p   i");
    for n in 1..=6u32 {
        let g = Group::symmetric(n as usize).unwrap();
        let ranks = schur::crossed_product_ranks(&g).unwrap();
        let st = equik::partitions::stats(n);
        println!(
            "{:2}  {:4}  {:4}  {:2}  {:2}",
            n, ranks.r_v, ranks.r_v1, st.distinct_even, st.distinct_odd
        );
    }
}
