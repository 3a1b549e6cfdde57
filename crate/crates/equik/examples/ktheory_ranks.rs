//! K-theory ranks of representation spaces and projective spaces by
//! conjugacy-class counting.
//!
//! Run with: cargo run --example ktheory_ranks

use equik::groups::{builtins, Group};
use equik::ktheory;

fn main() {
    // Class-by-class geometry for the symmetric group on 3 letters.
    let s3 = Group::symmetric(3).unwrap();
    println!("class geometry for the symmetric group on 3 letters:");
    println!("rep          dim V+  dim V-  oriented+  oriented-");
    for geo in ktheory::analyze_all_classes(&s3) {
        println!(
            "  {:10}  {:5}  {:6}  {:8}  {:8}",
            geo.rep.to_string(),
            geo.dim_pos,
            geo.dim_neg,
            geo.oriented_pos,
            geo.oriented_neg
        );
    }

    // Geometric ranks equal the partition closed forms for every n.
    println!("\n n  thom(K0,K1)  projective(K0,K1)  closed forms");
    for n in 1..=6u32 {
        let g = Group::symmetric(n as usize).unwrap();
        let thom = ktheory::thom_ranks(&g);
        let proj = ktheory::projective_ranks(&g);
        let forms = ktheory::symmetric_closed_forms(n);
        println!(
            "{:2}  ({}, {})       ({:2}, {})            ({}, {}) ({:2}, {})",
            n, thom.k0, thom.k1, proj.k0, proj.k1, forms.k0_thom, forms.k1_thom,
            forms.k0_proj, forms.k1_proj
        );
        assert_eq!((thom.k0, thom.k1), (forms.k0_thom, forms.k1_thom));
        assert_eq!((proj.k0, proj.k1), (forms.k0_proj, forms.k1_proj));
    }

    // The full report ties three independent computations together.
    println!("\nfull reports with consistency equations:");
    for (name, group) in [
        ("quaternion group in SO(4)", builtins::quaternion8()),
        ("dihedral group of order 8", builtins::dihedral8()),
        ("sign group (Z/2)^2", builtins::sign_group(2)),
    ] {
        let r = ktheory::count_report(&group).unwrap();
        println!(
            "{name}: C={} A={} O={} P={} N={} | thom ({},{}) proj ({},{}) crossed ({},{}) | projective-eq {} euler-eq {}",
            r.class_count, r.a, r.o, r.p, r.n,
            r.k0_thom, r.k1_thom, r.k0_proj, r.k1_proj, r.r_v, r.r_v1,
            r.consistency_projective, r.consistency_euler
        );
    }

    // Orientation-preserving groups in even dimension have no odd part.
    let q8 = builtins::quaternion8();
    assert!(q8.is_special_orthogonal());
    assert_eq!(ktheory::thom_ranks(&q8).k1, 0);
    println!("\nquaternion group: orientation-preserving in even dimension, K1 = 0");
}
