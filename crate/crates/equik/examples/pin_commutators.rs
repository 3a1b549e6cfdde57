//! Clifford-algebra lifts of signed permutations and commutator signs in
//! the double cover.
//!
//! Run with: cargo run --example pin_commutators

use equik::clifford::{self, CliffordElement};
use equik::groups::{builtins, SignedPerm};
use equik::linalg::Root2Scalar;

fn main() {
    // Basis vectors square to +1 and anticommute.
    let e1 = CliffordElement::basis_vector(2, 0);
    let e2 = CliffordElement::basis_vector(2, 1);
    println!("e1 * e1 = {}", e1.mul(&e1).unwrap().as_scalar().unwrap());
    println!(
        "e1 e2 + e2 e1 = 0? {}",
        e1.mul(&e2).unwrap().add(&e2.mul(&e1).unwrap()).is_zero()
    );

    // A transposition lifts to (e1 - e2)/sqrt(2), whose square is 1.
    let swap = SignedPerm::from_perm(vec![1, 0]).unwrap();
    let lift = clifford::pin_lift(&swap);
    let squared = lift.element.mul(&lift.element).unwrap();
    println!(
        "lift of a transposition squares to {}",
        squared.as_scalar().unwrap()
    );

    // The two coordinate flips in the plane do not commute upstairs:
    let flip1 = SignedPerm::new(vec![0, 1], vec![-1, 1]).unwrap();
    let flip2 = SignedPerm::new(vec![0, 1], vec![1, -1]).unwrap();
    println!(
        "commutator sign of the two plane flips: {:+}",
        clifford::commutator_sign(&flip1, &flip2).unwrap()
    );

    // Twisted covering: u x u^-1 = det(g) (g x) on vectors.
    let g = SignedPerm::new(vec![1, 2, 0], vec![1, -1, 1]).unwrap();
    let l = clifford::pin_lift(&g);
    let x = CliffordElement::basis_vector(3, 0);
    let conj = l.element.mul(&x).unwrap().mul(&l.inverse_element()).unwrap();
    println!(
        "conjugation moves e1 to a signed basis vector with {} term(s), det(g) = {:+}",
        conj.term_count(),
        g.det()
    );

    // The negated lift gives the same commutator signs.
    let neg = l.element.scale(&Root2Scalar::from_int(-1));
    assert_eq!(neg.neg(), l.element);

    // Involution commutator table against the oracle on a whole group.
    let b3 = builtins::hyperoctahedral(3).unwrap();
    let (ok, _) = equik::cli::involution_table_check(&b3);
    println!("determinant table matches the Clifford commutator on B_3: {ok}");

    // Double-cover class counts.
    for (name, group) in [
        ("sign group (Z/2)^2", builtins::sign_group(2)),
        ("quaternion group", builtins::quaternion8()),
        ("dihedral group of order 8", builtins::dihedral8()),
    ] {
        let cover = clifford::schur_cover_class_count(&group).unwrap();
        println!(
            "{name}: {} classes downstairs, {} in the double cover",
            group.conjugacy_classes().len(),
            cover
        );
    }
}
