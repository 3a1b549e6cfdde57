//! Building signed-permutation groups and listing their conjugacy classes.
//!
//! Run with: cargo run --example conjugacy_classes

use equik::groups::{builtins, Group, GroupFile, SignedPerm};

fn main() {
    // The symmetric group: classes are cycle types.
    let s4 = Group::symmetric(4).unwrap();
    println!("symmetric group on 4 letters, order {}:", s4.order());
    for class in s4.conjugacy_classes() {
        println!(
            "  rep {}  size {:2}  cycle type {}",
            class.rep,
            class.size,
            class.cycle_type.as_ref().unwrap()
        );
    }

    // A group given by explicit signed generators (rotation by 90 degrees).
    let rotation = SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap();
    let c4 = Group::from_generators(2, vec![rotation]).unwrap();
    println!("\nplane rotation group, order {}:", c4.order());
    for class in c4.conjugacy_classes() {
        println!("  rep {}  size {}", class.rep, class.size);
    }

    // The same group from its JSON file form (1-indexed).
    let json = r#"{"n": 2, "generators": [{"perm": [2,1], "signs": [1,-1]}]}"#;
    let file: GroupFile = serde_json::from_str(json).unwrap();
    let again = Group::from_file(&file).unwrap();
    assert_eq!(again.order(), c4.order());
    println!("same group parsed from JSON: order {}", again.order());

    // Doubling with an orientation-reversing factor on a new coordinate.
    let extended = s4.extend_with_reflection().unwrap();
    println!(
        "\nreflection-extended: order {} in O({}), {} classes (doubled)",
        extended.order(),
        extended.dim(),
        extended.conjugacy_classes().len()
    );

    // Centralizer orders multiply with class sizes to the group order.
    let q8 = builtins::quaternion8();
    println!("\nquaternion group, order {}:", q8.order());
    for class in q8.conjugacy_classes() {
        let centralizer = q8.centralizer(&class.rep);
        println!(
            "  rep {}  size {}  centralizer {}  product {}",
            class.rep,
            class.size,
            centralizer.len(),
            class.size * centralizer.len()
        );
    }
}
