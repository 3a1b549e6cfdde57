//! The operations engine: Newton polynomials, basis-change matrices,
//! product structure constants, and the module action on the rank basis.
//!
//! Run with: cargo run --example lambda_ring

use equik::lambda::{self, weight_basis};
use equik::partitions::Partition;

fn p(parts: &[u32]) -> Partition {
    Partition::from_parts(parts.to_vec())
}

fn main() {
    // Power sums in the exterior-power symbols.
    for i in 1..=4 {
        let psi = lambda::newton_psi(i);
        let body: Vec<String> = psi
            .terms()
            .map(|(part, c)| format!("{c} lam[{part}]"))
            .collect();
        println!("psi^{i} = {}", body.join(" + "));
    }

    // The triangular basis change and its exact inverse.
    let k = 3;
    let th = lambda::theta(k).unwrap();
    let om = lambda::omega(k).unwrap();
    println!("\nbasis change at weight {k} (rows = expanded symbol):");
    for j in weight_basis(k) {
        let row: Vec<String> = weight_basis(k)
            .iter()
            .map(|i| format!("{}", th.get(i, &j)))
            .collect();
        println!("  psi[{j}] over lam: [{}]", row.join(", "));
    }
    for i in weight_basis(k) {
        let row: Vec<String> = weight_basis(k)
            .iter()
            .map(|j| format!("{}", om.get(j, &i)))
            .collect();
        println!("  lam[{i}] over psi: [{}]", row.join(", "));
    }

    // Product structure constants: the degree-2 formula.
    let c = lambda::c_constants(&p(&[2])).unwrap();
    println!("\nlam^2(xy) expansion:");
    for ((i, j), v) in c.entries() {
        println!("  {v} * lam[{i}](x) lam[{j}](y)");
    }

    // They agree with the brute-force realization by line bundles.
    let brute = lambda::oracle_c(&p(&[3]), 3, 3).unwrap();
    let table = lambda::c_constants(&p(&[3])).unwrap();
    let agree = brute
        .iter()
        .all(|((i, j), v)| table.get(i, j) == equik::linalg::Rational::from(v.clone()));
    println!("\ndegree-3 constants match the brute-force expansion: {agree}");

    // Power sums are multiplicative on products.
    for s in weight_basis(4) {
        assert!(lambda::psi_diagonality_holds(&s).unwrap());
    }
    println!("power-sum coproduct is diagonal through weight 4");

    // Gamma basis and the module action on the rank basis.
    let g3 = lambda::gamma_single(3);
    let body: Vec<String> = g3.terms().map(|(t, c)| format!("{c} lam[{t}]")).collect();
    println!("\ngamma^3 = {}", body.join(" + "));

    println!("module action at weight 3 (rank basis = distinct partitions):");
    for i in weight_basis(3) {
        for s in weight_basis(3).into_iter().filter(|s| s.is_distinct()) {
            let action = lambda::module_action(&i, &s).unwrap();
            let body: Vec<String> = action
                .iter()
                .map(|(j, v)| format!("{v} gamma[{j}]"))
                .collect();
            println!(
                "  gamma[{i}] . gamma[{s}] = {}  (degree {})",
                body.join(" + "),
                lambda::symbol_degree(&s)
            );
        }
    }
}
