//! Three expressions for the same polynomial: a product over pairs, a sum
//! over tournaments, and a sum over weighted alternating sign matrices.
//!
//!     cargo run --example tournament_identity

use altsign::tournament::{
    audit_table, binomial_product, six_vertex_sum, tournament_sum,
};
use altsign::six_vertex::{column_class_monomial, lambda_weight, power_matrix_monomial};
use altsign::{enumerate_asms, enumerate_tournaments, VarSet};

fn main() {
    let n = 3;
    let vars = VarSet::new(
        std::iter::once("lambda".to_string())
            .chain((1..=n).map(|i| format!("x{i}")))
            .collect::<Vec<_>>(),
    );

    println!("order {n}: prod over i<j of (x_i + lambda*x_j) expands to\n");
    let product = binomial_product(n);
    println!("  {}\n", product.display_with(&vars));

    let by_tournaments = tournament_sum(n);
    let by_matrices = six_vertex_sum(n);
    assert_eq!(product, by_tournaments);
    assert_eq!(product, by_matrices);
    println!("the tournament sum and the weighted matrix sum agree with it exactly.\n");

    println!("tournaments, lambda^upsets * x_i^wins:");
    for t in enumerate_tournaments(n).unwrap() {
        println!(
            "  upsets {} wins {:?} -> {}",
            t.upsets(),
            t.out_degrees(),
            t.monomial().display_with(&vars)
        );
    }

    println!("\nweighted matrices, lambda-weight * column-class monomial:");
    for a in enumerate_asms(n) {
        let weight = lambda_weight(&a);
        let monomial = column_class_monomial(&a);
        println!(
            "  {} * {}",
            weight.display_with(&vars),
            monomial.display_with(&vars)
        );
    }

    // Per matrix, the column-class monomial equals the power-matrix reading
    // of the transpose; only the aggregate sums are equal directly.
    for a in enumerate_asms(n) {
        assert_eq!(column_class_monomial(&a), power_matrix_monomial(&a.transpose()));
    }
    println!("\nper matrix: column-class monomial = power-matrix monomial of the transpose");

    println!("\naudit: (lambda power, x exponents) masses on both sides");
    print!("{}", audit_table(n).to_csv());
}
