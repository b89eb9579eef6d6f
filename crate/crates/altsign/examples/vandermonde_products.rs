//! The deformed determinant of the power matrix [x_i^(n-j)] factors into
//! the product over pairs of (x_i + lambda * x_j), the way the ordinary
//! Vandermonde determinant factors into differences.
//!
//!     cargo run --example vandermonde_products

use altsign::lambda_det::lambda_det_condensation;
use altsign::{int, rat, Rat, RatMatrix};

fn main() {
    let xs = [int(1), int(2), int(3), int(5)];
    let n = xs.len();
    let m = RatMatrix::power_matrix(&xs);

    println!("power matrix of x = (1, 2, 3, 5):");
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }

    for lambda in [int(-1), int(0), int(1), int(5), rat(-2, 3)] {
        let mut product: Rat = int(1);
        for i in 0..n {
            for j in i + 1..n {
                product *= &xs[i] + &lambda * &xs[j];
            }
        }
        match lambda_det_condensation(&m, &lambda) {
            Ok(c) => {
                assert_eq!(c.value, product);
                println!("lambda = {lambda}: {product} = prod (x_i + lambda*x_j)");
            }
            Err(e) => {
                // At lambda = -2/3 the central 2x2 minor 12 + 18*lambda
                // vanishes, so condensation cannot divide through; the
                // factored product still gives the value.
                println!("lambda = {lambda}: condensation degenerates ({e});");
                println!("             the factored product still yields {product}");
            }
        }
    }
}
