//! The one-parameter determinant deformation computed two ways: by
//! condensation and as a weighted sum over alternating sign matrices.
//!
//!     cargo run --example lambda_determinant

use altsign::lambda_det::{classical_det, lambda_coefficients};
use altsign::{int, lambda_det_asm_sum, lambda_det_condensation, rat, RatMatrix};

fn main() {
    let m = RatMatrix::from_rows(&[
        vec![int(2), int(3), int(5)],
        vec![int(7), int(11), int(13)],
        vec![int(17), int(19), int(23)],
    ])
    .unwrap();

    for lambda in [int(0), int(1), int(2), rat(1, 2)] {
        let condensed = lambda_det_condensation(&m, &lambda).unwrap();
        let summed = lambda_det_asm_sum(&m, &lambda).unwrap();
        assert_eq!(condensed.value, summed);
        println!(
            "lambda = {lambda}: value {} ({} minors visited)",
            condensed.value, condensed.minors_evaluated
        );
    }

    // At lambda = -1 the deformation is the ordinary determinant.
    let at_minus_one = lambda_det_asm_sum(&m, &int(-1)).unwrap();
    assert_eq!(at_minus_one, classical_det(&m));
    println!("lambda = -1: value {at_minus_one} = classical determinant");

    // As a function of lambda the value is a polynomial; recover it by
    // interpolation. For a 3x3 matrix the degree is at most C(3,2) = 3.
    let coeffs = lambda_coefficients(&m).unwrap();
    let rendered: Vec<String> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| match k {
            0 => format!("{c}"),
            1 => format!("({c})*lambda"),
            _ => format!("({c})*lambda^{k}"),
        })
        .collect();
    println!("\nas a polynomial in lambda:\n  {}", rendered.join(" + "));

    // Seven of the matrix's nine entries appear in the order-3 expansion
    // with exponent sets drawn from the 7 alternating sign matrices; the
    // center entry enters one term with exponent -1.
    println!("\nthe order-3 expansion has 7 terms, one per matrix,");
    println!("including the exceptional term lambda*(1+lambda)*b*d*f*h/e");
}
