//! The condensation recurrence in cleared form: for a square matrix M and
//! the deformed determinant S,
//!
//!   S(M) * S(center) = S(top-left) * S(bottom-right)
//!                      + lambda * S(top-right) * S(bottom-left)
//!
//! where the four corner blocks drop one boundary row and column and the
//! center drops both.
//!
//!     cargo run --example dodgson_identity

use altsign::lambda_det::lambda_det_condensation;
use altsign::sample::Sampler;
use altsign::{rat, RatMatrix};

fn main() {
    let n = 4;
    let mut sampler = Sampler::new(11);
    let m = RatMatrix::from_fn(n, |_, _| sampler.rational());
    let lambda = rat(3, 7);

    let s = |top: usize, left: usize, size: usize| {
        lambda_det_condensation(&m.submatrix(top, left, size), &lambda)
            .expect("no degenerate minors at this sample")
            .value
    };

    let whole = s(0, 0, n);
    let center = s(1, 1, n - 2);
    let tl = s(0, 0, n - 1);
    let br = s(1, 1, n - 1);
    let tr = s(0, 1, n - 1);
    let bl = s(1, 0, n - 1);

    println!("matrix sampled with seed 11, lambda = {lambda}\n");
    println!("S(M)           = {whole}");
    println!("S(center)      = {center}");
    println!("S(top-left)    = {tl}");
    println!("S(bottom-right)= {br}");
    println!("S(top-right)   = {tr}");
    println!("S(bottom-left) = {bl}");

    let lhs = &whole * &center;
    let rhs = &tl * &br + &lambda * (&tr * &bl);
    assert_eq!(lhs, rhs);
    println!("\nS(M)*S(center) = {lhs}");
    println!("matches S(TL)*S(BR) + lambda*S(TR)*S(BL) exactly");
}
