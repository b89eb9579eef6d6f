//! The partition-function determinant equals a weighted sum over
//! alternating sign matrices, evaluated exactly at rational points.
//!
//!     cargo run --example ik_determinant

use altsign::ik::{ik_lhs, ik_rhs, IkRhsPlan};
use altsign::{int, rat, IkPoint};

fn main() {
    let p = IkPoint::new(
        vec![int(1), int(2), int(4)],
        vec![int(3), int(5), int(9)],
        rat(2, 3),
    )
    .unwrap();

    let lhs = ik_lhs(&p);
    let rhs = ik_rhs(&p).unwrap();
    println!("order 3 at x = (1, 2, 4), y = (3, 5, 9), a = 2/3");
    println!("  determinant side: {lhs}");
    println!("  matrix-sum side:  {rhs}");
    assert_eq!(lhs, rhs);

    // The matrix-sum side is symmetric in the x's and in the y's even
    // though the summands are not.
    let plan = IkRhsPlan::for_order(3).unwrap();
    let swapped = IkPoint::new(
        vec![int(2), int(1), int(4)],
        vec![int(3), int(9), int(5)],
        rat(2, 3),
    )
    .unwrap();
    assert_eq!(plan.evaluate(&swapped), rhs);
    println!("  invariant under permuting the x's and the y's: ok");

    // At a = 1 only permutation matrices survive and the value is a
    // permanent in disguise.
    let at_one = p.with_a(int(1)).unwrap();
    println!("\nat a = 1 the sum collapses to permutation terms: {}", ik_lhs(&at_one));

    // At a = 0 the weight a^(C(n,2) - inversions) keeps only the matrices
    // of maximal inversion number.
    let at_zero = p.with_a(int(0)).unwrap();
    println!("at a = 0 only the maximal-inversion matrix survives: {}", ik_lhs(&at_zero));
}
