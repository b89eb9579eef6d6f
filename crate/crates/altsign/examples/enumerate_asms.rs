//! Walk every alternating sign matrix of a small order and tabulate counts.
//!
//!     cargo run --example enumerate_asms

use altsign::{asm_count_formula, count_by_enumeration, enumerate_asms};

fn main() {
    println!("All alternating sign matrices of order 3, in enumeration order:\n");
    for (k, a) in enumerate_asms(3).enumerate() {
        let tag = if a.is_permutation() { "permutation" } else { "has a -1" };
        println!("#{} ({tag}, {} inversions)", k + 1, a.inversion_number());
        println!("{a}");
    }

    println!("Counts by enumeration vs the closed product formula:");
    for n in 0..=7 {
        let enumerated = count_by_enumeration(n);
        let formula = asm_count_formula(n);
        println!("  order {n}: {enumerated} enumerated, {formula} by formula");
        assert_eq!(formula.to_string(), enumerated.to_string());
    }
}
