//! Convert a matrix to its six-vertex configuration and verify the vertex
//! census laws on it.
//!
//!     cargo run --example six_vertex_bijection

use altsign::{Asm, AsmStats, SixVertexConfig};

fn main() {
    // A 5x5 matrix with two -1 entries.
    let a = Asm::from_rows(&[
        vec![0, 1, 0, 0, 0],
        vec![1, -1, 0, 1, 0],
        vec![0, 1, 0, -1, 1],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0],
    ])
    .unwrap();
    println!("matrix:\n{a}");

    let config = SixVertexConfig::from_asm(&a);
    println!("vertex kinds (H = horizontal in-edges, V = vertical, else compass):");
    for row in config.kinds() {
        let line: Vec<&str> = row.iter().map(|k| k.code()).collect();
        println!("  {}", line.join(" "));
    }

    // The bijection inverts exactly.
    assert_eq!(config.to_asm().unwrap(), a);
    println!("\nround trip back to the matrix: ok");

    let stats = AsmStats::of(&a);
    let n = a.n() as u64;
    let pairs = n * (n - 1) / 2;
    println!("\ncensus, with the laws each count obeys:");
    println!("  inversions        {}", stats.inversion);
    println!("  -1 entries        {}", stats.neg_ones);
    println!("  H = n + N         {} = {} + {}", stats.h_total, n, stats.neg_ones);
    println!("  V = N             {}", stats.v_total);
    println!(
        "  SW = NE = I - N   {} = {} = {} - {}",
        stats.sw_total, stats.ne_total, stats.inversion, stats.neg_ones
    );
    println!(
        "  SE = NW = C(n,2) - I   {} = {} = {} - {}",
        stats.se_total, stats.nw_total, pairs, stats.inversion
    );
    assert_eq!(stats.h_total, n + stats.neg_ones);
    assert_eq!(stats.v_total, stats.neg_ones);
    assert_eq!(stats.sw_total, stats.inversion - stats.neg_ones);
    assert_eq!(stats.ne_total, stats.inversion - stats.neg_ones);
    assert_eq!(stats.se_total, pairs - stats.inversion);
    assert_eq!(stats.nw_total, pairs - stats.inversion);
}
