//! One test per acceptance criterion. Each prints a PASS line (visible with
//! `cargo test --test acceptance -- --nocapture`); the two long polynomial
//! expansions sit behind `--ignored`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use proptest::prelude::*;

use altsign::ik::{check_borchardt, check_cauchy, check_ik_symmetry, check_izergin_korepin, check_minus_one};
use altsign::lambda_det::{check_asm_expansion, check_condensation_identity, check_vandermonde, lambda_coefficients};
use altsign::six_vertex::check_vertex_counts_upto;
use altsign::tournament::check_tournament_identity;
use altsign::{
    asm_count_formula, count_by_enumeration, enumerate_asms, enumerate_decorated, int, rat, Asm,
    AsmStats, LaurentMonomial, LaurentPoly, Rat, RatMatrix, SixVertexConfig, VarId,
};

#[test]
fn criterion_1_enumeration_matches_formula_through_order_7() {
    let start = Instant::now();
    for n in 1..=7 {
        let enumerated = count_by_enumeration(n);
        assert_eq!(
            BigInt::from(enumerated),
            asm_count_formula(n),
            "enumeration vs formula at order {n}"
        );
    }
    assert_eq!(count_by_enumeration(7), 218348);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs() < 120,
        "enumeration through order 7 took {elapsed:?}, budget is two minutes"
    );
    println!("PASS criterion 1: enumeration = formula for n=1..7 (218348 at n=7) in {elapsed:?}");
}

#[test]
fn criterion_2_vertex_census_through_order_6_with_anchors() {
    let report = check_vertex_counts_upto(6);
    assert!(report.pass(), "{}", report.to_json());

    // 5x5 anchor: two -1 entries, seven H vertices, two V vertices.
    let five = Asm::from_rows(&[
        vec![0, 1, 0, 0, 0],
        vec![1, -1, 0, 1, 0],
        vec![0, 1, 0, -1, 1],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0],
    ])
    .unwrap();
    let stats = AsmStats::of(&five);
    assert_eq!(stats.neg_ones, 2);
    assert_eq!(stats.h_total, 7);
    assert_eq!(stats.v_total, 2);

    // 4x4 anchor: five inversions, two -1 entries.
    let four = Asm::from_rows(&[
        vec![0, 0, 1, 0],
        vec![0, 1, -1, 1],
        vec![1, -1, 1, 0],
        vec![0, 1, 0, 0],
    ])
    .unwrap();
    assert_eq!(four.inversion_number(), 5);
    assert_eq!(four.neg_ones(), 2);

    println!("PASS criterion 2: vertex census for all matrices n<=6 plus both anchors");
}

#[test]
fn criterion_3_tournament_identity_exact_through_order_5() {
    for n in 1..=5 {
        let report = check_tournament_identity(n);
        assert!(report.pass(), "order {n}: {}", report.to_json());
    }
    println!("PASS criterion 3: tournament sum = weighted matrix sum = product, n=1..5");
}

#[test]
#[ignore = "order 6 expands 32768 tournaments; run with --ignored"]
fn criterion_3_long_tournament_identity_order_6() {
    let report = check_tournament_identity(6);
    assert!(report.pass(), "{}", report.to_json());
    println!("PASS criterion 3 (long): tournament identity at order 6");
}

#[test]
fn criterion_4_condensation_vs_product_and_matrix_sum() {
    for n in 2..=6 {
        let vandermonde = check_vandermonde(n, 10, 401 + n as u64);
        assert!(vandermonde.pass(), "order {n}: {}", vandermonde.to_json());
        // The expansion check also pins lambda = -1 to the classical
        // determinant at every sampled point.
        let expansion = check_asm_expansion(n, 10, 601 + n as u64);
        assert!(expansion.pass(), "order {n}: {}", expansion.to_json());
    }
    println!("PASS criterion 4: condensation = product and = matrix sum, 10 points each, n=2..6");
}

#[test]
fn criterion_5_cleared_block_identity() {
    for n in 3..=6 {
        let report = check_condensation_identity(n, 10, 801 + n as u64);
        assert!(report.pass(), "order {n}: {}", report.to_json());
    }
    println!("PASS criterion 5: cleared six-block identity, 10 points each, n=3..6");
}

#[test]
fn criterion_6_determinant_identities() {
    for n in 1..=5 {
        let ik = check_izergin_korepin(n, 10, 901 + n as u64);
        assert!(ik.pass(), "order {n}: {}", ik.to_json());
        let symmetry = check_ik_symmetry(n, 10, 901 + n as u64);
        assert!(symmetry.pass(), "order {n}: {}", symmetry.to_json());
    }
    for n in 1..=8 {
        let cauchy = check_cauchy(n, 10, 1001 + n as u64);
        assert!(cauchy.pass(), "order {n}: {}", cauchy.to_json());
    }
    for n in 1..=6 {
        let borchardt = check_borchardt(n, 10, 1101 + n as u64);
        assert!(borchardt.pass(), "order {n}: {}", borchardt.to_json());
    }
    println!(
        "PASS criterion 6: determinant = matrix sum with symmetry (n<=5), \
         double alternant = 1 (n<=8), permanent identity (n<=6)"
    );
}

#[test]
fn criterion_7_two_family_identity_with_recorded_normalization() {
    for n in 1..=4 {
        let report = check_minus_one(n);
        assert!(report.pass(), "order {n}: {}", report.to_json());
        let json = report.to_json();
        assert!(
            json.contains("exhaustive search at orders 1 and 2"),
            "normalization derivation must be recorded in the report: {json}"
        );
    }
    println!("PASS criterion 7: two-family identity exact for n<=4, normalization recorded");
}

#[test]
#[ignore = "order 5 expands polynomials with ~10^5 monomials; run with --ignored"]
fn criterion_7_long_two_family_identity_order_5() {
    let report = check_minus_one(5);
    assert!(report.pass(), "{}", report.to_json());
    println!("PASS criterion 7 (long): two-family identity at order 5");
}

#[test]
fn criterion_8_three_by_three_expansion_term_by_term() {
    // Entries named a..i row-major; primes keep every product distinct.
    let (a, b, c, d, e, f, g, h, i) = (2, 3, 5, 7, 11, 13, 17, 19, 23);
    let m = RatMatrix::from_rows(&[
        vec![int(a), int(b), int(c)],
        vec![int(d), int(e), int(f)],
        vec![int(g), int(h), int(i)],
    ])
    .unwrap();

    // Coefficients in lambda recovered by interpolating condensation values.
    let coeffs = lambda_coefficients(&m).unwrap();

    // The displayed six-term expansion, one product per matrix plus the
    // exceptional term with the inverted center entry spread over lambda and
    // lambda^2 by its (1 + lambda) factor.
    let aei = int(a * e * i);
    let afh = int(a * f * h);
    let bdi = int(b * d * i);
    let bfg = int(b * f * g);
    let cdh = int(c * d * h);
    let ceg = int(c * e * g);
    let exceptional = rat(b * d * f * h, e);
    assert_eq!(exceptional, rat(5187, 11));

    let expected = vec![
        aei,
        &afh + &bdi + &exceptional,
        &bfg + &cdh + &exceptional,
        ceg,
    ];
    assert_eq!(coeffs, expected, "coefficients of 1, lambda, lambda^2, lambda^3");
    println!(
        "PASS criterion 8: interpolated 3x3 expansion matches all six displayed terms, \
         exceptional term {exceptional} included"
    );
}

// Criterion 9: randomized property suites, 1000 cases each.

fn arb_rational() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| rat(n, d))
}

fn arb_nonzero_rational() -> impl Strategy<Value = Rat> {
    (1i64..=20, 1i64..=10, any::<bool>())
        .prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

fn arb_monomial() -> impl Strategy<Value = LaurentMonomial> {
    proptest::collection::vec((0u32..3, -3i64..=3), 0..3).prop_map(|pairs| {
        LaurentMonomial::from_exponents(pairs.into_iter().map(|(v, e)| (VarId(v), e)))
    })
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec((arb_monomial(), arb_rational()), 0..4)
        .prop_map(LaurentPoly::from_terms)
}

fn full_assignment(values: &[Rat; 3]) -> BTreeMap<VarId, Rat> {
    values.iter().cloned().enumerate().map(|(i, v)| (VarId(i as u32), v)).collect()
}

/// Every matrix of order 1 through 5 (481 in all), indexable for random
/// draws.
fn asm_pool() -> &'static Vec<Asm> {
    use std::sync::OnceLock;
    static POOL: OnceLock<Vec<Asm>> = OnceLock::new();
    POOL.get_or_init(|| (1..=5).flat_map(enumerate_asms).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn criterion_9_ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        prop_assert_eq!(p.add(&q), q.add(&p));
        prop_assert_eq!(p.mul(&q), q.mul(&p));
        prop_assert_eq!(p.add(&q).add(&r), p.add(&q.add(&r)));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
        prop_assert_eq!(p.mul(&q.add(&r)), p.mul(&q).add(&p.mul(&r)));
        prop_assert_eq!(p.add(&p.neg()), LaurentPoly::zero());
        prop_assert_eq!(p.mul(&LaurentPoly::one()), p.clone());
        prop_assert!(p.is_canonical());
    }

    #[test]
    fn criterion_9_evaluation_is_a_homomorphism(
        p in arb_poly(),
        q in arb_poly(),
        x0 in arb_nonzero_rational(),
        x1 in arb_nonzero_rational(),
        x2 in arb_nonzero_rational(),
    ) {
        let point = full_assignment(&[x0, x1, x2]);
        let pv = p.eval(&point).unwrap();
        let qv = q.eval(&point).unwrap();
        prop_assert_eq!(p.add(&q).eval(&point).unwrap(), &pv + &qv);
        prop_assert_eq!(p.mul(&q).eval(&point).unwrap(), &pv * &qv);
    }

    #[test]
    fn criterion_9_asm_round_trips(index in 0usize..481) {
        let pool = asm_pool();
        let a = &pool[index % pool.len()];
        let config = SixVertexConfig::from_asm(a);
        prop_assert_eq!(&config.to_asm().unwrap(), a);
        let json = serde_json::to_string(a).unwrap();
        let back: Asm = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, a);
        prop_assert_eq!(&a.transpose().transpose(), a);
    }

    #[test]
    fn criterion_9_decorations_total_the_tournament_count(index in 0usize..481) {
        let pool = asm_pool();
        let a = &pool[index % pool.len()];
        // Each -1 doubles the decorations of one matrix...
        let decorations = 1u64 << a.neg_ones();
        let n = a.n();
        let of_same_order = enumerate_decorated(n).filter(|d| d.asm() == a).count() as u64;
        prop_assert_eq!(of_same_order, decorations);
        // ...and all matrices of the order together match the tournaments.
        let total: u64 = enumerate_asms(n).map(|b| 1u64 << b.neg_ones()).sum();
        prop_assert_eq!(total, 1u64 << (n * (n - 1) / 2));
    }
}
