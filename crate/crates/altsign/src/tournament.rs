//! Tournaments on n labeled players and the generating-function identity
//! that ties them to alternating sign matrices:
//!
//!   product over pairs i<j of (x_i + lambda*x_j)
//!     = sum over tournaments of lambda^upsets * prod_i x_i^wins(i)
//!     = sum over matrices A of lambda^(I-N) (1+lambda)^N * prod_j x_j^(initiators in column j)
//!
//! The audit table makes the middle and right sides comparable mass by
//! mass: expanding each (1+lambda) factor splits a matrix into its 2^N
//! decorations, and each decoration lands on one (lambda-power, exponent
//! vector) cell, exactly as each tournament does.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decorated::{enumerate_decorated, OutDirection};
use crate::poly::{LaurentMonomial, LaurentPoly, VarSet};
use crate::rational::int;
use crate::report::{compare_polynomials, CheckReport};
use crate::six_vertex::{column_class_monomial, lambda_weight, x_var, LAMBDA};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TournamentError {
    #[error("order {n} needs {bits} edge bits; the mask representation holds at most 63")]
    OrderTooLarge { n: usize, bits: u64 },
    #[error("order {n} has {expected} player pairs but {got} edge directions were supplied")]
    BadBitCount { n: usize, expected: usize, got: usize },
}

/// Pairs (i, j) with i < j over 0-based players, in lexicographic order.
/// This fixed order is the edge indexing used by masks and bit vectors.
pub fn player_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

/// An orientation of the complete graph on n players. `backward[k]` says the
/// k-th pair's edge is an upset: the larger label beats the smaller.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Tournament {
    n: usize,
    backward: Vec<bool>,
}

impl Tournament {
    pub fn new(n: usize, backward: Vec<bool>) -> Result<Self, TournamentError> {
        let expected = n * (n - 1) / 2;
        if backward.len() != expected {
            return Err(TournamentError::BadBitCount { n, expected, got: backward.len() });
        }
        Ok(Self { n, backward })
    }

    /// Decodes a bit mask, bit k (least significant first) giving pair k.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, TournamentError> {
        let bits = (n * (n - 1) / 2) as u64;
        if bits > 63 {
            return Err(TournamentError::OrderTooLarge { n, bits });
        }
        let backward = (0..bits).map(|k| mask >> k & 1 == 1).collect();
        Ok(Self { n, backward })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges won by the larger label.
    pub fn upsets(&self) -> u64 {
        self.backward.iter().filter(|&&b| b).count() as u64
    }

    /// Wins per player (out-degrees when edges point from winner to loser).
    pub fn out_degrees(&self) -> Vec<u64> {
        let mut wins = vec![0u64; self.n];
        for ((i, j), &upset) in player_pairs(self.n).into_iter().zip(&self.backward) {
            wins[if upset { j } else { i }] += 1;
        }
        wins
    }

    /// The term this tournament contributes to the generating function.
    pub fn monomial(&self) -> LaurentMonomial {
        let mut exps: Vec<(crate::poly::VarId, i64)> =
            vec![(LAMBDA, self.upsets() as i64)];
        for (i, &w) in self.out_degrees().iter().enumerate() {
            exps.push((x_var(i + 1), w as i64));
        }
        LaurentMonomial::from_exponents(exps)
    }
}

/// All 2^C(n,2) tournaments in ascending mask order.
pub fn enumerate_tournaments(n: usize) -> Result<impl Iterator<Item = Tournament>, TournamentError> {
    let bits = (n * (n - 1) / 2) as u64;
    if bits > 63 {
        return Err(TournamentError::OrderTooLarge { n, bits });
    }
    Ok((0u64..1 << bits).map(move |mask| Tournament::from_mask(n, mask).unwrap()))
}

/// Generating function over all tournaments.
pub fn tournament_sum(n: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for t in enumerate_tournaments(n).expect("guarded order") {
        total.add_term(t.monomial(), int(1));
    }
    total
}

/// The factored side: product over pairs i<j of (x_i + lambda*x_j).
pub fn binomial_product(n: usize) -> LaurentPoly {
    let mut total = LaurentPoly::one();
    for (i, j) in player_pairs(n) {
        let factor = LaurentPoly::from_terms([
            (LaurentMonomial::var(x_var(i + 1)), int(1)),
            (
                LaurentMonomial::from_exponents([(LAMBDA, 1), (x_var(j + 1), 1)]),
                int(1),
            ),
        ]);
        total = total.mul(&factor);
    }
    total
}

/// The matrix side: sum over all order-n matrices of
/// lambda^(I-N) (1+lambda)^N times the column-class monomial.
pub fn six_vertex_sum(n: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for a in crate::asm::enumerate_asms(n) {
        let weighted = lambda_weight(&a).mul_monomial(&column_class_monomial(&a), &int(1));
        total = total.add(&weighted);
    }
    total
}

fn xs_with_lambda(n: usize) -> VarSet {
    let mut names = vec!["lambda".to_string()];
    names.extend((1..=n).map(|i| format!("x{i}")));
    VarSet::new(names)
}

/// Exact three-way comparison of the tournament sum, the matrix sum, and the
/// expanded product.
pub fn check_tournament_identity(n: usize) -> CheckReport {
    let mut report = CheckReport::new("eq6", n, 0, 0);
    let vars = xs_with_lambda(n);
    let product = binomial_product(n);
    let tournaments = tournament_sum(n);
    let matrices = six_vertex_sum(n);
    compare_polynomials(&mut report, "tournament sum vs expanded product", &tournaments, &product, &vars);
    compare_polynomials(&mut report, "matrix sum vs expanded product", &matrices, &product, &vars);
    report.note(format!(
        "exact comparison of {} monomials over {} tournaments and {} matrices",
        product.num_terms(),
        1u64 << (n * (n - 1) / 2),
        crate::asm::enumerate_asms(n).count(),
    ));
    report.note(
        "the equality holds only in aggregate: a single matrix's column-class monomial \
         matches the row reading of its transpose, not of itself",
    );
    report
}

/// One mass cell of the audit: a lambda power, an exponent vector for
/// x_1..x_n, and how many objects of each family land there.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditRow {
    pub lambda_power: u64,
    pub x_exponents: Vec<u64>,
    pub tournament_count: u64,
    pub decorated_asm_count: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditTable {
    pub n: usize,
    pub rows: Vec<AuditRow>,
    pub tournament_total: u64,
    pub decorated_total: u64,
}

impl AuditTable {
    /// Every row pairs off and the totals agree.
    pub fn balanced(&self) -> bool {
        self.tournament_total == self.decorated_total
            && self.rows.iter().all(|r| r.tournament_count == r.decorated_asm_count)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["lambda_power", "x_exponents", "tournament_count", "decorated_asm_count"])
            .unwrap();
        for row in &self.rows {
            let exps =
                row.x_exponents.iter().map(u64::to_string).collect::<Vec<_>>().join(";");
            w.write_record([
                row.lambda_power.to_string(),
                exps,
                row.tournament_count.to_string(),
                row.decorated_asm_count.to_string(),
            ])
            .unwrap();
        }
        w.write_record([
            "total".to_string(),
            String::new(),
            self.tournament_total.to_string(),
            self.decorated_total.to_string(),
        ])
        .unwrap();
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// Buckets tournaments by (upsets, wins) and decorated matrices by
/// (west-exiting initiators, initiators per column). Both land in the same
/// signature space; the identity says every bucket has equal mass.
pub fn audit_table(n: usize) -> AuditTable {
    use std::collections::BTreeMap;
    let mut cells: BTreeMap<(u64, Vec<u64>), (u64, u64)> = BTreeMap::new();

    for t in enumerate_tournaments(n).expect("guarded order") {
        let cell = cells.entry((t.upsets(), t.out_degrees())).or_insert((0, 0));
        cell.0 += 1;
    }

    for d in enumerate_decorated(n) {
        let records = d.initiating_vertices();
        let lambda_power =
            records.iter().filter(|r| r.direction == OutDirection::West).count() as u64;
        let mut per_col = vec![0u64; n];
        for r in &records {
            per_col[r.col] += 1;
        }
        let cell = cells.entry((lambda_power, per_col)).or_insert((0, 0));
        cell.1 += 1;
    }

    let mut table = AuditTable { n, rows: Vec::new(), tournament_total: 0, decorated_total: 0 };
    for ((lambda_power, x_exponents), (tournament_count, decorated_asm_count)) in cells {
        table.tournament_total += tournament_count;
        table.decorated_total += decorated_asm_count;
        table.rows.push(AuditRow {
            lambda_power,
            x_exponents,
            tournament_count,
            decorated_asm_count,
        });
    }
    table
}
