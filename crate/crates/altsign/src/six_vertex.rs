//! The bijection between alternating sign matrices and six-vertex (square
//! ice) configurations with domain-wall boundary conditions, plus the
//! statistics read off the vertex grid.
//!
//! Orientation convention: the horizontal edge east of cell (i,j) points east
//! exactly when the row prefix sum through column j is 0, and the vertical
//! edge south of (i,j) points north exactly when the column prefix sum
//! through row i is 0. Domain-wall boundaries (side arrows in, top and
//! bottom arrows out) follow automatically from the prefix sums being 0 at
//! the start and 1 at the end of every line.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::asm::{Asm, AsmError};
use crate::poly::{LaurentMonomial, LaurentPoly, VarId};
use crate::rational::int;
use crate::report::{CheckReport, Witness};

/// The six local arrow patterns. Every vertex has two arrows in and two out;
/// `H` has both in-arrows horizontal (an ASM entry of 1), `V` has both
/// vertical (an entry of -1), and the four compass kinds are the
/// pass-through patterns named by their outgoing directions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum VertexKind {
    #[serde(rename = "NE")]
    NorthEast,
    #[serde(rename = "SW")]
    SouthWest,
    #[serde(rename = "SE")]
    SouthEast,
    #[serde(rename = "NW")]
    NorthWest,
    #[serde(rename = "H")]
    Horizontal,
    #[serde(rename = "V")]
    Vertical,
}

impl VertexKind {
    pub fn code(self) -> &'static str {
        match self {
            VertexKind::NorthEast => "NE",
            VertexKind::SouthWest => "SW",
            VertexKind::SouthEast => "SE",
            VertexKind::NorthWest => "NW",
            VertexKind::Horizontal => "H",
            VertexKind::Vertical => "V",
        }
    }
}

impl std::fmt::Display for VertexKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SixVertexError {
    #[error("entries decoded from the grid do not form a valid matrix: {0}")]
    Underlying(#[from] AsmError),
    #[error("vertex kind at row {row}, column {col} is inconsistent with the surrounding arrows")]
    Inconsistent { row: usize, col: usize },
}

/// A full square-ice configuration, stored as its grid of vertex kinds.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SixVertexConfig {
    n: usize,
    kinds: Vec<Vec<VertexKind>>,
}

impl SixVertexConfig {
    pub fn from_asm(a: &Asm) -> Self {
        let n = a.n();
        let mut kinds = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            let mut r = 0i32; // row prefix sum through the current column
            for j in 0..n {
                let entry = a.get(i, j);
                r += i32::from(entry);
                let c: i32 = (0..=i).map(|k| i32::from(a.get(k, j))).sum();
                row.push(match entry {
                    1 => VertexKind::Horizontal,
                    -1 => VertexKind::Vertical,
                    _ => match (r, c) {
                        (0, 0) => VertexKind::NorthEast,
                        (1, 1) => VertexKind::SouthWest,
                        (0, 1) => VertexKind::SouthEast,
                        (1, 0) => VertexKind::NorthWest,
                        _ => unreachable!("prefix sums of a validated matrix stay in {{0,1}}"),
                    },
                });
            }
            kinds.push(row);
        }
        Self { n, kinds }
    }

    /// Inverts the bijection. Fails if the kinds are not mutually consistent
    /// (each kind constrains its four arrows, so an arbitrary grid of labels
    /// usually is not an ice configuration).
    pub fn to_asm(&self) -> Result<Asm, SixVertexError> {
        for (i, row) in self.kinds.iter().enumerate() {
            if row.len() != self.n {
                return Err(SixVertexError::Underlying(AsmError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: self.n,
                }));
            }
        }
        let rows: Vec<Vec<i8>> = self
            .kinds
            .iter()
            .map(|row| {
                row.iter()
                    .map(|k| match k {
                        VertexKind::Horizontal => 1,
                        VertexKind::Vertical => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let asm = Asm::from_rows(&rows)?;
        let rebuilt = Self::from_asm(&asm);
        for i in 0..self.n {
            for j in 0..self.n {
                if rebuilt.kinds[i][j] != self.kinds[i][j] {
                    return Err(SixVertexError::Inconsistent { row: i + 1, col: j + 1 });
                }
            }
        }
        Ok(asm)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Kind at 0-based (row, col).
    pub fn kind(&self, row: usize, col: usize) -> VertexKind {
        self.kinds[row][col]
    }

    pub fn kinds(&self) -> &[Vec<VertexKind>] {
        &self.kinds
    }
}

/// Every statistic the identities consume, computed in one pass.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AsmStats {
    /// Generalized inversion number.
    pub inversion: u64,
    pub neg_ones: u64,
    pub sw_total: u64,
    pub se_total: u64,
    pub ne_total: u64,
    pub nw_total: u64,
    pub v_total: u64,
    pub h_total: u64,
    /// Count of SW vertices in each column.
    pub sw_by_col: Vec<u64>,
    pub se_by_col: Vec<u64>,
    pub v_by_col: Vec<u64>,
    /// Per row, the number of vertices whose west arrow points east (in).
    pub ein_by_row: Vec<u64>,
    /// Per column, the number of vertices whose south arrow points north (in).
    pub nin_by_col: Vec<u64>,
}

impl AsmStats {
    pub fn of(a: &Asm) -> Self {
        let n = a.n();
        let config = SixVertexConfig::from_asm(a);
        let mut stats = AsmStats {
            inversion: a.inversion_number(),
            neg_ones: a.neg_ones(),
            sw_total: 0,
            se_total: 0,
            ne_total: 0,
            nw_total: 0,
            v_total: 0,
            h_total: 0,
            sw_by_col: vec![0; n],
            se_by_col: vec![0; n],
            v_by_col: vec![0; n],
            ein_by_row: vec![0; n],
            nin_by_col: vec![0; n],
        };
        for i in 0..n {
            for j in 0..n {
                match config.kind(i, j) {
                    VertexKind::SouthWest => {
                        stats.sw_total += 1;
                        stats.sw_by_col[j] += 1;
                    }
                    VertexKind::SouthEast => {
                        stats.se_total += 1;
                        stats.se_by_col[j] += 1;
                    }
                    VertexKind::NorthEast => stats.ne_total += 1,
                    VertexKind::NorthWest => stats.nw_total += 1,
                    VertexKind::Vertical => {
                        stats.v_total += 1;
                        stats.v_by_col[j] += 1;
                    }
                    VertexKind::Horizontal => stats.h_total += 1,
                }
            }
        }
        // Ein_i counts columns j whose row prefix sum through j-1 is 0 (the
        // arrow west of (i,j) points east); Nin_j counts rows i whose column
        // prefix through i is 0 (the arrow south of (i,j) points north).
        for i in 0..n {
            let mut prefix = 0i32;
            for j in 0..n {
                if prefix == 0 {
                    stats.ein_by_row[i] += 1;
                }
                prefix += i32::from(a.get(i, j));
            }
        }
        for j in 0..n {
            let mut prefix = 0i32;
            for i in 0..n {
                prefix += i32::from(a.get(i, j));
                if prefix == 0 {
                    stats.nin_by_col[j] += 1;
                }
            }
        }
        stats
    }
}

/// Variable 0 is reserved for the deformation parameter in all single-family
/// polynomial identities; x_i (1-based) maps to variable i.
pub const LAMBDA: VarId = VarId(0);

pub fn x_var(i: usize) -> VarId {
    VarId(i as u32)
}

/// The weight lambda^(inversions - negOnes) * (1 + lambda)^negOnes attached
/// to a matrix in the determinant expansions.
pub fn lambda_weight(a: &Asm) -> LaurentPoly {
    let inv = a.inversion_number();
    let neg = a.neg_ones();
    debug_assert!(inv >= neg, "every -1 sits inside an inversion pattern");
    let lead = LaurentPoly::monomial(LaurentMonomial::var_pow(LAMBDA, (inv - neg) as i64), int(1));
    let one_plus = LaurentPoly::from_terms([
        (LaurentMonomial::unit(), int(1)),
        (LaurentMonomial::var(LAMBDA), int(1)),
    ]);
    lead.mul(&one_plus.pow(neg))
}

/// Monomial obtained by substituting m[i][j] = x_i^(n-j) (1-based j) into
/// the product of entries raised to the matrix values: x_i gains exponent
/// sum_j (n-j) * a[i][j], which is always nonnegative.
pub fn power_matrix_monomial(a: &Asm) -> LaurentMonomial {
    let n = a.n();
    LaurentMonomial::from_exponents((0..n).map(|i| {
        let e: i64 = (0..n).map(|j| (n - 1 - j) as i64 * i64::from(a.get(i, j))).sum();
        (x_var(i + 1), e)
    }))
}

/// Monomial where x_j's exponent is the number of SW, SE, and V vertices in
/// column j of the ice configuration.
pub fn column_class_monomial(a: &Asm) -> LaurentMonomial {
    let stats = AsmStats::of(a);
    let n = a.n();
    LaurentMonomial::from_exponents((0..n).map(|j| {
        (x_var(j + 1), (stats.sw_by_col[j] + stats.se_by_col[j] + stats.v_by_col[j]) as i64)
    }))
}

/// Checks the four vertex-census laws for a single matrix: with I inversions
/// and N entries equal to -1 on an order-n matrix,
///   #H = n + N,   #V = N,   #SW = #NE = I - N,   #SE = #NW = C(n,2) - I.
/// Returns one witness per violated claim.
pub fn vertex_count_witnesses(a: &Asm) -> Vec<Witness> {
    let stats = AsmStats::of(a);
    let n = a.n() as i128;
    let inv = stats.inversion as i128;
    let neg = stats.neg_ones as i128;
    let pairs = n * (n - 1) / 2;
    let context = format!("matrix {:?}", a.rows());

    let claims: [(&str, i128, i128); 6] = [
        ("hTotal = n + negOnes", n + neg, stats.h_total as i128),
        ("vTotal = negOnes", neg, stats.v_total as i128),
        ("swTotal = inversion - negOnes", inv - neg, stats.sw_total as i128),
        ("neTotal = inversion - negOnes", inv - neg, stats.ne_total as i128),
        ("seTotal = C(n,2) - inversion", pairs - inv, stats.se_total as i128),
        ("nwTotal = C(n,2) - inversion", pairs - inv, stats.nw_total as i128),
    ];
    claims
        .into_iter()
        .filter(|(_, claimed, observed)| claimed != observed)
        .map(|(claim, claimed, observed)| Witness::ClaimMismatch {
            claim: claim.to_string(),
            claimed: claimed.to_string(),
            observed: observed.to_string(),
            context: context.clone(),
        })
        .collect()
}

/// Exhaustively verifies the vertex-census laws for every matrix of order
/// 1 through `max_order`.
pub fn check_vertex_counts_upto(max_order: usize) -> CheckReport {
    let mut report = CheckReport::new("prop3", max_order, 0, 0);
    let mut checked = 0u64;
    for n in 1..=max_order {
        for a in crate::asm::enumerate_asms(n) {
            checked += 1;
            for w in vertex_count_witnesses(&a) {
                report.push(w);
            }
        }
    }
    report.note(format!(
        "exhaustive census check over all {checked} matrices of order 1..={max_order}"
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use std::collections::BTreeMap;
    use VertexKind::{Horizontal as H, NorthEast as NE, NorthWest as NW, SouthEast as SE,
                     SouthWest as SW, Vertical as V};

    fn asm(rows: &[&[i8]]) -> Asm {
        Asm::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn five_by_five() -> Asm {
        asm(&[
            &[0, 1, 0, 0, 0],
            &[1, -1, 0, 1, 0],
            &[0, 1, 0, -1, 1],
            &[0, 0, 0, 1, 0],
            &[0, 0, 1, 0, 0],
        ])
    }

    #[test]
    fn identity_grid_splits_into_northwest_and_southeast() {
        let config = SixVertexConfig::from_asm(&Asm::identity(3));
        assert_eq!(
            config.kinds(),
            &[vec![H, NW, NW], vec![SE, H, NW], vec![SE, SE, H]]
        );
    }

    #[test]
    fn central_minus_one_grid_uses_all_six_kinds() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let config = SixVertexConfig::from_asm(&a);
        assert_eq!(
            config.kinds(),
            &[vec![NE, H, NW], vec![H, V, H], vec![SE, H, SW]]
        );
    }

    #[test]
    fn order_five_worked_example_statistics() {
        let a = five_by_five();
        let config = SixVertexConfig::from_asm(&a);
        assert_eq!(
            config.kinds(),
            &[
                vec![NE, H, NW, NW, NW],
                vec![H, V, NE, H, NW],
                vec![SE, H, NW, V, H],
                vec![SE, SE, NE, H, SW],
                vec![SE, SE, H, SW, SW],
            ]
        );
        let stats = AsmStats::of(&a);
        assert_eq!(stats.neg_ones, 2);
        assert_eq!(stats.h_total, 7);
        assert_eq!(stats.v_total, 2);
        assert_eq!(stats.inversion, 5);
        assert_eq!(stats.sw_total, 3);
        assert_eq!(stats.ne_total, 3);
        assert_eq!(stats.se_total, 5);
        assert_eq!(stats.nw_total, 5);
        assert_eq!(stats.ein_by_row, vec![2, 3, 3, 4, 3]);
        assert_eq!(stats.nin_by_col, vec![1, 1, 4, 2, 2]);
    }

    #[test]
    fn per_column_tallies_match_worked_examples() {
        let stats = AsmStats::of(&Asm::identity(3));
        assert_eq!(stats.sw_by_col, vec![0, 0, 0]);
        assert_eq!(stats.se_by_col, vec![2, 1, 0]);
        assert_eq!(stats.v_by_col, vec![0, 0, 0]);
        assert_eq!(stats.ein_by_row, vec![1, 2, 3]);
        assert_eq!(stats.nin_by_col, vec![0, 1, 2]);
    }

    #[test]
    fn round_trip_covers_every_small_matrix() {
        for n in 1..=4 {
            for a in crate::asm::enumerate_asms(n) {
                let config = SixVertexConfig::from_asm(&a);
                assert_eq!(config.to_asm(), Ok(a));
            }
        }
    }

    #[test]
    fn tampered_grid_is_rejected() {
        let mut config = SixVertexConfig::from_asm(&Asm::identity(3));
        // Flipping a pass-through kind decodes to the same 0 entry but can
        // no longer be a consistent arrow assignment.
        config.kinds[0][1] = NE;
        assert_eq!(config.to_asm(), Err(SixVertexError::Inconsistent { row: 1, col: 2 }));

        // A grid whose H/V skeleton is not even a valid matrix.
        let bad = SixVertexConfig { n: 2, kinds: vec![vec![H, H], vec![NE, NE]] };
        assert!(matches!(bad.to_asm(), Err(SixVertexError::Underlying(_))));
    }

    #[test]
    fn config_serializes_with_short_codes() {
        let config = SixVertexConfig::from_asm(&Asm::identity(2));
        let json = serde_json::to_string(&config).unwrap();
        assert_eq!(json, r#"{"n":2,"kinds":[["H","NW"],["SE","H"]]}"#);
        let back: SixVertexConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, config);
    }

    #[test]
    fn lambda_weight_matches_hand_expansions() {
        // Central -1 matrix: inversion 2, one -1, weight λ(1+λ) = λ + λ².
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let w = lambda_weight(&a);
        let mut point = BTreeMap::new();
        point.insert(LAMBDA, rat(7, 3));
        assert_eq!(w.eval(&point).unwrap(), rat(7 * 10, 9)); // λ + λ² at 7/3
        assert_eq!(w.num_terms(), 2);

        // Order-4 example with inversion 5 and two -1s: λ³(1+λ)².
        let b = asm(&[
            &[0, 0, 1, 0],
            &[0, 1, -1, 1],
            &[1, -1, 1, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(b.inversion_number(), 5);
        assert_eq!(b.neg_ones(), 2);
        let wb = lambda_weight(&b);
        // λ³ + 2λ⁴ + λ⁵
        assert_eq!(wb.coefficient(&LaurentMonomial::var_pow(LAMBDA, 3)), rat(1, 1));
        assert_eq!(wb.coefficient(&LaurentMonomial::var_pow(LAMBDA, 4)), rat(2, 1));
        assert_eq!(wb.coefficient(&LaurentMonomial::var_pow(LAMBDA, 5)), rat(1, 1));
        assert_eq!(wb.num_terms(), 3);

        // Order-4 example with inversion 4 and one -1: λ³(1+λ).
        let c = asm(&[
            &[0, 1, 0, 0],
            &[1, -1, 0, 1],
            &[0, 0, 1, 0],
            &[0, 1, 0, 0],
        ]);
        assert_eq!(c.inversion_number(), 4);
        assert_eq!(c.neg_ones(), 1);
    }

    #[test]
    fn monomials_match_hand_computations() {
        let vars = crate::poly::VarSet::new(["lambda", "x1", "x2", "x3"]);
        // Identity order 3: both monomial readings give x1²x2.
        let id = Asm::identity(3);
        assert_eq!(power_matrix_monomial(&id).display_with(&vars), "x1^2*x2");
        assert_eq!(column_class_monomial(&id).display_with(&vars), "x1^2*x2");

        // The permutation (2,3,1) separates the two readings; the column
        // reading agrees with the row reading of the transpose.
        let p = Asm::from_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(power_matrix_monomial(&p).display_with(&vars), "x1*x3^2");
        assert_eq!(column_class_monomial(&p).display_with(&vars), "x2^2*x3");
        assert_eq!(column_class_monomial(&p), power_matrix_monomial(&p.transpose()));
    }

    #[test]
    fn census_laws_hold_exhaustively_at_small_order() {
        let report = check_vertex_counts_upto(4);
        assert!(report.pass());
        assert_eq!(report.witness_count(), 0);
    }

    #[test]
    fn census_witnesses_pinpoint_each_failed_claim() {
        // All six claims hold on this matrix, so no witnesses.
        assert!(vertex_count_witnesses(&five_by_five()).is_empty());
    }
}
