//! Alternating sign matrices: square matrices over {-1, 0, 1} whose rows and
//! columns each sum to 1 and whose nonzero entries alternate in sign along
//! every row and column (equivalently, all row and column prefix sums lie in
//! {0, 1}).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AsmError {
    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry at row {row}, column {col} is {value}; only -1, 0, 1 are allowed")]
    BadEntry { row: usize, col: usize, value: i8 },
    #[error("row {row} sums to {sum}, expected 1")]
    BadRowSum { row: usize, sum: i32 },
    #[error("column {col} sums to {sum}, expected 1")]
    BadColSum { col: usize, sum: i32 },
    #[error("prefix sums must stay in {{0, 1}}: violated at row {row}, column {col}")]
    BrokenAlternation { row: usize, col: usize },
}

/// An alternating sign matrix, stored row-major. Construction always
/// validates, so a held `Asm` satisfies every defining condition.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<i8>>", into = "Vec<Vec<i8>>")]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    /// Validates and wraps a row-major matrix. Error positions are 1-based.
    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self, AsmError> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AsmError::NotSquare { row: i + 1, len: row.len(), expected: n });
            }
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(AsmError::BadEntry { row: i + 1, col: j + 1, value: v });
                }
                entries.push(v);
            }
        }

        // Row prefix sums must stay in {0, 1} and finish at 1.
        for i in 0..n {
            let mut prefix = 0i32;
            for j in 0..n {
                prefix += i32::from(entries[i * n + j]);
                if prefix != 0 && prefix != 1 {
                    return Err(AsmError::BrokenAlternation { row: i + 1, col: j + 1 });
                }
            }
            if prefix != 1 {
                return Err(AsmError::BadRowSum { row: i + 1, sum: prefix });
            }
        }
        // Same for columns.
        for j in 0..n {
            let mut prefix = 0i32;
            for i in 0..n {
                prefix += i32::from(entries[i * n + j]);
                if prefix != 0 && prefix != 1 {
                    return Err(AsmError::BrokenAlternation { row: i + 1, col: j + 1 });
                }
            }
            if prefix != 1 {
                return Err(AsmError::BadColSum { col: j + 1, sum: prefix });
            }
        }

        Ok(Self { n, entries })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    /// The permutation matrix with a 1 in row i, column `perm[i]` (0-based).
    pub fn from_permutation(perm: &[usize]) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        let mut entries = vec![0i8; n * n];
        for (i, &p) in perm.iter().enumerate() {
            entries[i * n + p] = 1;
        }
        Some(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        (0..self.n).map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self { n, entries }
    }

    /// Generalized inversion number: sum over all pairs (i,j) < (k,l) in the
    /// strict southwest order (i < k and j > l) of a[i][j] * a[k][l]. For
    /// permutation matrices this is the usual inversion count.
    pub fn inversion_number(&self) -> u64 {
        let n = self.n;
        let mut total: i64 = 0;
        // colsum_above[l] tracks the sum of column l over rows < k while k advances.
        let mut partial = vec![0i64; n];
        for k in 0..n {
            for l in 0..n {
                let below = i64::from(self.entries[k * n + l]);
                if below != 0 {
                    // Pair with every entry strictly above and strictly right.
                    let right_sum: i64 = partial[l + 1..].iter().sum();
                    total += below * right_sum;
                }
            }
            for l in 0..n {
                partial[l] += i64::from(self.entries[k * n + l]);
            }
        }
        debug_assert!(total >= 0, "inversion number must be nonnegative");
        total as u64
    }

    /// Number of -1 entries.
    pub fn neg_ones(&self) -> u64 {
        self.entries.iter().filter(|&&v| v == -1).count() as u64
    }

    /// True when the matrix has no -1 entries, i.e. it is a permutation matrix.
    pub fn is_permutation(&self) -> bool {
        self.neg_ones() == 0
    }
}

impl TryFrom<Vec<Vec<i8>>> for Asm {
    type Error = AsmError;
    fn try_from(rows: Vec<Vec<i8>>) -> Result<Self, Self::Error> {
        Asm::from_rows(&rows)
    }
}

impl From<Asm> for Vec<Vec<i8>> {
    fn from(a: Asm) -> Self {
        a.rows()
    }
}

impl std::fmt::Display for Asm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>2}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Depth-first enumeration of all alternating sign matrices of order `n`, in
/// lexicographic order of the flattened entry sequence with -1 < 0 < 1.
pub fn enumerate_asms(n: usize) -> AsmIter {
    AsmIter::new(n)
}

/// Iterator state: a partial filling plus the prefix sums needed to test
/// whether a candidate entry can still extend to a full matrix.
pub struct AsmIter {
    n: usize,
    entries: Vec<i8>,
    row_prefix: Vec<i32>,
    col_prefix: Vec<i32>,
    /// Next cell to fill, as a flat index; `n*n` means a complete matrix is
    /// staged for emission.
    cursor: usize,
    exhausted: bool,
}

impl AsmIter {
    fn new(n: usize) -> Self {
        let mut it = Self {
            n,
            entries: vec![0; n * n],
            row_prefix: vec![0; n],
            col_prefix: vec![0; n],
            cursor: 0,
            exhausted: false,
        };
        // The empty matrix is the single order-0 case, already staged.
        if n > 0 && !it.advance_from(0, -2) {
            it.exhausted = true;
        }
        it
    }

    /// Can `v` be placed at flat index `idx` without violating prefix rules?
    fn admissible(&self, idx: usize, v: i8) -> bool {
        let n = self.n;
        let (i, j) = (idx / n, idx % n);
        let rp = self.row_prefix[i] + i32::from(v);
        let cp = self.col_prefix[j] + i32::from(v);
        if rp != 0 && rp != 1 {
            return false;
        }
        if cp != 0 && cp != 1 {
            return false;
        }
        // A row must end with prefix 1; with k cells left after this one the
        // prefix can rise by at most... it can always rise to 1 from 0 except
        // when this is the last cell.
        if j == n - 1 && rp != 1 {
            return false;
        }
        // A column must end with prefix 1.
        if i == n - 1 && cp != 1 {
            return false;
        }
        true
    }

    fn place(&mut self, idx: usize, v: i8) {
        let n = self.n;
        self.entries[idx] = v;
        self.row_prefix[idx / n] += i32::from(v);
        self.col_prefix[idx % n] += i32::from(v);
    }

    fn unplace(&mut self, idx: usize) {
        let n = self.n;
        let v = self.entries[idx];
        self.row_prefix[idx / n] -= i32::from(v);
        self.col_prefix[idx % n] -= i32::from(v);
        self.entries[idx] = 0;
    }

    /// Resumes the depth-first search with cells `..idx` placed and `idx..`
    /// clear, trying values strictly greater than `floor` at `idx` first.
    /// True means a complete matrix is staged; false means the search space
    /// is exhausted (and every cell has been cleared on the way out).
    fn advance_from(&mut self, mut idx: usize, mut floor: i8) -> bool {
        let total = self.n * self.n;
        loop {
            let mut placed = false;
            for v in (floor + 1)..=1 {
                if self.admissible(idx, v) {
                    self.place(idx, v);
                    placed = true;
                    break;
                }
            }
            if placed {
                idx += 1;
                floor = -2;
                if idx == total {
                    self.cursor = total;
                    return true;
                }
            } else {
                if idx == 0 {
                    return false;
                }
                idx -= 1;
                floor = self.entries[idx];
                self.unplace(idx);
            }
        }
    }
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        if self.exhausted {
            return None;
        }
        debug_assert_eq!(self.cursor, self.n * self.n);
        let out = Asm { n: self.n, entries: self.entries.clone() };

        let total = self.n * self.n;
        if total == 0 {
            self.exhausted = true;
            return Some(out);
        }
        // Advance past the staged matrix: reopen the last cell and search on
        // from strictly larger values.
        let last = total - 1;
        let floor = self.entries[last];
        self.unplace(last);
        if !self.advance_from(last, floor) {
            self.exhausted = true;
        }
        Some(out)
    }
}

/// Exact count of alternating sign matrices of order `n` by enumeration.
/// Intended for small `n`; the closed-form count lives in the identity
/// checking layer where it is compared against this.
pub fn count_by_enumeration(n: usize) -> u64 {
    enumerate_asms(n).count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn asm(rows: &[&[i8]]) -> Asm {
        Asm::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn accepts_the_smallest_nontrivial_matrix_with_a_minus_one() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        assert_eq!(a.neg_ones(), 1);
        assert_eq!(a.inversion_number(), 2);
        assert!(!a.is_permutation());
    }

    #[test]
    fn rejects_bad_entries_and_sums() {
        assert_eq!(
            Asm::from_rows(&[vec![2]]),
            Err(AsmError::BadEntry { row: 1, col: 1, value: 2 })
        );
        // Every row is fine and column 1 stays within bounds but never
        // reaches sum 1.
        assert_eq!(
            Asm::from_rows(&[vec![0, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            Err(AsmError::BadColSum { col: 1, sum: 0 })
        );
        assert_eq!(
            Asm::from_rows(&[vec![0, 1, 0]]),
            Err(AsmError::NotSquare { row: 1, len: 3, expected: 1 })
        );
        // A row that alternates wrongly: prefix dips to -1 immediately.
        assert_eq!(
            Asm::from_rows(&[vec![-1, 1, 1], vec![1, 0, 0], vec![1, 0, 0]]),
            Err(AsmError::BrokenAlternation { row: 1, col: 1 })
        );
        // Column alternation break: second 1 in a column before a -1. Both
        // rows pass on their own, so the column walk reports it.
        assert_eq!(
            Asm::from_rows(&[vec![1, 0], vec![1, 0]]),
            Err(AsmError::BrokenAlternation { row: 2, col: 1 })
        );
    }

    #[test]
    fn rejects_row_sum_violations_with_position() {
        let err = Asm::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap_err();
        // Row 1 never reaches sum 1.
        assert_eq!(err, AsmError::BadRowSum { row: 1, sum: 0 });
    }

    #[test]
    fn permutation_constructors_agree() {
        let p = Asm::from_permutation(&[1, 0, 2]).unwrap();
        let q = asm(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(p, q);
        assert_eq!(p.inversion_number(), 1);
        assert!(p.is_permutation());

        assert!(Asm::from_permutation(&[0, 0]).is_none());
        assert!(Asm::from_permutation(&[2, 0]).is_none());
        assert_eq!(Asm::from_permutation(&[]).unwrap().n(), 0);
    }

    #[test]
    fn identity_has_no_inversions() {
        let id = Asm::identity(4);
        assert_eq!(id.inversion_number(), 0);
        assert_eq!(id.neg_ones(), 0);
        assert_eq!(id, Asm::from_permutation(&[0, 1, 2, 3]).unwrap());
    }

    #[test]
    fn inversion_number_matches_permutation_inversions() {
        // Reverse permutation on 4 letters has C(4,2) = 6 inversions.
        let rev = Asm::from_permutation(&[3, 2, 1, 0]).unwrap();
        assert_eq!(rev.inversion_number(), 6);

        // (2,3,1) as 0-based [1,2,0] has inversions (2>1 after) = 2.
        let p = Asm::from_permutation(&[1, 2, 0]).unwrap();
        assert_eq!(p.inversion_number(), 2);
    }

    #[test]
    fn transpose_is_an_involution_and_preserves_stats() {
        let a = asm(&[
            &[0, 0, 1, 0],
            &[1, 0, -1, 1],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
        ]);
        let t = a.transpose();
        assert_eq!(t.transpose(), a);
        assert_eq!(t.neg_ones(), a.neg_ones());
        assert_eq!(t.inversion_number(), a.inversion_number());
    }

    #[test]
    fn enumeration_counts_match_known_values() {
        let known = [1u64, 1, 2, 7, 42, 429];
        for (n, &expected) in known.iter().enumerate() {
            assert_eq!(count_by_enumeration(n), expected, "order {n}");
        }
    }

    #[test]
    fn enumeration_is_exhaustive_distinct_and_valid() {
        let all: Vec<Asm> = enumerate_asms(3).collect();
        assert_eq!(all.len(), 7);
        let distinct: HashSet<_> = all.iter().cloned().collect();
        assert_eq!(distinct.len(), 7);
        for a in &all {
            // Re-validate through the public constructor.
            assert!(Asm::from_rows(&a.rows()).is_ok());
        }
        // Lexicographic order with -1 < 0 < 1 puts the all-zero-prefix
        // matrices first; the first order-2 matrix is the anti-identity.
        let two: Vec<Asm> = enumerate_asms(2).collect();
        assert_eq!(two[0].rows(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(two[1].rows(), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn serde_round_trip_and_rejection() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, "[[0,1,0],[1,-1,1],[0,1,0]]");
        let back: Asm = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);

        let bad: Result<Asm, _> = serde_json::from_str("[[1,0],[1,0]]");
        assert!(bad.is_err());
    }
}
