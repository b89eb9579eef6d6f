//! The one-parameter deformation of the determinant computed by Dodgson
//! condensation with the minus sign replaced by +lambda:
//!
//!   D(M) = [ D(top-left minor) * D(bottom-right minor)
//!            + lambda * D(top-right minor) * D(bottom-left minor) ]
//!          / D(central minor),
//!
//! with D = the entry for 1x1 blocks and D = 1 for empty blocks. At
//! lambda = -1 this is the classical determinant (the division step is the
//! Desnanot-Jacobi identity). The expansion of D over alternating sign
//! matrices, and the closed product form for power matrices, are the two
//! identities checked here.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::asm::enumerate_asms;
use crate::interp::{eval as poly_eval, interpolate};
use crate::rational::{int, Rat};
use crate::report::{format_point, CheckReport, Witness};
use crate::sample::Sampler;

/// How many times a randomized trial may redraw its inputs when condensation
/// runs into a vanishing central minor. Random rationals make that a
/// measure-zero accident, so the budget exists only to guarantee termination.
const MAX_TRIAL_RESAMPLES: usize = 64;

/// A square matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rat>,
}

/// Coordinates of a contiguous square block, 1-based for diagnostics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinorIndex {
    pub top: usize,
    pub left: usize,
    pub size: usize,
}

impl std::fmt::Display for MinorIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "size-{} block at rows {}..={}, columns {}..={}",
            self.size,
            self.top,
            self.top + self.size - 1,
            self.left,
            self.left + self.size - 1
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LambdaDetError {
    #[error("expected {expected} entries for a square matrix, got {got}")]
    NotSquare { expected: usize, got: usize },
    #[error("condensation divides by the {minor}, which evaluates to zero")]
    ZeroCentralMinor { minor: MinorIndex },
    #[error("entry at row {row}, column {col} is zero but the expansion inverts it")]
    ZeroEntry { row: usize, col: usize },
    #[error("could not collect {needed} usable interpolation points (found {found})")]
    InterpolationPoints { needed: usize, found: usize },
}

impl RatMatrix {
    pub fn new(n: usize, entries: Vec<Rat>) -> Result<Self, LambdaDetError> {
        if entries.len() != n * n {
            return Err(LambdaDetError::NotSquare { expected: n * n, got: entries.len() });
        }
        Ok(Self { n, entries })
    }

    pub fn from_rows(rows: &[Vec<Rat>]) -> Result<Self, LambdaDetError> {
        let n = rows.len();
        let entries: Vec<Rat> = rows.iter().flatten().cloned().collect();
        Self::new(n, entries)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
    }

    /// The matrix with entry (i, j) = x_i^(n-1-j), 0-based: its deformed
    /// determinant factors as the product of (x_i + lambda*x_j) over i < j.
    pub fn power_matrix(xs: &[Rat]) -> Self {
        let n = xs.len();
        Self::from_fn(n, |i, j| crate::rational::pow(&xs[i], (n - 1 - j) as u64))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.entries[row * self.n + col]
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Contiguous square block with the given 0-based top-left corner.
    pub fn submatrix(&self, top: usize, left: usize, size: usize) -> Self {
        Self::from_fn(size, |i, j| self.get(top + i, left + j).clone())
    }
}

/// Result of a condensation run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Condensation {
    pub value: Rat,
    /// Number of contiguous minors evaluated: sum over sizes s of (n-s+1)^2.
    pub minors_evaluated: u64,
}

/// Number of contiguous minors the condensation ladder visits for order n.
pub fn minors_expected(n: usize) -> u64 {
    (1..=n).map(|s| ((n - s + 1) * (n - s + 1)) as u64).sum()
}

/// Evaluates the deformed determinant at a concrete lambda by running the
/// condensation ladder over all contiguous minors.
pub fn lambda_det_condensation(
    m: &RatMatrix,
    lambda: &Rat,
) -> Result<Condensation, LambdaDetError> {
    let n = m.n;
    if n == 0 {
        return Ok(Condensation { value: Rat::one(), minors_evaluated: 0 });
    }
    // level[t * width + l] holds the size-s minor with top-left (t, l).
    let mut prev: Vec<Rat> = Vec::new(); // size s-1... starts as the virtual size-0 level
    let mut curr: Vec<Rat> = m.entries.clone(); // size 1: the entries themselves
    let mut minors = (n * n) as u64;
    for s in 2..=n {
        let width = n - s + 1;
        let mut next = Vec::with_capacity(width * width);
        for t in 0..width {
            for l in 0..width {
                // Corners are the four size-(s-1) minors inside this block.
                let prev_width = width + 1;
                let tl = &curr[t * prev_width + l];
                let br = &curr[(t + 1) * prev_width + l + 1];
                let tr = &curr[t * prev_width + l + 1];
                let bl = &curr[(t + 1) * prev_width + l];
                let numerator = tl * br + lambda * (tr * bl);
                let value = if s == 2 {
                    numerator
                } else {
                    let center = &prev[(t + 1) * (width + 2) + l + 1];
                    if center.is_zero() {
                        return Err(LambdaDetError::ZeroCentralMinor {
                            minor: MinorIndex { top: t + 2, left: l + 2, size: s - 2 },
                        });
                    }
                    numerator / center
                };
                next.push(value);
                minors += 1;
            }
        }
        prev = curr;
        curr = next;
    }
    Ok(Condensation { value: curr.pop().expect("top level holds one minor"), minors_evaluated: minors })
}

/// The expansion of the deformed determinant as a sum over alternating sign
/// matrices, precomputed for an order so repeated evaluations skip the
/// enumeration: each matrix A contributes
/// lambda^(I-N) * (1+lambda)^N * product of entries raised to A's values.
pub struct AsmSumPlan {
    n: usize,
    terms: Vec<AsmTerm>,
}

struct AsmTerm {
    /// I(A) - N(A), the guaranteed lambda power.
    lead: u64,
    /// N(A), the (1+lambda) multiplicity.
    negs: u64,
    /// Nonzero cells (row, col, value) with 0-based coordinates.
    cells: Vec<(usize, usize, i8)>,
}

impl AsmSumPlan {
    pub fn for_order(n: usize) -> Self {
        let terms = enumerate_asms(n)
            .map(|a| {
                let inv = a.inversion_number();
                let negs = a.neg_ones();
                let mut cells = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        let v = a.get(i, j);
                        if v != 0 {
                            cells.push((i, j, v));
                        }
                    }
                }
                AsmTerm { lead: inv - negs, negs, cells }
            })
            .collect();
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn evaluate(&self, m: &RatMatrix, lambda: &Rat) -> Result<Rat, LambdaDetError> {
        assert_eq!(m.n(), self.n, "plan and matrix orders must agree");
        let one_plus = Rat::one() + lambda;
        let mut total = Rat::zero();
        for term in &self.terms {
            let mut product = crate::rational::pow(lambda, term.lead)
                * crate::rational::pow(&one_plus, term.negs);
            if product.is_zero() {
                continue;
            }
            for &(i, j, v) in &term.cells {
                let entry = m.get(i, j);
                if v == 1 {
                    product = product * entry;
                } else {
                    if entry.is_zero() {
                        return Err(LambdaDetError::ZeroEntry { row: i + 1, col: j + 1 });
                    }
                    product = product / entry;
                }
            }
            total = total + product;
        }
        Ok(total)
    }
}

/// One-shot expansion evaluation (builds the plan internally).
pub fn lambda_det_asm_sum(m: &RatMatrix, lambda: &Rat) -> Result<Rat, LambdaDetError> {
    AsmSumPlan::for_order(m.n()).evaluate(m, lambda)
}

/// Classical determinant by exact Gaussian elimination.
pub fn classical_det(m: &RatMatrix) -> Rat {
    let n = m.n;
    let mut a = m.entries.clone();
    let mut det = Rat::one();
    for col in 0..n {
        let pivot_row = match (col..n).find(|&r| !a[r * n + col].is_zero()) {
            Some(r) => r,
            None => return Rat::zero(),
        };
        if pivot_row != col {
            for j in 0..n {
                a.swap(col * n + j, pivot_row * n + j);
            }
            det = -det;
        }
        let pivot = a[col * n + col].clone();
        det = det * &pivot;
        for r in col + 1..n {
            if a[r * n + col].is_zero() {
                continue;
            }
            let factor = &a[r * n + col] / &pivot;
            for j in col..n {
                let delta = &factor * &a[col * n + j];
                a[r * n + j] = &a[r * n + j] - delta;
            }
        }
    }
    det
}

/// Recovers the deformed determinant as a polynomial in lambda (degree at
/// most C(n,2)) by interpolating condensation values at integer lambdas,
/// skipping any integer where the ladder degenerates.
pub fn lambda_coefficients(m: &RatMatrix) -> Result<Vec<Rat>, LambdaDetError> {
    let n = m.n;
    let needed = n * (n - 1) / 2 + 1;
    let mut points: Vec<(Rat, Rat)> = Vec::with_capacity(needed);
    let mut candidate = 0i64;
    let budget = 4 * needed as i64 + 8;
    while points.len() < needed && candidate < budget {
        let lambda = int(candidate);
        candidate += 1;
        match lambda_det_condensation(m, &lambda) {
            Ok(c) => points.push((lambda, c.value)),
            Err(LambdaDetError::ZeroCentralMinor { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    if points.len() < needed {
        return Err(LambdaDetError::InterpolationPoints { needed, found: points.len() });
    }
    Ok(interpolate(&points))
}

fn draw_nonzero(sampler: &mut Sampler) -> Rat {
    sampler.nonzero().expect("a nonzero draw cannot exhaust a 1000-retry budget")
}

fn random_matrix_nonzero(sampler: &mut Sampler, n: usize) -> RatMatrix {
    RatMatrix::from_fn(n, |_, _| draw_nonzero(sampler))
}

fn resample_witness(report: &mut CheckReport, trial: u64, context: &str) {
    report.push(Witness::ClaimMismatch {
        claim: "resampling budget".into(),
        claimed: format!("a usable random point within {MAX_TRIAL_RESAMPLES} draws"),
        observed: "every draw degenerated".into(),
        context: format!("trial {trial}: {context}"),
    });
}

fn xs_point(xs: &[Rat], lambda: &Rat) -> std::collections::BTreeMap<String, String> {
    let mut names: Vec<(String, &Rat)> =
        xs.iter().enumerate().map(|(i, x)| (format!("x{}", i + 1), x)).collect();
    names.push(("lambda".to_string(), lambda));
    names
        .iter()
        .map(|(name, value)| (name.clone(), value.to_string()))
        .collect()
}

/// Checks that condensation on the power matrix of sampled distinct points
/// equals the closed product of (x_i + lambda*x_j) over i < j.
pub fn check_vandermonde(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("prop1", n, trials, seed);
    let mut sampler = Sampler::new(seed);
    'trial: for trial in 0..trials {
        for _ in 0..MAX_TRIAL_RESAMPLES {
            let xs = sampler
                .distinct(n, |_| true)
                .expect("distinct draws cannot exhaust their budget at these orders");
            let lambda = sampler.rational();
            let m = RatMatrix::power_matrix(&xs);
            let det = match lambda_det_condensation(&m, &lambda) {
                Ok(c) => c.value,
                Err(LambdaDetError::ZeroCentralMinor { .. }) => continue,
                Err(e) => unreachable!("power-matrix condensation can only degenerate: {e}"),
            };
            let mut product = Rat::one();
            for i in 0..n {
                for j in i + 1..n {
                    product = product * (&xs[i] + &lambda * &xs[j]);
                }
            }
            if det != product {
                report.push(Witness::ValueMismatch {
                    trial,
                    point: xs_point(&xs, &lambda),
                    lhs: det.to_string(),
                    rhs: product.to_string(),
                    context: "condensation on the power matrix vs factored product".into(),
                });
            }
            continue 'trial;
        }
        resample_witness(&mut report, trial, "power-matrix condensation kept degenerating");
    }
    report
}

/// Checks that condensation agrees with the expansion over alternating sign
/// matrices at random nonzero points, and that the lambda = -1 slice is the
/// classical determinant.
pub fn check_asm_expansion(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("prop2", n, trials, seed);
    let plan = AsmSumPlan::for_order(n);
    let mut sampler = Sampler::new(seed);
    report.note(format!("expansion carries {} terms at order {n}", plan.term_count()));
    'trial: for trial in 0..trials {
        for _ in 0..MAX_TRIAL_RESAMPLES {
            let m = random_matrix_nonzero(&mut sampler, n);
            let lambda = sampler.rational();
            let (det, minus_one) =
                match (lambda_det_condensation(&m, &lambda), lambda_det_condensation(&m, &int(-1))) {
                    (Ok(a), Ok(b)) => (a.value, b.value),
                    _ => continue,
                };
            let expansion = plan
                .evaluate(&m, &lambda)
                .expect("sampled entries are nonzero, so the expansion cannot divide by zero");
            if det != expansion {
                report.push(Witness::ValueMismatch {
                    trial,
                    point: format_point([("lambda", &lambda)]),
                    lhs: det.to_string(),
                    rhs: expansion.to_string(),
                    context: format!("condensation vs expansion on {:?}", m.rows()),
                });
            }
            let classical = classical_det(&m);
            if minus_one != classical {
                report.push(Witness::ValueMismatch {
                    trial,
                    point: format_point([("lambda", &int(-1))]),
                    lhs: minus_one.to_string(),
                    rhs: classical.to_string(),
                    context: format!("condensation at -1 vs Gaussian elimination on {:?}", m.rows()),
                });
            }
            continue 'trial;
        }
        resample_witness(&mut report, trial, "condensation kept degenerating");
    }
    report
}

/// Checks the denominator-cleared condensation step on random matrices:
/// writing S for the deformed determinant,
///   S(M) * S(center) = S(top-left) * S(bottom-right)
///                      + lambda * S(top-right) * S(bottom-left),
/// where the four corner blocks have size n-1 and the center has size n-2.
pub fn check_condensation_identity(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("problem1", n, trials, seed);
    report.note("the deformation parameter multiplies the anti-diagonal corner pair");
    assert!(n >= 2, "corner blocks need positive size");
    let mut sampler = Sampler::new(seed);
    'trial: for trial in 0..trials {
        'resample: for _ in 0..MAX_TRIAL_RESAMPLES {
            let m = random_matrix_nonzero(&mut sampler, n);
            let lambda = sampler.rational();
            let blocks = [
                m.clone(),                        // M itself
                m.submatrix(1, 1, n - 2),         // center
                m.submatrix(0, 0, n - 1),         // top-left
                m.submatrix(1, 1, n - 1),         // bottom-right
                m.submatrix(0, 1, n - 1),         // top-right
                m.submatrix(1, 0, n - 1),         // bottom-left
            ];
            let mut values = Vec::with_capacity(6);
            for block in &blocks {
                match lambda_det_condensation(block, &lambda) {
                    Ok(c) => values.push(c.value),
                    Err(LambdaDetError::ZeroCentralMinor { .. }) => continue 'resample,
                    Err(e) => unreachable!("square blocks cannot fail otherwise: {e}"),
                }
            }
            let lhs = &values[0] * &values[1];
            let rhs = &values[2] * &values[3] + &lambda * (&values[4] * &values[5]);
            if lhs != rhs {
                report.push(Witness::ValueMismatch {
                    trial,
                    point: format_point([("lambda", &lambda)]),
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                    context: format!("cleared condensation step on {:?}", m.rows()),
                });
            }
            continue 'trial;
        }
        resample_witness(&mut report, trial, "a corner or center block kept degenerating");
    }
    report
}

/// Evaluates interpolated lambda-coefficients at a concrete lambda.
pub fn eval_lambda_poly(coeffs: &[Rat], lambda: &Rat) -> Rat {
    poly_eval(coeffs, lambda)
}

/// Degree bound check helper: the deformed determinant of an order-n matrix
/// has lambda-degree at most C(n,2).
pub fn lambda_degree_bound(n: usize) -> usize {
    n * (n - 1) / 2
}
