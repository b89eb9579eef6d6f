//! The determinant evaluation of the square-ice partition function and its
//! specializations, all with two families of variables x_1..x_n, y_1..y_n
//! and a parameter a:
//!
//! * the main identity: det(1/((x_i+y_j)(a*x_i+y_j))) times
//!   prod_{i,j}(x_i+y_j)(a*x_i+y_j) / prod_{i<j}(x_i-x_j)(y_i-y_j) equals a
//!   weighted sum over alternating sign matrices;
//! * the Cauchy double alternant (the identity's degree-zero ancestor),
//!   which evaluates to exactly 1;
//! * Borchardt's permanent-determinant identity (the a = 1 slice);
//! * the closed product formula counting the matrices (the a = omega slice,
//!   implemented as the factorial-ratio product, not the limit);
//! * the a = -1 slice, a division-free polynomial identity between a
//!   two-family generating function and an alternating sum.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::asm::enumerate_asms;
use crate::lambda_det::{classical_det, RatMatrix};
use crate::poly::{LaurentMonomial, LaurentPoly, VarId, VarSet};
use crate::rational::{int, pow, Rat};
use crate::report::{CheckReport, Witness};
use crate::sample::Sampler;
use crate::six_vertex::{AsmStats, SixVertexConfig, VertexKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DegeneratePoint {
    #[error("x and y must have equal lengths, got {xs} and {ys}")]
    LengthMismatch { xs: usize, ys: usize },
    #[error("x values must be pairwise distinct, but x{i} = x{j}")]
    RepeatedX { i: usize, j: usize },
    #[error("y values must be pairwise distinct, but y{i} = y{j}")]
    RepeatedY { i: usize, j: usize },
    #[error("x{i} + y{j} = 0 makes a determinant entry undefined")]
    ZeroCrossSum { i: usize, j: usize },
    #[error("a*x{i} + y{j} = 0 makes a determinant entry undefined")]
    ZeroScaledCrossSum { i: usize, j: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IkError {
    #[error("{operation} supports orders up to {max}, got {n}")]
    OrderTooLarge { operation: &'static str, n: usize, max: usize },
    #[error(transparent)]
    Degenerate(#[from] DegeneratePoint),
}

/// A sample point for the determinant identities. Construction rejects every
/// degeneracy the formulas divide by, so held points evaluate cleanly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IkPoint {
    xs: Vec<Rat>,
    ys: Vec<Rat>,
    a: Rat,
}

impl IkPoint {
    pub fn new(xs: Vec<Rat>, ys: Vec<Rat>, a: Rat) -> Result<Self, DegeneratePoint> {
        if xs.len() != ys.len() {
            return Err(DegeneratePoint::LengthMismatch { xs: xs.len(), ys: ys.len() });
        }
        let n = xs.len();
        for i in 0..n {
            for j in i + 1..n {
                if xs[i] == xs[j] {
                    return Err(DegeneratePoint::RepeatedX { i: i + 1, j: j + 1 });
                }
                if ys[i] == ys[j] {
                    return Err(DegeneratePoint::RepeatedY { i: i + 1, j: j + 1 });
                }
            }
        }
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                if (x + y).is_zero() {
                    return Err(DegeneratePoint::ZeroCrossSum { i: i + 1, j: j + 1 });
                }
                if (&a * x + y).is_zero() {
                    return Err(DegeneratePoint::ZeroScaledCrossSum { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(Self { xs, ys, a })
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn xs(&self) -> &[Rat] {
        &self.xs
    }

    pub fn ys(&self) -> &[Rat] {
        &self.ys
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    /// The same point with a replaced (revalidating the scaled sums).
    pub fn with_a(&self, a: Rat) -> Result<Self, DegeneratePoint> {
        Self::new(self.xs.clone(), self.ys.clone(), a)
    }

    fn swapped(&self, xs_not_ys: bool, k: usize) -> Self {
        let mut p = self.clone();
        if xs_not_ys {
            p.xs.swap(k, k + 1);
        } else {
            p.ys.swap(k, k + 1);
        }
        p
    }
}

/// prod over i<j of (v_i - v_j).
fn difference_product(vals: &[Rat]) -> Rat {
    let mut product = Rat::one();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            product = product * (&vals[i] - &vals[j]);
        }
    }
    product
}

/// prod over all (i, j) of f(x_i, y_j).
fn cross_product(xs: &[Rat], ys: &[Rat], f: impl Fn(&Rat, &Rat) -> Rat) -> Rat {
    let mut product = Rat::one();
    for x in xs {
        for y in ys {
            product = product * f(x, y);
        }
    }
    product
}

/// Left side of the main identity at a concrete point.
pub fn ik_lhs(p: &IkPoint) -> Rat {
    let n = p.n();
    let m = RatMatrix::from_fn(n, |i, j| {
        let x = &p.xs[i];
        let y = &p.ys[j];
        Rat::one() / ((x + y) * (&p.a * x + y))
    });
    let det = classical_det(&m);
    let numerator = cross_product(&p.xs, &p.ys, |x, y| (x + y) * (&p.a * x + y));
    let denominator = difference_product(&p.xs) * difference_product(&p.ys);
    det * numerator / denominator
}

/// The per-matrix data needed to evaluate the identity's right side,
/// precomputed once per order so repeated evaluations skip the enumeration.
pub struct IkRhsPlan {
    n: usize,
    terms: Vec<IkTerm>,
}

struct IkTerm {
    negs: u64,
    a_exponent: u64,
    /// Cells by class, 0-based: V cells contribute x_i*y_j, the NE and SW
    /// cells contribute (a*x_i + y_j), the NW and SE cells (x_i + y_j).
    v_cells: Vec<(usize, usize)>,
    scaled_cells: Vec<(usize, usize)>,
    plain_cells: Vec<(usize, usize)>,
}

pub const IK_RHS_MAX_ORDER: usize = 6;

impl IkRhsPlan {
    pub fn for_order(n: usize) -> Result<Self, IkError> {
        if n > IK_RHS_MAX_ORDER {
            return Err(IkError::OrderTooLarge {
                operation: "the matrix-sum side of the determinant identity",
                n,
                max: IK_RHS_MAX_ORDER,
            });
        }
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        let terms = enumerate_asms(n)
            .map(|a| {
                let config = SixVertexConfig::from_asm(&a);
                let mut term = IkTerm {
                    negs: a.neg_ones(),
                    a_exponent: pairs - a.inversion_number(),
                    v_cells: Vec::new(),
                    scaled_cells: Vec::new(),
                    plain_cells: Vec::new(),
                };
                for i in 0..n {
                    for j in 0..n {
                        match config.kind(i, j) {
                            VertexKind::Vertical => term.v_cells.push((i, j)),
                            VertexKind::NorthEast | VertexKind::SouthWest => {
                                term.scaled_cells.push((i, j))
                            }
                            VertexKind::NorthWest | VertexKind::SouthEast => {
                                term.plain_cells.push((i, j))
                            }
                            VertexKind::Horizontal => {}
                        }
                    }
                }
                term
            })
            .collect();
        Ok(Self { n, terms })
    }

    /// Sum over all matrices A of
    ///   (-1)^N(A) * (1-a)^(2N(A)) * a^(C(n,2) - I(A))
    ///   * prod_V x_i*y_j * prod_{NE,SW} (a*x_i+y_j) * prod_{NW,SE} (x_i+y_j).
    pub fn evaluate(&self, p: &IkPoint) -> Rat {
        assert_eq!(p.n(), self.n, "plan and point orders must agree");
        let one_minus_a = Rat::one() - &p.a;
        let mut total = Rat::zero();
        for term in &self.terms {
            let mut value = pow(&p.a, term.a_exponent) * pow(&one_minus_a, 2 * term.negs);
            if term.negs % 2 == 1 {
                value = -value;
            }
            if value.is_zero() {
                continue;
            }
            for &(i, j) in &term.v_cells {
                value = value * (&p.xs[i] * &p.ys[j]);
            }
            for &(i, j) in &term.scaled_cells {
                value = value * (&p.a * &p.xs[i] + &p.ys[j]);
            }
            for &(i, j) in &term.plain_cells {
                value = value * (&p.xs[i] + &p.ys[j]);
            }
            total = total + value;
        }
        total
    }
}

/// One-shot right-side evaluation.
pub fn ik_rhs(p: &IkPoint) -> Result<Rat, IkError> {
    Ok(IkRhsPlan::for_order(p.n())?.evaluate(p))
}

pub const PERMANENT_MAX_ORDER: usize = 8;

/// Exact permanent: direct permutation sum up to order 6, inclusion-
/// exclusion (Ryser) up to order 8.
pub fn permanent(m: &RatMatrix) -> Result<Rat, IkError> {
    let n = m.n();
    if n > PERMANENT_MAX_ORDER {
        return Err(IkError::OrderTooLarge {
            operation: "the permanent",
            n,
            max: PERMANENT_MAX_ORDER,
        });
    }
    Ok(if n <= 6 { permanent_direct(m) } else { permanent_ryser(m) })
}

fn permanent_direct(m: &RatMatrix) -> Rat {
    let n = m.n();
    fn expand(m: &RatMatrix, row: usize, used: &mut Vec<bool>) -> Rat {
        let n = m.n();
        if row == n {
            return Rat::one();
        }
        let mut total = Rat::zero();
        for col in 0..n {
            if used[col] || m.get(row, col).is_zero() {
                continue;
            }
            used[col] = true;
            total = total + m.get(row, col) * expand(m, row + 1, used);
            used[col] = false;
        }
        total
    }
    expand(m, 0, &mut vec![false; n])
}

fn permanent_ryser(m: &RatMatrix) -> Rat {
    let n = m.n();
    let mut total = Rat::zero();
    for mask in 1u32..1 << n {
        let mut product = Rat::one();
        for i in 0..n {
            let mut row_sum = Rat::zero();
            for j in 0..n {
                if mask >> j & 1 == 1 {
                    row_sum = row_sum + m.get(i, j);
                }
            }
            product = product * row_sum;
            if product.is_zero() {
                break;
            }
        }
        if (n - mask.count_ones() as usize) % 2 == 1 {
            product = -product;
        }
        total = total + product;
    }
    total
}

/// Closed product formula for the number of order-n alternating sign
/// matrices: prod over j < n of (3j+1)! / (n+j)!.
pub fn asm_count_formula(n: usize) -> BigInt {
    fn factorial(k: usize) -> BigInt {
        (1..=k).fold(BigInt::one(), |acc, v| acc * BigInt::from(v))
    }
    let mut value = Rat::one();
    for j in 0..n {
        value = value * Rat::new(factorial(3 * j + 1), factorial(n + j));
    }
    assert!(value.is_integer(), "the factorial-ratio product is an integer");
    value.to_integer()
}

fn draw_distinct(sampler: &mut Sampler, n: usize, accept: impl Fn(&Rat) -> bool) -> Vec<Rat> {
    sampler
        .distinct(n, accept)
        .expect("distinct rational draws cannot exhaust their retry budget at these orders")
}

/// Distinct x's and y's with every x_i + y_j nonzero.
fn sample_xy(sampler: &mut Sampler, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    let xs = draw_distinct(sampler, n, |_| true);
    let ys = draw_distinct(sampler, n, |y| xs.iter().all(|x| !(x + y).is_zero()));
    (xs, ys)
}

fn sample_point(sampler: &mut Sampler, n: usize) -> IkPoint {
    let (xs, ys) = sample_xy(sampler, n);
    let a = sampler
        .rational_where(|a| {
            xs.iter().all(|x| ys.iter().all(|y| !(a * x + y).is_zero()))
        })
        .expect("an admissible parameter draw cannot exhaust its retry budget");
    IkPoint::new(xs, ys, a).expect("sampling enforced every invariant")
}

fn point_fields(p: &IkPoint) -> std::collections::BTreeMap<String, String> {
    let mut fields = std::collections::BTreeMap::new();
    for (i, x) in p.xs.iter().enumerate() {
        fields.insert(format!("x{}", i + 1), x.to_string());
    }
    for (j, y) in p.ys.iter().enumerate() {
        fields.insert(format!("y{}", j + 1), y.to_string());
    }
    fields.insert("a".to_string(), p.a.to_string());
    fields
}

/// The double alternant: det(1/(x_i+y_j)) * prod(x_i+y_j) over the two
/// difference products must equal exactly 1.
pub fn check_cauchy(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("cauchy", n, trials, seed);
    let mut sampler = Sampler::new(seed);
    for trial in 0..trials {
        let (xs, ys) = sample_xy(&mut sampler, n);
        let m = RatMatrix::from_fn(n, |i, j| Rat::one() / (&xs[i] + &ys[j]));
        let value = classical_det(&m) * cross_product(&xs, &ys, |x, y| x + y)
            / (difference_product(&xs) * difference_product(&ys));
        if !value.is_one() {
            let point: Vec<(String, String)> = xs
                .iter()
                .enumerate()
                .map(|(i, x)| (format!("x{}", i + 1), x.to_string()))
                .chain(ys.iter().enumerate().map(|(j, y)| (format!("y{}", j + 1), y.to_string())))
                .collect();
            report.push(Witness::ValueMismatch {
                trial,
                point: point.into_iter().collect(),
                lhs: value.to_string(),
                rhs: "1".to_string(),
                context: "normalized double alternant".into(),
            });
        }
    }
    report
}

fn borchardt_sides(xs: &[Rat], ys: &[Rat]) -> (Rat, Rat) {
    let n = xs.len();
    let squares = RatMatrix::from_fn(n, |i, j| {
        let s = &xs[i] + &ys[j];
        Rat::one() / (&s * &s)
    });
    let plain = RatMatrix::from_fn(n, |i, j| Rat::one() / (&xs[i] + &ys[j]));
    let cross = cross_product(xs, ys, |x, y| x + y);
    let lhs = classical_det(&squares) * (&cross * &cross)
        / (difference_product(xs) * difference_product(ys));
    let rhs = permanent(&plain).expect("orders are guarded by the caller") * cross;
    (lhs, rhs)
}

/// The permanent-determinant identity:
/// det(1/(x_i+y_j)^2) * prod(x_i+y_j)^2 / prod(x_i-x_j)(y_i-y_j)
///   = perm(1/(x_i+y_j)) * prod(x_i+y_j).
pub fn check_borchardt(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("borchardt", n, trials, seed);
    let mut sampler = Sampler::new(seed);
    for trial in 0..trials {
        let (xs, ys) = sample_xy(&mut sampler, n);
        let (lhs, rhs) = borchardt_sides(&xs, &ys);
        if lhs != rhs {
            let point = xs
                .iter()
                .enumerate()
                .map(|(i, x)| (format!("x{}", i + 1), x.to_string()))
                .chain(ys.iter().enumerate().map(|(j, y)| (format!("y{}", j + 1), y.to_string())))
                .collect();
            report.push(Witness::ValueMismatch {
                trial,
                point,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                context: "squared-entry determinant vs permanent".into(),
            });
        }
    }
    report
}

/// The main identity at sampled points, plus the a = 1 cross-check against
/// the permanent route (two independent computations of the same value).
pub fn check_izergin_korepin(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("ik", n, trials, seed);
    let plan = match IkRhsPlan::for_order(n) {
        Ok(p) => p,
        Err(e) => {
            report.push(Witness::ClaimMismatch {
                claim: "order guard".into(),
                claimed: format!("order at most {IK_RHS_MAX_ORDER}"),
                observed: e.to_string(),
                context: String::new(),
            });
            return report;
        }
    };
    let mut sampler = Sampler::new(seed);
    for trial in 0..trials {
        let p = sample_point(&mut sampler, n);
        let lhs = ik_lhs(&p);
        let rhs = plan.evaluate(&p);
        if lhs != rhs {
            report.push(Witness::ValueMismatch {
                trial,
                point: point_fields(&p),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
                context: "determinant side vs matrix-sum side".into(),
            });
        }
        // a = 1 collapses the weight to permutation terms only; the value
        // must agree with the permanent route.
        let at_one = p.with_a(int(1)).expect("x_i + y_j != 0 already holds");
        let sum_at_one = plan.evaluate(&at_one);
        let (_, borchardt_rhs) = borchardt_sides(at_one.xs(), at_one.ys());
        if sum_at_one != borchardt_rhs {
            report.push(Witness::ValueMismatch {
                trial,
                point: point_fields(&at_one),
                lhs: sum_at_one.to_string(),
                rhs: borchardt_rhs.to_string(),
                context: "matrix sum at a=1 vs permanent route".into(),
            });
        }
    }
    report
}

/// Invariance of the matrix-sum side under adjacent transpositions of the
/// x's and of the y's, verified at sampled points.
pub fn check_ik_symmetry(n: usize, trials: u64, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("ik-symmetry", n, trials, seed);
    if n < 2 {
        report.note("vacuous at order 1: there is nothing to transpose");
    }
    let plan = IkRhsPlan::for_order(n).expect("callers guard the order");
    let mut sampler = Sampler::new(seed);
    for trial in 0..trials {
        let p = sample_point(&mut sampler, n);
        let base = plan.evaluate(&p);
        for k in 0..n.saturating_sub(1) {
            for (family, swapped) in
                [("x", p.swapped(true, k)), ("y", p.swapped(false, k))]
            {
                let value = plan.evaluate(&swapped);
                if value != base {
                    report.push(Witness::ValueMismatch {
                        trial,
                        point: point_fields(&p),
                        lhs: base.to_string(),
                        rhs: value.to_string(),
                        context: format!(
                            "swapping {family}{} and {family}{} changed the sum",
                            k + 1,
                            k + 2
                        ),
                    });
                }
            }
        }
    }
    report
}

/// Compares the closed counting formula against direct enumeration for
/// every order up to `max_order`.
pub fn check_count(max_order: usize) -> CheckReport {
    let mut report = CheckReport::new("count", max_order, 0, 0);
    for n in 1..=max_order {
        let enumerated = crate::asm::count_by_enumeration(n);
        let formula = asm_count_formula(n);
        if BigInt::from(enumerated) != formula {
            report.push(Witness::ClaimMismatch {
                claim: format!("matrix count at order {n}"),
                claimed: formula.to_string(),
                observed: enumerated.to_string(),
                context: "factorial-ratio product vs enumeration".into(),
            });
        }
    }
    report.note(format!("formula and enumeration compared for every order 1..={max_order}"));
    report
}

// ---- the a = -1 polynomial identity -------------------------------------

/// Variables for the two-family polynomials: x_1..x_n then y_1..y_n.
fn xv(i: usize) -> VarId {
    VarId(i as u32)
}

fn yv(n: usize, j: usize) -> VarId {
    VarId((n + j) as u32)
}

pub fn xy_vars(n: usize) -> VarSet {
    let names: Vec<String> = (1..=n)
        .map(|i| format!("x{i}"))
        .chain((1..=n).map(|j| format!("y{j}")))
        .collect();
    VarSet::new(names)
}

pub const EQ11_MAX_ORDER: usize = 5;

fn guard_eq11(n: usize, operation: &'static str) -> Result<(), IkError> {
    if n > EQ11_MAX_ORDER {
        return Err(IkError::OrderTooLarge { operation, n, max: EQ11_MAX_ORDER });
    }
    Ok(())
}

/// Sum over matrices B of 2^N(B) * prod_i x_i^Ein_i(B), where Ein_i counts
/// the row-i vertices whose west arrow points in.
pub fn eq11_x_factor(n: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for b in enumerate_asms(n) {
        let stats = AsmStats::of(&b);
        let monomial = LaurentMonomial::from_exponents(
            (0..n).map(|i| (xv(i), stats.ein_by_row[i] as i64)),
        );
        total.add_term(monomial, pow(&int(2), stats.neg_ones));
    }
    total
}

/// Sum over matrices C of 2^N(C) * prod_j y_j^Nin_j(C), where Nin_j counts
/// the column-j vertices whose south arrow points in.
pub fn eq11_y_factor(n: usize) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for c in enumerate_asms(n) {
        let stats = AsmStats::of(&c);
        let monomial = LaurentMonomial::from_exponents(
            (0..n).map(|j| (yv(n, j), stats.nin_by_col[j] as i64)),
        );
        total.add_term(monomial, pow(&int(2), stats.neg_ones));
    }
    total
}

/// The two-family generating function: the double sum over pairs (B, C)
/// factorizes into the product of the two single sums, which is how it is
/// computed.
pub fn eq11_lhs(n: usize) -> Result<LaurentPoly, IkError> {
    guard_eq11(n, "the two-family generating function")?;
    Ok(eq11_x_factor(n).mul(&eq11_y_factor(n)))
}

/// The alternating sum: over matrices A,
///   (-1)^(I-N) * 4^N * prod_H x_i * prod_V y_j
///   * prod_NE (x_i+y_j) * prod_SW (-x_i-y_j)
///   * prod_NW (-x_i+y_j) * prod_SE (x_i-y_j).
pub fn eq11_rhs(n: usize) -> Result<LaurentPoly, IkError> {
    guard_eq11(n, "the alternating-sum side")?;
    let mut total = LaurentPoly::zero();
    for a in enumerate_asms(n) {
        let config = SixVertexConfig::from_asm(&a);
        let inv = a.inversion_number();
        let negs = a.neg_ones();
        let mut scalar = pow(&int(4), negs);
        if (inv - negs) % 2 == 1 {
            scalar = -scalar;
        }
        // Monomial part from the H and V cells, binomial factors elsewhere.
        let mut monomial = LaurentMonomial::unit();
        let mut term: Option<LaurentPoly> = None;
        for i in 0..n {
            for j in 0..n {
                let binomial = match config.kind(i, j) {
                    VertexKind::Horizontal => {
                        monomial = monomial.mul(&LaurentMonomial::var(xv(i)));
                        continue;
                    }
                    VertexKind::Vertical => {
                        monomial = monomial.mul(&LaurentMonomial::var(yv(n, j)));
                        continue;
                    }
                    VertexKind::NorthEast => [(xv(i), int(1)), (yv(n, j), int(1))],
                    VertexKind::SouthWest => [(xv(i), int(-1)), (yv(n, j), int(-1))],
                    VertexKind::NorthWest => [(xv(i), int(-1)), (yv(n, j), int(1))],
                    VertexKind::SouthEast => [(xv(i), int(1)), (yv(n, j), int(-1))],
                };
                let factor = LaurentPoly::from_terms(
                    binomial.map(|(v, c)| (LaurentMonomial::var(v), c)),
                );
                term = Some(match term {
                    Some(t) => t.mul(&factor),
                    None => factor,
                });
            }
        }
        let term = term
            .unwrap_or_else(LaurentPoly::one)
            .mul_monomial(&monomial, &scalar);
        total = total.add(&term);
    }
    Ok(total)
}

/// x_1...x_n times prod_{i<j}(x_i+x_j)(y_i+y_j): what both sides must equal.
pub fn eq11_closed_form(n: usize) -> LaurentPoly {
    let lead = LaurentMonomial::from_exponents((0..n).map(|i| (xv(i), 1)));
    let mut total = LaurentPoly::monomial(lead, int(1));
    for i in 0..n {
        for j in i + 1..n {
            for vars in [[xv(i), xv(j)], [yv(n, i), yv(n, j)]] {
                let factor = LaurentPoly::from_terms([
                    (LaurentMonomial::var(vars[0]), int(1)),
                    (LaurentMonomial::var(vars[1]), int(1)),
                ]);
                total = total.mul(&factor);
            }
        }
    }
    total
}

/// Candidate adjustments for reconciling the two sides of the a = -1
/// identity: an overall sign, an extra x_1...x_n factor, and negating the
/// y's, each applied to the alternating-sum side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MinusOneNormalization {
    pub negate_sign: bool,
    pub multiply_by_x_product: bool,
    pub negate_ys: bool,
}

impl MinusOneNormalization {
    pub const IDENTITY: Self =
        Self { negate_sign: false, multiply_by_x_product: false, negate_ys: false };

    pub fn all() -> [Self; 8] {
        let mut out = [Self::IDENTITY; 8];
        for (idx, slot) in out.iter_mut().enumerate() {
            *slot = Self {
                negate_sign: idx & 1 == 1,
                multiply_by_x_product: idx & 2 == 2,
                negate_ys: idx & 4 == 4,
            };
        }
        out
    }

    pub fn apply(&self, rhs: &LaurentPoly, n: usize) -> LaurentPoly {
        let mut out = rhs.clone();
        if self.negate_ys {
            out = out.negate_vars(|v| (v.0 as usize) >= n);
        }
        if self.multiply_by_x_product {
            let xprod = LaurentMonomial::from_exponents((0..n).map(|i| (xv(i), 1)));
            out = out.mul_monomial(&xprod, &int(1));
        }
        if self.negate_sign {
            out = out.neg();
        }
        out
    }

    pub fn describe(&self) -> String {
        if *self == Self::IDENTITY {
            return "no adjustment (the sides agree as printed)".to_string();
        }
        let mut parts = Vec::new();
        if self.negate_sign {
            parts.push("flip the overall sign");
        }
        if self.multiply_by_x_product {
            parts.push("multiply by x_1...x_n");
        }
        if self.negate_ys {
            parts.push("substitute y -> -y");
        }
        parts.join(", ")
    }

    /// Tests all eight candidates exhaustively at orders 1 and 2 and returns
    /// the ones under which the two sides agree at both orders.
    pub fn resolve() -> Vec<Self> {
        Self::all()
            .into_iter()
            .filter(|combo| {
                [1usize, 2].iter().all(|&n| {
                    let lhs = eq11_lhs(n).expect("small order");
                    let rhs = eq11_rhs(n).expect("small order");
                    lhs == combo.apply(&rhs, n)
                })
            })
            .collect()
    }
}

/// Exact polynomial check of the a = -1 identity: the factorized two-family
/// sum against the alternating sum (under the frozen normalization) and both
/// against the closed product form.
pub fn check_minus_one(n: usize) -> CheckReport {
    let mut report = CheckReport::new("eq11", n, 0, 0);
    let survivors = MinusOneNormalization::resolve();
    let frozen = match survivors.as_slice() {
        [single] if *single == MinusOneNormalization::IDENTITY => {
            report.note(
                "normalization resolved by exhaustive search at orders 1 and 2 over all 8 \
                 sign/x-product/y-negation combinations; unique survivor: no adjustment \
                 (the sides agree as printed)",
            );
            *single
        }
        [single] => {
            report.note(format!(
                "normalization resolved to a non-trivial adjustment: {}",
                single.describe()
            ));
            *single
        }
        other => {
            report.push(Witness::ClaimMismatch {
                claim: "a unique normalization reconciles the sides at orders 1 and 2".into(),
                claimed: "exactly one of 8 candidates".into(),
                observed: format!("{} candidates survive", other.len()),
                context: "exhaustive small-order search".into(),
            });
            MinusOneNormalization::IDENTITY
        }
    };

    let vars = xy_vars(n);
    let lhs = eq11_lhs(n).expect("callers guard the order");
    let rhs = frozen.apply(&eq11_rhs(n).expect("callers guard the order"), n);
    let closed = eq11_closed_form(n);
    crate::report::compare_polynomials(
        &mut report,
        "two-family generating function vs alternating sum",
        &lhs,
        &rhs,
        &vars,
    );
    crate::report::compare_polynomials(
        &mut report,
        "two-family generating function vs closed product",
        &lhs,
        &closed,
        &vars,
    );
    report.note(format!(
        "both sides expanded exactly: {} monomials at order {n}",
        lhs.num_terms()
    ));
    report
}
