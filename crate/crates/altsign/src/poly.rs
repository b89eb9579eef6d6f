//! Sparse multivariate Laurent polynomials over exact rationals.
//!
//! Monomials may carry negative exponents (matrix entries appear inverted in
//! some expansions, so plain polynomials are not enough). Stored forms are
//! canonical: no zero coefficient and no zero exponent survives any
//! operation, so structural equality is exact polynomial equality.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::rational::{pow_checked, Rat};

/// Index into a caller-declared variable list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u32);

/// Display names for variables. Polynomials store only [`VarId`]s; a `VarSet`
/// is supplied when rendering or when resolving names from user input.
#[derive(Clone, Debug)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self { names: names.into_iter().map(Into::into).collect() }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: VarId) -> String {
        self.names.get(v.0 as usize).cloned().unwrap_or_else(|| format!("v{}", v.0))
    }

    pub fn id_of(&self, name: &str) -> Option<VarId> {
        self.names.iter().position(|n| n == name).map(|i| VarId(i as u32))
    }
}

/// Product of variable powers with nonzero integer exponents, kept sorted by
/// variable. The empty monomial is the multiplicative unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LaurentMonomial {
    exps: Vec<(VarId, i64)>,
}

impl LaurentMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, exp: i64) -> Self {
        if exp == 0 {
            Self::unit()
        } else {
            Self { exps: vec![(v, exp)] }
        }
    }

    /// Builds a monomial from (variable, exponent) pairs, summing repeats and
    /// dropping zero exponents.
    pub fn from_exponents<I>(exps: I) -> Self
    where
        I: IntoIterator<Item = (VarId, i64)>,
    {
        let mut acc: BTreeMap<VarId, i64> = BTreeMap::new();
        for (v, e) in exps {
            *acc.entry(v).or_insert(0) += e;
        }
        Self { exps: acc.into_iter().filter(|(_, e)| *e != 0).collect() }
    }

    pub fn exponent(&self, v: VarId) -> i64 {
        self.exps
            .binary_search_by_key(&v, |(var, _)| *var)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn exponents(&self) -> &[(VarId, i64)] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (va, ea) = self.exps[i];
            let (vb, eb) = other.exps[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    if ea + eb != 0 {
                        out.push((va, ea + eb));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Self { exps: out }
    }

    /// Monomials are invertible, so any integer power is defined.
    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return Self::unit();
        }
        Self { exps: self.exps.iter().map(|&(v, e)| (v, e * k)).collect() }
    }

    pub fn display_with(&self, vars: &VarSet) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    vars.name(v)
                } else {
                    format!("{}^{}", vars.name(v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("variable #{} is zero but occurs with a negative exponent", (.0).0)]
    ZeroToNegativePower(VarId),
    #[error("variable #{} has no assigned value", (.0).0)]
    UnassignedVariable(VarId),
}

/// Sparse Laurent polynomial: a map from monomials to nonzero rational
/// coefficients. The `BTreeMap` gives deterministic term order everywhere.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<LaurentMonomial, Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(LaurentMonomial::unit(), c);
        p
    }

    pub fn var(v: VarId) -> Self {
        Self::monomial(LaurentMonomial::var(v), Rat::one())
    }

    pub fn monomial(m: LaurentMonomial, c: Rat) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (LaurentMonomial, Rat)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentMonomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &LaurentMonomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c * m`, removing the term if the coefficient cancels to zero.
    pub fn add_term(&mut self, m: LaurentMonomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &LaurentMonomial, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(mm, k)| (mm.mul(m), k * c)).collect() }
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut result = Self::one();
        let mut square = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        result
    }

    /// Evaluates at a point. Every variable occurring in the polynomial must
    /// be assigned; zero values are rejected under negative exponents.
    pub fn eval(&self, assignment: &BTreeMap<VarId, Rat>) -> Result<Rat, EvalError> {
        let mut total = Rat::zero();
        for (m, c) in self.terms() {
            let mut term = c.clone();
            for &(v, e) in m.exponents() {
                let value = assignment.get(&v).ok_or(EvalError::UnassignedVariable(v))?;
                let p = pow_checked(value, e).ok_or(EvalError::ZeroToNegativePower(v))?;
                term = term * p;
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Substitutes `v -> -v` for every variable selected by `negate`.
    pub fn negate_vars(&self, negate: impl Fn(VarId) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let parity: i64 = m
                    .exponents()
                    .iter()
                    .filter(|(v, _)| negate(*v))
                    .map(|(_, e)| e)
                    .sum();
                let coeff = if parity.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
                (m.clone(), coeff)
            })
            .collect();
        Self { terms }
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|(v, _)| *v))
            .collect()
    }

    /// True when no zero coefficients or zero exponents are stored. All
    /// operations preserve this; tests scan it after every ring operation.
    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|(m, c)| {
            !c.is_zero()
                && m.exponents().iter().all(|(_, e)| *e != 0)
                && m.exponents().windows(2).all(|w| w[0].0 < w[1].0)
        })
    }

    pub fn display_with(&self, vars: &VarSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let rendered: Vec<String> = self
            .terms()
            .map(|(m, c)| {
                if m.is_unit() {
                    format!("{c}")
                } else if c.is_one() {
                    m.display_with(vars)
                } else if (-c).is_one() {
                    format!("-{}", m.display_with(vars))
                } else {
                    format!("{}*{}", c, m.display_with(vars))
                }
            })
            .collect();
        rendered.join(" + ")
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}
