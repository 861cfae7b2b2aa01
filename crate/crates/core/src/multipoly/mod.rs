//! Sparse multivariate polynomials over [`Rational`].
//!
//! A [`MultiPoly`] carries its own [`VarTable`]; the table order fixes the
//! graded-lexicographic monomial order used for storage and printing. Terms
//! are kept in a `BTreeMap` keyed by exponent vector, so two polynomials over
//! the same table are equal exactly when their maps are equal.
//!
//! Binary operations between polynomials over different tables succeed when
//! one table is an order-preserving subsequence of the other; the smaller
//! operand is embedded into the larger table. Anything else is an error.

mod dense;
mod parse;
mod ratfunc;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactnum::Rational;

pub use dense::UniPoly;
pub use parse::parse_poly;
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("non-integer exponent at position {0}")]
    NonIntegerExponent(usize),
    #[error("negative exponent at position {0}")]
    NegativeExponent(usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible variable tables [{0}] and [{1}]")]
    IncompatibleVars(String, String),
    #[error("invalid variable name {0:?}")]
    InvalidVarName(String),
    #[error("duplicate variable {0:?}")]
    DuplicateVar(String),
    #[error("no value assigned to variable {0:?}")]
    MissingAssignment(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("{0:?} occurs with an odd exponent")]
    OddExponent(String),
    #[error("expected a polynomial in {expected:?} only, found variables [{found}]")]
    NotUnivariate { expected: String, found: String },
}

/// Ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(PolyError::InvalidVarName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(PolyError::DuplicateVar(name.clone()));
            }
        }
        Ok(VarTable(names.into()))
    }

    /// Table with no variables, used for constants.
    pub fn empty() -> Self {
        VarTable(Vec::new().into())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// True when every name of `self` occurs in `other`, in the same
    /// relative order.
    pub fn embeds_into(&self, other: &VarTable) -> bool {
        let mut rest = other.0.iter();
        self.0.iter().all(|name| rest.any(|o| o == name))
    }

    fn positions_in(&self, other: &VarTable) -> Vec<usize> {
        self.0
            .iter()
            .map(|n| other.index_of(n).expect("embedding checked by caller"))
            .collect()
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: VarTable,
    terms: BTreeMap<Monomial, Rational>,
}

/// A polynomial viewed as univariate in `main_var`; `coeffs[i]` multiplies
/// `main_var^i` and lives in the table of the remaining variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniView {
    pub main_var: String,
    pub coeffs: Vec<MultiPoly>,
}

impl UniView {
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> &MultiPoly {
        self.coeffs.last().expect("view always has at least one coefficient")
    }

    /// Rebuilds `sum coeffs[i] * main_var^i` over `vars`.
    pub fn reassemble(&self, vars: &VarTable) -> Result<MultiPoly, PolyError> {
        let x = MultiPoly::var(vars, &self.main_var)?;
        let mut acc = MultiPoly::zero(vars);
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(&x)?.try_add(c)?;
        }
        acc.retable(vars)
    }
}

impl MultiPoly {
    pub fn zero(vars: &VarTable) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarTable) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &VarTable, value: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), value);
        }
        p
    }

    pub fn var(vars: &VarTable, name: &str) -> Result<Self, PolyError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))?;
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Ok(Self::from_terms(vars, [(Monomial(exps), Rational::one())]))
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(vars: &VarTable, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "exponent vector length mismatch");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.total_degree())
    }

    /// The constant value if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.total_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Names of the variables that actually occur, in table order.
    pub fn used_vars(&self) -> Vec<String> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .map(|i| self.vars.0[i].clone())
            .collect()
    }

    pub fn degree_in(&self, v: &str) -> Result<u32, PolyError> {
        let idx = self.index(v)?;
        Ok(self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0))
    }

    fn index(&self, v: &str) -> Result<usize, PolyError> {
        self.vars
            .index_of(v)
            .ok_or_else(|| PolyError::UnknownVariable(v.to_string()))
    }

    /// Re-expresses the polynomial over another table. Fails if a variable
    /// that occurs in the polynomial is missing from `target`.
    pub fn retable(&self, target: &VarTable) -> Result<Self, PolyError> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.0.iter().enumerate() {
            match target.index_of(name) {
                Some(j) => map.push(Some(j)),
                None if self.terms.keys().any(|m| m.0[i] > 0) => {
                    return Err(PolyError::UnknownVariable(name.clone()))
                }
                None => map.push(None),
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; target.len()];
            for (i, e) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    exps[j] = *e;
                }
            }
            (Monomial(exps), c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    /// Brings two operands onto a common table under the embedding rule.
    pub fn align(&self, other: &Self) -> Result<(Self, Self), PolyError> {
        if self.vars == other.vars {
            return Ok((self.clone(), other.clone()));
        }
        if other.vars.embeds_into(&self.vars) {
            let pos = other.vars.positions_in(&self.vars);
            return Ok((self.clone(), other.embed(&self.vars, &pos)));
        }
        if self.vars.embeds_into(&other.vars) {
            let pos = self.vars.positions_in(&other.vars);
            return Ok((self.embed(&other.vars, &pos), other.clone()));
        }
        Err(PolyError::IncompatibleVars(
            self.vars.to_string(),
            other.vars.to_string(),
        ))
    }

    fn embed(&self, target: &VarTable, positions: &[usize]) -> Self {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; target.len()];
            for (e, &j) in m.0.iter().zip(positions) {
                exps[j] = *e;
            }
            (Monomial(exps), c.clone())
        });
        Self::from_terms(target, terms)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        let (mut a, b) = self.align(other)?;
        for (m, c) in b.terms {
            a.add_term(m, c);
        }
        Ok(a)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        let (mut a, b) = self.align(other)?;
        for (m, c) in b.terms {
            a.add_term(m, -c);
        }
        Ok(a)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        let (a, b) = self.align(other)?;
        let mut out = Self::zero(&a.vars);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// `self^e`, with `p^0 = 1` for every `p` including zero.
    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn partial_derivative(&self, v: &str) -> Result<Self, PolyError> {
        let idx = self.index(v)?;
        let terms = self.terms.iter().filter(|(m, _)| m.0[idx] > 0).map(|(m, c)| {
            let mut exps = m.0.clone();
            let e = exps[idx];
            exps[idx] -= 1;
            (Monomial(exps), c * Rational::from_integer(e.into()))
        });
        Ok(Self::from_terms(&self.vars, terms))
    }

    /// Composition `self[v := q]`.
    ///
    /// The result table is `self`'s table with `v` replaced, in place, by
    /// the variables of `q` that `self`'s table lacks (`v` is kept only if
    /// `q` itself mentions it).
    pub fn substitute(&self, v: &str, q: &Self) -> Result<Self, PolyError> {
        let idx = self.index(v)?;
        let mut names: Vec<String> = Vec::with_capacity(self.vars.len() + q.vars.len());
        for (i, name) in self.vars.0.iter().enumerate() {
            if i == idx {
                for qn in q.vars.0.iter() {
                    let known = self.vars.0.iter().enumerate().any(|(j, n)| j != idx && n == qn);
                    if !known {
                        names.push(qn.clone());
                    }
                }
            } else {
                names.push(name.clone());
            }
        }
        let table = VarTable::new(names)?;
        let q = q.retable(&table)?;
        // Group terms by the power of v, then Horner over those groups.
        let mut by_power: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[idx];
            exps[idx] = 0;
            by_power.entry(e).or_default().push((Monomial(exps), c.clone()));
        }
        let rest_vars = &self.vars;
        let mut result = Self::zero(&table);
        let mut q_pow = Self::one(&table);
        let mut current = 0u32;
        for (e, group) in by_power {
            while current < e {
                q_pow = &q_pow * &q;
                current += 1;
            }
            let coeff = Self::from_terms(rest_vars, group)
                .drop_var(idx)
                .retable(&table)?;
            result = &result + &(&coeff * &q_pow);
        }
        Ok(result)
    }

    /// Removes the variable at `idx` from the table; it must not occur.
    fn drop_var(&self, idx: usize) -> Self {
        let names: Vec<String> = self
            .vars
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n.clone())
            .collect();
        let table = VarTable(names.into());
        let terms = self.terms.iter().map(|(m, c)| {
            debug_assert_eq!(m.0[idx], 0);
            let mut exps = m.0.clone();
            exps.remove(idx);
            (Monomial(exps), c.clone())
        });
        Self::from_terms(&table, terms)
    }

    /// Substitutes a rational value for `v` and drops `v` from the table.
    pub fn specialize(&self, v: &str, value: &Rational) -> Result<Self, PolyError> {
        self.substitute(v, &Self::constant(&VarTable::empty(), value.clone()))
    }

    pub fn evaluate(&self, point: &[(&str, Rational)]) -> Result<Rational, PolyError> {
        let mut values = Vec::with_capacity(self.vars.len());
        for name in self.vars.0.iter() {
            match point.iter().find(|(n, _)| n == name) {
                Some((_, v)) => values.push(Some(v.clone())),
                None => values.push(None),
            }
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                if *e == 0 {
                    continue;
                }
                let value = values[i]
                    .as_ref()
                    .ok_or_else(|| PolyError::MissingAssignment(self.vars.0[i].clone()))?;
                term *= num_traits::pow(value.clone(), *e as usize);
            }
            acc += term;
        }
        Ok(acc)
    }

    pub fn univariate_view(&self, v: &str) -> Result<UniView, PolyError> {
        let idx = self.index(v)?;
        let degree = self.degree_in(v)? as usize;
        let mut coeffs = vec![Self::zero(&self.vars); degree + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[idx] as usize;
            exps[idx] = 0;
            coeffs[e].add_term(Monomial(exps), c.clone());
        }
        Ok(UniView {
            main_var: v.to_string(),
            coeffs: coeffs.into_iter().map(|c| c.drop_var(idx)).collect(),
        })
    }

    /// Coefficients of `v^0 ..= v^deg` kept over this polynomial's own table.
    pub fn coefficients_in(&self, v: &str) -> Result<Vec<Self>, PolyError> {
        let idx = self.index(v)?;
        let degree = self.degree_in(v)? as usize;
        let mut coeffs = vec![Self::zero(&self.vars); degree + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let e = exps[idx] as usize;
            exps[idx] = 0;
            coeffs[e].add_term(Monomial(exps), c.clone());
        }
        Ok(coeffs)
    }

    /// Exact quotient `self / divisor`; errors unless the remainder is zero.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let (mut rem, divisor) = self.align(divisor)?;
        let (lead_m, lead_c) = divisor
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        if divisor.terms.len() == 1 {
            let mut out = Self::zero(&rem.vars);
            for (m, c) in rem.terms {
                let q = m.try_div(&lead_m).ok_or(PolyError::InexactDivision)?;
                out.terms.insert(q, c / &lead_c);
            }
            return Ok(out);
        }
        let mut quotient = Self::zero(&rem.vars);
        while let Some((m, c)) = rem.leading_term().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.try_div(&lead_m).ok_or(PolyError::InexactDivision)?;
            let qc = c / &lead_c;
            for (dm, dc) in &divisor.terms {
                rem.add_term(qm.mul(dm), -(&qc * dc));
            }
            quotient.add_term(qm, qc);
        }
        Ok(quotient)
    }

    /// Replaces `v^2` by `u`, failing if `v` ever occurs with an odd
    /// exponent. `u` takes the place of `v` in the table.
    pub fn substitute_square(&self, v: &str, u: &str) -> Result<Self, PolyError> {
        let idx = self.index(v)?;
        if self.terms.keys().any(|m| m.0[idx] % 2 == 1) {
            return Err(PolyError::OddExponent(v.to_string()));
        }
        let mut names: Vec<String> = self.vars.0.to_vec();
        names[idx] = u.to_string();
        let table = VarTable::new(names)?;
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = m.0.clone();
            exps[idx] /= 2;
            (Monomial(exps), c.clone())
        });
        Ok(Self::from_terms(&table, terms))
    }

    /// `den^d * self[v := num/den]` where `d = deg_v(self)` unless a larger
    /// `degree` is given. The result is a polynomial.
    pub fn substitute_fraction(
        &self,
        v: &str,
        num: &Self,
        den: &Self,
        degree: Option<u32>,
    ) -> Result<Self, PolyError> {
        let d = self.degree_in(v)?.max(degree.unwrap_or(0));
        let coeffs = self.univariate_view(v)?.coeffs;
        let probe = self.substitute(v, num)?;
        let table = probe.vars().clone();
        let mut acc = Self::zero(&table);
        for (i, c) in coeffs.iter().enumerate() {
            let term = c
                .retable(&table)?
                .try_mul(&num.pow(i as u32))?
                .try_mul(&den.pow(d - i as u32))?;
            acc = acc.try_add(&term)?;
        }
        acc.retable(&table)
    }

    /// Largest absolute coefficient, handy for size reporting.
    pub fn max_abs_coeff(&self) -> Rational {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Copy with variables renamed one-to-one (`from[i] -> to[i]`).
    pub fn rename(&self, from: &[&str], to: &[&str]) -> Result<Self, PolyError> {
        let names: Vec<String> = self
            .vars
            .0
            .iter()
            .map(|n| match from.iter().position(|f| f == n) {
                Some(i) => to[i].to_string(),
                None => n.clone(),
            })
            .collect();
        Ok(MultiPoly {
            vars: VarTable::new(names)?,
            terms: self.terms.clone(),
        })
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.total_degree() == 0 {
                factors.push(abs.to_string());
            }
            for (name, e) in self.vars.0.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars, self)
    }
}

// Operator forms panic on incompatible tables; use the `try_*` methods when
// the tables are not known to line up.
impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("incompatible variable tables")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("incompatible variable tables")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("incompatible variable tables")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Parses `text` over the variables `names`. Panics on malformed input;
/// intended for literals in code and tests.
pub fn poly(text: &str, names: &[&str]) -> MultiPoly {
    let vars = VarTable::new(names.iter().copied()).expect("valid variable table");
    parse_poly(text, &vars).unwrap_or_else(|e| panic!("bad polynomial literal {text:?}: {e}"))
}
