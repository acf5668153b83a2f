//! Strongly/effectively flawless inequalities and the edge inequality
//! (d − i) f_i ≤ i f_{i+1} on f-vectors.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::groups::{CharacterTable, ClassFunction};

use super::polynomial::{ClassPolynomial, IntPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "i", rename_all = "snake_case")]
pub enum Inequality {
    /// f_i ≤ f_{i+1}, for i ≤ (d − 1)/2
    Increasing(usize),
    /// f_i ≤ f_{d−i}, for i ≤ d/2
    Symmetric(usize),
    /// (d − i) f_i ≤ i f_{i+1}, for 0 ≤ i < d
    Edge(usize),
}

impl Inequality {
    pub fn all(d: usize) -> Vec<Inequality> {
        let mut v = vec![];
        if d >= 1 {
            v.extend((0..=(d - 1) / 2).map(Inequality::Increasing));
        }
        v.extend((0..=d / 2).map(Inequality::Symmetric));
        v.extend((0..d).map(Inequality::Edge));
        v
    }

    /// (left multiplier, left index, right multiplier, right index)
    fn sides(&self, d: usize) -> (usize, usize, usize, usize) {
        match *self {
            Inequality::Increasing(i) => (1, i, 1, i + 1),
            Inequality::Symmetric(i) => (1, i, 1, d - i),
            Inequality::Edge(i) => (d - i, i, i, i + 1),
        }
    }

    pub fn is_strongly_flawless_part(&self) -> bool {
        !matches!(self, Inequality::Edge(_))
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Inequality::Increasing(i) => write!(f, "f_{i} <= f_{}", i + 1),
            Inequality::Symmetric(i) => write!(f, "f_{i} <= f_d-{i}"),
            Inequality::Edge(i) => write!(f, "(d-{i}) f_{i} <= {i} f_{}", i + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityResult {
    pub inequality: Inequality,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlawlessReport {
    pub degree: usize,
    /// "numeric" or "effective"
    pub order: &'static str,
    pub results: Vec<InequalityResult>,
}

impl FlawlessReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn strongly_flawless(&self) -> bool {
        self.results.iter().filter(|r| r.inequality.is_strongly_flawless_part()).all(|r| r.holds)
    }

    pub fn edge_inequalities_hold(&self) -> bool {
        self.results.iter().filter(|r| !r.inequality.is_strongly_flawless_part()).all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&InequalityResult> {
        self.results.iter().filter(|r| !r.holds).collect()
    }
}

/// Numeric check on an integer f-vector f_0..f_d.
pub fn verify_flawless(f: &[BigInt]) -> FlawlessReport {
    let d = f.len().saturating_sub(1);
    let results = Inequality::all(d)
        .into_iter()
        .map(|ineq| {
            let (a, i, b, j) = ineq.sides(d);
            let lhs = &f[i] * BigInt::from(a);
            let rhs = &f[j] * BigInt::from(b);
            InequalityResult { inequality: ineq, holds: lhs <= rhs, lhs: lhs.to_string(), rhs: rhs.to_string() }
        })
        .collect();
    FlawlessReport { degree: d, order: "numeric", results }
}

pub fn verify_flawless_poly(p: &IntPolynomial) -> FlawlessReport {
    verify_flawless(p.binomial_basis())
}

/// Each inequality in the order χ ≤ ψ ⇔ ψ − χ effective; abelian groups only.
pub fn verify_flawless_effective(p: &ClassPolynomial) -> Result<FlawlessReport> {
    let table = CharacterTable::new(p.group())?;
    verify_flawless_effective_with(p, &table)
}

pub fn verify_flawless_effective_with(p: &ClassPolynomial, table: &CharacterTable) -> Result<FlawlessReport> {
    let d = p.degree();
    let f = p.fvec();
    let scaled = |k: usize, x: &ClassFunction| (k as i64) * x;
    let mut results = Vec::new();
    for ineq in Inequality::all(d) {
        let (a, i, b, j) = ineq.sides(d);
        let lhs = scaled(a, &f[i]);
        let rhs = scaled(b, &f[j]);
        let holds = table.leq_char(&lhs, &rhs)?;
        results.push(InequalityResult { inequality: ineq, holds, lhs: lhs.to_string(), rhs: rhs.to_string() });
    }
    Ok(FlawlessReport { degree: d, order: "effective", results })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn square_fvector_is_flawless() {
        let r = verify_flawless(&ints(&[0, 0, 2, 12, 24]));
        assert!(r.strongly_flawless());
        assert!(r.edge_inequalities_hold());
        let edge3 = r.results.iter().find(|x| x.inequality == Inequality::Edge(3)).unwrap();
        assert_eq!((edge3.lhs.as_str(), edge3.rhs.as_str()), ("12", "72"));
    }

    #[test]
    fn symmetric_unimodal_passes() {
        assert!(verify_flawless(&ints(&[0, 1, 2, 1])).strongly_flawless());
    }

    #[test]
    fn negative_control_fails() {
        let r = verify_flawless(&ints(&[0, 5, 1, 0, 0, 0]));
        assert!(!r.passed());
        assert!(r.failures().iter().any(|x| x.inequality == Inequality::Increasing(1)));
    }
}
