//! Polynomials in the binomial basis binom(x, i), with class-function or
//! integer coefficients.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::Result;
use crate::groups::{ClassFunction, PermGroup};

use super::qsym::{classes_json, int_json};

/// Monomial coefficients of binom(x, i), constant term first.
pub fn binomial_monomials(i: usize) -> Vec<BigRational> {
    let mut p = vec![BigRational::one()];
    let mut fact = BigInt::one();
    for j in 0..i {
        // multiply by (x − j)
        let mut q = vec![BigRational::zero(); p.len() + 1];
        for (k, c) in p.iter().enumerate() {
            q[k + 1] += c;
            q[k] -= c * BigInt::from(j);
        }
        p = q;
        fact *= j + 1;
    }
    p.into_iter().map(|c| c / fact.clone()).collect()
}

/// binom(x, i) for integer x ≥ 0.
pub fn binomial(x: u64, i: usize) -> BigInt {
    if i as u64 > x {
        return BigInt::zero();
    }
    (0..i as u64).fold(BigInt::one(), |acc, j| acc * (x - j) / (j + 1))
}

fn to_monomial(f: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); f.len().max(1)];
    for (i, c) in f.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, b) in binomial_monomials(i).into_iter().enumerate() {
            out[k] += c * b;
        }
    }
    out
}

fn strings(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect())
}

/// p(x; g) = Σ_i f_i(g) binom(x, i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPolynomial {
    degree: usize,
    group: Arc<PermGroup>,
    fvec: Vec<ClassFunction>,
}

impl ClassPolynomial {
    pub fn new(degree: usize, group: &Arc<PermGroup>, fvec: Vec<ClassFunction>) -> Self {
        assert_eq!(fvec.len(), degree + 1);
        ClassPolynomial { degree, group: group.clone(), fvec }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// f_0, …, f_d.
    pub fn fvec(&self) -> &[ClassFunction] {
        &self.fvec
    }

    /// The integer polynomial obtained by restricting to one class.
    pub fn at_class(&self, class: usize) -> IntPolynomial {
        IntPolynomial::new(self.fvec.iter().map(|f| f.values()[class].to_integer()).collect())
    }

    pub fn at_identity(&self) -> IntPolynomial {
        self.at_class(0)
    }

    pub fn evaluate(&self, x: u64, class: usize) -> BigInt {
        self.at_class(class).evaluate(x)
    }

    /// Burnside average of each f_i.
    pub fn orbital(&self) -> Result<IntPolynomial> {
        Ok(IntPolynomial::new(self.fvec.iter().map(|f| f.burnside_count()).collect::<Result<_>>()?))
    }

    pub fn to_json(&self) -> Value {
        let per_class: Vec<Value> = self
            .group
            .classes()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let p = self.at_class(k);
                json!({
                    "rep": c.representative.to_string(),
                    "binomial_basis": p.binomial_json(),
                    "monomial_basis": strings(&p.monomial()),
                })
            })
            .collect();
        json!({"degree": self.degree, "classes": classes_json(&self.group), "polynomials": per_class})
    }
}

/// Σ_i f_i binom(x, i) with integer f_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    binomial: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(binomial: Vec<BigInt>) -> Self {
        IntPolynomial { binomial }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        IntPolynomial { binomial: v.iter().map(|&x| x.into()).collect() }
    }

    pub fn binomial_basis(&self) -> &[BigInt] {
        &self.binomial
    }

    pub fn monomial(&self) -> Vec<BigRational> {
        let f: Vec<BigRational> = self.binomial.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        to_monomial(&f)
    }

    pub fn evaluate(&self, x: u64) -> BigInt {
        self.binomial.iter().enumerate().map(|(i, c)| c * binomial(x, i)).sum()
    }

    fn binomial_json(&self) -> Value {
        Value::Array(self.binomial.iter().map(int_json).collect())
    }

    pub fn to_json(&self) -> Value {
        json!({"binomial_basis": self.binomial_json(), "monomial_basis": strings(&self.monomial())})
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_expansion() {
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(binomial_monomials(0), vec![q(1, 1)]);
        assert_eq!(binomial_monomials(2), vec![q(0, 1), q(-1, 2), q(1, 2)]);
        for x in 0..8u64 {
            for i in 0..6 {
                let via_poly: BigRational = binomial_monomials(i)
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * BigRational::from_integer(BigInt::from(x).pow(k as u32)))
                    .sum();
                assert_eq!(via_poly, BigRational::from_integer(binomial(x, i)));
            }
        }
    }

    #[test]
    fn square_chromatic_polynomial() {
        let p = IntPolynomial::from_i64(&[0, 0, 2, 12, 24]);
        let mono: Vec<String> = p.monomial().iter().map(|c| c.to_string()).collect();
        assert_eq!(mono, ["0", "-3", "6", "-4", "1"]);
        // (x−1)^4 + (x−1)
        for x in 0..10u64 {
            let y = x as i64 - 1;
            assert_eq!(p.evaluate(x), BigInt::from(y.pow(4) + y));
        }
        assert_eq!(p.evaluate(4), 84.into());
        assert_eq!(p.evaluate(0), 0.into());
    }
}
