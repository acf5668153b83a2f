//! Exact arithmetic in Q(ζ_m), power basis reduced modulo Φ_m.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first: x^m − 1 divided by Φ_d for every proper divisor d.
pub fn cyclotomic_polynomial(m: usize) -> Vec<BigInt> {
    assert!(m >= 1);
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = BigInt::from(-1);
    num[m] = BigInt::one();
    for d in (1..m).filter(|d| m % d == 0) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Quotient of exact division by a monic polynomial.
fn exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

/// An element of Q(ζ_m), stored as coefficients of 1, ζ, …, ζ^{φ(m)−1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    m: usize,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    /// Σ c_k ζ^k with arbitrary exponents, reduced.
    pub fn from_exponent_form(m: usize, c: &[BigRational]) -> Self {
        let phi = cyclotomic_polynomial(m);
        let deg = phi.len() - 1;
        let mut r: Vec<BigRational> = vec![BigRational::zero(); deg.max(c.len())];
        for (k, v) in c.iter().enumerate() {
            r[k % m] += v;
        }
        for k in (deg..r.len()).rev() {
            if r[k].is_zero() {
                continue;
            }
            let lead = std::mem::replace(&mut r[k], BigRational::zero());
            for (j, pj) in phi[..deg].iter().enumerate() {
                r[k - deg + j] -= &lead * pj;
            }
        }
        r.truncate(deg);
        CyclotomicNumber { m, coeffs: r }
    }

    pub fn from_rational(m: usize, q: BigRational) -> Self {
        Self::from_exponent_form(m, &[q])
    }

    pub fn zero(m: usize) -> Self {
        Self::from_exponent_form(m, &[])
    }

    /// ζ_m^k
    pub fn root_of_unity(m: usize, k: usize) -> Self {
        let mut c = vec![BigRational::zero(); m];
        c[k % m] = BigRational::one();
        Self::from_exponent_form(m, &c)
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicNumber { m: self.m, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        CyclotomicNumber { m: self.m, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m);
        let mut c = vec![BigRational::zero(); self.m];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[(i + j) % self.m] += a * b;
            }
        }
        Self::from_exponent_form(self.m, &c)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CyclotomicNumber { m: self.m, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugate: ζ^e ↦ ζ^{m−e}.
    pub fn conj(&self) -> Self {
        let mut c = vec![BigRational::zero(); self.m];
        for (e, a) in self.coeffs.iter().enumerate() {
            c[(self.m - e) % self.m] += a;
        }
        Self::from_exponent_form(self.m, &c)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                _ => format!("{c}·ζ{}^{k}", self.m),
            })
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn roots_of_unity_behave() {
        for m in 1..=12 {
            let z = CyclotomicNumber::root_of_unity(m, 1);
            let mut p = CyclotomicNumber::from_rational(m, BigRational::one());
            for _ in 0..m {
                p = p.mul(&z);
            }
            assert_eq!(p.to_rational(), Some(BigRational::one()), "ζ_{m}^{m}");
            // ζ·conj(ζ) = 1
            assert_eq!(z.mul(&z.conj()).to_rational(), Some(BigRational::one()));
            // Σ_k ζ^k = 0 for m > 1
            let s = (0..m).fold(CyclotomicNumber::zero(m), |acc, k| acc.add(&CyclotomicNumber::root_of_unity(m, k)));
            assert_eq!(s.to_rational(), Some(if m == 1 { BigRational::one() } else { BigRational::zero() }));
        }
        let i = CyclotomicNumber::root_of_unity(4, 1);
        assert!(!i.is_rational());
        assert_eq!(i.mul(&i).to_rational(), Some(BigRational::from_integer((-1).into())));
    }
}
