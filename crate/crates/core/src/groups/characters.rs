//! Irreducible characters of abelian permutation groups and the effectiveness
//! test built on them.

use std::collections::VecDeque;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{domain, Error, Result};

use super::{ClassFunction, CyclotomicNumber, PermGroup};

/// A one-dimensional character g ↦ ζ_m^{e(g)}, stored by its exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCharacter {
    m: usize,
    exponents: Vec<usize>,
}

impl LinearCharacter {
    /// Value at the `i`-th group element (classes and elements coincide).
    pub fn value(&self, i: usize) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(self.m, self.exponents[i])
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }
}

/// The full character table of an abelian group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<PermGroup>,
    m: usize,
    characters: Vec<LinearCharacter>,
}

impl CharacterTable {
    pub fn new(group: &Arc<PermGroup>) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::Unsupported(format!(
                "character-level effectiveness needs an abelian group; this group of order {} is not abelian \
                 (use the embedding certificate instead)",
                group.order()
            )));
        }
        let m = group.exponent();
        let gens = group.generators();
        let els = group.elements();
        let gen_idx: Vec<usize> = gens.iter().map(|s| group.element_index(s).unwrap()).collect();
        // each generator s must go to an (order s)-th root of unity
        let choices: Vec<Vec<usize>> = gens
            .iter()
            .map(|s| {
                let step = m / s.order();
                (0..s.order()).map(|k| k * step).collect()
            })
            .collect();
        let mut characters = Vec::new();
        let mut pick = vec![0usize; gens.len()];
        loop {
            if let Some(e) = extend(group, &gen_idx, &pick.iter().zip(&choices).map(|(&p, c)| c[p]).collect::<Vec<_>>(), m) {
                characters.push(LinearCharacter { m, exponents: e });
            }
            // odometer over the choice lists
            let mut k = 0;
            while k < pick.len() {
                pick[k] += 1;
                if pick[k] < choices[k].len() {
                    break;
                }
                pick[k] = 0;
                k += 1;
            }
            if k == pick.len() {
                break;
            }
        }
        if characters.len() != els.len() {
            return Err(Error::Consistency(format!(
                "found {} linear characters for an abelian group of order {}",
                characters.len(),
                els.len()
            )));
        }
        Ok(CharacterTable { group: group.clone(), m, characters })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn characters(&self) -> &[LinearCharacter] {
        &self.characters
    }

    /// ⟨ψ, χ⟩ for two table characters, as a cyclotomic number.
    pub fn character_inner_product(&self, a: usize, b: usize) -> CyclotomicNumber {
        let n = self.group.order();
        let mut c = vec![BigRational::zero(); self.m];
        for i in 0..n {
            let e = (self.m - self.characters[a].exponents[i] + self.characters[b].exponents[i]) % self.m;
            c[e] += BigRational::from_integer(BigInt::from(1));
        }
        CyclotomicNumber::from_exponent_form(self.m, &c).scale(&BigRational::new(1.into(), n.into()))
    }

    /// ⟨ψ_i, θ⟩ for every irreducible ψ_i.
    pub fn raw_multiplicities(&self, theta: &ClassFunction) -> Result<Vec<CyclotomicNumber>> {
        if !theta.group().same_as(&self.group) {
            return Err(domain!("class function over a different group"));
        }
        let inv_n = BigRational::new(1.into(), BigInt::from(self.group.order()));
        Ok(self
            .characters
            .iter()
            .map(|chi| {
                let mut c = vec![BigRational::zero(); self.m];
                for (i, v) in theta.values().iter().enumerate() {
                    // conj(ζ^e) θ(g)
                    c[(self.m - chi.exponents[i]) % self.m] += v;
                }
                CyclotomicNumber::from_exponent_form(self.m, &c).scale(&inv_n)
            })
            .collect())
    }

    /// Rational multiplicities; an error if some multiplicity is irrational.
    pub fn multiplicities(&self, theta: &ClassFunction) -> Result<Vec<BigRational>> {
        self.raw_multiplicities(theta)?
            .into_iter()
            .map(|z| z.to_rational().ok_or_else(|| domain!("multiplicity {z} is not rational")))
            .collect()
    }

    /// Nonnegative integer multiplicity on every irreducible.
    pub fn is_effective(&self, theta: &ClassFunction) -> Result<bool> {
        Ok(self
            .raw_multiplicities(theta)?
            .iter()
            .all(|z| z.to_rational().is_some_and(|q| q.is_integer() && !q.is_negative())))
    }

    /// χ ≤ ψ iff ψ − χ is effective.
    pub fn leq_char(&self, chi: &ClassFunction, psi: &ClassFunction) -> Result<bool> {
        self.is_effective(&psi.try_sub(chi)?)
    }
}

/// Extend generator exponents to a homomorphism by breadth-first search;
/// `None` on a conflict.
fn extend(group: &PermGroup, gen_idx: &[usize], gen_exp: &[usize], m: usize) -> Option<Vec<usize>> {
    let els = group.elements();
    let mut e = vec![usize::MAX; els.len()];
    e[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (k, &s) in gen_idx.iter().enumerate() {
            let j = group.element_index(&els[s].compose(&els[i])).unwrap();
            let v = (e[i] + gen_exp[k]) % m;
            if e[j] == usize::MAX {
                e[j] = v;
                queue.push_back(j);
            } else if e[j] != v {
                return None;
            }
        }
    }
    Some(e)
}

/// Irreducible characters of an abelian group, as cyclotomic class functions.
pub fn abelian_irreducibles(group: &Arc<PermGroup>) -> Result<Vec<Vec<CyclotomicNumber>>> {
    let t = CharacterTable::new(group)?;
    Ok(t.characters.iter().map(|c| (0..group.order()).map(|i| c.value(i)).collect()).collect())
}

pub fn is_effective(theta: &ClassFunction) -> Result<bool> {
    CharacterTable::new(theta.group())?.is_effective(theta)
}

pub fn leq_char(chi: &ClassFunction, psi: &ClassFunction) -> Result<bool> {
    CharacterTable::new(chi.group())?.leq_char(chi, psi)
}
