//! Quasisymmetric class functions in the monomial basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::compositions::{type_of_blocks, IntComposition};
use crate::error::{domain, Error, Result};
use crate::groups::{ClassFunction, PermGroup};
use crate::labels::Mask;
use crate::structures::{CharacterSpec, HopfStructure};

use super::enumerate::{check_instance, fold_proper, Options};
use super::polynomial::{ClassPolynomial, IntPolynomial};

/// Σ_α f_α M_α with class-function coefficients; absent keys are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassQSym {
    degree: usize,
    group: Arc<PermGroup>,
    coeffs: BTreeMap<IntComposition, ClassFunction>,
}

impl ClassQSym {
    pub fn new(degree: usize, group: &Arc<PermGroup>, coeffs: BTreeMap<IntComposition, ClassFunction>) -> Result<Self> {
        if let Some(a) = coeffs.keys().find(|a| a.degree() != degree) {
            return Err(domain!("composition {a} does not have degree {degree}"));
        }
        if coeffs.values().any(|f| !f.group().same_as(group)) {
            return Err(domain!("coefficients live on a different group"));
        }
        let coeffs = coeffs.into_iter().filter(|(_, f)| !f.is_zero()).collect();
        Ok(ClassQSym { degree, group: group.clone(), coeffs })
    }

    /// From per-element counts, compressed to classes with a constancy check.
    pub(crate) fn from_element_counts(
        degree: usize,
        group: &Arc<PermGroup>,
        counts: HashMap<IntComposition, Vec<u64>>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (a, per) in counts {
            let vals: Vec<BigRational> = per.iter().map(|&c| BigRational::from_integer(c.into())).collect();
            coeffs.insert(a, ClassFunction::from_element_values(group, &vals)?);
        }
        let q = ClassQSym::new(degree, group, coeffs)?;
        q.check_fixed_point_shape()?;
        Ok(q)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn coefficients(&self) -> &BTreeMap<IntComposition, ClassFunction> {
        &self.coeffs
    }

    pub fn coefficient(&self, a: &IntComposition) -> ClassFunction {
        self.coeffs.get(a).cloned().unwrap_or_else(|| ClassFunction::zero(&self.group))
    }

    /// Coefficients at the identity.
    pub fn identity_slice(&self) -> BTreeMap<IntComposition, BigInt> {
        self.coeffs.iter().map(|(a, f)| (a.clone(), f.at_identity().to_integer())).collect()
    }

    /// Fixed-point counts are nonnegative integers and largest at the identity.
    pub fn check_fixed_point_shape(&self) -> Result<()> {
        for (a, f) in &self.coeffs {
            let e = f.at_identity();
            if f.values().iter().any(|v| !v.is_integer() || v.is_negative() || v > e) {
                return Err(Error::Consistency(format!("coefficient of M_{a} = {f} is not a fixed-point count")));
            }
        }
        Ok(())
    }

    /// Burnside average of every coefficient.
    pub fn orbital(&self) -> Result<OrbitalQSym> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(a, f)| Ok((a.clone(), f.burnside_count()?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(OrbitalQSym { degree: self.degree, coeffs })
    }

    /// ps(F): f_i = Σ_{ℓ(α) = i} coefficient of M_α.
    pub fn principal_specialization(&self) -> ClassPolynomial {
        let mut fvec = vec![ClassFunction::zero(&self.group); self.degree + 1];
        for (a, f) in &self.coeffs {
            fvec[a.len()] = &fvec[a.len()] + f;
        }
        ClassPolynomial::new(self.degree, &self.group, fvec)
    }

    /// `{"degree", "classes", "coefficients"}` with integer class values.
    pub fn to_json(&self) -> Value {
        let coeffs: serde_json::Map<String, Value> =
            self.coeffs.iter().map(|(a, f)| (a.to_string(), values_json(f.values()))).collect();
        json!({
            "degree": self.degree,
            "classes": classes_json(&self.group),
            "coefficients": coeffs,
        })
    }
}

pub(crate) fn classes_json(g: &PermGroup) -> Value {
    Value::Array(
        g.classes()
            .iter()
            .map(|c| json!({"rep": c.representative.to_string(), "size": c.size}))
            .collect(),
    )
}

/// Integers as JSON numbers when they fit, otherwise as strings.
pub(crate) fn number_json(v: &BigRational) -> Value {
    if v.is_integer() {
        if let Ok(i) = i64::try_from(v.to_integer()) {
            return json!(i);
        }
    }
    Value::String(v.to_string())
}

pub(crate) fn int_json(v: &BigInt) -> Value {
    i64::try_from(v.clone()).map(|i| json!(i)).unwrap_or_else(|_| Value::String(v.to_string()))
}

pub(crate) fn values_json(vs: &[BigRational]) -> Value {
    Value::Array(vs.iter().map(number_json).collect())
}

/// Orbit-counting quasisymmetric function with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalQSym {
    degree: usize,
    coeffs: BTreeMap<IntComposition, BigInt>,
}

impl OrbitalQSym {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<IntComposition, BigInt> {
        &self.coeffs
    }

    pub fn coefficient(&self, a: &IntComposition) -> BigInt {
        self.coeffs.get(a).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn principal_specialization(&self) -> IntPolynomial {
        let mut f = vec![BigInt::zero(); self.degree + 1];
        for (a, c) in &self.coeffs {
            f[a.len()] += c;
        }
        IntPolynomial::new(f)
    }

    pub fn to_json(&self) -> Value {
        let coeffs: serde_json::Map<String, Value> = self.coeffs.iter().map(|(a, c)| (a.to_string(), int_json(c))).collect();
        json!({"degree": self.degree, "coefficients": coeffs})
    }
}

pub(crate) fn check_group(h: &HopfStructure, group: &PermGroup) -> Result<()> {
    if group.ground() != h.universe() {
        return Err(domain!("group and structure live on different label sets"));
    }
    for g in group.generators() {
        if !h.automorphism_check(g)? {
            return Err(domain!("generator {g} is not an automorphism of the structure"));
        }
    }
    Ok(())
}

/// Ψ(h, G): coefficient of M_α at g counts type-α proper compositions fixed by g.
pub fn psi(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>) -> Result<ClassQSym> {
    psi_with(h, phi, group, Options::default())
}

pub fn psi_with(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>, opts: Options) -> Result<ClassQSym> {
    check_instance(h, phi)?;
    check_group(h, group)?;
    let elements = group.elements();
    let n_el = elements.len();
    let counts = fold_proper(
        h,
        phi,
        opts,
        HashMap::new,
        |acc: &mut HashMap<IntComposition, Vec<u64>>, blocks: &[Mask]| {
            let row = acc.entry(type_of_blocks(blocks)).or_insert_with(|| vec![0; n_el]);
            for (k, g) in elements.iter().enumerate() {
                if blocks.iter().all(|&b| g.apply_mask(b) == b) {
                    row[k] += 1;
                }
            }
        },
        |mut a, b| {
            for (k, v) in b {
                match a.get_mut(&k) {
                    Some(row) => row.iter_mut().zip(v).for_each(|(x, y)| *x += y),
                    None => {
                        a.insert(k, v);
                    }
                }
            }
            a
        },
    )?;
    ClassQSym::from_element_counts(h.size(), group, counts)
}

pub fn psi_polynomial(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>) -> Result<ClassPolynomial> {
    Ok(psi(h, phi, group)?.principal_specialization())
}

/// Coefficient of M_α is the number of G-orbits of type-α proper compositions.
pub fn orbital_psi(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>) -> Result<OrbitalQSym> {
    psi(h, phi, group)?.orbital()
}

pub fn orbital_polynomial(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>) -> Result<IntPolynomial> {
    psi_polynomial(h, phi, group)?.orbital()
}
