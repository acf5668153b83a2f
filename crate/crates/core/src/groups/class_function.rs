use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};

use super::{PermGroup, Permutation};

/// Exact rational values, one per conjugacy class in the group's class order.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<PermGroup>,
    values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn new(group: &Arc<PermGroup>, values: Vec<BigRational>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(domain!("{} values for {} classes", values.len(), group.num_classes()));
        }
        Ok(ClassFunction { group: group.clone(), values })
    }

    pub fn from_ints<I: Into<BigInt>>(group: &Arc<PermGroup>, values: impl IntoIterator<Item = I>) -> Result<Self> {
        Self::new(group, values.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
    }

    /// Compress per-element values to classes; values must be constant on
    /// every class, otherwise the action that produced them is broken.
    pub fn from_element_values(group: &Arc<PermGroup>, per_element: &[BigRational]) -> Result<Self> {
        if per_element.len() != group.order() {
            return Err(domain!("{} values for {} elements", per_element.len(), group.order()));
        }
        let mut values: Vec<Option<BigRational>> = vec![None; group.num_classes()];
        for (i, v) in per_element.iter().enumerate() {
            let c = group.class_of_element(i);
            match &values[c] {
                None => values[c] = Some(v.clone()),
                Some(w) if w == v => {}
                Some(w) => {
                    return Err(Error::Consistency(format!(
                        "value {v} at {} differs from {w} elsewhere in its conjugacy class",
                        group.elements()[i]
                    )))
                }
            }
        }
        Ok(ClassFunction { group: group.clone(), values: values.into_iter().map(Option::unwrap).collect() })
    }

    pub fn zero(group: &Arc<PermGroup>) -> Self {
        ClassFunction { group: group.clone(), values: vec![BigRational::zero(); group.num_classes()] }
    }

    /// The trivial character 1.
    pub fn trivial(group: &Arc<PermGroup>) -> Self {
        ClassFunction { group: group.clone(), values: vec![BigRational::one(); group.num_classes()] }
    }

    /// The regular character ρ: |G| at the identity, 0 elsewhere.
    pub fn regular(group: &Arc<PermGroup>) -> Self {
        let mut f = Self::zero(group);
        f.values[0] = BigRational::from_integer(BigInt::from(group.order()));
        f
    }

    /// The sign of each element as a permutation of the ground set.
    pub fn sign(group: &Arc<PermGroup>) -> Self {
        let values = group
            .classes()
            .iter()
            .map(|c| BigRational::from_integer(BigInt::from(c.representative.sign())))
            .collect();
        ClassFunction { group: group.clone(), values }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn value_at(&self, g: &Permutation) -> Result<&BigRational> {
        let c = self.group.class_of(g).ok_or_else(|| domain!("{g} is not in the group"))?;
        Ok(&self.values[c])
    }

    pub fn at_identity(&self) -> &BigRational {
        &self.values[0]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    /// Integer values, if all values are integers.
    pub fn int_values(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(|v| v.is_integer().then(|| v.to_integer())).collect()
    }

    fn check_group(&self, other: &ClassFunction) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(domain!("class functions over different groups"))
        }
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_group(other)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check_group(other)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn scale(&self, k: &BigRational) -> ClassFunction {
        ClassFunction { group: self.group.clone(), values: self.values.iter().map(|v| v * k).collect() }
    }

    fn zip(&self, other: &ClassFunction, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> ClassFunction {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }

    /// (1/|G|) Σ_g conj(χ(g)) ψ(g); values are rational, so conj is a no-op.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<BigRational> {
        self.check_group(other)?;
        let total: BigRational = self
            .group
            .classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
            .map(|(c, (a, b))| a * b * BigInt::from(c.size))
            .sum();
        Ok(total / BigInt::from(self.group.order()))
    }

    /// Number of orbits from fixed-point counts, by Burnside's lemma.
    pub fn burnside_count(&self) -> Result<BigInt> {
        if let Some(v) = self.values.iter().find(|v| !v.is_integer() || v.is_negative()) {
            return Err(domain!("fixed-point counts must be nonnegative integers, got {v}"));
        }
        let avg = Self::trivial(&self.group).inner_product(self)?;
        if !avg.is_integer() {
            return Err(Error::Consistency(format!("orbit count {avg} is not an integer; the action is broken")));
        }
        Ok(avg.to_integer())
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}
impl Eq for ClassFunction {}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", vs.join(","))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a> $tr<&'a ClassFunction> for &'a ClassFunction {
            type Output = ClassFunction;
            /// Panics if the operands live on different groups.
            fn $m(self, rhs: &'a ClassFunction) -> ClassFunction {
                assert!(self.group.same_as(&rhs.group), "class functions over different groups");
                self.zip(rhs, |a, b| a $op b)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);

impl Neg for &ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        self.scale(&-BigRational::one())
    }
}

impl Mul<&ClassFunction> for i64 {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        rhs.scale(&BigRational::from_integer(BigInt::from(self)))
    }
}
