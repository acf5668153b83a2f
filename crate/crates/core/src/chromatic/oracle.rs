//! Brute-force enumeration of proper colorings through the per-family
//! coloring predicates; an independent ground truth for the composition path.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::compositions::IntComposition;
use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::structures::{CharacterSpec, HopfStructure};

use super::qsym::ClassQSym;

/// Default caps: at most 8 labels, at most as many colors as labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCap {
    pub max_ground: usize,
    /// `None`: k may not exceed the number of labels.
    pub max_colors: Option<usize>,
}

impl Default for OracleCap {
    fn default() -> Self {
        OracleCap { max_ground: 8, max_colors: None }
    }
}

/// All proper colorings into `[k]`, colors indexed by label index.
#[derive(Clone, Debug)]
pub struct ColoringOracle {
    k: usize,
    n: usize,
    colorings: Vec<Vec<u32>>,
}

pub fn coloring_oracle(h: &HopfStructure, phi: CharacterSpec, k: usize) -> Result<ColoringOracle> {
    coloring_oracle_capped(h, phi, k, OracleCap::default())
}

pub fn coloring_oracle_capped(h: &HopfStructure, phi: CharacterSpec, k: usize, cap: OracleCap) -> Result<ColoringOracle> {
    let n = h.universe().len();
    if k == 0 {
        return Err(crate::error::domain!("need at least one color"));
    }
    if n > cap.max_ground {
        return Err(Error::Resource(format!("{n} labels exceed the oracle cap of {}", cap.max_ground)));
    }
    let max_k = cap.max_colors.unwrap_or(n);
    if k > max_k {
        return Err(Error::Resource(format!("{k} colors exceed the oracle cap of {max_k}")));
    }
    let mut colorings = Vec::new();
    let mut f = vec![1u32; n];
    loop {
        if h.direct_coloring(phi, &f)? {
            colorings.push(f.clone());
        }
        let mut i = 0;
        while i < n {
            f[i] += 1;
            if f[i] as usize <= k {
                break;
            }
            f[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(ColoringOracle { k, n, colorings })
}

impl ColoringOracle {
    pub fn colors(&self) -> usize {
        self.k
    }

    pub fn colorings(&self) -> &[Vec<u32>] {
        &self.colorings
    }

    pub fn count(&self) -> usize {
        self.colorings.len()
    }

    /// Colorings fixed by `g`, i.e. constant on the cycles of `g`.
    pub fn count_fixed(&self, g: &Permutation) -> usize {
        self.colorings.iter().filter(|f| (0..f.len()).all(|i| f[g.apply(i)] == f[i])).count()
    }

    /// x^f for each coloring: how often each color is used.
    fn weight(&self, f: &[u32]) -> Vec<usize> {
        let mut w = vec![0; self.k];
        for &c in f {
            w[c as usize - 1] += 1;
        }
        w
    }

    /// Multiset of monomials, restricted to colorings fixed by `g` when given.
    pub fn by_weight(&self, g: Option<&Permutation>) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        for f in &self.colorings {
            if let Some(g) = g {
                if !(0..f.len()).all(|i| f[g.apply(i)] == f[i]) {
                    continue;
                }
            }
            *out.entry(self.weight(f)).or_insert(0) += 1;
        }
        out
    }

    /// Colorings grouped by the type of their level-set composition.
    pub fn by_type(&self) -> BTreeMap<IntComposition, usize> {
        let mut out = BTreeMap::new();
        for f in &self.colorings {
            let parts: Vec<usize> = self.weight(f).into_iter().filter(|&c| c > 0).collect();
            *out.entry(IntComposition::new(parts).unwrap()).or_insert(0) += 1;
        }
        out
    }

    /// Compare with Ψ restricted to k variables, at every group element:
    /// the number of g-fixed colorings with weight w must equal the
    /// coefficient of M_α at g, where α drops the zeros of w. Returns the
    /// mismatches, empty when everything agrees.
    pub fn compare_with(&self, psi: &ClassQSym) -> Vec<String> {
        let mut bad = Vec::new();
        if psi.degree() != self.n {
            bad.push(format!("degree {} against {} labels", psi.degree(), self.n));
            return bad;
        }
        let weights = weak_compositions(self.n, self.k);
        for (gi, g) in psi.group().elements().iter().enumerate() {
            let counts = self.by_weight(Some(g));
            let class = psi.group().class_of_element(gi);
            for w in &weights {
                let parts: Vec<usize> = w.iter().copied().filter(|&c| c > 0).collect();
                let alpha = IntComposition::new(parts).unwrap();
                let want = psi.coefficients().get(&alpha).map(|f| f.values()[class].to_integer()).unwrap_or_else(BigInt::zero);
                let got = BigInt::from(*counts.get(w).unwrap_or(&0));
                if got != want {
                    bad.push(format!("at {g}, weight {w:?}: {got} colorings, coefficient of M_{alpha} is {want}"));
                }
            }
        }
        bad
    }

    pub fn to_json(&self, fixed: &[(String, usize)]) -> Value {
        let by_type: serde_json::Map<String, Value> = self.by_type().into_iter().map(|(a, c)| (a.to_string(), json!(c))).collect();
        json!({
            "colors": self.k,
            "count": self.count(),
            "by_type": by_type,
            "fixed_by_class": fixed.iter().map(|(rep, c)| json!({"rep": rep, "count": c})).collect::<Vec<_>>(),
        })
    }
}

/// All length-k vectors of nonnegative integers summing to n.
fn weak_compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![n]];
    }
    (0..=n)
        .flat_map(|first| {
            weak_compositions(n - first, k - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weak_composition_count() {
        // C(n + k − 1, k − 1)
        assert_eq!(weak_compositions(4, 4).len(), 35);
        assert_eq!(weak_compositions(3, 1), vec![vec![3]]);
    }
}
