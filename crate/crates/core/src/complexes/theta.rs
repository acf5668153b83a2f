//! θ_{α,β}: sends a face of type α to the sum of the type-β faces above it.
//! An injective, G-equivariant θ witnesses f_α ≤_G f_β for any finite G.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::chromatic::ClassQSym;
use crate::compositions::{refines, subset_of_alpha, IntComposition};
use crate::error::{domain, Result};
use crate::groups::{CharacterTable, PermGroup};
use crate::labels::Mask;

use super::complex::{act, check_complex_group, kappa, BalancedRelativeComplex};
use super::rank::{exact_rank, SparseRow};

/// Rank certificate for θ_{α,β} on one complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmbeddingCertificate {
    pub source: String,
    pub target: String,
    /// |F_α|
    pub source_faces: usize,
    /// |F_β|
    pub target_faces: usize,
    pub rank: usize,
    /// Whether θ(gσ) = g·θ(σ) was checked (always true once built).
    pub equivariance_checked: bool,
    pub equivariant: bool,
    /// Row σ lists the columns τ ⊇ σ.
    #[serde(skip)]
    pub matrix: Vec<Vec<usize>>,
}

impl EmbeddingCertificate {
    pub fn valid(&self) -> bool {
        self.rank == self.source_faces && self.equivariant
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("certificate serializes");
        v["valid"] = json!(self.valid());
        v
    }
}

fn faces_of_type<'a>(x: &'a BalancedRelativeComplex, s: &BTreeSet<usize>) -> Vec<&'a Vec<Mask>> {
    x.chains().iter().filter(|c| kappa(c) == *s).collect()
}

/// Builds the incidence matrix of θ_{α,β}, its exact rank and the
/// equivariance check over the generators of `group`.
pub fn theta_certificate(
    x: &BalancedRelativeComplex,
    group: &Arc<PermGroup>,
    alpha: &IntComposition,
    beta: &IntComposition,
) -> Result<EmbeddingCertificate> {
    let n = x.ground().len();
    if alpha.degree() != n || beta.degree() != n {
        return Err(domain!("types must be compositions of {n}"));
    }
    if !refines(alpha, beta)? {
        return Err(domain!("{beta} does not refine {alpha}"));
    }
    check_complex_group(x, group)?;
    let (sa, sb) = (subset_of_alpha(alpha), subset_of_alpha(beta));
    let fa = faces_of_type(x, &sa);
    let fb = faces_of_type(x, &sb);
    let row_of: std::collections::HashMap<&[Mask], usize> =
        fa.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
    let col_of: std::collections::HashMap<&[Mask], usize> =
        fb.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();

    // τ contains exactly one flag of κ-set S_α: its members of those sizes
    let mut matrix = vec![vec![]; fa.len()];
    for (j, t) in fb.iter().enumerate() {
        let proj: Vec<Mask> = t.iter().copied().filter(|m| sa.contains(&(m.count_ones() as usize))).collect();
        if let Some(&i) = row_of.get(proj.as_slice()) {
            matrix[i].push(j);
        }
    }

    let rows: Vec<SparseRow> = matrix.iter().map(|r| r.iter().map(|&j| (j, 1)).collect()).collect();
    let rank = exact_rank(&rows);

    let mut equivariant = true;
    'gens: for g in group.generators() {
        for (i, s) in fa.iter().enumerate() {
            let Some(&gi) = row_of.get(act(g, s).as_slice()) else {
                equivariant = false;
                break 'gens;
            };
            let image: HashSet<usize> = matrix[i]
                .iter()
                .map(|&j| col_of.get(act(g, fb[j]).as_slice()).copied().unwrap_or(usize::MAX))
                .collect();
            let target: HashSet<usize> = matrix[gi].iter().copied().collect();
            if image != target {
                equivariant = false;
                break 'gens;
            }
        }
    }

    Ok(EmbeddingCertificate {
        source: alpha.to_string(),
        target: beta.to_string(),
        source_faces: fa.len(),
        target_faces: fb.len(),
        rank,
        equivariance_checked: true,
        equivariant,
        matrix,
    })
}

/// One ≤_G comparison through the character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterComparison {
    pub source: String,
    pub target: String,
    pub holds: bool,
}

/// Pass/fail matrix for M-increasing.
#[derive(Clone, Debug, Serialize)]
pub struct MIncreasingReport {
    /// θ certificates on every covering pair α ⋖ β.
    pub certificates: Vec<EmbeddingCertificate>,
    /// leq_char on every comparable pair; empty for nonabelian groups.
    pub character_checks: Vec<CharacterComparison>,
    pub abelian: bool,
}

impl MIncreasingReport {
    pub fn certificates_valid(&self) -> bool {
        self.certificates.iter().all(EmbeddingCertificate::valid)
    }

    pub fn characters_hold(&self) -> bool {
        self.character_checks.iter().all(|c| c.holds)
    }

    pub fn passed(&self) -> bool {
        self.certificates_valid() && self.characters_hold()
    }

    /// On covering pairs the certificate and the character table must agree.
    pub fn methods_agree(&self) -> bool {
        self.certificates.iter().all(|cert| {
            self.character_checks
                .iter()
                .find(|c| c.source == cert.source && c.target == cert.target)
                .is_none_or(|c| c.holds == cert.valid())
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "abelian": self.abelian,
            "certificates": self.certificates.iter().map(EmbeddingCertificate::to_json).collect::<Vec<_>>(),
            "character_failures": self.character_checks.iter().filter(|c| !c.holds).collect::<Vec<_>>(),
            "character_checks": self.character_checks.len(),
        })
    }
}

/// Covering pairs α ⋖ β of compositions of `n`: β splits one part of α.
pub fn covering_pairs(n: usize) -> Result<Vec<(IntComposition, IntComposition)>> {
    let all = IntComposition::all(n)?;
    let mut out = vec![];
    for a in &all {
        let sa = subset_of_alpha(a);
        for b in &all {
            let sb = subset_of_alpha(b);
            if sb.len() == sa.len() + 1 && sa.is_subset(&sb) {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// Comparable pairs α ≤ β (including α = β).
pub fn comparable_pairs(n: usize) -> Result<Vec<(IntComposition, IntComposition)>> {
    let all = IntComposition::all(n)?;
    let mut out = vec![];
    for a in &all {
        for b in &all {
            if refines(a, b)? {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// θ certificates on every covering pair of Φ, and for abelian G also
/// `leq_char(X_α, X_β)` on every comparable pair of the class function `X`.
pub fn verify_m_increasing(x: &ClassQSym, complex: &BalancedRelativeComplex, group: &Arc<PermGroup>) -> Result<MIncreasingReport> {
    let n = complex.ground().len();
    if x.degree() != n {
        return Err(domain!("class function has degree {} but the complex has {n} labels", x.degree()));
    }
    if !x.group().same_as(group) {
        return Err(domain!("class function lives on a different group"));
    }
    check_complex_group(complex, group)?;
    let certificates = covering_pairs(n)?
        .par_iter()
        .map(|(a, b)| theta_certificate(complex, group, a, b))
        .collect::<Result<Vec<_>>>()?;
    let abelian = group.is_abelian();
    let mut character_checks = vec![];
    if abelian {
        let table = CharacterTable::new(group)?;
        for (a, b) in comparable_pairs(n)? {
            let holds = table.leq_char(&x.coefficient(&a), &x.coefficient(&b))?;
            character_checks.push(CharacterComparison { source: a.to_string(), target: b.to_string(), holds });
        }
    }
    Ok(MIncreasingReport { certificates, character_checks, abelian })
}
