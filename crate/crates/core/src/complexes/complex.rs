//! Balanced relative simplicial complexes whose faces are flags of proper
//! nonempty subsets, colored by cardinality.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use serde_json::{json, Value};

use crate::chromatic::{check_group, check_instance, fold_proper, psi_with, ClassQSym, Options};
use crate::compositions::{alpha_of_subset, chain_of_blocks, Flag, IntComposition};
use crate::error::{domain, Error, Result};
use crate::groups::{PermGroup, Permutation};
use crate::labels::{nonempty_submasks, Ground, Mask};
use crate::structures::{balanced_convexity, CharacterSpec, ConvexityCheck, HopfStructure};

/// Largest ground set on which the balanced-convexity scan runs before a
/// coloring complex is built.
pub const CONVEXITY_SCAN_MAX: usize = 8;

/// A set of flags closed under the sandwich property, pure of dimension
/// `|ground| − 2`, colored by κ(F) = |F|.
#[derive(Clone, Debug)]
pub struct BalancedRelativeComplex {
    ground: Ground,
    faces: Vec<Vec<Mask>>,
    index: HashMap<Vec<Mask>, usize>,
}

impl PartialEq for BalancedRelativeComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.faces == other.faces
    }
}
impl Eq for BalancedRelativeComplex {}

fn face_order(a: &Vec<Mask>, b: &Vec<Mask>) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

impl BalancedRelativeComplex {
    /// Validated construction; duplicates are ignored.
    pub fn from_faces(ground: &Ground, faces: Vec<Flag>) -> Result<Self> {
        let c = Self::from_faces_unchecked(ground, faces)?;
        c.validate()?;
        Ok(c)
    }

    /// Skips the sandwich/purity checks (flags are still checked
    /// individually). Useful for building counterexamples.
    pub fn from_faces_unchecked(ground: &Ground, faces: Vec<Flag>) -> Result<Self> {
        if let Some(f) = faces.iter().find(|f| f.ground() != ground) {
            return Err(domain!("face {f} lives on a different label set"));
        }
        Ok(Self::from_chains(ground, faces.into_iter().map(|f| f.chain().to_vec()).collect()))
    }

    /// Faces written as `"{a}<{a,b}"`; the empty string is the empty flag.
    pub fn parse_faces(ground: &Ground, faces: &[&str]) -> Result<Self> {
        let flags = faces.iter().map(|s| Flag::parse_in(ground, s)).collect::<Result<Vec<_>>>()?;
        Self::from_faces(ground, flags)
    }

    pub(crate) fn from_chains(ground: &Ground, mut faces: Vec<Vec<Mask>>) -> Self {
        faces.sort_by(face_order);
        faces.dedup();
        let index = faces.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        BalancedRelativeComplex { ground: ground.clone(), faces, index }
    }

    /// Every flag of proper nonempty subsets.
    pub fn coxeter(ground: &Ground) -> Self {
        let full = ground.full_mask();
        let mut faces = vec![];
        let mut stack = vec![vec![]];
        while let Some(chain) = stack.pop() {
            let last: Mask = chain.last().copied().unwrap_or(0);
            for add in nonempty_submasks(full & !last) {
                let next = last | add;
                if next != full {
                    let mut c: Vec<Mask> = chain.clone();
                    c.push(next);
                    stack.push(c);
                }
            }
            faces.push(chain);
        }
        Self::from_chains(ground, faces)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// `|ground| − 2` for a nonempty complex.
    pub fn dimension(&self) -> Option<isize> {
        (!self.faces.is_empty()).then(|| self.ground.len() as isize - 2)
    }

    pub fn faces(&self) -> impl Iterator<Item = Flag> + '_ {
        self.faces.iter().map(|c| Flag::new_unchecked(self.ground.clone(), c.clone()))
    }

    pub(crate) fn chains(&self) -> &[Vec<Mask>] {
        &self.faces
    }

    pub fn contains(&self, f: &Flag) -> bool {
        f.ground() == &self.ground && self.index.contains_key(f.chain())
    }

    /// Checks balance, purity and the sandwich property; the error names a
    /// violating face.
    pub fn validate(&self) -> Result<()> {
        let full = self.ground.full_mask();
        let top = self.ground.len().saturating_sub(1);
        for c in &self.faces {
            let sizes: BTreeSet<u32> = c.iter().map(|m| m.count_ones()).collect();
            let chain_ok = c.windows(2).all(|w| w[0] & !w[1] == 0 && w[0] != w[1]);
            if sizes.len() != c.len() || !chain_ok || c.iter().any(|&m| m == 0 || m == full) {
                return Err(self.violation("balance", c));
            }
        }
        // every face must sit inside a facet: extend greedily through faces
        let facets: Vec<&Vec<Mask>> = self.faces.iter().filter(|c| c.len() == top).collect();
        let mut covered: HashSet<&[Mask]> = HashSet::new();
        let mut membership = vec![];
        for t in &facets {
            // subsets of the facet, by position bitmask
            let k = t.len();
            membership.clear();
            membership.extend((0u64..1 << k).map(|sel| {
                let sub: Vec<Mask> = (0..k).filter(|j| sel >> j & 1 == 1).map(|j| t[j]).collect();
                self.index.get(&sub).copied()
            }));
            for sel in 0..(1usize << k) {
                let Some(i) = membership[sel] else { continue };
                covered.insert(&self.faces[i]);
                for j in 0..k {
                    if membership[sel | 1 << j].is_none() {
                        let missing: Vec<Mask> = (0..k).filter(|b| (sel | 1 << j) >> b & 1 == 1).map(|b| t[b]).collect();
                        return Err(self.violation("sandwich", &missing));
                    }
                }
            }
        }
        if let Some(c) = self.faces.iter().find(|c| !covered.contains(c.as_slice())) {
            return Err(self.violation("purity", c));
        }
        Ok(())
    }

    fn violation(&self, what: &str, c: &[Mask]) -> Error {
        let f = Flag::new_unchecked(self.ground.clone(), c.to_vec());
        Error::Consistency(format!("{what} fails at face \"{f}\""))
    }

    /// f_S: number of faces with κ-set S.
    pub fn flag_f_vector(&self) -> BTreeMap<BTreeSet<usize>, u64> {
        let mut out = BTreeMap::new();
        for c in &self.faces {
            *out.entry(kappa(c)).or_default() += 1;
        }
        out
    }

    /// The flag f-vector keyed by the compositions α(S) of `|ground|`.
    pub fn flag_f_vector_by_type(&self) -> Result<BTreeMap<IntComposition, u64>> {
        self.flag_f_vector().into_iter().map(|(s, v)| Ok((alpha_of_subset(&s, self.ground.len())?, v))).collect()
    }

    /// Whether `g` permutes the faces.
    pub fn is_automorphism(&self, g: &Permutation) -> Result<bool> {
        if g.ground() != &self.ground {
            return Err(domain!("permutation and complex live on different label sets"));
        }
        Ok(self.faces.iter().all(|c| self.index.contains_key(&act(g, c))))
    }

    /// `{"ground": [...], "faces": [["{a,c}"], ["{c}", "{a,c}"], ...]}`
    pub fn to_json(&self) -> Value {
        let faces: Vec<Vec<String>> = self.faces().map(|f| f.members()).collect();
        json!({"ground": self.ground.labels(), "faces": faces})
    }

    /// The flag f-vector as `{"1,2": 2, ...}` keyed by κ-set (the empty key is
    /// the empty flag).
    pub fn f_vector_json(&self) -> Value {
        let m: serde_json::Map<String, Value> = self
            .flag_f_vector()
            .into_iter()
            .map(|(s, v)| (s.iter().map(usize::to_string).collect::<Vec<_>>().join(","), json!(v)))
            .collect();
        Value::Object(m)
    }
}

pub(crate) fn kappa(c: &[Mask]) -> BTreeSet<usize> {
    c.iter().map(|m| m.count_ones() as usize).collect()
}

pub(crate) fn act(g: &Permutation, c: &[Mask]) -> Vec<Mask> {
    c.iter().map(|&m| g.apply_mask(m)).collect()
}

pub(crate) fn check_complex_group(x: &BalancedRelativeComplex, group: &PermGroup) -> Result<()> {
    if group.ground() != x.ground() {
        return Err(domain!("group and complex live on different label sets"));
    }
    for g in group.generators() {
        if !x.is_automorphism(g)? {
            return Err(domain!("generator {g} is not an automorphism of the complex"));
        }
    }
    Ok(())
}

/// Σ_φ(h): the flags of the φ-proper compositions of `h`.
pub fn coloring_complex(h: &HopfStructure, phi: CharacterSpec) -> Result<BalancedRelativeComplex> {
    coloring_complex_with(h, phi, Options::default())
}

pub fn coloring_complex_with(h: &HopfStructure, phi: CharacterSpec, opts: Options) -> Result<BalancedRelativeComplex> {
    check_instance(h, phi)?;
    if h.size() <= CONVEXITY_SCAN_MAX {
        if let ConvexityCheck::Violated(w) = balanced_convexity(h, phi)? {
            return Err(domain!(
                "{phi} is not balanced convex here: {}",
                serde_json::to_string(&w).expect("witness serializes")
            ));
        }
    }
    let chains = fold_proper(
        h,
        phi,
        opts,
        Vec::new,
        |acc: &mut Vec<Vec<Mask>>, blocks: &[Mask]| acc.push(chain_of_blocks(blocks)),
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    let x = BalancedRelativeComplex::from_chains(h.universe(), chains);
    x.validate()?;
    Ok(x)
}

/// Hilb(Φ, G): the coefficient of M_α(S) at g counts g-fixed faces with κ-set S.
pub fn hilb(x: &BalancedRelativeComplex, group: &Arc<PermGroup>) -> Result<ClassQSym> {
    check_complex_group(x, group)?;
    let n = x.ground().len();
    let elements = group.elements();
    let mut counts: HashMap<IntComposition, Vec<u64>> = HashMap::new();
    let mut alphas: HashMap<BTreeSet<usize>, IntComposition> = HashMap::new();
    for c in &x.faces {
        let s = kappa(c);
        let a = match alphas.get(&s) {
            Some(a) => a.clone(),
            None => {
                let a = alpha_of_subset(&s, n)?;
                alphas.insert(s, a.clone());
                a
            }
        };
        let row = counts.entry(a).or_insert_with(|| vec![0; elements.len()]);
        for (k, g) in elements.iter().enumerate() {
            if c.iter().all(|&m| g.apply_mask(m) == m) {
                row[k] += 1;
            }
        }
    }
    ClassQSym::from_element_counts(n, group, counts)
}

/// Outcome of comparing Ψ(h, G) with Hilb(Σ_φ(h), G).
#[derive(Clone, Debug)]
pub struct PsiHilbReport {
    pub psi: ClassQSym,
    pub hilb: ClassQSym,
    /// Generators of G that fail to permute the faces of Σ_φ(h).
    pub non_automorphisms: Vec<String>,
    /// One line per differing coefficient.
    pub mismatches: Vec<String>,
}

impl PsiHilbReport {
    pub fn passed(&self) -> bool {
        self.non_automorphisms.is_empty() && self.mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "non_automorphisms": self.non_automorphisms,
            "mismatches": self.mismatches,
        })
    }
}

pub fn verify_psi_equals_hilb(h: &HopfStructure, phi: CharacterSpec, group: &Arc<PermGroup>) -> Result<PsiHilbReport> {
    verify_psi_equals_hilb_with(h, phi, group, Options::default())
}

pub fn verify_psi_equals_hilb_with(
    h: &HopfStructure,
    phi: CharacterSpec,
    group: &Arc<PermGroup>,
    opts: Options,
) -> Result<PsiHilbReport> {
    check_group(h, group)?;
    let x = coloring_complex_with(h, phi, opts)?;
    let psi = psi_with(h, phi, group, opts)?;
    let mut non_automorphisms = vec![];
    for g in group.generators() {
        if !x.is_automorphism(g)? {
            non_automorphisms.push(g.to_string());
        }
    }
    let hilb = if non_automorphisms.is_empty() { hilb(&x, group)? } else { hilb(&x, &PermGroup::trivial(x.ground()))? };
    let mut mismatches = vec![];
    if non_automorphisms.is_empty() {
        let keys: BTreeSet<&IntComposition> = psi.coefficients().keys().chain(hilb.coefficients().keys()).collect();
        for a in keys {
            let (p, q) = (psi.coefficient(a), hilb.coefficient(a));
            if p != q {
                mismatches.push(format!("M_{{{a}}}: psi {p} vs hilb {q}"));
            }
        }
    }
    Ok(PsiHilbReport { psi, hilb, non_automorphisms, mismatches })
}
