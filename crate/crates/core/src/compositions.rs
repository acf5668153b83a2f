//! Integer compositions, set compositions, flags of subsets, refinement, and
//! the action of permutations on all of them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::groups::Permutation;
use crate::labels::{bits, nonempty_submasks, Ground, Mask};

/// An ordered list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntComposition {
    parts: Vec<usize>,
}

impl IntComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(domain!("a composition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(domain!("composition parts must be positive: {parts:?}"));
        }
        Ok(IntComposition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, ℓ(α).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All 2^(d-1) compositions of `d`, in lexicographic order of parts.
    pub fn all(d: usize) -> Result<Vec<IntComposition>> {
        if d == 0 {
            return Err(domain!("degree must be positive"));
        }
        let mut out: Vec<_> = (0..1u64 << (d - 1))
            .map(|m| {
                let s: BTreeSet<usize> = (1..d).filter(|i| m >> (i - 1) & 1 == 1).collect();
                alpha_of_subset(&s, d).unwrap()
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for IntComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for IntComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::Parse(format!("integer composition {s:?}: {e}")))?;
        IntComposition::new(parts)
    }
}

/// `({s_1 < … < s_k}, d) ↦ (s_1, s_2 − s_1, …, d − s_k)`.
pub fn alpha_of_subset(s: &BTreeSet<usize>, d: usize) -> Result<IntComposition> {
    if d == 0 {
        return Err(domain!("degree must be positive"));
    }
    if let Some(&x) = s.iter().find(|&&x| x == 0 || x >= d) {
        return Err(domain!("{x} is outside 1..{}", d - 1));
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &x in s.iter().chain(std::iter::once(&d)) {
        parts.push(x - prev);
        prev = x;
    }
    IntComposition::new(parts)
}

/// Partial sums of all parts but the last.
pub fn subset_of_alpha(a: &IntComposition) -> BTreeSet<usize> {
    let mut acc = 0;
    a.parts[..a.len() - 1]
        .iter()
        .map(|p| {
            acc += p;
            acc
        })
        .collect()
}

/// True iff `beta` splits the parts of `alpha` into consecutive runs, i.e.
/// `beta` is at least as fine as `alpha`.
pub fn refines(alpha: &IntComposition, beta: &IntComposition) -> Result<bool> {
    if alpha.degree() != beta.degree() {
        return Err(domain!(
            "degree mismatch: {alpha} has degree {}, {beta} has degree {}",
            alpha.degree(),
            beta.degree()
        ));
    }
    Ok(subset_of_alpha(alpha).is_subset(&subset_of_alpha(beta)))
}

/// An ordered partition of a label set into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetComposition {
    ground: Ground,
    blocks: Vec<Mask>,
}

impl SetComposition {
    /// Blocks must be nonempty, disjoint and cover `ground`.
    pub fn new(ground: Ground, blocks: Vec<Mask>) -> Result<Self> {
        if ground.is_empty() {
            return Err(domain!("set compositions of the empty set are not supported"));
        }
        let mut seen: Mask = 0;
        for &b in &blocks {
            if b == 0 {
                return Err(domain!("empty block"));
            }
            if b & !ground.full_mask() != 0 {
                return Err(domain!("block outside the ground set"));
            }
            if seen & b != 0 {
                return Err(domain!("blocks overlap"));
            }
            seen |= b;
        }
        if seen != ground.full_mask() {
            return Err(domain!("blocks do not cover the ground set"));
        }
        Ok(SetComposition { ground, blocks })
    }

    pub(crate) fn new_unchecked(ground: Ground, blocks: Vec<Mask>) -> Self {
        SetComposition { ground, blocks }
    }

    /// Parse `"a,c|b,d"`; the ground set is the union of the blocks.
    pub fn parse(s: &str) -> Result<Self> {
        let blocks: Vec<Vec<&str>> = s
            .split('|')
            .map(|b| b.split(',').map(str::trim).collect())
            .collect();
        let ground = Ground::new(blocks.iter().flatten().copied())?;
        Self::parse_in(&ground, s)
    }

    /// Parse against a known ground set.
    pub fn parse_in(ground: &Ground, s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(|b| {
                let ls: Vec<&str> = b.split(',').map(str::trim).collect();
                ground.mask_of(&ls)
            })
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Parse(format!("set composition {s:?}: {e}")))?;
        SetComposition::new(ground.clone(), blocks)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// (|C_1|, …, |C_k|)
    pub fn type_of(&self) -> IntComposition {
        type_of_blocks(&self.blocks)
    }

    /// Blockwise image under `g`, block order preserved.
    pub fn act(&self, g: &Permutation) -> Result<SetComposition> {
        if g.ground() != &self.ground {
            return Err(domain!("permutation and composition live on different label sets"));
        }
        Ok(SetComposition {
            ground: self.ground.clone(),
            blocks: self.blocks.iter().map(|&b| g.apply_mask(b)).collect(),
        })
    }

    /// F_i = C_1 ∪ ⋯ ∪ C_i for i < ℓ(C).
    pub fn flag_of(&self) -> Flag {
        Flag { ground: self.ground.clone(), chain: chain_of_blocks(&self.blocks) }
    }

    /// Position of the block containing each label index.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.ground.len()];
        for (k, &b) in self.blocks.iter().enumerate() {
            for i in bits(b) {
                ids[i] = k;
            }
        }
        ids
    }

    /// The level sets of a coloring, in increasing color order.
    pub fn of_coloring(ground: &Ground, colors: &[u32]) -> Result<Self> {
        if colors.len() != ground.len() {
            return Err(domain!("coloring must assign a color to every label"));
        }
        SetComposition::new(ground.clone(), level_sets(colors))
    }

    /// Sort key of the canonical enumeration order.
    pub(crate) fn order_key(&self) -> (usize, Vec<Vec<usize>>) {
        (self.blocks.len(), self.blocks.iter().map(|&b| bits(b).collect()).collect())
    }
}

impl fmt::Display for SetComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.blocks.iter().map(|&b| self.ground.fmt_set(b)).collect();
        f.write_str(&s.join("|"))
    }
}

pub(crate) fn type_of_blocks(blocks: &[Mask]) -> IntComposition {
    IntComposition { parts: blocks.iter().map(|b| b.count_ones() as usize).collect() }
}

pub(crate) fn chain_of_blocks(blocks: &[Mask]) -> Vec<Mask> {
    let mut acc = 0;
    blocks[..blocks.len().saturating_sub(1)]
        .iter()
        .map(|b| {
            acc |= b;
            acc
        })
        .collect()
}

pub(crate) fn level_sets(colors: &[u32]) -> Vec<Mask> {
    let used: BTreeSet<u32> = colors.iter().copied().collect();
    used.into_iter()
        .map(|c| {
            colors
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == c)
                .fold(0, |m, (i, _)| m | 1 << i)
        })
        .collect()
}

/// Every set composition of `ground` exactly once, ordered by number of
/// blocks and then lexicographically on the blocks' sorted label lists.
pub fn enumerate_set_compositions(ground: &Ground) -> Result<Vec<SetComposition>> {
    if ground.is_empty() {
        return Err(domain!("cannot enumerate set compositions of the empty set"));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    fn rec(rest: Mask, prefix: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for b in nonempty_submasks(rest) {
            prefix.push(b);
            rec(rest & !b, prefix, out);
            prefix.pop();
        }
    }
    rec(ground.full_mask(), &mut prefix, &mut out);
    let mut comps: Vec<SetComposition> = out
        .into_iter()
        .map(|blocks| SetComposition::new_unchecked(ground.clone(), blocks))
        .collect();
    comps.sort_by_cached_key(|c| c.order_key());
    Ok(comps)
}

/// A strictly increasing chain of proper nonempty subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    ground: Ground,
    chain: Vec<Mask>,
}

impl Flag {
    pub fn new(ground: Ground, chain: Vec<Mask>) -> Result<Self> {
        let full = ground.full_mask();
        for &f in &chain {
            if f == 0 || f == full || f & !full != 0 {
                return Err(domain!("flag members must be proper nonempty subsets"));
            }
        }
        for w in chain.windows(2) {
            if w[0] & !w[1] != 0 || w[0] == w[1] {
                return Err(domain!("flag members must be strictly increasing"));
            }
        }
        Ok(Flag { ground, chain })
    }

    pub(crate) fn new_unchecked(ground: Ground, chain: Vec<Mask>) -> Self {
        Flag { ground, chain }
    }

    /// Parse `"{a,c}<{a,b,c}"`; the empty string is the empty flag.
    pub fn parse_in(ground: &Ground, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Flag::new(ground.clone(), vec![]);
        }
        let chain = s
            .split('<')
            .map(|part| {
                let inner = part
                    .trim()
                    .strip_prefix('{')
                    .and_then(|p| p.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(format!("flag member {part:?} is not braced")))?;
                let ls: Vec<&str> = inner.split(',').map(str::trim).collect();
                ground.mask_of(&ls)
            })
            .collect::<Result<Vec<_>>>()?;
        Flag::new(ground.clone(), chain)
    }

    pub fn ground(&self) -> &Ground {
        &self.ground
    }

    pub fn chain(&self) -> &[Mask] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// κ: the set of member cardinalities.
    pub fn kappa(&self) -> BTreeSet<usize> {
        self.chain.iter().map(|f| f.count_ones() as usize).collect()
    }

    pub fn composition_of(&self) -> SetComposition {
        SetComposition::new_unchecked(self.ground.clone(), blocks_of_chain(&self.chain, self.ground.full_mask()))
    }

    pub fn act(&self, g: &Permutation) -> Result<Flag> {
        if g.ground() != &self.ground {
            return Err(domain!("permutation and flag live on different label sets"));
        }
        Ok(Flag {
            ground: self.ground.clone(),
            chain: self.chain.iter().map(|&f| g.apply_mask(f)).collect(),
        })
    }

    /// Member strings, `["{a,c}", "{a,b,c}"]`.
    pub fn members(&self) -> Vec<String> {
        self.chain.iter().map(|&f| format!("{{{}}}", self.ground.fmt_set(f))).collect()
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.members().join("<"))
    }
}

pub(crate) fn blocks_of_chain(chain: &[Mask], full: Mask) -> Vec<Mask> {
    let mut prev = 0;
    chain
        .iter()
        .chain(std::iter::once(&full))
        .map(|&f| {
            let b = f & !prev;
            prev = f;
            b
        })
        .collect()
}
