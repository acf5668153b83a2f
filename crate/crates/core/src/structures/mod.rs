//! The eight structure families, their restriction/contraction, characters,
//! and composition-properness predicates.

mod character;
mod convexity;
mod direct;

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use crate::compositions::SetComposition;
use crate::error::{domain, Error, Result};
use crate::groups::Permutation;
use crate::labels::{bits, nonempty_submasks, Ground, Mask};

pub use character::CharacterSpec;
pub use convexity::{balanced_convexity, ConvexityCheck, ConvexityViolation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureKind {
    Graph,
    Poset,
    Matroid,
    MixedGraph,
    DoublePoset,
    Hypergraph,
    SimplicialComplex,
    GenPermutohedron,
}

impl StructureKind {
    pub const ALL: [StructureKind; 8] = [
        StructureKind::Graph,
        StructureKind::Poset,
        StructureKind::Matroid,
        StructureKind::MixedGraph,
        StructureKind::DoublePoset,
        StructureKind::Hypergraph,
        StructureKind::SimplicialComplex,
        StructureKind::GenPermutohedron,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            StructureKind::Graph => "graph",
            StructureKind::Poset => "poset",
            StructureKind::Matroid => "matroid",
            StructureKind::MixedGraph => "mixed_graph",
            StructureKind::DoublePoset => "double_poset",
            StructureKind::Hypergraph => "hypergraph",
            StructureKind::SimplicialComplex => "simplicial_complex",
            StructureKind::GenPermutohedron => "gen_permutohedron",
        }
    }

    /// Kinds whose properness is evaluated through restriction/contraction.
    pub fn has_coproduct(&self) -> bool {
        !matches!(self, StructureKind::Hypergraph | StructureKind::GenPermutohedron)
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Kind-specific payload. Adjacency-style tables are indexed by label index
/// over the whole universe and are read through the support mask, so
/// restriction and contraction of those kinds only move the mask.
#[derive(Clone, Debug)]
pub(crate) enum Body {
    Graph { adj: Arc<[Mask]> },
    /// `below[i]`: elements strictly below `i`, transitively closed.
    Poset { below: Arc<[Mask]> },
    /// Bases, all inside the support.
    Matroid { bases: Arc<[Mask]> },
    /// `succ[u]` holds every `v` with a directed edge u → v, which asks for
    /// the color of `u` to be at most that of `v`.
    MixedGraph { undirected: Arc<[Mask]>, succ: Arc<[Mask]> },
    DoublePoset { below1: Arc<[Mask]>, below2: Arc<[Mask]> },
    Hypergraph { edges: Arc<[Mask]> },
    /// Maximal faces; every vertex is implicitly a face.
    SimplicialComplex { facets: Arc<[Mask]> },
    /// Deduplicated points, coordinates in label-index order.
    GenPermutohedron { points: Arc<[Vec<BigRational>]> },
}

/// A structure of one of the eight families on a label set.
#[derive(Clone, Debug)]
pub struct HopfStructure {
    universe: Ground,
    support: Mask,
    body: Body,
}

fn pair_masks<S: AsRef<str>>(g: &Ground, pairs: &[[S; 2]], what: &str) -> Result<Vec<(usize, usize)>> {
    pairs
        .iter()
        .map(|[a, b]| {
            let (i, j) = (g.index(a.as_ref())?, g.index(b.as_ref())?);
            if i == j {
                return Err(domain!("{what} {:?}–{:?} is a loop", a.as_ref(), b.as_ref()));
            }
            Ok((i, j))
        })
        .collect()
}

fn set_masks<S: AsRef<str>>(g: &Ground, sets: &[Vec<S>]) -> Result<Vec<Mask>> {
    sets.iter().map(|s| g.mask_of(s)).collect()
}

/// Strict order from generating pairs (lower, upper); errors on a cycle.
fn order_closure(n: usize, pairs: &[(usize, usize)], g: &Ground, what: &str) -> Result<Vec<Mask>> {
    let mut below = vec![0 as Mask; n];
    for &(lo, hi) in pairs {
        below[hi] |= 1 << lo;
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            let extra = bits(below[i]).fold(0, |m, j| m | below[j]);
            if extra & !below[i] != 0 {
                below[i] |= extra;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if let Some(i) = (0..n).find(|&i| below[i] >> i & 1 == 1) {
        return Err(domain!("{what} has a cycle through {:?}", g.label(i)));
    }
    Ok(below)
}

fn sorted_dedup(mut v: Vec<Mask>) -> Vec<Mask> {
    v.sort_unstable();
    v.dedup();
    v
}

impl HopfStructure {
    fn new(universe: Ground, body: Body) -> Self {
        let support = universe.full_mask();
        HopfStructure { universe, support, body }
    }

    pub fn graph<S: AsRef<str>>(vertices: &[S], edges: &[[S; 2]]) -> Result<Self> {
        let g = Ground::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let mut adj = vec![0 as Mask; g.len()];
        for (i, j) in pair_masks(&g, edges, "edge")? {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        Ok(Self::new(g, Body::Graph { adj: adj.into() }))
    }

    /// `covers` lists pairs `[lower, upper]`; the order is their transitive closure.
    pub fn poset<S: AsRef<str>>(elements: &[S], covers: &[[S; 2]]) -> Result<Self> {
        let g = Ground::new(elements.iter().map(|s| s.as_ref().to_string()))?;
        let below = order_closure(g.len(), &pair_masks(&g, covers, "relation")?, &g, "order")?;
        Ok(Self::new(g, Body::Poset { below: below.into() }))
    }

    pub fn matroid<S: AsRef<str>>(ground: &[S], bases: &[Vec<S>]) -> Result<Self> {
        let g = Ground::new(ground.iter().map(|s| s.as_ref().to_string()))?;
        let bases = sorted_dedup(set_masks(&g, bases)?);
        if bases.is_empty() {
            return Err(domain!("a matroid needs at least one basis"));
        }
        let r = bases[0].count_ones();
        if bases.iter().any(|b| b.count_ones() != r) {
            return Err(domain!("bases have different sizes"));
        }
        if g.len() <= 10 {
            check_basis_exchange(&g, &bases)?;
        }
        Ok(Self::new(g, Body::Matroid { bases: bases.into() }))
    }

    /// Directed pairs `[u, v]` ask for color(u) ≤ color(v).
    pub fn mixed_graph<S: AsRef<str>>(vertices: &[S], undirected: &[[S; 2]], directed: &[[S; 2]]) -> Result<Self> {
        let g = Ground::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let n = g.len();
        let mut und = vec![0 as Mask; n];
        for (i, j) in pair_masks(&g, undirected, "undirected edge")? {
            und[i] |= 1 << j;
            und[j] |= 1 << i;
        }
        let dir = pair_masks(&g, directed, "directed edge")?;
        let mut succ = vec![0 as Mask; n];
        for &(u, v) in &dir {
            succ[u] |= 1 << v;
        }
        // acyclicity of the directed part; closure of (u below v)
        order_closure(n, &dir, &g, "directed part")?;
        Ok(Self::new(g, Body::MixedGraph { undirected: und.into(), succ: succ.into() }))
    }

    pub fn double_poset<S: AsRef<str>>(elements: &[S], order1: &[[S; 2]], order2: &[[S; 2]]) -> Result<Self> {
        let g = Ground::new(elements.iter().map(|s| s.as_ref().to_string()))?;
        let below1 = order_closure(g.len(), &pair_masks(&g, order1, "first-order relation")?, &g, "first order")?;
        let below2 = order_closure(g.len(), &pair_masks(&g, order2, "second-order relation")?, &g, "second order")?;
        Ok(Self::new(g, Body::DoublePoset { below1: below1.into(), below2: below2.into() }))
    }

    /// Edges form a multiset of nonempty subsets.
    pub fn hypergraph<S: AsRef<str>>(vertices: &[S], edges: &[Vec<S>]) -> Result<Self> {
        let g = Ground::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let mut e = set_masks(&g, edges)?;
        if e.contains(&0) {
            return Err(domain!("hypergraph edges must be nonempty"));
        }
        e.sort_unstable();
        Ok(Self::new(g, Body::Hypergraph { edges: e.into() }))
    }

    /// The complex generated by `faces` (closure under subsets is implicit).
    pub fn simplicial_complex<S: AsRef<str>>(vertices: &[S], faces: &[Vec<S>]) -> Result<Self> {
        let g = Ground::new(vertices.iter().map(|s| s.as_ref().to_string()))?;
        let faces = set_masks(&g, faces)?;
        Ok(Self::new(g, Body::SimplicialComplex { facets: maximal(faces).into() }))
    }

    /// `points[k][j]` is the coordinate of point `k` at `ground[j]`, in the
    /// order the labels are given here.
    pub fn gen_permutohedron<S: AsRef<str>>(ground: &[S], points: Vec<Vec<BigRational>>) -> Result<Self> {
        let g = Ground::new(ground.iter().map(|s| s.as_ref().to_string()))?;
        if points.is_empty() {
            return Err(domain!("a generalized permutohedron needs at least one point"));
        }
        let pos: Vec<usize> = ground.iter().map(|l| g.index(l.as_ref()).unwrap()).collect();
        let mut pts = Vec::with_capacity(points.len());
        for p in points {
            if p.len() != g.len() {
                return Err(domain!("point has {} coordinates for {} labels", p.len(), g.len()));
            }
            let mut q = vec![BigRational::zero(); g.len()];
            for (j, v) in p.into_iter().enumerate() {
                q[pos[j]] = v;
            }
            pts.push(q);
        }
        pts.sort();
        pts.dedup();
        Ok(Self::new(g, Body::GenPermutohedron { points: pts.into() }))
    }

    /// Minkowski sum of the simplices Δ_I = conv{e_i : i ∈ I} for the given
    /// label subsets, as a deduplicated point list of all vertex sums.
    pub fn minkowski_sum_of_simplices<S: AsRef<str>>(ground: &[S], subsets: &[Vec<S>]) -> Result<Self> {
        let g = Ground::new(ground.iter().map(|s| s.as_ref().to_string()))?;
        let masks = set_masks(&g, subsets)?;
        if masks.contains(&0) {
            return Err(domain!("simplices need nonempty vertex sets"));
        }
        let mut pts: Vec<Vec<i64>> = vec![vec![0; g.len()]];
        for m in masks {
            let mut next: Vec<Vec<i64>> =
                pts.iter().flat_map(|p| bits(m).map(move |i| {
                    let mut q = p.clone();
                    q[i] += 1;
                    q
                })).collect();
            next.sort();
            next.dedup();
            pts = next;
        }
        let points: Arc<[Vec<BigRational>]> = pts
            .into_iter()
            .map(|p| p.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
            .collect::<Vec<_>>()
            .into();
        Ok(Self::new(g, Body::GenPermutohedron { points }))
    }

    /// Loday's associahedron A_n = Σ_{1 ≤ i ≤ j ≤ n} Δ_{[i,j]} on labels `1..n`.
    pub fn loday_associahedron(n: usize) -> Result<Self> {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let subsets: Vec<Vec<String>> =
            (1..=n).flat_map(|i| (i..=n).map(move |j| (i..=j).map(|k| k.to_string()).collect())).collect();
        Self::minkowski_sum_of_simplices(&labels, &subsets)
    }

    pub fn kind(&self) -> StructureKind {
        match &self.body {
            Body::Graph { .. } => StructureKind::Graph,
            Body::Poset { .. } => StructureKind::Poset,
            Body::Matroid { .. } => StructureKind::Matroid,
            Body::MixedGraph { .. } => StructureKind::MixedGraph,
            Body::DoublePoset { .. } => StructureKind::DoublePoset,
            Body::Hypergraph { .. } => StructureKind::Hypergraph,
            Body::SimplicialComplex { .. } => StructureKind::SimplicialComplex,
            Body::GenPermutohedron { .. } => StructureKind::GenPermutohedron,
        }
    }

    /// The label universe this structure (and all its minors) index into.
    pub fn universe(&self) -> &Ground {
        &self.universe
    }

    /// The labels the structure actually lives on.
    pub fn support(&self) -> Mask {
        self.support
    }

    pub fn ground_labels(&self) -> Vec<&str> {
        self.universe.labels_of(self.support)
    }

    pub fn size(&self) -> usize {
        self.support.count_ones() as usize
    }

    pub(crate) fn body(&self) -> &Body {
        &self.body
    }

    fn check_subset(&self, s: Mask) -> Result<()> {
        if s & !self.support != 0 {
            return Err(domain!("{{{}}} is not a subset of the ground set", self.universe.fmt_set(s & !self.support)));
        }
        Ok(())
    }

    fn require_coproduct(&self) -> Result<()> {
        if self.kind().has_coproduct() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!("{} structures are handled by their coloring predicate only", self.kind())))
        }
    }

    pub fn restrict(&self, labels: &[impl AsRef<str>]) -> Result<HopfStructure> {
        let s = self.universe.mask_of(labels)?;
        self.check_subset(s)?;
        self.require_coproduct()?;
        Ok(self.restrict_mask(s))
    }

    pub fn contract(&self, labels: &[impl AsRef<str>]) -> Result<HopfStructure> {
        let s = self.universe.mask_of(labels)?;
        self.check_subset(s)?;
        self.require_coproduct()?;
        Ok(self.contract_mask(s))
    }

    /// Δ_{S, N∖S}: `None` for the distinguished zero.
    pub fn coproduct(&self, labels: &[impl AsRef<str>]) -> Result<Option<(HopfStructure, HopfStructure)>> {
        let s = self.universe.mask_of(labels)?;
        self.check_subset(s)?;
        self.require_coproduct()?;
        Ok(self.split_nonzero(s).then(|| (self.restrict_mask(s), self.contract_mask(s))))
    }

    /// Whether Δ_{S, N∖S} is nonzero (`s` inside the support).
    pub fn split_nonzero(&self, s: Mask) -> bool {
        let sup = self.support;
        match &self.body {
            Body::Poset { below } => bits(s).all(|i| below[i] & sup & !s == 0),
            Body::DoublePoset { below1, .. } => bits(s).all(|i| below1[i] & sup & !s == 0),
            // no directed edge from the back part into S
            Body::MixedGraph { succ, .. } => bits(sup & !s).all(|u| succ[u] & s == 0),
            _ => true,
        }
    }

    /// h|_S for `s` inside the support.
    pub fn restrict_mask(&self, s: Mask) -> HopfStructure {
        debug_assert_eq!(s & !self.support, 0);
        let body = match &self.body {
            Body::Matroid { bases } => {
                let r = bases.iter().map(|b| (b & s).count_ones()).max().unwrap_or(0);
                Body::Matroid { bases: sorted_dedup(bases.iter().map(|b| b & s).filter(|b| b.count_ones() == r).collect()).into() }
            }
            other => other.clone(),
        };
        HopfStructure { universe: self.universe.clone(), support: s, body }
    }

    /// h/S for `s` inside the support; lives on the complement.
    pub fn contract_mask(&self, s: Mask) -> HopfStructure {
        debug_assert_eq!(s & !self.support, 0);
        let rest = self.support & !s;
        let body = match &self.body {
            Body::Matroid { bases } => {
                let r = bases.iter().map(|b| (b & s).count_ones()).max().unwrap_or(0);
                Body::Matroid {
                    bases: sorted_dedup(bases.iter().filter(|b| (*b & s).count_ones() == r).map(|b| b & !s).collect()).into(),
                }
            }
            other => other.clone(),
        };
        HopfStructure { universe: self.universe.clone(), support: rest, body }
    }

    /// φ(h) ∈ {0,1} without a compatibility check.
    pub(crate) fn char_holds(&self, phi: CharacterSpec) -> bool {
        let sup = self.support;
        match (&self.body, phi) {
            (_, CharacterSpec::Zeta) => true,
            (Body::Graph { adj }, CharacterSpec::Chromatic) => bits(sup).all(|i| adj[i] & sup == 0),
            (Body::Poset { below }, CharacterSpec::Chromatic) => bits(sup).all(|i| below[i] & sup == 0),
            (Body::Matroid { bases }, CharacterSpec::Chromatic) => bases.len() == 1,
            (Body::MixedGraph { undirected, succ }, CharacterSpec::StrongMixed) => {
                bits(sup).all(|i| (undirected[i] | succ[i]) & sup == 0)
            }
            (Body::MixedGraph { undirected, .. }, CharacterSpec::WeakMixed) => bits(sup).all(|i| undirected[i] & sup == 0),
            (Body::DoublePoset { below1, below2 }, CharacterSpec::InversionFree) => {
                // an inversion is m <1 m' with m' <2 m
                bits(sup).all(|m2| below1[m2] & sup & below2_above(below2, m2, sup) == 0)
            }
            (Body::SimplicialComplex { facets }, CharacterSpec::DimBound(s)) => {
                facets.iter().all(|f| (f & sup).count_ones() as usize <= s)
            }
            _ => false,
        }
    }

    pub fn char_value(&self, phi: CharacterSpec) -> Result<bool> {
        phi.check_compatible(self.kind())?;
        self.require_coproduct()?;
        Ok(self.char_holds(phi))
    }

    /// φ_C(h) for a composition given by blocks covering the support; no
    /// compatibility checks.
    pub(crate) fn blocks_proper(&self, phi: CharacterSpec, blocks: &[Mask]) -> bool {
        match &self.body {
            Body::Hypergraph { edges } => direct::hypergraph_blocks(edges, blocks),
            Body::GenPermutohedron { points } => {
                let mut f = vec![0u32; self.universe.len()];
                for (k, &b) in blocks.iter().enumerate() {
                    for i in bits(b) {
                        f[i] = k as u32 + 1;
                    }
                }
                direct::unique_argmax(points, &f)
            }
            _ => {
                let mut piece = self.clone();
                for &b in blocks {
                    if !piece.split_nonzero(b) || !piece.restrict_mask(b).char_holds(phi) {
                        return false;
                    }
                    piece = piece.contract_mask(b);
                }
                true
            }
        }
    }

    pub fn check_character(&self, phi: CharacterSpec) -> Result<()> {
        phi.check_compatible(self.kind())
    }

    fn check_top_level(&self) -> Result<()> {
        if self.support != self.universe.full_mask() {
            return Err(domain!("operation needs a structure on its whole label universe"));
        }
        Ok(())
    }

    pub fn proper_composition(&self, phi: CharacterSpec, c: &SetComposition) -> Result<bool> {
        self.check_character(phi)?;
        self.check_top_level()?;
        if c.ground() != &self.universe {
            return Err(domain!("composition and structure live on different label sets"));
        }
        Ok(self.blocks_proper(phi, c.blocks()))
    }

    /// Properness of the level-set composition of a coloring (colors indexed
    /// by label index).
    pub fn proper_coloring(&self, phi: CharacterSpec, colors: &[u32]) -> Result<bool> {
        let c = SetComposition::of_coloring(&self.universe, colors)?;
        self.proper_composition(phi, &c)
    }

    /// The per-family coloring predicate evaluated on the colors themselves.
    pub fn direct_coloring(&self, phi: CharacterSpec, colors: &[u32]) -> Result<bool> {
        self.check_character(phi)?;
        self.check_top_level()?;
        if colors.len() != self.universe.len() {
            return Err(domain!("coloring must assign a color to every label"));
        }
        Ok(direct::coloring_ok(self, phi, colors))
    }

    /// The structure transported along `g`.
    pub fn relabel(&self, g: &Permutation) -> Result<HopfStructure> {
        if g.ground() != &self.universe {
            return Err(domain!("permutation and structure live on different label sets"));
        }
        let table = |t: &Arc<[Mask]>| -> Arc<[Mask]> {
            let mut out = vec![0 as Mask; t.len()];
            for (i, &m) in t.iter().enumerate() {
                out[g.apply(i)] = g.apply_mask(m);
            }
            out.into()
        };
        let list = |t: &Arc<[Mask]>| -> Arc<[Mask]> { sorted_dedup_keep(t.iter().map(|&m| g.apply_mask(m)).collect()).into() };
        let body = match &self.body {
            Body::Graph { adj } => Body::Graph { adj: table(adj) },
            Body::Poset { below } => Body::Poset { below: table(below) },
            Body::Matroid { bases } => Body::Matroid { bases: sorted_dedup(bases.iter().map(|&m| g.apply_mask(m)).collect()).into() },
            Body::MixedGraph { undirected, succ } => Body::MixedGraph { undirected: table(undirected), succ: table(succ) },
            Body::DoublePoset { below1, below2 } => Body::DoublePoset { below1: table(below1), below2: table(below2) },
            Body::Hypergraph { edges } => Body::Hypergraph { edges: list(edges) },
            Body::SimplicialComplex { facets } => {
                Body::SimplicialComplex { facets: sorted_dedup(facets.iter().map(|&m| g.apply_mask(m)).collect()).into() }
            }
            Body::GenPermutohedron { points } => {
                let mut pts: Vec<Vec<BigRational>> = points.iter().map(|p| g.act_on_values(p)).collect();
                pts.sort();
                Body::GenPermutohedron { points: pts.into() }
            }
        };
        Ok(HopfStructure { universe: self.universe.clone(), support: g.apply_mask(self.support), body })
    }

    /// Whether `g` maps the structure to itself.
    pub fn automorphism_check(&self, g: &Permutation) -> Result<bool> {
        if g.ground() != &self.universe {
            return Err(domain!("permutation and structure live on different label sets"));
        }
        Ok(self.relabel(g)? == *self)
    }

    fn normal_form(&self) -> NormalForm {
        let sup = self.support;
        let table = |t: &Arc<[Mask]>| -> Vec<Mask> {
            t.iter().enumerate().map(|(i, &m)| if sup >> i & 1 == 1 { m & sup } else { 0 }).collect()
        };
        match &self.body {
            Body::Graph { adj } => NormalForm::Tables(0, vec![table(adj)]),
            Body::Poset { below } => NormalForm::Tables(1, vec![table(below)]),
            Body::MixedGraph { undirected, succ } => NormalForm::Tables(2, vec![table(undirected), table(succ)]),
            Body::DoublePoset { below1, below2 } => NormalForm::Tables(3, vec![table(below1), table(below2)]),
            Body::Matroid { bases } => NormalForm::Sets(4, bases.to_vec()),
            Body::Hypergraph { edges } => NormalForm::Sets(5, edges.to_vec()),
            Body::SimplicialComplex { facets } => NormalForm::Sets(6, maximal(facets.iter().map(|f| f & sup).collect())),
            Body::GenPermutohedron { points } => NormalForm::Points(points.to_vec()),
        }
    }

    /// JSON-ready description of the structure on its support.
    pub fn to_spec(&self) -> crate::json::StructureSpec {
        crate::json::StructureSpec::from_structure(self)
    }
}

#[derive(PartialEq)]
enum NormalForm {
    Tables(u8, Vec<Vec<Mask>>),
    Sets(u8, Vec<Mask>),
    Points(Vec<Vec<BigRational>>),
}

impl PartialEq for HopfStructure {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.support == other.support && self.normal_form() == other.normal_form()
    }
}

/// Elements above `m` in the second order, within `sup`.
fn below2_above(below2: &[Mask], m: usize, sup: Mask) -> Mask {
    bits(sup).filter(|&x| below2[x] >> m & 1 == 1).fold(0, |a, x| a | 1 << x)
}

fn sorted_dedup_keep(mut v: Vec<Mask>) -> Vec<Mask> {
    v.sort_unstable();
    v
}

/// Inclusion-maximal nonempty sets, sorted.
pub(crate) fn maximal(sets: Vec<Mask>) -> Vec<Mask> {
    let sets = sorted_dedup(sets);
    sets.iter()
        .copied()
        .filter(|&f| f != 0 && !sets.iter().any(|&g| g != f && f & !g == 0))
        .collect()
}

fn check_basis_exchange(g: &Ground, bases: &[Mask]) -> Result<()> {
    for &b1 in bases {
        for &b2 in bases {
            for x in bits(b1 & !b2) {
                let ok = bits(b2 & !b1).any(|y| bases.binary_search(&((b1 & !(1 << x)) | 1 << y)).is_ok());
                if !ok {
                    return Err(domain!(
                        "bases violate the exchange axiom: {{{}}}, {{{}}} at {:?}",
                        g.fmt_set(b1),
                        g.fmt_set(b2),
                        g.label(x)
                    ));
                }
            }
        }
    }
    Ok(())
}

/// All nonempty proper subsets of the support, for exhaustive checks.
pub(crate) fn proper_nonempty_submasks(m: Mask) -> impl Iterator<Item = Mask> {
    nonempty_submasks(m).filter(move |&s| s != m)
}

#[cfg(test)]
mod tests;
