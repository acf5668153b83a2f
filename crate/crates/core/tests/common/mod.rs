//! Seeded instance corpus shared by the property and acceptance suites.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use hopfchrom_core::groups::{PermGroup, Permutation};
use hopfchrom_core::structures::{balanced_convexity, ConvexityCheck};
use hopfchrom_core::{CharacterSpec, HopfStructure, StructureKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
pub const MAX_N: usize = 5;

#[derive(Debug)]
pub struct Instance {
    pub name: String,
    pub h: HopfStructure,
    pub phi: CharacterSpec,
}

impl Instance {
    fn new(name: impl Into<String>, h: HopfStructure, phi: CharacterSpec) -> Self {
        Instance { name: name.into(), h, phi }
    }
}

fn labels(n: usize) -> Vec<&'static str> {
    LABELS[..n].to_vec()
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn edge(l: &[&'static str], (i, j): (usize, usize)) -> [&'static str; 2] {
    [l[i], l[j]]
}

/// Random pairs (lower, upper) along a random linear order, so the
/// relation is acyclic.
fn random_dag(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    pairs(n).into_iter().filter(|_| rng.gen_bool(p)).map(|(i, j)| (order[i], order[j])).collect()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, nonempty: bool) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if !nonempty || !s.is_empty() {
            return s;
        }
    }
}

fn names(l: &[&'static str], s: &[usize]) -> Vec<&'static str> {
    s.iter().map(|&i| l[i]).collect()
}

/// One isomorphism-class representative per graph on ≤ 5 vertices.
pub fn all_graphs() -> Vec<HopfStructure> {
    let mut out = vec![];
    for n in 1..=MAX_N {
        let ps = pairs(n);
        let perms = permutations(n);
        let mut seen = BTreeSet::new();
        for m in 0u32..1 << ps.len() {
            let edges: Vec<(usize, usize)> = (0..ps.len()).filter(|k| m >> k & 1 == 1).map(|k| ps[k]).collect();
            let canon = perms
                .iter()
                .map(|p| {
                    let mut e: Vec<(usize, usize)> =
                        edges.iter().map(|&(i, j)| (p[i].min(p[j]), p[i].max(p[j]))).collect();
                    e.sort();
                    e
                })
                .min()
                .unwrap();
            if seen.insert(canon.clone()) {
                let l = labels(n);
                let e: Vec<_> = canon.into_iter().map(|x| edge(&l, x)).collect();
                out.push(HopfStructure::graph(&l, &e).unwrap());
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

fn spanning_forests(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    fn acyclic(n: usize, edges: &[(usize, usize)], sel: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for &k in sel {
            let (a, b) = (find(&mut parent, edges[k].0), find(&mut parent, edges[k].1));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
    let m = edges.len();
    let forests: Vec<Vec<usize>> =
        (0u32..1 << m).map(|s| (0..m).filter(|k| s >> k & 1 == 1).collect::<Vec<_>>()).filter(|s| acyclic(n, edges, s)).collect();
    let r = forests.iter().map(Vec::len).max().unwrap_or(0);
    forests.into_iter().filter(|f| f.len() == r).collect()
}

/// One random instance of the given kind from `seed`; `n` is in `1..=5`.
pub fn random_instance(kind: StructureKind, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=MAX_N);
    let l = labels(n);
    let tag = format!("{}#{seed}", kind.name());
    match kind {
        StructureKind::Graph => {
            let e: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(0.4)).map(|x| edge(&l, x)).collect();
            let phi = if rng.gen_bool(0.8) { CharacterSpec::Chromatic } else { CharacterSpec::Zeta };
            Instance::new(tag, HopfStructure::graph(&l, &e).unwrap(), phi)
        }
        StructureKind::Poset => {
            let e: Vec<_> = random_dag(&mut rng, n, 0.4).into_iter().map(|x| edge(&l, x)).collect();
            let phi = if rng.gen_bool(0.5) { CharacterSpec::Chromatic } else { CharacterSpec::Zeta };
            Instance::new(tag, HopfStructure::poset(&l, &e).unwrap(), phi)
        }
        StructureKind::Matroid => {
            let h = if rng.gen_bool(0.5) {
                let r = rng.gen_range(0..=n);
                let bases: Vec<Vec<&str>> =
                    (0u32..1 << n).filter(|s| s.count_ones() as usize == r).map(|s| (0..n).filter(|i| s >> i & 1 == 1).map(|i| l[i]).collect()).collect();
                HopfStructure::matroid(&l, &bases).unwrap()
            } else {
                // graphic: the n labels are edges of a random multigraph on 4 vertices
                let edges: Vec<(usize, usize)> = (0..n)
                    .map(|_| {
                        let a = rng.gen_range(0..4);
                        let b = rng.gen_range(0..4);
                        (a, b)
                    })
                    .collect();
                let bases: Vec<Vec<&str>> = spanning_forests(4, &edges).into_iter().map(|f| names(&l, &f)).collect();
                HopfStructure::matroid(&l, &bases).unwrap()
            };
            let phi = if rng.gen_bool(0.8) { CharacterSpec::Chromatic } else { CharacterSpec::Zeta };
            Instance::new(tag, h, phi)
        }
        StructureKind::MixedGraph => {
            let dir = random_dag(&mut rng, n, 0.3);
            let und: Vec<_> = pairs(n)
                .into_iter()
                .filter(|&(i, j)| !dir.contains(&(i, j)) && !dir.contains(&(j, i)) && rng.gen_bool(0.3))
                .map(|x| edge(&l, x))
                .collect();
            let d: Vec<_> = dir.into_iter().map(|x| edge(&l, x)).collect();
            let phi = if rng.gen_bool(0.5) { CharacterSpec::StrongMixed } else { CharacterSpec::WeakMixed };
            Instance::new(tag, HopfStructure::mixed_graph(&l, &und, &d).unwrap(), phi)
        }
        StructureKind::DoublePoset => {
            let o1: Vec<_> = random_dag(&mut rng, n, 0.4).into_iter().map(|x| edge(&l, x)).collect();
            let o2: Vec<_> = random_dag(&mut rng, n, 0.4).into_iter().map(|x| edge(&l, x)).collect();
            let phi = if rng.gen_bool(0.8) { CharacterSpec::InversionFree } else { CharacterSpec::Zeta };
            Instance::new(tag, HopfStructure::double_poset(&l, &o1, &o2).unwrap(), phi)
        }
        StructureKind::Hypergraph => {
            let k = rng.gen_range(0..=4);
            let e: Vec<Vec<&str>> = (0..k).map(|_| names(&l, &random_subset(&mut rng, n, true))).collect();
            Instance::new(tag, HopfStructure::hypergraph(&l, &e).unwrap(), CharacterSpec::UniqueLocalMax)
        }
        StructureKind::SimplicialComplex => {
            let k = rng.gen_range(1..=3);
            let mut f: Vec<Vec<&str>> = (0..k).map(|_| names(&l, &random_subset(&mut rng, n, false))).collect();
            // every vertex is a face
            f.extend(l.iter().map(|&v| vec![v]));
            let s = rng.gen_range(1..=3);
            Instance::new(tag, HopfStructure::simplicial_complex(&l, &f).unwrap(), CharacterSpec::DimBound(s))
        }
        StructureKind::GenPermutohedron => {
            let h = if rng.gen_bool(0.2) {
                HopfStructure::loday_associahedron(n).unwrap()
            } else {
                let k = rng.gen_range(0..=3);
                let s: Vec<Vec<&str>> = (0..k).map(|_| names(&l, &random_subset(&mut rng, n, true))).collect();
                HopfStructure::minkowski_sum_of_simplices(&l, &s).unwrap()
            };
            Instance::new(tag, h, CharacterSpec::VertexGeneric)
        }
    }
}

/// Instances on which the theorems apply: the convexity scan does not
/// report a violation.
pub fn is_balanced_convex(i: &Instance) -> bool {
    !matches!(balanced_convexity(&i.h, i.phi).unwrap(), ConvexityCheck::Violated(_))
}

/// The full automorphism group, found by brute force over all permutations.
pub fn automorphisms(h: &HopfStructure) -> Vec<Permutation> {
    let g = h.universe();
    permutations(g.len())
        .into_iter()
        .map(|p| Permutation::from_images(g, p).unwrap())
        .filter(|p| h.automorphism_check(p).unwrap())
        .collect()
}

fn element_set(g: &PermGroup) -> BTreeSet<Vec<u8>> {
    g.elements().iter().map(|p| p.images().to_vec()).collect()
}

/// Trivial, cyclic and dihedral subgroups of Aut(h): the trivial group, the
/// cyclic groups of a largest-order element and of an involution, and one
/// dihedral group when Aut(h) contains one.
pub fn test_groups(h: &HopfStructure) -> Vec<Arc<PermGroup>> {
    let g = h.universe();
    let auts = automorphisms(h);
    let mut out = vec![PermGroup::trivial(g)];
    let push = |grp: Arc<PermGroup>, out: &mut Vec<Arc<PermGroup>>| {
        if !out.iter().any(|o| element_set(o) == element_set(&grp)) {
            out.push(grp);
        }
    };
    if let Some(big) = auts.iter().filter(|p| !p.is_identity()).max_by_key(|p| (p.order(), p.to_string())) {
        push(PermGroup::generate(g, vec![big.clone()]).unwrap(), &mut out);
        let inv = big.inverse();
        if big.order() >= 3 {
            let refl = auts.iter().find(|s| s.order() == 2 && s.compose(big).compose(s) == inv && !PermGroup::generate(g, vec![big.clone()]).unwrap().contains(s));
            if let Some(s) = refl {
                push(PermGroup::generate(g, vec![big.clone(), s.clone()]).unwrap(), &mut out);
            }
        }
    }
    if let Some(inv) = auts.iter().find(|p| p.order() == 2) {
        push(PermGroup::generate(g, vec![inv.clone()]).unwrap(), &mut out);
    }
    out
}

/// `per_kind` seeded instances of every kind, plus every graph on ≤ 5
/// vertices with the chromatic character.
pub fn corpus(per_kind: usize, base_seed: u64) -> Vec<Instance> {
    let mut out: Vec<Instance> = all_graphs()
        .into_iter()
        .enumerate()
        .map(|(k, h)| Instance::new(format!("graph-class-{k}"), h, CharacterSpec::Chromatic))
        .collect();
    for kind in StructureKind::ALL {
        for k in 0..per_kind {
            out.push(random_instance(kind, base_seed.wrapping_add(k as u64 * 1_000_003 + kind as u64)));
        }
    }
    out
}
