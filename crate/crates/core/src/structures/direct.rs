//! Per-family coloring predicates evaluated on raw colors.

use num_rational::BigRational;
use num_traits::Zero;

use crate::labels::{bits, Mask};

use super::{Body, CharacterSpec, HopfStructure};

/// Every edge meets its highest block in exactly one element.
pub(super) fn hypergraph_blocks(edges: &[Mask], blocks: &[Mask]) -> bool {
    edges.iter().all(|&e| {
        let top = blocks.iter().rev().find(|&&b| b & e != 0).unwrap();
        (top & e).count_ones() == 1
    })
}

/// The linear functional Σ f_n p_n has a unique maximizer over `points`.
pub(super) fn unique_argmax(points: &[Vec<BigRational>], f: &[u32]) -> bool {
    let mut best: Option<BigRational> = None;
    let mut ties = 0;
    for p in points {
        let v = p
            .iter()
            .zip(f)
            .filter(|(_, &c)| c != 0)
            .fold(BigRational::zero(), |acc, (x, &c)| acc + x * BigRational::from_integer(c.into()));
        match &best {
            Some(b) if v < *b => {}
            Some(b) if v == *b => ties += 1,
            _ => {
                best = Some(v);
                ties = 0;
            }
        }
    }
    ties == 0
}

/// `(i, j)` with `j ∈ t[i]`, both inside `sup`.
fn pairs_in(t: &[Mask], sup: Mask) -> impl Iterator<Item = (usize, usize)> + '_ {
    bits(sup).flat_map(move |i| bits(t[i] & sup).map(move |j| (i, j)))
}

pub(super) fn coloring_ok(h: &HopfStructure, phi: CharacterSpec, f: &[u32]) -> bool {
    let sup = h.support;
    match (h.body(), phi) {
        (Body::Graph { .. }, CharacterSpec::Zeta) => true,
        (Body::Graph { adj }, CharacterSpec::Chromatic) => pairs_in(adj, sup).all(|(i, j)| f[i] != f[j]),
        (Body::Poset { below }, CharacterSpec::Zeta) => pairs_in(below, sup).all(|(x, y)| f[y] <= f[x]),
        (Body::Poset { below }, CharacterSpec::Chromatic) => pairs_in(below, sup).all(|(x, y)| f[y] < f[x]),
        (Body::Matroid { .. }, CharacterSpec::Zeta) => true,
        (Body::Matroid { bases }, CharacterSpec::Chromatic) => {
            let w: Vec<u64> = bases.iter().map(|&b| bits(b).map(|i| f[i] as u64).sum()).collect();
            let min = *w.iter().min().unwrap();
            w.iter().filter(|&&x| x == min).count() == 1
        }
        (Body::MixedGraph { succ, .. }, CharacterSpec::Zeta) => pairs_in(succ, sup).all(|(u, v)| f[u] <= f[v]),
        (Body::MixedGraph { undirected, succ }, CharacterSpec::WeakMixed) => {
            pairs_in(undirected, sup).all(|(u, v)| f[u] != f[v]) && pairs_in(succ, sup).all(|(u, v)| f[u] <= f[v])
        }
        (Body::MixedGraph { undirected, succ }, CharacterSpec::StrongMixed) => {
            pairs_in(undirected, sup).all(|(u, v)| f[u] != f[v]) && pairs_in(succ, sup).all(|(u, v)| f[u] < f[v])
        }
        (Body::DoublePoset { below1, .. }, CharacterSpec::Zeta) => pairs_in(below1, sup).all(|(y, x)| f[x] <= f[y]),
        (Body::DoublePoset { below1, below2 }, CharacterSpec::InversionFree) => pairs_in(below1, sup).all(|(y, x)| {
            // x <1 y; strict when additionally y <2 x
            if below2[x] >> y & 1 == 1 {
                f[x] < f[y]
            } else {
                f[x] <= f[y]
            }
        }),
        (Body::SimplicialComplex { .. }, CharacterSpec::Zeta) => true,
        (Body::SimplicialComplex { facets }, CharacterSpec::DimBound(s)) => facets.iter().all(|&face| {
            // no monochromatic face with s + 1 vertices
            let mut counts = std::collections::HashMap::new();
            bits(face & sup).all(|i| {
                let c = counts.entry(f[i]).or_insert(0usize);
                *c += 1;
                *c <= s
            })
        }),
        (Body::Hypergraph { edges }, CharacterSpec::UniqueLocalMax) => edges.iter().all(|&e| {
            let top = bits(e).map(|i| f[i]).max().unwrap();
            bits(e).filter(|&i| f[i] == top).count() == 1
        }),
        (Body::GenPermutohedron { points }, CharacterSpec::VertexGeneric) => unique_argmax(points, f),
        _ => false,
    }
}
