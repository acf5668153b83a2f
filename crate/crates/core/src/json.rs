//! JSON forms of structures, characters and permutations.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groups::Permutation;
use crate::labels::{bits, Ground, Mask};
use crate::structures::{Body, CharacterSpec, HopfStructure};

/// One structure, tagged by `"kind"`. Posets and double posets are given by
/// generating `[lower, upper]` pairs (cover relations suffice); simplicial
/// complexes by generating faces; point coordinates follow the order of
/// `"ground"` and are rational strings such as `"3"` or `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum StructureSpec {
    Graph {
        vertices: Vec<String>,
        #[serde(default)]
        edges: Vec<[String; 2]>,
    },
    Poset {
        elements: Vec<String>,
        #[serde(default)]
        covers: Vec<[String; 2]>,
    },
    Matroid {
        ground: Vec<String>,
        bases: Vec<Vec<String>>,
    },
    MixedGraph {
        vertices: Vec<String>,
        #[serde(default)]
        undirected: Vec<[String; 2]>,
        #[serde(default)]
        directed: Vec<[String; 2]>,
    },
    DoublePoset {
        elements: Vec<String>,
        #[serde(default)]
        order1: Vec<[String; 2]>,
        #[serde(default)]
        order2: Vec<[String; 2]>,
    },
    Hypergraph {
        vertices: Vec<String>,
        #[serde(default)]
        edges: Vec<Vec<String>>,
    },
    SimplicialComplex {
        vertices: Vec<String>,
        #[serde(default)]
        faces: Vec<Vec<String>>,
    },
    GenPermutohedron {
        ground: Vec<String>,
        points: Vec<Vec<String>>,
    },
}

fn parse_rational(s: &str) -> Result<BigRational> {
    s.trim().parse::<BigRational>().map_err(|e| Error::Parse(format!("rational {s:?}: {e}")))
}

impl StructureSpec {
    pub fn build(&self) -> Result<HopfStructure> {
        match self {
            StructureSpec::Graph { vertices, edges } => HopfStructure::graph(vertices, edges),
            StructureSpec::Poset { elements, covers } => HopfStructure::poset(elements, covers),
            StructureSpec::Matroid { ground, bases } => HopfStructure::matroid(ground, bases),
            StructureSpec::MixedGraph { vertices, undirected, directed } => {
                HopfStructure::mixed_graph(vertices, undirected, directed)
            }
            StructureSpec::DoublePoset { elements, order1, order2 } => HopfStructure::double_poset(elements, order1, order2),
            StructureSpec::Hypergraph { vertices, edges } => HopfStructure::hypergraph(vertices, edges),
            StructureSpec::SimplicialComplex { vertices, faces } => HopfStructure::simplicial_complex(vertices, faces),
            StructureSpec::GenPermutohedron { ground, points } => {
                let pts = points
                    .iter()
                    .map(|p| p.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                HopfStructure::gen_permutohedron(ground, pts)
            }
        }
    }

    pub(crate) fn from_structure(h: &HopfStructure) -> StructureSpec {
        let g = h.universe();
        let sup = h.support();
        let verts: Vec<String> = g.labels_of(sup).into_iter().map(String::from).collect();
        let set = |m: Mask| -> Vec<String> { g.labels_of(m).into_iter().map(String::from).collect() };
        // pairs (i, j) with j in t[i], inside the support
        let pairs = |t: &[Mask], flip: bool, sym: bool| -> Vec<[String; 2]> {
            let mut v = vec![];
            for i in bits(sup) {
                for j in bits(t[i] & sup) {
                    if sym && j < i {
                        continue;
                    }
                    let (a, b) = if flip { (j, i) } else { (i, j) };
                    v.push([g.label(a).to_string(), g.label(b).to_string()]);
                }
            }
            v
        };
        match h.body() {
            Body::Graph { adj } => StructureSpec::Graph { vertices: verts, edges: pairs(adj, false, true) },
            Body::Poset { below } => StructureSpec::Poset { elements: verts, covers: pairs(below, true, false) },
            Body::Matroid { bases } => StructureSpec::Matroid { ground: verts, bases: bases.iter().map(|&b| set(b)).collect() },
            Body::MixedGraph { undirected, succ } => StructureSpec::MixedGraph {
                vertices: verts,
                undirected: pairs(undirected, false, true),
                directed: pairs(succ, false, false),
            },
            Body::DoublePoset { below1, below2 } => StructureSpec::DoublePoset {
                elements: verts,
                order1: pairs(below1, true, false),
                order2: pairs(below2, true, false),
            },
            Body::Hypergraph { edges } => StructureSpec::Hypergraph { vertices: verts, edges: edges.iter().map(|&e| set(e)).collect() },
            Body::SimplicialComplex { facets } => StructureSpec::SimplicialComplex {
                vertices: verts,
                faces: crate::structures::maximal(facets.iter().map(|f| f & sup).collect()).into_iter().map(set).collect(),
            },
            Body::GenPermutohedron { points } => StructureSpec::GenPermutohedron {
                ground: verts,
                points: points.iter().map(|p| p.iter().map(|x| x.to_string()).collect()).collect(),
            },
        }
    }
}

impl Serialize for CharacterSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CharacterSpec {
    /// `"zeta"`, `"dim_bound(2)"`, or `{"name": "dim_bound", "s": 2}`.
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Object {
                name: String,
                #[serde(default)]
                s: Option<usize>,
            },
        }
        let text = match Raw::deserialize(d)? {
            Raw::Name(n) => n,
            Raw::Object { name, s: Some(s) } => format!("{name}({s})"),
            Raw::Object { name, s: None } => name,
        };
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// A permutation as cycle notation or as an explicit label map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PermutationSpec {
    Cycles(String),
    Map(BTreeMap<String, String>),
}

impl PermutationSpec {
    pub fn build(&self, ground: &Ground) -> Result<Permutation> {
        match self {
            PermutationSpec::Cycles(s) => Permutation::parse_cycles(ground, s),
            PermutationSpec::Map(m) => Permutation::from_map(ground, m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structure_round_trip() {
        let text = r#"{"kind":"graph","vertices":["a","b","c","d"],"edges":[["a","b"],["a","c"],["b","d"],["c","d"]]}"#;
        let spec: StructureSpec = serde_json::from_str(text).unwrap();
        let h = spec.build().unwrap();
        let back = h.to_spec();
        assert_eq!(back.build().unwrap(), h);
        let bad = r#"{"kind":"graph","vertices":["a"],"edgez":[]}"#;
        assert!(serde_json::from_str::<StructureSpec>(bad).is_err());
        let gp = r#"{"kind":"gen_permutohedron","ground":["b","a"],"points":[["1","0"],["0","1/2"]]}"#;
        let h: HopfStructure = serde_json::from_str::<StructureSpec>(gp).unwrap().build().unwrap();
        assert_eq!(h.to_spec().build().unwrap(), h);
    }

    #[test]
    fn character_forms() {
        let c: CharacterSpec = serde_json::from_str(r#""dim_bound(2)""#).unwrap();
        assert_eq!(c, CharacterSpec::DimBound(2));
        let c: CharacterSpec = serde_json::from_str(r#"{"name":"dim_bound","s":3}"#).unwrap();
        assert_eq!(c, CharacterSpec::DimBound(3));
        let c: CharacterSpec = serde_json::from_str(r#""chromatic""#).unwrap();
        assert_eq!(serde_json::to_string(&c).unwrap(), r#""chromatic""#);
        assert!(serde_json::from_str::<CharacterSpec>(r#""purple""#).is_err());
    }

    #[test]
    fn permutation_forms() {
        let g = Ground::new(["a", "b", "c", "d"]).unwrap();
        let p: PermutationSpec = serde_json::from_str(r#""(a c)(b d)""#).unwrap();
        let q: PermutationSpec = serde_json::from_str(r#"{"a":"c","c":"a","b":"d","d":"b"}"#).unwrap();
        assert_eq!(p.build(&g).unwrap(), q.build(&g).unwrap());
    }
}
