use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

use super::StructureKind;

/// A {0,1}-valued multiplicative character, by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CharacterSpec {
    Zeta,
    Chromatic,
    StrongMixed,
    WeakMixed,
    InversionFree,
    UniqueLocalMax,
    /// No face with more than `s` vertices.
    DimBound(usize),
    VertexGeneric,
}

impl CharacterSpec {
    pub fn name(&self) -> &'static str {
        match self {
            CharacterSpec::Zeta => "zeta",
            CharacterSpec::Chromatic => "chromatic",
            CharacterSpec::StrongMixed => "strong_mixed",
            CharacterSpec::WeakMixed => "weak_mixed",
            CharacterSpec::InversionFree => "inversion_free",
            CharacterSpec::UniqueLocalMax => "unique_local_max",
            CharacterSpec::DimBound(_) => "dim_bound",
            CharacterSpec::VertexGeneric => "vertex_generic",
        }
    }

    /// Characters each kind supports.
    pub fn allowed_for(kind: StructureKind) -> &'static [&'static str] {
        use StructureKind::*;
        match kind {
            Graph | Poset | Matroid => &["zeta", "chromatic"],
            MixedGraph => &["zeta", "strong_mixed", "weak_mixed"],
            DoublePoset => &["zeta", "inversion_free"],
            Hypergraph => &["unique_local_max"],
            SimplicialComplex => &["zeta", "dim_bound"],
            GenPermutohedron => &["vertex_generic"],
        }
    }

    pub fn check_compatible(&self, kind: StructureKind) -> Result<()> {
        if !Self::allowed_for(kind).contains(&self.name()) {
            return Err(domain!(
                "character {self} does not apply to a {kind}; allowed: {}",
                Self::allowed_for(kind).join(", ")
            ));
        }
        if let CharacterSpec::DimBound(0) = self {
            return Err(domain!("dim_bound needs s ≥ 1 so that single vertices are colorable"));
        }
        Ok(())
    }
}

impl fmt::Display for CharacterSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharacterSpec::DimBound(s) => write!(f, "dim_bound({s})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for CharacterSpec {
    type Err = Error;
    /// Plain names, plus `dim_bound(s)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "zeta" => CharacterSpec::Zeta,
            "chromatic" => CharacterSpec::Chromatic,
            "strong_mixed" => CharacterSpec::StrongMixed,
            "weak_mixed" => CharacterSpec::WeakMixed,
            "inversion_free" => CharacterSpec::InversionFree,
            "unique_local_max" => CharacterSpec::UniqueLocalMax,
            "vertex_generic" => CharacterSpec::VertexGeneric,
            _ => {
                let arg = s
                    .strip_prefix("dim_bound(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("unknown character {s:?}")))?;
                CharacterSpec::DimBound(
                    arg.trim().parse().map_err(|e| Error::Parse(format!("dim_bound parameter {arg:?}: {e}")))?,
                )
            }
        })
    }
}
