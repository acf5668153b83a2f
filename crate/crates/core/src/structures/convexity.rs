//! Exhaustive check that a character is balanced convex on one structure
//! and all of its minors.

use serde::Serialize;

use crate::error::Result;
use crate::labels::{nonempty_submasks, Mask};

use super::{proper_nonempty_submasks, CharacterSpec, HopfStructure};

/// A minor `(h/A)|_B` on which one of the three conditions fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvexityViolation {
    /// 1: a singleton minor is not colorable; 2: no nonzero split exists;
    /// 3: a colorable minor splits into an uncolorable piece.
    pub condition: u8,
    pub contracted: Vec<String>,
    pub restricted_to: Vec<String>,
    pub split: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConvexityCheck {
    Holds,
    /// Kinds without restriction/contraction.
    NotApplicable,
    Violated(ConvexityViolation),
}

/// Runs over every minor `(h/A)|_B` with `A`, `B` disjoint and `B` nonempty.
pub fn balanced_convexity(h: &HopfStructure, phi: CharacterSpec) -> Result<ConvexityCheck> {
    h.check_character(phi)?;
    if !h.kind().has_coproduct() {
        return Ok(ConvexityCheck::NotApplicable);
    }
    Ok(scan(h, phi))
}

pub(super) fn scan(h: &HopfStructure, phi: CharacterSpec) -> ConvexityCheck {
    let full = h.support();
    let labels = |m: Mask| h.universe().labels_of(m).into_iter().map(String::from).collect::<Vec<_>>();
    let witness = |cond: u8, a: Mask, b: Mask, s: Option<Mask>| {
        ConvexityCheck::Violated(ConvexityViolation {
            condition: cond,
            contracted: labels(a),
            restricted_to: labels(b),
            split: s.map(labels),
        })
    };
    for a in std::iter::once(0).chain(nonempty_submasks(full)) {
        let quotient = h.contract_mask(a);
        for b in nonempty_submasks(full & !a) {
            let k = quotient.restrict_mask(b);
            let colorable = k.char_holds(phi);
            if b.count_ones() == 1 {
                if !colorable {
                    return witness(1, a, b, None);
                }
                continue;
            }
            let mut any_split = false;
            for s in proper_nonempty_submasks(b) {
                if !k.split_nonzero(s) {
                    continue;
                }
                any_split = true;
                if colorable && !(k.restrict_mask(s).char_holds(phi) && k.contract_mask(s).char_holds(phi)) {
                    return witness(3, a, b, Some(s));
                }
            }
            if !any_split {
                return witness(2, a, b, None);
            }
        }
    }
    ConvexityCheck::Holds
}
