//! Streaming enumeration of proper set compositions.

use rayon::prelude::*;

use crate::compositions::SetComposition;
use crate::error::{Error, Result};
use crate::labels::{nonempty_submasks, Mask};
use crate::structures::{CharacterSpec, HopfStructure};

/// Execution options shared by the enumeration-heavy operations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Options {
    /// Worker threads; 0 uses rayon's default pool.
    pub workers: usize,
}

impl Options {
    pub fn with_workers(workers: usize) -> Self {
        Options { workers }
    }
}

/// Runs `visit` on the blocks of every proper composition of `h`.
///
/// Blocks are chosen left to right; for kinds with restriction/contraction
/// a prefix is dropped as soon as a split is zero or a block's character
/// vanishes, which is sound because the character of a composition factors
/// over its blocks. The first block is the unit of parallel work; partial
/// accumulators are combined with `merge`, so the result is deterministic
/// whenever `merge` is commutative.
pub(crate) fn fold_proper<A, I, V, M>(h: &HopfStructure, phi: CharacterSpec, opts: Options, init: I, visit: V, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    V: Fn(&mut A, &[Mask]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let full = h.support();
    let pruned = h.kind().has_coproduct();
    let firsts: Vec<(Mask, Option<HopfStructure>)> = nonempty_submasks(full)
        .filter_map(|b| {
            if !pruned {
                return Some((b, None));
            }
            (h.split_nonzero(b) && h.restrict_mask(b).char_holds(phi)).then(|| (b, Some(h.contract_mask(b))))
        })
        .collect();

    let run = |(b, rest): &(Mask, Option<HopfStructure>)| {
        let mut acc = init();
        let mut prefix = vec![*b];
        match rest {
            Some(piece) => descend_pruned(piece, phi, &mut prefix, &mut acc, &visit),
            None => descend_all(h, phi, full & !b, &mut prefix, &mut acc, &visit),
        }
        acc
    };

    if opts.workers == 1 {
        return Ok(firsts.iter().map(run).fold(init(), &merge));
    }
    let par = || firsts.par_iter().map(run).reduce(&init, &merge);
    if opts.workers == 0 {
        Ok(par())
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Resource(format!("cannot start {} workers: {e}", opts.workers)))?;
        Ok(pool.install(par))
    }
}

fn descend_pruned<A>(piece: &HopfStructure, phi: CharacterSpec, prefix: &mut Vec<Mask>, acc: &mut A, visit: &(impl Fn(&mut A, &[Mask]) + Sync)) {
    let rest = piece.support();
    if rest == 0 {
        visit(acc, prefix);
        return;
    }
    for b in nonempty_submasks(rest) {
        if !piece.split_nonzero(b) || !piece.restrict_mask(b).char_holds(phi) {
            continue;
        }
        let next = piece.contract_mask(b);
        prefix.push(b);
        descend_pruned(&next, phi, prefix, acc, visit);
        prefix.pop();
    }
}

fn descend_all<A>(
    h: &HopfStructure,
    phi: CharacterSpec,
    rest: Mask,
    prefix: &mut Vec<Mask>,
    acc: &mut A,
    visit: &(impl Fn(&mut A, &[Mask]) + Sync),
) {
    if rest == 0 {
        if h.blocks_proper(phi, prefix) {
            visit(acc, prefix);
        }
        return;
    }
    for b in nonempty_submasks(rest) {
        prefix.push(b);
        descend_all(h, phi, rest & !b, prefix, acc, visit);
        prefix.pop();
    }
}

pub(crate) fn check_instance(h: &HopfStructure, phi: CharacterSpec) -> Result<()> {
    h.check_character(phi)?;
    if h.support() != h.universe().full_mask() {
        return Err(crate::error::domain!("expected a structure on its whole label universe"));
    }
    if h.size() == 0 {
        return Err(crate::error::domain!("structures need a nonempty ground set"));
    }
    Ok(())
}

/// The φ-proper set compositions of `h`, in canonical enumeration order.
pub fn proper_compositions(h: &HopfStructure, phi: CharacterSpec) -> Result<Vec<SetComposition>> {
    proper_compositions_with(h, phi, Options::default())
}

pub fn proper_compositions_with(h: &HopfStructure, phi: CharacterSpec, opts: Options) -> Result<Vec<SetComposition>> {
    check_instance(h, phi)?;
    let raw = fold_proper(
        h,
        phi,
        opts,
        Vec::new,
        |acc: &mut Vec<Vec<Mask>>, blocks| acc.push(blocks.to_vec()),
        |mut a, b| {
            a.extend(b);
            a
        },
    )?;
    let mut out: Vec<SetComposition> =
        raw.into_iter().map(|b| SetComposition::new_unchecked(h.universe().clone(), b)).collect();
    out.sort_by_cached_key(|c| c.order_key());
    Ok(out)
}
