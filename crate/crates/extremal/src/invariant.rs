//! Relabeling-invariant assignments as integer-partition families.
//!
//! An assignment invariant under all label permutations is determined by
//! the *shapes* (integer partitions) of its set-partition generators, and
//! is extremal exactly when that family of shapes is special: every
//! partition reachable by equal-sum part replacements inside the family
//! stays dominated by a family member.  This module stores the shape
//! family directly, which avoids expanding factorially large orbits, and
//! provides membership, the smallest-invariant closure, symmetrization,
//! orbit expansion and the uniform-weight construction for the smooth
//! case.

use crate::assignments::{normalize, Assignment, WeightData};
use crate::partitions::{is_special_family, replacement_closure, IntegerPartition, SetPartition};
use crate::ratlp::{rat, Rat};
use crate::trees::LabeledTree;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;

/// An invariant assignment: an antichain of integer-partition generators,
/// each with 3 to `n-1` parts, none complete.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantAssignment {
    n: u32,
    generators: Vec<IntegerPartition>,
}

impl InvariantAssignment {
    /// The invariant assignment with no generators.
    pub fn empty(n: u32) -> Self {
        InvariantAssignment { n, generators: Vec::new() }
    }

    /// Partitioned total (the label count).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Generators, sorted and pairwise incomparable.
    pub fn generators(&self) -> &[IntegerPartition] {
        &self.generators
    }
}

impl fmt::Display for InvariantAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for p in &self.generators {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Validates generators and drops the ones below another generator.
pub fn inv_normalize(n: u32, gens: Vec<IntegerPartition>) -> Result<InvariantAssignment> {
    let mut set: BTreeSet<IntegerPartition> = BTreeSet::new();
    for p in gens {
        if p.total() != n {
            return Err(Error::invalid(format!(
                "generator {p} partitions {} instead of {n}",
                p.total()
            )));
        }
        let k = p.num_parts();
        if k < 3 || k as u32 > n - 1 {
            return Err(Error::invalid(format!(
                "generator {p} must have between 3 and {} parts",
                n - 1
            )));
        }
        set.insert(p);
    }
    let generators: Vec<IntegerPartition> = set
        .iter()
        .filter(|p| !set.iter().any(|q| q != *p && p.int_leq_shared(q)))
        .cloned()
        .collect();
    Ok(InvariantAssignment { n, generators })
}

// A tiny helper so normalization can compare without re-checking totals.
trait IntLeqShared {
    fn int_leq_shared(&self, other: &Self) -> bool;
}

impl IntLeqShared for IntegerPartition {
    fn int_leq_shared(&self, other: &Self) -> bool {
        self.int_leq(other).expect("totals match after validation")
    }
}

/// Whether the shape family defines an extremal assignment; on failure
/// the witness is a reachable shape no generator dominates.
pub fn inv_is_extremal(f: &InvariantAssignment) -> Result<(bool, Option<IntegerPartition>)> {
    is_special_family(f.generators())
}

/// Membership of vertex `v` of `g` in the expanded assignment: the shape
/// of the vertex's branch partition must lie below some generator.
pub fn inv_member(f: &InvariantAssignment, g: &LabeledTree, v: usize) -> Result<bool> {
    if g.n() as u32 != f.n {
        return Err(Error::SizeMismatch(f.n as u8, g.n()));
    }
    if v >= g.num_vertices() {
        return Err(Error::invalid(format!("no vertex {v}")));
    }
    let shape = g.basic_partition(v).shape();
    for p in &f.generators {
        if shape.int_leq(p)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outcome of the smallest-invariant-assignment computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvSmallestOutcome {
    /// The smallest invariant extremal assignment selecting the input.
    Assignment(InvariantAssignment),
    /// Every candidate family reaches the all-ones partition, which would
    /// select every vertex of some tree; no invariant assignment exists.
    NoneExists,
}

/// Smallest invariant extremal assignment selecting every given
/// (tree, vertex) pair, by closing the branch-partition shapes under
/// equal-sum part replacements until the family is special.
pub fn inv_smallest(pairs: &[(LabeledTree, usize)]) -> Result<InvSmallestOutcome> {
    if pairs.is_empty() {
        return Err(Error::invalid("need at least one (tree, vertex) pair"));
    }
    let n = pairs[0].0.n() as u32;
    let mut family: BTreeSet<IntegerPartition> = BTreeSet::new();
    for (g, v) in pairs {
        if g.n() as u32 != n {
            return Err(Error::SizeMismatch(n as u8, g.n()));
        }
        if *v >= g.num_vertices() {
            return Err(Error::invalid(format!("no vertex {v}")));
        }
        family.insert(g.basic_partition(*v).shape());
    }
    // Alternate "close under replacements" and "enlarge": the closure can
    // open new replacements, because fresh members contribute fresh part
    // sub-multisets, so iterate to a fixpoint.
    loop {
        let members: Vec<IntegerPartition> = family.iter().cloned().collect();
        let closure = replacement_closure(&members)?;
        if closure.iter().any(|p| p.is_complete()) {
            return Ok(InvSmallestOutcome::NoneExists);
        }
        let before = family.len();
        family.extend(closure);
        if family.len() == before {
            break;
        }
    }
    let generators: Vec<IntegerPartition> = family
        .iter()
        .filter(|p| {
            p.num_parts() as u32 <= n - 1
                && !family.iter().any(|q| q != *p && p.int_leq_shared(q))
        })
        .cloned()
        .collect();
    Ok(InvSmallestOutcome::Assignment(InvariantAssignment { n, generators }))
}

/// Smallest invariant assignment containing `z`: the closure of the
/// shapes of `z`'s generators (via their star trees).
pub fn symmetrize(z: &Assignment) -> Result<InvSmallestOutcome> {
    if z.generators().is_empty() {
        return Ok(InvSmallestOutcome::Assignment(InvariantAssignment::empty(
            z.n() as u32,
        )));
    }
    let mut pairs = Vec::with_capacity(z.generators().len());
    for p in z.generators() {
        pairs.push(LabeledTree::star(p)?);
    }
    inv_smallest(&pairs)
}

/// The set-partition form: every partition whose shape is a generator.
pub fn expand(f: &InvariantAssignment, n: u8) -> Result<Assignment> {
    if n as u32 != f.n {
        return Err(Error::SizeMismatch(f.n as u8, n));
    }
    let mut gens = Vec::new();
    for p in &f.generators {
        for q in SetPartition::enumerate(n, Some(p.num_parts())) {
            if q.shape() == *p {
                gens.push(q);
            }
        }
    }
    if gens.is_empty() {
        return Ok(Assignment::empty(n));
    }
    normalize(n, gens)
}

/// Uniform weight data reproducing an invariant smooth assignment.
///
/// The shape family of a smooth invariant assignment normalizes to a
/// single generator `[n-m, 1^m]` (one heavy part against `m` singletons);
/// when `2m < n` the uniform weights `(1/m)^n` realize it exactly.
pub fn inv_smooth_weight(f: &InvariantAssignment) -> Result<WeightData> {
    let [p] = f.generators() else {
        return Err(Error::invalid(
            "expected exactly one generator of shape [n-m, 1, ..., 1]",
        ));
    };
    let m = p.parts().iter().filter(|&&x| x == 1).count() as u32;
    if p.num_parts() as u32 != m + 1 || m < 2 {
        return Err(Error::invalid(format!(
            "generator {p} is not one part of size >= 2 against singletons"
        )));
    }
    if 2 * m >= f.n {
        return Err(Error::invalid(format!(
            "need 2m < n for uniform weights, got m = {m}, n = {}",
            f.n
        )));
    }
    WeightData::new(vec![rat(1, m as i64); f.n as usize])
}

/// Uniform weight value helper for display call sites.
pub fn uniform_weight(m: u32) -> Rat {
    rat(1, m as i64)
}

/// Parses an invariant assignment file: `n <int>` header, then one
/// `[a,b,c]` integer partition per line.  `#` starts a comment.
pub fn parse_invariant_file(text: &str) -> Result<InvariantAssignment> {
    let mut n: Option<u32> = None;
    let mut gens = Vec::new();
    let mut offset = 0usize;
    for line in text.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            let rest = line
                .strip_prefix('n')
                .ok_or_else(|| Error::parse(pos, "expected header `n <int>`"))?
                .trim();
            let v: u32 = rest
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad label count `{rest}`")))?;
            n = Some(v);
            continue;
        }
        let p: IntegerPartition = line
            .parse()
            .map_err(|e| Error::parse(pos, format!("bad partition `{line}`: {e}")))?;
        gens.push(p);
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing header `n <int>`"))?;
    inv_normalize(n, gens)
}
