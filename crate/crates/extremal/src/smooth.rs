//! Smooth assignments via contraction indicators.
//!
//! An assignment built from generators of the form "all of `B` split off
//! as singletons against the block `B^c`" is determined by which label
//! sets `B` it selects on 2-vertex trees.  The family of those sets — the
//! *contraction indicator* — is downward closed, avoids sizes outside
//! `2..=n-2`, and no two members cover all of `{1..n}`.  This module
//! converts between indicators, assignments and the complementary *simple
//! intersecting families*, extracts the smooth part of an arbitrary
//! assignment, and decides by exact linear programming whether an
//! indicator sits inside (or exactly equals) a weight assignment.

use crate::assignments::{normalize, Assignment, WeightData};
use crate::partitions::{labels_mask, mask_labels, SetPartition};
use crate::ratlp::{feasible, rat, verify_witness, LinearSystem, LpResult, Rat, Relation};
use crate::trees::LabeledTree;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;

/// A contraction indicator of order `n`, stored by its maximal antichain.
///
/// The downward closure (all subsets of size at least 2 of the stored
/// sets) is implicit: it is exponentially larger and recoverable, and
/// every validity clause on the closure follows from the antichain form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionIndicator {
    n: u8,
    maximal: Vec<u32>,
}

/// First violation of the indicator clauses in `family`, or `None`.
///
/// The clauses, checked on the family exactly as given: every set has
/// size in `2..=n-2`; the family is downward closed among sets of size at
/// least 2; and no two members union to the full label set.
pub fn check_indicator(n: u8, family: &[u32]) -> Option<String> {
    let full = (1u32 << n) - 1;
    for &b in family {
        let c = b.count_ones();
        if b & !full != 0 {
            return Some(format!("set {} uses labels above n = {n}", set_text(b)));
        }
        if !(2..=(n as u32).saturating_sub(2)).contains(&c) {
            return Some(format!(
                "set {} has size {c}, outside 2..={}",
                set_text(b),
                n - 2
            ));
        }
    }
    for (i, &a) in family.iter().enumerate() {
        for &b in &family[i + 1..] {
            if a | b == full {
                return Some(format!(
                    "{} and {} union to the full label set",
                    set_text(a),
                    set_text(b)
                ));
            }
        }
    }
    for &b in family {
        if b.count_ones() > 2 {
            for l in mask_labels(b) {
                let sub = b & !(1u32 << (l - 1));
                if !family.contains(&sub) {
                    return Some(format!(
                        "not downward closed: {} is present but {} is not",
                        set_text(b),
                        set_text(sub)
                    ));
                }
            }
        }
    }
    None
}

fn set_text(mask: u32) -> String {
    let labels: Vec<String> = mask_labels(mask).into_iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", labels.join(","))
}

impl ContractionIndicator {
    /// Builds an indicator from any generating family of label-set masks.
    ///
    /// The family is reduced to its maximal antichain; the implicit
    /// downward closure then satisfies all three indicator clauses iff
    /// the antichain does, which is what gets validated.
    pub fn from_masks(n: u8, sets: Vec<u32>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("order must be at least 3"));
        }
        let full = (1u32 << n) - 1;
        for &b in &sets {
            let c = b.count_ones();
            if b & !full != 0 || !(2..=(n as u32).saturating_sub(2)).contains(&c) {
                return Err(Error::invalid(format!(
                    "indicator set {} must use labels 1..={n} and have size 2..={}",
                    set_text(b),
                    n - 2
                )));
            }
        }
        let mut maximal: Vec<u32> = Vec::new();
        for &b in &sets {
            if sets.iter().any(|&a| a != b && b & !a == 0) {
                continue;
            }
            if !maximal.contains(&b) {
                maximal.push(b);
            }
        }
        maximal.sort_unstable();
        for (i, &a) in maximal.iter().enumerate() {
            for &b in &maximal[i + 1..] {
                if a | b == full {
                    return Err(Error::invalid(format!(
                        "indicator sets {} and {} union to the full label set",
                        set_text(a),
                        set_text(b)
                    )));
                }
            }
        }
        Ok(ContractionIndicator { n, maximal })
    }

    /// Builds an indicator from explicit label subsets.
    pub fn from_sets(n: u8, sets: &[Vec<u8>]) -> Result<Self> {
        Self::from_masks(n, sets.iter().map(|s| labels_mask(s)).collect())
    }

    /// Label count.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The maximal antichain, as sorted masks.
    pub fn maximal(&self) -> &[u32] {
        &self.maximal
    }

    /// Whether `mask` belongs to the (implicit) downward closure.
    pub fn contains(&self, mask: u32) -> bool {
        mask.count_ones() >= 2 && self.maximal.iter().any(|&b| mask & !b == 0)
    }

    /// The full downward closure, sorted.
    pub fn closure(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &b in &self.maximal {
            // Enumerate the submasks of b of size >= 2.
            let mut sub = b;
            loop {
                if sub.count_ones() >= 2 {
                    out.push(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & b;
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for ContractionIndicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for &b in &self.maximal {
            let labels: Vec<String> =
                mask_labels(b).into_iter().map(|l| l.to_string()).collect();
            writeln!(f, "{}", labels.join(","))?;
        }
        Ok(())
    }
}

/// A pairwise-intersecting antichain of label subsets of size `2..=n-2`.
///
/// These are exactly the complements of maximal antichains of contraction
/// indicators, and classify the smooth assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleIntersectingFamily {
    n: u8,
    edges: Vec<u32>,
}

impl SimpleIntersectingFamily {
    /// Validates and builds a family from masks.
    pub fn from_masks(n: u8, mut edges: Vec<u32>) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("order must be at least 3"));
        }
        let full = (1u32 << n) - 1;
        edges.sort_unstable();
        edges.dedup();
        for (i, &a) in edges.iter().enumerate() {
            let c = a.count_ones();
            if a & !full != 0 || !(2..=(n as u32).saturating_sub(2)).contains(&c) {
                return Err(Error::invalid(format!(
                    "family member {} must use labels 1..={n} and have size 2..={}",
                    set_text(a),
                    n - 2
                )));
            }
            for &b in &edges[i + 1..] {
                if a & b == 0 {
                    return Err(Error::invalid(format!(
                        "family members {} and {} are disjoint",
                        set_text(a),
                        set_text(b)
                    )));
                }
                if a & !b == 0 || b & !a == 0 {
                    return Err(Error::invalid(format!(
                        "family members {} and {} are nested",
                        set_text(a),
                        set_text(b)
                    )));
                }
            }
        }
        Ok(SimpleIntersectingFamily { n, edges })
    }

    /// Validates and builds a family from explicit label subsets.
    pub fn from_sets(n: u8, sets: &[Vec<u8>]) -> Result<Self> {
        Self::from_masks(n, sets.iter().map(|s| labels_mask(s)).collect())
    }

    /// Label count.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The member sets, as sorted masks.
    pub fn edges(&self) -> &[u32] {
        &self.edges
    }
}

impl fmt::Display for SimpleIntersectingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for &b in &self.edges {
            let labels: Vec<String> =
                mask_labels(b).into_iter().map(|l| l.to_string()).collect();
            writeln!(f, "{}", labels.join(","))?;
        }
        Ok(())
    }
}

/// Complements the maximal antichain: indicator -> intersecting family.
pub fn to_family(c: &ContractionIndicator) -> SimpleIntersectingFamily {
    let full = (1u32 << c.n) - 1;
    let edges: Vec<u32> = c.maximal.iter().map(|&b| full & !b).collect();
    // Complements of a maximal antichain with no covering pair are an
    // antichain of pairwise-intersecting sets of the same size range.
    SimpleIntersectingFamily::from_masks(c.n, edges)
        .expect("complement of a valid indicator is a valid family")
}

/// Complements the member sets: intersecting family -> indicator.
pub fn from_family(f: &SimpleIntersectingFamily) -> ContractionIndicator {
    let full = (1u32 << f.n) - 1;
    let sets: Vec<u32> = f.edges.iter().map(|&b| full & !b).collect();
    ContractionIndicator::from_masks(f.n, sets)
        .expect("complement of a valid family is a valid indicator")
}

/// The assignment generated by an indicator: one generator per maximal
/// set `B`, splitting `B` into singletons against the block `B^c`.
pub fn from_indicator(c: &ContractionIndicator) -> Result<Assignment> {
    let full = (1u32 << c.n) - 1;
    let mut gens = Vec::with_capacity(c.maximal.len());
    for &b in &c.maximal {
        let mut masks: Vec<u32> = mask_labels(b).into_iter().map(|l| 1u32 << (l - 1)).collect();
        masks.push(full & !b);
        gens.push(SetPartition::from_masks(c.n, masks)?);
    }
    if gens.is_empty() {
        return Ok(Assignment::empty(c.n));
    }
    normalize(c.n, gens)
}

/// The label sets selected by `z` on 2-vertex trees, as an indicator.
///
/// Fails if the collected sets violate the covering clause, which cannot
/// happen for an extremal assignment (no tree is fully selected).
pub fn indicator_of(z: &Assignment) -> Result<ContractionIndicator> {
    let n = z.n();
    let full = (1u32 << n) - 1;
    let mut sets = Vec::new();
    // Enumerate each 2-vertex tree once via the side avoiding label 1.
    for side in 0..=full {
        let c = side.count_ones();
        if side & 1 != 0 || !(2..=(n as u32) - 2).contains(&c) {
            continue;
        }
        let g = LabeledTree::from_splits(n, &[side])?;
        for v in 0..2 {
            if z.member(&g, v)? {
                sets.push(g.label_mask(v));
            }
        }
    }
    ContractionIndicator::from_masks(n, sets)
}

/// The largest indicator-generated assignment inside `z`'s 2-vertex data.
pub fn smooth_part(z: &Assignment) -> Result<Assignment> {
    from_indicator(&indicator_of(z)?)
}

/// Whether `z` is generated by its own contraction indicator.
pub fn is_smooth(z: &Assignment) -> Result<bool> {
    Ok(smooth_part(z)? == *z)
}

/// Outcome of a weight-data feasibility question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightOutcome {
    /// Weight data realizing the request.
    Witness(WeightData),
    /// No weight data exists; the multipliers replay an exact
    /// contradiction from the constraint system (see
    /// [`crate::ratlp::verify_certificate`]).
    Infeasible(Vec<Rat>),
}

/// The constraint system for "the indicator's assignment sits inside the
/// weight assignment of `a`": each maximal set stays light, the weights
/// are in `(0, 1]`, and the total exceeds 2.
fn superset_system(c: &ContractionIndicator) -> LinearSystem {
    let n = c.n as usize;
    let mut sys = LinearSystem::new(n);
    let zero = Rat::zero();
    let one = Rat::one();
    for &b in &c.maximal {
        let coeffs: Vec<Rat> = (0..n)
            .map(|i| if b >> i & 1 == 1 { one.clone() } else { zero.clone() })
            .collect();
        sys.push(coeffs, Relation::Le, one.clone()).unwrap();
    }
    for i in 0..n {
        let mut coeffs = vec![zero.clone(); n];
        coeffs[i] = one.clone();
        sys.push(coeffs.clone(), Relation::Gt, zero.clone()).unwrap();
        sys.push(coeffs, Relation::Le, one.clone()).unwrap();
    }
    sys.push(vec![one.clone(); n], Relation::Gt, rat(2, 1)).unwrap();
    sys
}

/// Closed-form weights for the three easy shapes of indicator, if any
/// applies: an unused label, a label used by only one maximal set, or all
/// maximal sets smaller than `n/2`.
fn superset_fast_path(c: &ContractionIndicator) -> Option<Vec<Rat>> {
    let n = c.n as u32;
    let used: u32 = c.maximal.iter().fold(0, |m, &b| m | b);
    // An unused label can carry weight 1 while everything else shares
    // slightly more than 1 between n-1 labels.
    if let Some(j) = (0..n).find(|&j| used >> j & 1 == 0) {
        let small = rat(1, (n - 2) as i64);
        return Some(
            (0..n)
                .map(|i| if i == j { Rat::one() } else { small.clone() })
                .collect(),
        );
    }
    // A label j in exactly one maximal set B: make j nearly heavy enough
    // to fill B alone; other members of B nearly weightless; outsiders
    // share slightly more than 1.  The covering clause bounds any other
    // maximal set away from all of B^c, which keeps it light.
    for j in 0..n {
        let holders: Vec<u32> = c
            .maximal
            .iter()
            .copied()
            .filter(|&b| b >> j & 1 == 1)
            .collect();
        if let [b] = holders[..] {
            let l = b.count_ones() as i64;
            let eps = rat(1, 2 * n as i64 * (n as i64 - l));
            let outsider = rat(1, n as i64 - l) + eps.clone();
            return Some(
                (0..n)
                    .map(|i| {
                        if i == j {
                            Rat::one() - rat(l - 1, 1) * eps.clone()
                        } else if b >> i & 1 == 1 {
                            eps.clone()
                        } else {
                            outsider.clone()
                        }
                    })
                    .collect(),
            );
        }
    }
    // All sets below half size: uniform weights just above 2/n.
    if c.maximal.iter().all(|&b| 2 * b.count_ones() < n) {
        let w = rat(2, n as i64) + rat(1, 2 * (n as i64) * (n as i64));
        return Some(vec![w; n as usize]);
    }
    None
}

/// Weight data whose weight assignment contains the indicator's
/// assignment, or an exact certificate that none exists.
pub fn exists_weight_superset(c: &ContractionIndicator) -> Result<WeightOutcome> {
    let sys = superset_system(c);
    if let Some(point) = superset_fast_path(c) {
        if !verify_witness(&sys, &point) {
            return Err(Error::invalid(
                "internal: closed-form weights failed verification",
            ));
        }
        return Ok(WeightOutcome::Witness(WeightData::new(point)?));
    }
    match feasible(&sys)? {
        LpResult::Feasible(point) => Ok(WeightOutcome::Witness(WeightData::new(point)?)),
        LpResult::Infeasible(cert) => Ok(WeightOutcome::Infeasible(cert)),
    }
}

/// The minimal label sets of size `2..=n-2` outside the indicator's
/// closure.  Non-members are upward closed in that size range, so every
/// non-member contains one of these.
pub fn minimal_non_members(c: &ContractionIndicator) -> Vec<u32> {
    let n = c.n as u32;
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    for mask in 0..=full {
        let size = mask.count_ones();
        if !(2..=n - 2).contains(&size) || c.contains(mask) {
            continue;
        }
        // Minimal: every one-smaller subset of size >= 2 is a member.
        let minimal = size == 2
            || mask_labels(mask)
                .into_iter()
                .all(|l| c.contains(mask & !(1u32 << (l - 1))));
        if minimal {
            out.push(mask);
        }
    }
    out
}

/// Weight data whose weight assignment equals the indicator's assignment,
/// or an exact certificate that none exists.
///
/// On top of the superset system, every minimal non-member must be heavy
/// (sum above 1); larger non-members are then heavy automatically.
pub fn is_weight_assignment(c: &ContractionIndicator) -> Result<WeightOutcome> {
    let n = c.n as usize;
    let mut sys = superset_system(c);
    let zero = Rat::zero();
    let one = Rat::one();
    for b in minimal_non_members(c) {
        let coeffs: Vec<Rat> = (0..n)
            .map(|i| if b >> i & 1 == 1 { one.clone() } else { zero.clone() })
            .collect();
        sys.push(coeffs, Relation::Gt, one.clone())?;
    }
    match feasible(&sys)? {
        LpResult::Feasible(point) => Ok(WeightOutcome::Witness(WeightData::new(point)?)),
        LpResult::Infeasible(cert) => Ok(WeightOutcome::Infeasible(cert)),
    }
}

/// Every valid contraction indicator of order `n`, by depth-first search
/// over compatible maximal antichains.  The count grows violently with
/// `n`, so the enumeration is limited to `n <= 5`.
pub fn all_indicators(n: u8) -> Result<Vec<ContractionIndicator>> {
    if !(3..=5).contains(&n) {
        return Err(Error::invalid(
            "indicator enumeration is limited to 3 <= n <= 5",
        ));
    }
    let full = (1u32 << n) - 1;
    let candidates: Vec<u32> = (0..=full)
        .filter(|m| (2..=(n as u32) - 2).contains(&m.count_ones()))
        .collect();
    let mut out = vec![ContractionIndicator { n, maximal: vec![] }];
    let mut stack: Vec<(usize, Vec<u32>)> = vec![(0, vec![])];
    while let Some((start, chosen)) = stack.pop() {
        for i in start..candidates.len() {
            let b = candidates[i];
            // Antichain and covering constraints against what's chosen.
            if chosen
                .iter()
                .all(|&a| a | b != full && a & !b != 0 && b & !a != 0)
            {
                let mut next = chosen.clone();
                next.push(b);
                let mut maximal = next.clone();
                maximal.sort_unstable();
                out.push(ContractionIndicator { n, maximal });
                stack.push((i + 1, next));
            }
        }
    }
    out.sort_by(|a, b| a.maximal.cmp(&b.maximal));
    Ok(out)
}

/// Parses an indicator or family file: a `n <int>` header, then one
/// comma-separated label subset per line.  `#` starts a comment.
pub fn parse_subsets_file(text: &str) -> Result<(u8, Vec<Vec<u8>>)> {
    let mut n: Option<u8> = None;
    let mut sets = Vec::new();
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
            let v: u8 = rest
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad label count `{rest}`")))?;
            n = Some(v);
            continue;
        }
        let mut labels = Vec::new();
        for part in line.split(',') {
            let l: u8 = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(pos, format!("bad label `{}`", part.trim())))?;
            labels.push(l);
        }
        sets.push(labels);
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing header `n <int>`"))?;
    Ok((n, sets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::assignments::{weight_assignment, BRUTE_GUARD};
    use crate::ratlp::verify_certificate;
    use num_traits::Signed;

    fn ind(n: u8, sets: &[&[u8]]) -> ContractionIndicator {
        let sets: Vec<Vec<u8>> = sets.iter().map(|s| s.to_vec()).collect();
        ContractionIndicator::from_sets(n, &sets).unwrap()
    }

    fn sp(text: &str) -> SetPartition {
        text.parse().unwrap()
    }

    #[test]
    fn validity_examples() {
        // Explicit downward closure of {{1,2,3},{1,2,4}}.
        let fam = [
            labels_mask(&[1, 2, 3]),
            labels_mask(&[1, 2, 4]),
            labels_mask(&[1, 2]),
            labels_mask(&[1, 3]),
            labels_mask(&[2, 3]),
            labels_mask(&[1, 4]),
            labels_mask(&[2, 4]),
        ];
        assert_eq!(check_indicator(5, &fam), None);
        // Drop a required subset: no longer downward closed.
        let gap: Vec<u32> = fam[..6].to_vec();
        assert!(check_indicator(5, &gap).unwrap().contains("downward"));
        // Two sets covering the ground set.
        let cover = [labels_mask(&[1, 2, 3]), labels_mask(&[3, 4, 5])];
        assert!(check_indicator(5, &cover).unwrap().contains("union"));
        assert!(ContractionIndicator::from_masks(5, cover.to_vec()).is_err());
        // The 4-set order-7 antichain is fine.
        let c7 = ind(7, &[&[1, 3, 4, 5], &[2, 4, 5, 6], &[1, 5, 6, 7], &[2, 3, 5, 7]]);
        assert_eq!(check_indicator(7, &c7.closure()), None);
        // Size out of range.
        assert!(check_indicator(5, &[labels_mask(&[1, 2, 3, 4])]).is_some());
    }

    #[test]
    fn from_indicator_examples() {
        let c = ind(6, &[&[1, 2, 3], &[2, 5, 6]]);
        let z = from_indicator(&c).unwrap();
        assert_eq!(
            z.generators(),
            &[sp("{1|2|3|4,5,6}"), sp("{2|5|6|1,3,4}")]
        );
        let empty = ContractionIndicator::from_masks(6, vec![]).unwrap();
        assert_eq!(from_indicator(&empty).unwrap(), Assignment::empty(6));
    }

    #[test]
    fn indicator_round_trip_order_5() {
        use crate::assignments::{is_extremal, ExtremalOutcome};
        let all = all_indicators(5).unwrap();
        // 15 three-sets and 10 two-sets give a decent antichain count.
        assert!(all.len() > 100);
        for c in &all {
            let z = from_indicator(c).unwrap();
            assert_eq!(&indicator_of(&z).unwrap(), c, "{:?}", c.maximal());
            assert_eq!(is_extremal(&z).unwrap(), ExtremalOutcome::Extremal);
            assert!(is_smooth(&z).unwrap());
            // Family round trip.
            assert_eq!(&from_family(&to_family(c)), c);
        }
    }

    #[test]
    fn family_examples() {
        let c = ind(5, &[&[1, 2, 3]]);
        assert_eq!(to_family(&c).edges(), &[labels_mask(&[4, 5])]);
        let f = SimpleIntersectingFamily::from_sets(
            5,
            &[vec![1, 2], vec![1, 3], vec![2, 3]],
        )
        .unwrap();
        let mut expect = vec![
            labels_mask(&[3, 4, 5]),
            labels_mask(&[2, 4, 5]),
            labels_mask(&[1, 4, 5]),
        ];
        expect.sort_unstable();
        assert_eq!(from_family(&f).maximal(), &expect[..]);
        assert_eq!(to_family(&from_family(&f)), f);
        // Disjoint members are rejected.
        assert!(SimpleIntersectingFamily::from_sets(6, &[vec![1, 2], vec![3, 4]]).is_err());
    }

    #[test]
    fn smooth_examples() {
        let z = Assignment::atomic(sp("{1,2|3,4|5,6|7,8}")).unwrap();
        assert!(!is_smooth(&z).unwrap());
        assert_eq!(smooth_part(&z).unwrap(), Assignment::empty(8));
        let a = WeightData::new(vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 1), rat(1, 1)])
            .unwrap();
        assert!(is_smooth(&weight_assignment(&a).unwrap()).unwrap());
        assert!(is_smooth(&Assignment::empty(6)).unwrap());
    }

    #[test]
    fn weight_superset_examples() {
        // The order-7 antichain admits no weight data: summing the four
        // lightness rows forces a negative weight.
        let c7 = ind(7, &[&[1, 3, 4, 5], &[2, 4, 5, 6], &[1, 5, 6, 7], &[2, 3, 5, 7]]);
        match exists_weight_superset(&c7).unwrap() {
            WeightOutcome::Infeasible(cert) => {
                assert!(verify_certificate(&superset_system(&c7), &cert));
            }
            WeightOutcome::Witness(w) => panic!("unexpected witness {w}"),
        }
        // A single light triple has the classic witness shape.
        let c5 = ind(5, &[&[1, 2, 3]]);
        match exists_weight_superset(&c5).unwrap() {
            WeightOutcome::Witness(a) => {
                let za = weight_assignment(&a).unwrap();
                let z = from_indicator(&c5).unwrap();
                let u = crate::assignments::universe(5, BRUTE_GUARD).unwrap();
                for g in u.trees() {
                    for v in 0..g.num_vertices() {
                        if z.member(g, v).unwrap() {
                            assert!(za.member(g, v).unwrap(), "{g} at {v}");
                        }
                    }
                }
                // The explicit point also satisfies the system.
                let named = vec![rat(1, 3), rat(1, 3), rat(1, 3), rat(1, 1), rat(1, 1)];
                assert!(verify_witness(&superset_system(&c5), &named));
            }
            WeightOutcome::Infeasible(_) => panic!("expected a witness"),
        }
    }

    #[test]
    fn fast_paths_cover_the_three_conditions() {
        // Unused label 5.
        let c1 = ind(5, &[&[1, 2], &[2, 3], &[1, 3], &[1, 4], &[2, 4], &[3, 4]]);
        // Label 4 in exactly one maximal set, sets reaching half size.
        let c2 = ind(6, &[&[1, 2, 3], &[1, 2, 4]]);
        // All sets below half size.
        let c3 = ind(7, &[&[1, 2], &[2, 3], &[1, 3]]);
        for c in [&c1, &c2, &c3] {
            let point = superset_fast_path(c).expect("fast path should apply");
            assert!(verify_witness(&superset_system(c), &point), "{:?}", c.maximal());
        }
        // Heavy-overlap antichains fall through to the solver.
        let c7 = ind(7, &[&[1, 3, 4, 5], &[2, 4, 5, 6], &[1, 5, 6, 7], &[2, 3, 5, 7]]);
        assert_eq!(superset_fast_path(&c7), None);
    }

    #[test]
    fn weight_assignment_examples() {
        // Two overlapping triples force a third light triple, so no
        // weight data reproduces the indicator exactly...
        let c = ind(6, &[&[1, 2, 3], &[2, 5, 6]]);
        match is_weight_assignment(&c).unwrap() {
            WeightOutcome::Infeasible(cert) => assert!(cert.iter().any(|m| !m.is_zero())),
            WeightOutcome::Witness(w) => panic!("unexpected witness {w}"),
        }
        // ...even though a superset exists (label 4 is in no set).
        assert!(matches!(
            exists_weight_superset(&c).unwrap(),
            WeightOutcome::Witness(_)
        ));
        // A single light triple is exactly a weight assignment.
        let c5 = ind(5, &[&[1, 2, 3]]);
        match is_weight_assignment(&c5).unwrap() {
            WeightOutcome::Witness(a) => {
                assert_eq!(&indicator_of(&weight_assignment(&a).unwrap()).unwrap(), &c5);
            }
            WeightOutcome::Infeasible(_) => panic!("expected a witness"),
        }
        // The empty indicator: everything must stay heavy; all-ones works.
        let empty = ContractionIndicator::from_masks(6, vec![]).unwrap();
        match is_weight_assignment(&empty).unwrap() {
            WeightOutcome::Witness(a) => {
                assert!(a.weights().iter().all(|w| w.is_positive()));
                assert_eq!(
                    indicator_of(&weight_assignment(&a).unwrap()).unwrap(),
                    empty
                );
            }
            WeightOutcome::Infeasible(_) => panic!("expected a witness"),
        }
    }

    #[test]
    fn minimal_non_members_are_minimal_and_covering() {
        let c = ind(6, &[&[1, 2, 3], &[2, 5, 6]]);
        let mins = minimal_non_members(&c);
        let full = (1u32 << 6) - 1;
        for &b in &mins {
            assert!(!c.contains(b));
        }
        for mask in 0..=full {
            let size = mask.count_ones();
            if (2..=4).contains(&size) && !c.contains(mask) {
                assert!(
                    mins.iter().any(|&b| b & !mask == 0),
                    "{} lacks a minimal core",
                    set_text(mask)
                );
            }
        }
    }

    #[test]
    fn subsets_file_round_trip() {
        let c = ind(6, &[&[1, 2, 3], &[2, 5, 6]]);
        let text = c.to_string();
        let (n, sets) = parse_subsets_file(&text).unwrap();
        assert_eq!(ContractionIndicator::from_sets(n, &sets).unwrap(), c);
        assert!(parse_subsets_file("1,2\n").is_err());
        assert!(parse_subsets_file("n 6\n1,x\n").is_err());
        let (n, sets) = parse_subsets_file("n 5 # five\n# nothing\n").unwrap();
        assert_eq!((n, sets.len()), (5, 0));
    }
}
