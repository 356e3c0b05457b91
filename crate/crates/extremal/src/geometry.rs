//! Boundary classes, F-curves and the intersection pairing.
//!
//! The curve cone of the moduli space is generated by one-dimensional
//! boundary strata (*F-curves*), one per partition of the labels into
//! four nonempty parts; divisor classes are spanned by the boundary
//! classes `D_J`.  The pairing of the two is a simple case split (+1 on
//! the three pair-splits, -1 on the four parts, 0 otherwise), which makes
//! "is there a nef divisor contracting exactly these curves" an exact
//! rational LP.  This module computes the pairing, the set of curves
//! contracted by an assignment, and witness/certificate answers to the
//! nef-divisor question, both for general classes and for the
//! permutation-invariant classes `D_k`.

use crate::assignments::Assignment;
use crate::invariant::{inv_member, InvariantAssignment};
use crate::partitions::{mask_labels, IntegerPartition, SetPartition};
use crate::ratlp::{feasible, LinearSystem, LpResult, Rat, Relation};
use crate::trees::LabeledTree;
use crate::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A boundary divisor class `D_J`, stored by the side containing label 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoundaryClass {
    n: u8,
    j: u32,
}

impl BoundaryClass {
    /// Builds `D_J` from either side of the split.
    pub fn new(n: u8, side: u32) -> Result<Self> {
        let full = (1u32 << n) - 1;
        if side & !full != 0 {
            return Err(Error::invalid("side uses labels above n"));
        }
        let j = if side & 1 == 1 { side } else { full & !side };
        let c = j.count_ones();
        if !(2..=(n as u32) - 2).contains(&c) {
            return Err(Error::invalid(format!(
                "boundary side size {c} outside 2..={}",
                n - 2
            )));
        }
        Ok(BoundaryClass { n, j })
    }

    /// Label count.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The canonical side (contains label 1).
    pub fn side(&self) -> u32 {
        self.j
    }

    /// min(|J|, n-|J|): the size class this divisor belongs to.
    pub fn folded_size(&self) -> u32 {
        let c = self.j.count_ones();
        c.min(self.n as u32 - c)
    }

    /// All canonical boundary classes of order `n`, sorted.
    pub fn all(n: u8) -> Vec<BoundaryClass> {
        let full = (1u32 << n) - 1;
        (0..=full)
            .filter(|j| j & 1 == 1 && (2..=(n as u32) - 2).contains(&j.count_ones()))
            .map(|j| BoundaryClass { n, j })
            .collect()
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> =
            mask_labels(self.j).into_iter().map(|l| l.to_string()).collect();
        write!(f, "D{{{}}}", labels.join(","))
    }
}

/// An F-curve: four disjoint nonempty label parts covering `{1..n}`,
/// stored sorted so equal curve classes compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FCurve {
    n: u8,
    parts: [u32; 4],
}

impl FCurve {
    /// Validates the exact cover and canonicalizes the part order.
    pub fn new(n: u8, mut parts: [u32; 4]) -> Result<Self> {
        let full = (1u32 << n) - 1;
        let mut seen = 0u32;
        for &p in &parts {
            if p == 0 {
                return Err(Error::invalid("F-curve parts must be nonempty"));
            }
            if p & seen != 0 {
                return Err(Error::invalid("F-curve parts must be disjoint"));
            }
            seen |= p;
        }
        if seen != full {
            return Err(Error::invalid("F-curve parts must cover all labels"));
        }
        parts.sort_unstable();
        Ok(FCurve { n, parts })
    }

    /// Label count.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// The four parts, sorted by smallest label.
    pub fn parts(&self) -> &[u32; 4] {
        &self.parts
    }

    /// The part sizes as an integer partition (the curve's type).
    pub fn ftype(&self) -> IntegerPartition {
        IntegerPartition::new(&self.parts.map(|p| p.count_ones()))
            .expect("four nonempty parts")
    }

    /// Every F-curve of order `n` (one per 4-block set partition).
    pub fn all(n: u8) -> Result<Vec<FCurve>> {
        if n < 4 {
            return Err(Error::invalid("F-curves need at least 4 labels"));
        }
        Ok(SetPartition::enumerate(n, Some(4))
            .into_iter()
            .map(|p| {
                let m = p.masks();
                FCurve::new(n, [m[0], m[1], m[2], m[3]]).expect("enumerated cover")
            })
            .collect())
    }

    /// The star tree realizing this curve, with its moving center.
    pub fn star(&self) -> Result<(LabeledTree, usize)> {
        LabeledTree::star(&SetPartition::from_masks(self.n, self.parts.to_vec())?)
    }
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .parts
            .iter()
            .map(|&p| {
                let labels: Vec<String> =
                    mask_labels(p).into_iter().map(|l| l.to_string()).collect();
                labels.join(",")
            })
            .collect();
        write!(f, "F{{{}}}", blocks.join("|"))
    }
}

impl FromStr for FCurve {
    type Err = Error;

    /// Parses `F{1|2|3|4,5,6}`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('F')
            .ok_or_else(|| Error::parse(0, "expected `F{...}`"))?;
        let p: SetPartition = body.parse()?;
        if p.num_blocks() != 4 {
            return Err(Error::invalid(format!(
                "an F-curve has 4 parts, found {}",
                p.num_blocks()
            )));
        }
        let m = p.masks();
        FCurve::new(p.n(), [m[0], m[1], m[2], m[3]])
    }
}

/// Parses an F-curve type `F(5,1,1,1)` into a 4-part integer partition.
pub fn parse_ftype(s: &str) -> Result<IntegerPartition> {
    let body = s
        .trim()
        .strip_prefix('F')
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::parse(0, "expected `F(a,b,c,d)`"))?;
    let mut parts = Vec::new();
    for piece in body.split(',') {
        let v: u32 = piece
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("bad part `{}`", piece.trim())))?;
        parts.push(v);
    }
    let t = IntegerPartition::new(&parts)?;
    check_ftype(&t)?;
    Ok(t)
}

fn check_ftype(t: &IntegerPartition) -> Result<()> {
    if t.num_parts() != 4 {
        return Err(Error::invalid(format!(
            "an F-curve type has 4 parts, found {}",
            t.num_parts()
        )));
    }
    Ok(())
}

/// All F-curve types of order `n`: partitions of `n` into exactly 4 parts.
pub fn all_ftypes(n: u8) -> Result<Vec<IntegerPartition>> {
    if n < 4 {
        return Err(Error::invalid("F-curves need at least 4 labels"));
    }
    let n = n as u32;
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=a {
            for c in 1..=b {
                let rest = n as i64 - (a + b + c) as i64;
                if rest >= 1 && rest <= c as i64 {
                    out.push(IntegerPartition::new(&[a, b, c, rest as u32]).unwrap());
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The intersection number `F . D_J`: +1 when the split separates two
/// parts from the other two, -1 when it cuts off a single part, else 0.
pub fn intersect(f: &FCurve, d: &BoundaryClass) -> Result<i64> {
    if f.n != d.n {
        return Err(Error::SizeMismatch(f.n, d.n));
    }
    let full = (1u32 << f.n) - 1;
    let [a, b, c, e] = f.parts;
    for union in [a | b, a | c, a | e] {
        if d.j == union || d.j == full & !union {
            return Ok(1);
        }
    }
    for part in f.parts {
        if d.j == part || d.j == full & !part {
            return Ok(-1);
        }
    }
    Ok(0)
}

/// The pairing of an F-curve type against the invariant class
/// `D_k = sum of all D_J with min(|J|, n-|J|) = k`: pair-splits folding
/// to size `k` count +1 each, parts folding to size `k` count -1 each.
pub fn intersect_sym(ftype: &IntegerPartition, k: u32) -> Result<i64> {
    check_ftype(ftype)?;
    let n = ftype.total();
    if !(2..=n / 2).contains(&k) {
        return Err(Error::invalid(format!("k = {k} outside 2..={}", n / 2)));
    }
    let p = ftype.parts();
    let fold = |s: u32| s.min(n - s);
    let mut v = 0i64;
    for split in [p[0] + p[1], p[0] + p[2], p[0] + p[3]] {
        if fold(split) == k {
            v += 1;
        }
    }
    for &part in p {
        if fold(part) == k {
            v -= 1;
        }
    }
    Ok(v)
}

/// The F-curves whose moving central component `z` selects.
pub fn contracted_fcurves(z: &Assignment) -> Result<Vec<FCurve>> {
    let mut out = Vec::new();
    for f in FCurve::all(z.n())? {
        let (g, center) = f.star()?;
        if z.member(&g, center)? {
            out.push(f);
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// The F-curve types whose moving central component `f` selects.
pub fn contracted_ftypes(f: &InvariantAssignment) -> Result<Vec<IntegerPartition>> {
    let n = f.n();
    if n > u8::MAX as u32 {
        return Err(Error::invalid("order too large"));
    }
    let mut out = Vec::new();
    for t in all_ftypes(n as u8)? {
        let mut blocks = Vec::new();
        let mut next = 1u8;
        for &s in t.parts() {
            blocks.push((next..next + s as u8).collect::<Vec<u8>>());
            next += s as u8;
        }
        let p = SetPartition::from_blocks(n as u8, &blocks)?;
        let (g, center) = LabeledTree::star(&p)?;
        if inv_member(f, &g, center)? {
            out.push(t);
        }
    }
    Ok(out)
}

/// A divisor class written in boundary classes, zero coefficients omitted.
///
/// `Full` maps canonical sides to coefficients (`1*D{1,2}+...`);
/// `Symmetric` maps folded sizes `k` to coefficients of the invariant
/// classes `D_k` (`6*D2+11*D3+8*D4`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisorExpr {
    Full { n: u8, coeffs: BTreeMap<u32, Rat> },
    Symmetric { n: u8, coeffs: BTreeMap<u32, Rat> },
}

impl DivisorExpr {
    /// Label count.
    pub fn n(&self) -> u8 {
        match self {
            DivisorExpr::Full { n, .. } | DivisorExpr::Symmetric { n, .. } => *n,
        }
    }

    /// Builds a full expression, dropping zero coefficients.
    pub fn full(n: u8, terms: Vec<(BoundaryClass, Rat)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (d, c) in terms {
            if d.n() != n {
                return Err(Error::SizeMismatch(n, d.n()));
            }
            if !c.is_zero() {
                *coeffs.entry(d.side()).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(DivisorExpr::Full { n, coeffs })
    }

    /// Builds a symmetric expression, dropping zero coefficients.
    pub fn symmetric(n: u8, terms: Vec<(u32, Rat)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (k, c) in terms {
            if !(2..=n as u32 / 2).contains(&k) {
                return Err(Error::invalid(format!("k = {k} outside 2..={}", n / 2)));
            }
            if !c.is_zero() {
                *coeffs.entry(k).or_insert_with(Rat::zero) += c;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(DivisorExpr::Symmetric { n, coeffs })
    }
}

impl fmt::Display for DivisorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = match self {
            DivisorExpr::Full { n, coeffs } => coeffs
                .iter()
                .map(|(&j, c)| format!("{c}*{}", BoundaryClass { n: *n, j }))
                .collect(),
            DivisorExpr::Symmetric { coeffs, .. } => {
                coeffs.iter().map(|(k, c)| format!("{c}*D{k}")).collect()
            }
        };
        if terms.is_empty() {
            return write!(f, "0");
        }
        // Negative coefficients begin their own term with '-'.
        let mut out = String::new();
        for t in terms {
            if !out.is_empty() && !t.starts_with('-') {
                out.push('+');
            }
            out.push_str(&t);
        }
        write!(f, "{out}")
    }
}

/// Parses `6*D2+11*D3+8*D4` or `1*D{1,2}+2*D{1,3}` (for the full form,
/// `n` is taken from the largest label).  A bare `Dk`/`D{...}` means
/// coefficient 1; coefficients may be rational (`3/2*D2`).
pub fn parse_divisor(s: &str, n: u8) -> Result<DivisorExpr> {
    // Split into terms at top-level '+'/'-' (never inside braces).
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "0" {
        // The zero divisor, printed by `Display` for empty expressions.
        return DivisorExpr::symmetric(n, Vec::new());
    }
    let mut terms: Vec<String> = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '{' => depth += 1,
            '}' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => {
                terms.push(std::mem::take(&mut cur));
            }
            _ => {}
        }
        if !(ch == '+' && depth == 0 && i > 0) {
            cur.push(ch);
        }
    }
    terms.push(cur);
    let mut full_terms: Vec<(BoundaryClass, Rat)> = Vec::new();
    let mut sym_terms: Vec<(u32, Rat)> = Vec::new();
    for term in &terms {
        if term.is_empty() {
            return Err(Error::parse(0, "empty divisor term"));
        }
        let (coef_text, class_text) = match term.find("*D") {
            Some(i) => (&term[..i], &term[i + 1..]),
            None => ("1", term.as_str()),
        };
        let coef = parse_rat(coef_text)?;
        let body = class_text
            .strip_prefix('D')
            .ok_or_else(|| Error::parse(0, format!("expected `D...` in `{term}`")))?;
        if let Some(inner) = body.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let mut mask = 0u32;
            for piece in inner.split(',') {
                let l: u8 = piece
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(0, format!("bad label `{piece}`")))?;
                if l == 0 || l > n {
                    return Err(Error::invalid(format!("label {l} outside 1..={n}")));
                }
                mask |= 1 << (l - 1);
            }
            full_terms.push((BoundaryClass::new(n, mask)?, coef));
        } else {
            let k: u32 = body
                .parse()
                .map_err(|_| Error::parse(0, format!("bad size class `{body}`")))?;
            sym_terms.push((k, coef));
        }
    }
    match (full_terms.is_empty(), sym_terms.is_empty()) {
        (false, true) => DivisorExpr::full(n, full_terms),
        (true, false) => DivisorExpr::symmetric(n, sym_terms),
        _ => Err(Error::invalid(
            "divisor mixes explicit D{...} and symmetric Dk terms",
        )),
    }
}

fn parse_rat(s: &str) -> Result<Rat> {
    let (sign, s) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s),
    };
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let num: i64 = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad coefficient `{s}`")))?;
    let den: i64 = den
        .parse()
        .map_err(|_| Error::parse(0, format!("bad coefficient `{s}`")))?;
    if den == 0 {
        return Err(Error::invalid("zero denominator"));
    }
    Ok(crate::ratlp::rat(sign * num, den))
}

/// Outcome of a nef-divisor feasibility question.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FnefOutcome {
    /// A divisor pairing to zero exactly on the requested curves and
    /// positively on all others.
    Witness(DivisorExpr),
    /// No such divisor; the multipliers combine the pairing rows into an
    /// exact contradiction (see [`crate::ratlp::verify_certificate`]).
    Infeasible(Vec<Rat>),
}

/// Searches for a divisor with `N . F = 0` exactly on `contracted` and
/// `N . F >= 1` on every other F-curve of order `n`.
///
/// The unknowns are the coefficients of all canonical boundary classes.
/// Those coefficients are not unique for a given divisor class (the
/// boundary classes satisfy linear relations), but every relation pairs
/// to zero with every curve, so feasibility does not depend on the
/// representative.  Positivity on non-contracted curves is normalized
/// from `> 0` to `>= 1` by scale invariance.
pub fn fnef_witness(n: u8, contracted: &[FCurve]) -> Result<FnefOutcome> {
    let classes = BoundaryClass::all(n);
    let curves = FCurve::all(n)?;
    for f in contracted {
        if f.n() != n {
            return Err(Error::SizeMismatch(n, f.n()));
        }
    }
    let mut sys = LinearSystem::new(classes.len());
    for f in &curves {
        let coeffs: Vec<Rat> = classes
            .iter()
            .map(|d| Rat::from_integer(intersect(f, d).expect("same n").into()))
            .collect();
        if contracted.contains(f) {
            sys.push(coeffs, Relation::Eq, Rat::zero())?;
        } else {
            sys.push(coeffs, Relation::Ge, Rat::one())?;
        }
    }
    match feasible(&sys)? {
        LpResult::Feasible(point) => {
            let terms: Vec<(BoundaryClass, Rat)> =
                classes.into_iter().zip(point).collect();
            Ok(FnefOutcome::Witness(DivisorExpr::full(n, terms)?))
        }
        LpResult::Infeasible(cert) => Ok(FnefOutcome::Infeasible(cert)),
    }
}

/// The symmetric variant of [`fnef_witness`], over curve types and the
/// invariant classes `D_2 .. D_{n/2}`.
pub fn fnef_witness_sym(n: u8, contracted: &[IntegerPartition]) -> Result<FnefOutcome> {
    for t in contracted {
        check_ftype(t)?;
        if t.total() != n as u32 {
            return Err(Error::invalid(format!(
                "type {t} partitions {} instead of {n}",
                t.total()
            )));
        }
    }
    let ks: Vec<u32> = (2..=n as u32 / 2).collect();
    let types = all_ftypes(n)?;
    let mut sys = LinearSystem::new(ks.len());
    for t in &types {
        let coeffs: Vec<Rat> = ks
            .iter()
            .map(|&k| Rat::from_integer(intersect_sym(t, k).expect("valid k").into()))
            .collect();
        if contracted.contains(t) {
            sys.push(coeffs, Relation::Eq, Rat::zero())?;
        } else {
            sys.push(coeffs, Relation::Ge, Rat::one())?;
        }
    }
    match feasible(&sys)? {
        LpResult::Feasible(point) => {
            let terms: Vec<(u32, Rat)> = ks.into_iter().zip(point).collect();
            Ok(FnefOutcome::Witness(DivisorExpr::symmetric(n, terms)?))
        }
        LpResult::Infeasible(cert) => Ok(FnefOutcome::Infeasible(cert)),
    }
}

/// Pairs a divisor expression against a single F-curve.
pub fn pair(d: &DivisorExpr, f: &FCurve) -> Result<Rat> {
    if d.n() != f.n() {
        return Err(Error::SizeMismatch(d.n(), f.n()));
    }
    let mut v = Rat::zero();
    match d {
        DivisorExpr::Full { n, coeffs } => {
            for (&j, c) in coeffs {
                let class = BoundaryClass::new(*n, j)?;
                v += c * Rat::from_integer(intersect(f, &class)?.into());
            }
        }
        DivisorExpr::Symmetric { coeffs, .. } => {
            let t = f.ftype();
            for (&k, c) in coeffs {
                v += c * Rat::from_integer(intersect_sym(&t, k)?.into());
            }
        }
    }
    Ok(v)
}

/// Pairs a symmetric divisor against every F-curve type: returns the
/// types pairing to zero and whether every pairing is nonnegative.
pub fn verify_ray(n: u8, d: &DivisorExpr) -> Result<(Vec<IntegerPartition>, bool)> {
    let DivisorExpr::Symmetric { n: dn, coeffs } = d else {
        return Err(Error::invalid("verify_ray needs a symmetric divisor"));
    };
    if *dn != n {
        return Err(Error::SizeMismatch(n, *dn));
    }
    let mut zeros = Vec::new();
    let mut nonneg = true;
    for t in all_ftypes(n)? {
        let mut v = Rat::zero();
        for (&k, c) in coeffs {
            v += c * Rat::from_integer(intersect_sym(&t, k)?.into());
        }
        if v.is_zero() {
            zeros.push(t);
        } else if v < Rat::zero() {
            nonneg = false;
        }
    }
    Ok((zeros, nonneg))
}
