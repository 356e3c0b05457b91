//! Stable `n`-labeled trees.
//!
//! A stable `n`-labeled tree is a finite tree whose leaves carry the labels
//! `1..n` and whose internal vertices all have valence ≥ 3 (counting both
//! internal edges and attached labels).  Such a tree is determined by the
//! set of *splits* of its internal edges: for each internal edge, the label
//! set on the side away from label 1.  Splits are pairwise laminar (nested
//! or disjoint), which is what enumeration and contraction exploit.
//!
//! Vertices are numbered in pre-order from the vertex carrying label 1,
//! with children ordered by their minimum subtree label, so two equal trees
//! always have identical vertex numbering.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::partitions::{mask_labels, SetPartition, MAX_GROUND_SET};
use crate::Result;

/// Default guard for exhaustive tree enumeration.
pub const ENUMERATION_GUARD: u8 = 9;

/// A stable `n`-labeled tree in canonical vertex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LabeledTree {
    n: u8,
    /// `labels[v]` = bitmask of labels attached to internal vertex `v`.
    labels: Vec<u32>,
    /// Internal edges `(parent, child)` in pre-order discovery order.
    edges: Vec<(usize, usize)>,
}

impl LabeledTree {
    /// Build and canonicalize a tree, validating stability.
    pub fn new(n: u8, labels: Vec<u32>, edges: Vec<(usize, usize)>) -> Result<Self> {
        check_stable(n, &labels, &edges)?;
        Ok(Self::canonicalize(n, labels, edges))
    }

    fn canonicalize(n: u8, labels: Vec<u32>, edges: Vec<(usize, usize)>) -> Self {
        let k = labels.len();
        let mut adj = vec![Vec::new(); k];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        // min label reachable from `v` when entered from `parent`
        fn min_label(v: usize, parent: usize, labels: &[u32], adj: &[Vec<usize>]) -> u32 {
            let mut m = if labels[v] == 0 { u32::MAX } else { labels[v].trailing_zeros() };
            for &w in &adj[v] {
                if w != parent {
                    m = m.min(min_label(w, v, labels, adj));
                }
            }
            m
        }
        let root = (0..k).find(|&v| labels[v] & 1 == 1).expect("label 1 is attached somewhere");
        let mut order = Vec::with_capacity(k);
        let mut new_edges = Vec::with_capacity(k - 1);
        let mut stack = vec![(root, usize::MAX)];
        let mut new_id = vec![usize::MAX; k];
        while let Some((v, parent)) = stack.pop() {
            new_id[v] = order.len();
            order.push(v);
            if parent != usize::MAX {
                new_edges.push((new_id[parent], new_id[v]));
            }
            let mut children: Vec<usize> = adj[v].iter().copied().filter(|&w| w != parent).collect();
            children.sort_by_key(|&w| min_label(w, v, &labels, &adj));
            // push in reverse so the smallest-label child is visited first
            for &w in children.iter().rev() {
                stack.push((w, v));
            }
        }
        let new_labels = order.iter().map(|&v| labels[v]).collect();
        LabeledTree { n, labels: new_labels, edges: new_edges }
    }

    /// Rebuild a tree from its split set (for each internal edge, the label
    /// mask of the side away from label 1).  Splits must be pairwise laminar
    /// with sizes in `2..=n−2`.
    pub fn from_splits(n: u8, splits: &[u32]) -> Result<Self> {
        let mut splits: Vec<u32> = splits.to_vec();
        splits.sort_unstable();
        splits.dedup();
        for (i, &a) in splits.iter().enumerate() {
            if a & 1 != 0 {
                return Err(Error::invalid("split sides must avoid label 1"));
            }
            let c = a.count_ones();
            if !(2..=(n as u32 - 2)).contains(&c) {
                return Err(Error::invalid("split side size out of range"));
            }
            for &b in &splits[i + 1..] {
                if a & b != 0 && a & !b != 0 && b & !a != 0 {
                    return Err(Error::invalid("splits are not laminar"));
                }
            }
        }
        // Laminar forest: parent of a split is its smallest proper superset.
        let k = splits.len();
        let mut parent = vec![usize::MAX; k];
        for i in 0..k {
            let mut best: Option<usize> = None;
            for j in 0..k {
                if i != j && splits[i] & !splits[j] == 0 && splits[i] != splits[j] {
                    if best.map_or(true, |b| splits[j].count_ones() < splits[b].count_ones()) {
                        best = Some(j);
                    }
                }
            }
            parent[i] = best.unwrap_or(usize::MAX);
        }
        // Vertex 0 is the root (label-1 side); vertex i+1 realizes split i.
        let mut labels = vec![0u32; k + 1];
        let mut edges = Vec::with_capacity(k);
        let mut child_union = vec![0u32; k + 1];
        for i in 0..k {
            let p = if parent[i] == usize::MAX { 0 } else { parent[i] + 1 };
            edges.push((p, i + 1));
            child_union[p] |= splits[i];
        }
        let full = (1u32 << n) - 1;
        labels[0] = full & !splits.iter().fold(0, |m, &s| m | s);
        for i in 0..k {
            labels[i + 1] = splits[i] & !child_union[i + 1];
        }
        LabeledTree::new(n, labels, edges)
    }

    /// Label count.
    pub fn n(&self) -> u8 {
        self.n
    }

    /// Number of internal vertices.
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Labels attached to vertex `v`, as a bitmask.
    pub fn label_mask(&self, v: usize) -> u32 {
        self.labels[v]
    }

    /// Internal edges `(parent, child)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Internal neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Valence of `v`: internal edges plus attached labels.
    pub fn valence(&self, v: usize) -> u32 {
        self.neighbors(v).len() as u32 + self.labels[v].count_ones()
    }

    /// Label mask of the side of edge `(u, w)` containing `u`.
    pub fn side_labels(&self, u: usize, w: usize) -> u32 {
        let mut mask = 0u32;
        let mut stack = vec![(u, w)];
        while let Some((v, blocked)) = stack.pop() {
            mask |= self.labels[v];
            for x in self.neighbors(v) {
                if x != blocked {
                    stack.push((x, v));
                }
            }
        }
        mask
    }

    /// The split set: for each internal edge, the label mask of the side
    /// away from label 1, sorted.  A complete identity key for the tree.
    pub fn splits(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .edges
            .iter()
            .map(|&(u, w)| {
                let side = self.side_labels(u, w);
                if side & 1 == 0 {
                    side
                } else {
                    ((1u32 << self.n) - 1) & !side
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// The partition of `{1..n}` into the branches at `v`: one block per
    /// adjacent internal edge (the labels beyond it) plus one singleton per
    /// label attached at `v`.
    pub fn basic_partition(&self, v: usize) -> SetPartition {
        let mut blocks: Vec<u32> = self
            .neighbors(v)
            .into_iter()
            .map(|w| self.side_labels(w, v))
            .collect();
        for l in mask_labels(self.labels[v]) {
            blocks.push(1 << (l - 1));
        }
        SetPartition::from_masks(self.n, blocks).expect("branches partition the label set")
    }

    /// The vertex whose basic partition equals `p`, if any.  Distinct
    /// vertices always have distinct basic partitions.
    pub fn vertex_with_basic_partition(&self, p: &SetPartition) -> Option<usize> {
        (0..self.num_vertices()).find(|&v| self.basic_partition(v) == *p)
    }

    /// Whether `s` is a nonempty connected set of internal vertices.
    pub fn is_connected_set(&self, s: &[usize]) -> bool {
        if s.is_empty() || s.iter().any(|&v| v >= self.num_vertices()) {
            return false;
        }
        let mut stack = vec![s[0]];
        let mut count = 0;
        let mut visited = vec![false; self.num_vertices()];
        while let Some(v) = stack.pop() {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            count += 1;
            for w in self.neighbors(v) {
                if s.contains(&w) && !visited[w] {
                    stack.push(w);
                }
            }
        }
        count == s.len()
    }

    /// Contract the connected vertex set `s` to a single vertex; returns the
    /// contracted tree and the id of the merged vertex in it.
    pub fn contract(&self, s: &[usize]) -> Result<(LabeledTree, usize)> {
        let mut s: Vec<usize> = s.to_vec();
        s.sort_unstable();
        s.dedup();
        if !self.is_connected_set(&s) {
            return Err(Error::invalid("contraction set must be nonempty and connected"));
        }
        if s.len() == 1 {
            return Ok((self.clone(), s[0]));
        }
        // New vertex ids: merged vertex is 0, the rest keep relative order.
        let k = self.num_vertices();
        let mut new_id = vec![usize::MAX; k];
        let mut next = 1;
        for v in 0..k {
            if s.contains(&v) {
                new_id[v] = 0;
            } else {
                new_id[v] = next;
                next += 1;
            }
        }
        let mut labels = vec![0u32; next];
        for v in 0..k {
            labels[new_id[v]] |= self.labels[v];
        }
        let mut edges = Vec::new();
        for &(u, w) in &self.edges {
            if new_id[u] != new_id[w] {
                edges.push((new_id[u], new_id[w]));
            }
        }
        // Identify the merged vertex in the canonical result by its basic
        // partition: branches off `s` plus singletons for s's own labels.
        let mut merged_blocks: Vec<u32> = Vec::new();
        for &v in &s {
            for w in self.neighbors(v) {
                if !s.contains(&w) {
                    merged_blocks.push(self.side_labels(w, v));
                }
            }
            for l in mask_labels(self.labels[v]) {
                merged_blocks.push(1 << (l - 1));
            }
        }
        let merged_bp = SetPartition::from_masks(self.n, merged_blocks)?;
        let tree = LabeledTree::new(self.n, labels, edges)?;
        let merged = tree
            .vertex_with_basic_partition(&merged_bp)
            .expect("merged vertex exists in the contraction");
        Ok((tree, merged))
    }

    /// The star tree of a partition `P` with `3 ≤ |P| ≤ n−1`: a center
    /// carrying the singleton-block labels, one satellite per larger block.
    /// Returns the tree and the center's vertex id.
    pub fn star(p: &SetPartition) -> Result<(LabeledTree, usize)> {
        let k = p.num_blocks();
        if k < 3 || k as u8 > p.n() - 1 {
            return Err(Error::invalid(format!(
                "star tree needs 3 ≤ |P| ≤ n−1; got {k} blocks with n = {}",
                p.n()
            )));
        }
        let mut labels = vec![0u32];
        let mut edges = Vec::new();
        for &b in p.masks() {
            if b.count_ones() == 1 {
                labels[0] |= b;
            } else {
                labels.push(b);
                edges.push((0, labels.len() - 1));
            }
        }
        let tree = LabeledTree::new(p.n(), labels, edges)?;
        let center = tree
            .vertex_with_basic_partition(p)
            .expect("center realizes the defining partition");
        Ok((tree, center))
    }

    /// For each internal edge, the two complementary label sets, the side
    /// containing label 1 first; sorted by that side.
    pub fn edge_tails(&self) -> Vec<(Vec<u8>, Vec<u8>)> {
        let full = (1u32 << self.n) - 1;
        let mut out: Vec<(u32, u32)> = self
            .edges
            .iter()
            .map(|&(u, w)| {
                let side = self.side_labels(u, w);
                if side & 1 == 1 {
                    (side, full & !side)
                } else {
                    (full & !side, side)
                }
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(a, b)| (mask_labels(a), mask_labels(b))).collect()
    }
}

/// Validate tree structure and stability; `Err` carries the reason.
pub fn check_stable(n: u8, labels: &[u32], edges: &[(usize, usize)]) -> Result<()> {
    if n < 3 || n > MAX_GROUND_SET {
        return Err(Error::invalid(format!("label count {n} out of range 3..={MAX_GROUND_SET}")));
    }
    let k = labels.len();
    if k == 0 {
        return Err(Error::invalid("tree has no internal vertex"));
    }
    if edges.len() != k - 1 {
        return Err(Error::invalid("edge count must be vertex count − 1 (cyclic or disconnected)"));
    }
    let full = (1u32 << n) - 1;
    let mut seen = 0u32;
    for &l in labels {
        if l & seen != 0 {
            return Err(Error::invalid("a label is attached twice"));
        }
        if l & !full != 0 {
            return Err(Error::invalid("a label exceeds n"));
        }
        seen |= l;
    }
    if seen != full {
        return Err(Error::invalid("every label 1..n must be attached"));
    }
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        if u >= k || v >= k || u == v {
            return Err(Error::invalid("edge endpoint out of range"));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    // connectivity
    let mut visited = vec![false; k];
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if visited[v] {
            continue;
        }
        visited[v] = true;
        stack.extend(adj[v].iter().copied());
    }
    if visited.iter().any(|&v| !v) {
        return Err(Error::invalid("internal graph is disconnected"));
    }
    for v in 0..k {
        let valence = adj[v].len() as u32 + labels[v].count_ones();
        if valence < 3 {
            return Err(Error::invalid(format!("vertex {v} has valence {valence} < 3")));
        }
    }
    Ok(())
}

/// Whether the given structure is a stable `n`-labeled tree.
pub fn is_stable(n: u8, labels: &[u32], edges: &[(usize, usize)]) -> bool {
    check_stable(n, labels, edges).is_ok()
}

/// Enumerate all stable `n`-labeled trees, optionally with exactly `k`
/// internal vertices; one representative per labeled tree, sorted by
/// (vertex count, split set).
pub fn enumerate_trees(n: u8, k: Option<usize>) -> Result<Vec<LabeledTree>> {
    enumerate_trees_guarded(n, k, ENUMERATION_GUARD)
}

/// [`enumerate_trees`] with an explicit guard override.
pub fn enumerate_trees_guarded(n: u8, k: Option<usize>, guard: u8) -> Result<Vec<LabeledTree>> {
    if n < 3 {
        return Err(Error::invalid("trees need n ≥ 3"));
    }
    if n > guard {
        return Err(Error::Guard { n, guard });
    }
    if let Some(k) = k {
        if k < 1 || k > n as usize - 2 {
            return Err(Error::invalid(format!("k must be in 1..={}", n - 2)));
        }
    }
    // Candidate splits: label subsets avoiding label 1, sizes 2..=n−2.
    let full = (1u32 << n) - 1;
    let mut cands: Vec<u32> = (0..=full)
        .filter(|&m| m & 1 == 0 && (2..=(n as u32 - 2)).contains(&m.count_ones()))
        .collect();
    cands.sort_unstable();
    // DFS over pairwise-laminar subsets of the candidates.
    let max_edges = k.map_or(n as usize - 3, |k| k - 1);
    let mut families: Vec<Vec<u32>> = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn dfs(cands: &[u32], from: usize, chosen: &mut Vec<u32>, max: usize, out: &mut Vec<Vec<u32>>) {
        out.push(chosen.clone());
        if chosen.len() == max {
            return;
        }
        for i in from..cands.len() {
            let c = cands[i];
            if chosen.iter().all(|&b| c & b == 0 || c & !b == 0 || b & !c == 0) {
                chosen.push(c);
                dfs(cands, i + 1, chosen, max, out);
                chosen.pop();
            }
        }
    }
    dfs(&cands, 0, &mut chosen, max_edges, &mut families);
    let mut trees: Vec<LabeledTree> = families
        .into_iter()
        .filter(|f| k.map_or(true, |k| f.len() == k - 1))
        .map(|f| LabeledTree::from_splits(n, &f).expect("laminar family builds a stable tree"))
        .collect();
    trees.sort_by_key(|t| (t.num_vertices(), t.splits()));
    Ok(trees)
}

impl fmt::Display for LabeledTree {
    /// Canonical text form: each internal vertex is a parenthesized list of
    /// its attached labels and child subtrees, items sorted by minimum
    /// contained label; the root is the vertex carrying label 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn subtree_min(t: &LabeledTree, v: usize, parent: usize) -> u32 {
            let mut m = if t.labels[v] == 0 { u32::MAX } else { t.labels[v].trailing_zeros() + 1 };
            for w in t.neighbors(v) {
                if w != parent {
                    m = m.min(subtree_min(t, w, v));
                }
            }
            m
        }
        fn format_vertex(t: &LabeledTree, v: usize, parent: usize) -> String {
            let mut items: Vec<(u32, String)> = mask_labels(t.labels[v])
                .into_iter()
                .map(|l| (l as u32, l.to_string()))
                .collect();
            for w in t.neighbors(v) {
                if w != parent {
                    items.push((subtree_min(t, w, v), format_vertex(t, w, v)));
                }
            }
            items.sort();
            let inner: Vec<String> = items.into_iter().map(|(_, s)| s).collect();
            format!("({})", inner.join(","))
        }
        let root = (0..self.num_vertices())
            .find(|&v| self.labels[v] & 1 == 1)
            .expect("label 1 is attached somewhere");
        write!(f, "{}", format_vertex(self, root, usize::MAX))
    }
}

impl FromStr for LabeledTree {
    type Err = Error;

    /// Parse the tree grammar `tree := '(' item (',' item)+ ')'` with
    /// `item := label | tree`.  Stability is validated.
    fn from_str(s: &str) -> Result<Self> {
        struct P<'a> {
            bytes: &'a [u8],
            pos: usize,
            labels: Vec<u32>,
            edges: Vec<(usize, usize)>,
        }
        impl<'a> P<'a> {
            fn vertex(&mut self) -> Result<usize> {
                if self.bytes.get(self.pos) != Some(&b'(') {
                    return Err(Error::parse(self.pos, "expected '('"));
                }
                self.pos += 1;
                let id = self.labels.len();
                self.labels.push(0);
                let mut items = 0;
                loop {
                    match self.bytes.get(self.pos) {
                        Some(b'(') => {
                            let child = self.vertex()?;
                            self.edges.push((id, child));
                        }
                        Some(c) if c.is_ascii_digit() => {
                            let start = self.pos;
                            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                                self.pos += 1;
                            }
                            let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                            let l: u8 = text
                                .parse()
                                .map_err(|_| Error::parse(start, "label out of range"))?;
                            if l == 0 || l > MAX_GROUND_SET {
                                return Err(Error::parse(start, format!("label must be in 1..={MAX_GROUND_SET}")));
                            }
                            if self.labels.iter().any(|&m| m >> (l - 1) & 1 == 1) {
                                return Err(Error::parse(start, format!("duplicate label {l}")));
                            }
                            self.labels[id] |= 1 << (l - 1);
                        }
                        _ => return Err(Error::parse(self.pos, "expected a label or '('")),
                    }
                    items += 1;
                    match self.bytes.get(self.pos) {
                        Some(b',') => self.pos += 1,
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(Error::parse(self.pos, "expected ',' or ')'")),
                    }
                }
                if items < 2 {
                    return Err(Error::parse(self.pos, "an internal vertex needs at least 2 items"));
                }
                Ok(id)
            }
        }
        let mut p = P { bytes: s.as_bytes(), pos: 0, labels: Vec::new(), edges: Vec::new() };
        p.vertex()?;
        if p.pos != p.bytes.len() {
            return Err(Error::parse(p.pos, "trailing input"));
        }
        let all: u32 = p.labels.iter().fold(0, |m, &l| m | l);
        if all == 0 {
            return Err(Error::parse(0, "no labels"));
        }
        let n = 32 - all.leading_zeros() as u8;
        for l in 1..=n {
            if all >> (l - 1) & 1 == 0 {
                return Err(Error::parse(0, format!("coverage gap: label {l} missing")));
            }
        }
        LabeledTree::new(n, p.labels, p.edges)
    }
}
