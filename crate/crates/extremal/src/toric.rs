//! Graph associahedra: when is the toric model an assignment model?
//!
//! A connected graph `G` on `n-2` vertices determines a graph
//! associahedron and hence a toric compactification.  That toric space is
//! the model of a (smooth) assignment exactly when the family built from
//! `G`'s *non-tubes* is a valid contraction indicator, which in turn
//! happens exactly when `G` is complete multipartite (equivalently,
//! co-transitive).  This module provides tubes, the two graph
//! characterizations and the indicator construction, so the equivalences
//! can be checked against each other.

use crate::partitions::mask_labels;
use crate::smooth::check_indicator;
use crate::{Error, Result};
use std::fmt;

/// A simple undirected graph on vertices `1..=m`, adjacency as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    m: u8,
    adj: Vec<u32>,
}

impl SimpleGraph {
    /// Builds a graph from 1-based edge pairs, rejecting loops.
    pub fn new(m: u8, edges: &[(u8, u8)]) -> Result<Self> {
        if m == 0 || m > 30 {
            return Err(Error::invalid("vertex count must be in 1..=30"));
        }
        let mut adj = vec![0u32; m as usize + 1];
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > m || v > m {
                return Err(Error::invalid(format!("edge ({u},{v}) outside 1..={m}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            adj[u as usize] |= 1 << (v - 1);
            adj[v as usize] |= 1 << (u - 1);
        }
        Ok(SimpleGraph { m, adj })
    }

    /// The complete graph on `m` vertices.
    pub fn complete(m: u8) -> Self {
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in (u + 1)..=m {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(m, &edges).expect("valid edges")
    }

    /// Vertex count.
    pub fn m(&self) -> u8 {
        self.m
    }

    /// The neighbors of `v` as a bitmask.
    pub fn neighbors(&self, v: u8) -> u32 {
        self.adj[v as usize]
    }

    /// Whether `u` and `v` are adjacent.
    pub fn adjacent(&self, u: u8, v: u8) -> bool {
        self.adj[u as usize] >> (v - 1) & 1 == 1
    }

    /// Edge list, each pair once with `u < v`.
    pub fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for u in 1..=self.m {
            for v in (u + 1)..=self.m {
                if self.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether a nonempty vertex set induces a connected subgraph.
    pub fn induces_connected(&self, set: u32) -> bool {
        if set == 0 {
            return false;
        }
        let start = 1u32 << set.trailing_zeros();
        let mut reached = start;
        loop {
            let mut next = reached;
            for v in mask_labels(reached) {
                next |= self.adj[v as usize] & set;
            }
            if next == reached {
                return reached == set;
            }
            reached = next;
        }
    }

    /// Whether the whole graph is connected.
    pub fn is_connected(&self) -> bool {
        self.induces_connected((1u32 << self.m) - 1)
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.m)?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// All tubes of `g`: nonempty vertex sets inducing connected subgraphs.
pub fn tubes(g: &SimpleGraph) -> Vec<u32> {
    let full = (1u32 << g.m) - 1;
    (1..=full).filter(|&s| g.induces_connected(s)).collect()
}

/// Whether every vertex off an edge is joined to one of its endpoints.
pub fn is_cotransitive(g: &SimpleGraph) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::invalid("co-transitivity is defined for connected graphs"));
    }
    for (u, v) in g.edges() {
        let ends = (1u32 << (u - 1)) | (1u32 << (v - 1));
        for w in 1..=g.m {
            if w != u && w != v && g.neighbors(w) & ends == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the complement is a disjoint union of cliques (equivalently,
/// non-adjacency is transitive).
pub fn is_complete_multipartite(g: &SimpleGraph) -> bool {
    for v in 1..=g.m {
        for w in 1..=g.m {
            for x in 1..=g.m {
                if v != w
                    && w != x
                    && v != x
                    && !g.adjacent(v, w)
                    && !g.adjacent(w, x)
                    && g.adjacent(v, x)
                {
                    return false;
                }
            }
        }
    }
    true
}

/// The candidate indicator family for the toric model of `g`, with graph
/// vertex `i` as label `i` and two extra labels `n-1`, `n` (`n = m+2`):
/// every at-least-2 subset of the graph labels, every non-tube of size at
/// least 2 with the label `n-1` attached, and every pair `{i, n-1}`.
/// The pairs are forced: they sit under every attached non-tube, so
/// without them the family could never be downward closed.
pub fn indicator_from_graph(g: &SimpleGraph) -> Result<(u8, Vec<u32>)> {
    let m = g.m;
    let n = m + 2;
    if n < 5 {
        return Err(Error::invalid(format!(
            "need at least 3 graph vertices (n = {n} < 5)"
        )));
    }
    if !g.is_connected() {
        return Err(Error::invalid("graph must be connected"));
    }
    let full = (1u32 << m) - 1;
    let extra = 1u32 << (n - 2); // label n-1
    let mut family = Vec::new();
    for b in 1..=full {
        if b.count_ones() < 2 {
            family.push(b | extra);
            continue;
        }
        family.push(b);
        if !g.induces_connected(b) {
            family.push(b | extra);
        }
    }
    Ok((n, family))
}

/// Whether the toric model of `g` is an assignment model: the non-tube
/// family must form a valid contraction indicator.
pub fn is_modular_toric(g: &SimpleGraph) -> Result<bool> {
    let (n, family) = indicator_from_graph(g)?;
    Ok(check_indicator(n, &family).is_none())
}

/// Parses a graph file: first line the vertex count, then `u v` edge
/// lines.  `#` starts a comment.
pub fn parse_graph_file(text: &str) -> Result<SimpleGraph> {
    let mut m: Option<u8> = None;
    let mut edges = Vec::new();
    let mut offset = 0usize;
    for line in text.lines() {
        let pos = offset;
        offset += line.len() + 1;
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if m.is_none() {
            m = Some(
                line.parse()
                    .map_err(|_| Error::parse(pos, format!("bad vertex count `{line}`")))?,
            );
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::parse(pos, format!("expected `u v`, found `{line}`")));
        };
        let u: u8 = u
            .parse()
            .map_err(|_| Error::parse(pos, format!("bad vertex `{u}`")))?;
        let v: u8 = v
            .parse()
            .map_err(|_| Error::parse(pos, format!("bad vertex `{v}`")))?;
        edges.push((u, v));
    }
    let m = m.ok_or_else(|| Error::parse(0, "missing vertex count line"))?;
    SimpleGraph::new(m, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::labels_mask;

    fn path(m: u8) -> SimpleGraph {
        let edges: Vec<(u8, u8)> = (1..m).map(|u| (u, u + 1)).collect();
        SimpleGraph::new(m, &edges).unwrap()
    }

    /// Every connected graph on `m` vertices, by edge-set enumeration.
    fn connected_graphs(m: u8) -> Vec<SimpleGraph> {
        let pairs: Vec<(u8, u8)> = (1..=m)
            .flat_map(|u| ((u + 1)..=m).map(move |v| (u, v)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<(u8, u8)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = SimpleGraph::new(m, &edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
        out
    }

    #[test]
    fn tube_examples() {
        let p3 = path(3);
        let big: Vec<u32> = tubes(&p3).into_iter().filter(|t| t.count_ones() >= 2).collect();
        assert_eq!(
            big,
            vec![
                labels_mask(&[1, 2]),
                labels_mask(&[2, 3]),
                labels_mask(&[1, 2, 3])
            ]
        );
        let k4 = SimpleGraph::complete(4);
        assert_eq!(tubes(&k4).len(), 15);
        let p4 = path(4);
        assert!(!tubes(&p4).contains(&labels_mask(&[1, 3])));
    }

    #[test]
    fn characterization_examples() {
        for m in 3..=6 {
            let k = SimpleGraph::complete(m);
            assert!(is_cotransitive(&k).unwrap());
            assert!(is_complete_multipartite(&k));
        }
        let p4 = path(4);
        assert!(!is_cotransitive(&p4).unwrap());
        assert!(!is_complete_multipartite(&p4));
        let star = SimpleGraph::new(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(is_cotransitive(&star).unwrap());
        assert!(is_complete_multipartite(&star));
        let disconnected = SimpleGraph::new(4, &[(1, 2), (3, 4)]).unwrap();
        assert!(is_cotransitive(&disconnected).is_err());
    }

    #[test]
    fn modular_toric_examples() {
        let k2 = SimpleGraph::complete(2);
        assert!(is_modular_toric(&k2).is_err());
        let p4 = path(4);
        assert!(!is_modular_toric(&p4).unwrap());
        let k22 = SimpleGraph::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(is_modular_toric(&k22).unwrap());
    }

    #[test]
    fn characterizations_agree_exhaustively() {
        for m in 1..=6u8 {
            for g in connected_graphs(m) {
                assert_eq!(
                    is_cotransitive(&g).unwrap(),
                    is_complete_multipartite(&g),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn modular_matches_multipartite_exhaustively() {
        for m in 3..=5u8 {
            for g in connected_graphs(m) {
                assert_eq!(
                    is_modular_toric(&g).unwrap(),
                    is_complete_multipartite(&g),
                    "{g}"
                );
            }
        }
    }

    #[test]
    fn non_tubes_downward_closed_for_cotransitive() {
        for m in 2..=5u8 {
            for g in connected_graphs(m) {
                if !is_cotransitive(&g).unwrap() {
                    continue;
                }
                let t = tubes(&g);
                let full = (1u32 << m) - 1;
                for b in 1..=full {
                    if b.count_ones() >= 2 && !t.contains(&b) {
                        // Every sub-subset of size >= 2 is also a non-tube.
                        let mut sub = b;
                        loop {
                            if sub.count_ones() >= 2 {
                                assert!(!t.contains(&sub), "{g}: {b:b} {sub:b}");
                            }
                            if sub == 0 {
                                break;
                            }
                            sub = (sub - 1) & b;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn graph_file_round_trip() {
        let g = SimpleGraph::new(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert_eq!(parse_graph_file(&g.to_string()).unwrap(), g);
        assert!(parse_graph_file("4\n1 1\n").is_err());
        assert!(parse_graph_file("4\n1 5\n").is_err());
        assert!(parse_graph_file("").is_err());
        assert!(parse_graph_file("4\n1 2 3\n").is_err());
    }
}
