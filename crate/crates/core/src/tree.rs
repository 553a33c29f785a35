//! Validated trees on `{0..n}` and the edge-list file format.
//!
//! File format: one edge per line as two whitespace-separated base-10 ids.
//! Empty lines and lines starting with `#` are ignored. An optional header
//! line `vertices <n>` fixes the vertex count; without it `n` is the largest
//! id plus one. The header is the only way to write the one-vertex tree.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// An undirected tree on the vertex ids `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted; neighbor lists are
/// sorted ascending so every traversal is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates `edges` as a tree on `n` vertices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        let mut normalized = Vec::with_capacity(n - 1);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::BadVertexIds(format!(
                    "edge {u}-{v} names a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotATree(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }

        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in adjacency.iter_mut() {
            list.sort_unstable();
        }
        let tree = Self {
            n,
            edges: normalized,
            adjacency,
        };

        let reached = tree.bfs_order(0).len();
        if reached < n {
            return Err(Error::NotATree(format!(
                "disconnected: only {reached} of {n} vertices reachable from vertex 0"
            )));
        }
        if tree.edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "contains a cycle: {} edges on {n} vertices",
                tree.edges.len()
            )));
        }
        Ok(tree)
    }

    /// The one-vertex tree.
    pub fn single_vertex() -> Self {
        Self {
            n: 1,
            edges: Vec::new(),
            adjacency: vec![Vec::new()],
        }
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The star with center 0.
    pub fn star(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|v| (0, v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Applies a vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadVertexIds(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        Self::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Vertices in breadth-first order from `root`, visiting neighbors ascending.
    pub(crate) fn bfs_order(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        order
    }

    /// Renders the tree in the edge-list file format, always with a header.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        if self.n == 1 {
            out.push_str("# n=1\n");
        }
        out.push_str(&format!("vertices {}\n", self.n));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Parses the edge-list file format.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_id = |tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("`{tok}` is not a nonnegative integer"),
            })
        };
        match tokens.as_slice() {
            ["vertices", count] => {
                if header.is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "repeated `vertices` header".into(),
                    });
                }
                header = Some(parse_id(count)?);
            }
            [a, b] => edges.push((parse_id(a)?, parse_id(b)?)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two vertex ids, found `{line}`"),
                })
            }
        }
    }

    let max_id = edges.iter().map(|&(u, v)| u.max(v)).max();
    let n = match (header, max_id) {
        (Some(n), Some(max)) if max >= n => {
            return Err(Error::BadVertexIds(format!(
                "vertex {max} exceeds the declared vertex count {n}"
            )))
        }
        (Some(n), _) => n,
        (None, Some(max)) => max + 1,
        (None, None) => {
            return Err(Error::NotATree(
                "no edges and no `vertices` header; write `vertices 1` for the one-vertex tree"
                    .into(),
            ))
        }
    };

    if n > 1 {
        let mut seen = vec![false; n];
        for &(u, v) in &edges {
            seen[u] = true;
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::BadVertexIds(format!(
                "vertex {missing} does not appear in any edge; ids must cover 0..{n}"
            )));
        }
    }

    Tree::from_edges(n, edges)
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// A proper 2-coloring of a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// The color class of vertex 0.
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// 2-colors the tree by breadth-first traversal from vertex 0.
pub fn bipartition(tree: &Tree) -> Bipartition {
    let n = tree.n();
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    for u in tree.bfs_order(0) {
        for &w in tree.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
            }
        }
    }
    let side_a = VertexSet::from_vertices(n, (0..n).filter(|&v| depth[v] % 2 == 0))
        .expect("ids are in range");
    let side_b = side_a.complement();
    Bipartition { side_a, side_b }
}

/// Tree center(s) by repeated removal of all current leaves; ascending.
pub fn centers(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in tree.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1: &str = "0 6\n6 7\n7 8\n4 8\n1 5\n1 2\n2 3\n3 9\n2 8\n";

    #[test]
    fn parses_small_path() {
        let t = parse_tree("0 1\n1 2").unwrap();
        assert_eq!(t.n(), 3);
        assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(t.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parses_example_tree_with_comments() {
        let text = format!("# example\n\n{FIG1}");
        let t = parse_tree(&text).unwrap();
        assert_eq!(t.n(), 10);
        assert_eq!(t.edges().len(), 9);
    }

    #[test]
    fn rejects_duplicate_edge_and_self_loop() {
        assert!(matches!(parse_tree("0 1\n0 1"), Err(Error::NotATree(_))));
        assert!(matches!(parse_tree("0 1\n1 0"), Err(Error::NotATree(_))));
        assert!(matches!(parse_tree("0 1\n1 1"), Err(Error::NotATree(_))));
    }

    #[test]
    fn rejects_cycle_and_disconnection() {
        assert!(matches!(
            parse_tree("0 1\n1 2\n2 0"),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(parse_tree("0 1\n2 3"), Err(Error::NotATree(_))));
    }

    #[test]
    fn rejects_gaps_in_ids() {
        assert!(matches!(
            parse_tree("0 2\n2 3"),
            Err(Error::BadVertexIds(_))
        ));
        assert!(matches!(
            parse_tree("vertices 2\n0 2"),
            Err(Error::BadVertexIds(_))
        ));
        assert!(matches!(
            parse_tree("vertices 4\n0 1\n1 2"),
            Err(Error::BadVertexIds(_))
        ));
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_tree("0 1\n1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_tree("0 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_tree("0 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_tree("-1 0"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_tree("vertices 2\nvertices 2\n0 1"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn one_vertex_tree_needs_header() {
        let t = parse_tree("# n=1\nvertices 1\n").unwrap();
        assert_eq!(t, Tree::single_vertex());
        assert!(parse_tree("# n=1\n").is_err());
        assert!(parse_tree("").is_err());
    }

    #[test]
    fn file_string_round_trips() {
        for t in [
            Tree::single_vertex(),
            Tree::path(5).unwrap(),
            parse_tree(FIG1).unwrap(),
        ] {
            assert_eq!(parse_tree(&t.to_file_string()).unwrap(), t);
        }
    }

    #[test]
    fn bipartition_examples() {
        let p = bipartition(&Tree::path(3).unwrap());
        assert_eq!(p.side_a.to_vec(), vec![0, 2]);
        assert_eq!(p.side_b.to_vec(), vec![1]);

        let f = bipartition(&parse_tree(FIG1).unwrap());
        assert_eq!(f.side_a.to_vec(), vec![0, 2, 4, 5, 7, 9]);
        assert_eq!(f.side_b.to_vec(), vec![1, 3, 6, 8]);

        let s = bipartition(&Tree::star(5).unwrap());
        assert_eq!(s.side_a.to_vec(), vec![0]);
        assert_eq!(s.side_b.to_vec(), vec![1, 2, 3, 4]);

        let one = bipartition(&Tree::single_vertex());
        assert_eq!(one.side_a.to_vec(), vec![0]);
        assert!(one.side_b.is_empty());
    }

    #[test]
    fn centers_examples() {
        assert_eq!(centers(&Tree::path(3).unwrap()), vec![1]);
        assert_eq!(centers(&Tree::path(2).unwrap()), vec![0, 1]);
        assert_eq!(centers(&Tree::star(6).unwrap()), vec![0]);
        assert_eq!(centers(&Tree::path(6).unwrap()), vec![2, 3]);
        assert_eq!(centers(&Tree::single_vertex()), vec![0]);
    }
}
