//! The Prüfer bijection between labeled trees on `{0..n}` and `{0..n}^(n-2)`.

use crate::error::{Error, Result};
use crate::tree::Tree;

/// Decodes a Prüfer sequence into its labeled tree.
///
/// `n = 1` and `n = 2` take the empty sequence.
pub fn from_pruefer(seq: &[usize], n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::BadSequence("n must be at least 1".into()));
    }
    let expected = n.saturating_sub(2);
    if seq.len() != expected {
        return Err(Error::BadSequence(format!(
            "length {} but n = {n} needs length {expected}",
            seq.len()
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::BadSequence(format!("entry {bad} outside 0..{n}")));
    }
    if n == 1 {
        return Ok(Tree::single_vertex());
    }
    Tree::from_edges(n, decode_edges(seq, n))
}

/// Linear-time decode; the caller guarantees `seq` is valid for `n >= 2`.
pub(crate) fn decode_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
        if degree[x] == 1 && x < ptr {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Encodes a tree as its Prüfer sequence (length `n - 2`, empty for `n <= 2`).
pub fn to_pruefer(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return Vec::new();
    }
    // Parents with respect to the root n - 1.
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![n - 1];
    parent[n - 1] = n - 1;
    while let Some(u) = stack.pop() {
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }

    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut code = Vec::with_capacity(n - 2);
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = parent[leaf];
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    code
}

/// All sequences in `{0..n}^(n-2)` in lexicographic order.
#[derive(Clone, Debug)]
pub struct PrueferSequences {
    n: usize,
    current: Option<Vec<usize>>,
}

impl PrueferSequences {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            current: (n >= 1).then(|| vec![0; n.saturating_sub(2)]),
        }
    }
}

impl Iterator for PrueferSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut succ = out.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] + 1 < self.n {
                succ[i] += 1;
                self.current = Some(succ);
                return Some(out);
            }
            succ[i] = 0;
        }
        Some(out)
    }
}

/// Formats a corpus dump line `n:p1,p2,...`.
pub fn format_dump_line(n: usize, seq: &[usize]) -> String {
    let body: Vec<String> = seq.iter().map(|x| x.to_string()).collect();
    format!("{n}:{}", body.join(","))
}

/// Parses a corpus dump line back into `(n, sequence)`.
pub fn parse_dump_line(line: &str) -> Result<(usize, Vec<usize>)> {
    let bad = || Error::BadSequence(format!("malformed dump line `{line}`"));
    let (n, rest) = line.trim().split_once(':').ok_or_else(bad)?;
    let n: usize = n.parse().map_err(|_| bad())?;
    let seq = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|tok| tok.parse().map_err(|_| bad()))
            .collect::<Result<Vec<usize>>>()?
    };
    Ok((n, seq))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cases() {
        assert_eq!(from_pruefer(&[], 2).unwrap().edges(), &[(0, 1)]);
        assert_eq!(from_pruefer(&[], 1).unwrap(), Tree::single_vertex());
        assert!(matches!(from_pruefer(&[3], 2), Err(Error::BadSequence(_))));
        assert!(matches!(
            from_pruefer(&[4, 0], 4),
            Err(Error::BadSequence(_))
        ));
        assert!(matches!(from_pruefer(&[], 0), Err(Error::BadSequence(_))));
    }

    #[test]
    fn decodes_star() {
        assert_eq!(from_pruefer(&[0, 0], 4).unwrap(), Tree::star(4).unwrap());
    }

    #[test]
    fn decodes_known_sequence() {
        // Hand decode of [3,3,3,4] on 6 vertices: leaves 0,1,2 hang off 3, 3-4, 4-5.
        let t = from_pruefer(&[3, 3, 3, 4], 6).unwrap();
        assert_eq!(t.edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
        assert_eq!(to_pruefer(&t), vec![3, 3, 3, 4]);
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<_> = PrueferSequences::new(3).collect();
        assert_eq!(all, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(PrueferSequences::new(5).count(), 125);
        assert_eq!(
            PrueferSequences::new(2).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(PrueferSequences::new(1).count(), 1);
        assert_eq!(PrueferSequences::new(0).count(), 0);
        let seqs: Vec<_> = PrueferSequences::new(4).collect();
        assert!(seqs.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn dump_lines() {
        assert_eq!(format_dump_line(5, &[0, 3, 3]), "5:0,3,3");
        assert_eq!(format_dump_line(2, &[]), "2:");
        assert_eq!(parse_dump_line("5:0,3,3").unwrap(), (5, vec![0, 3, 3]));
        assert_eq!(parse_dump_line("1:").unwrap(), (1, vec![]));
        assert!(parse_dump_line("5;0").is_err());
        assert!(parse_dump_line("5:0,,1").is_err());
    }
}
