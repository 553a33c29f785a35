//! Constructive alliance procedures and the edge-counting certificate.
//!
//! * The smaller color class of a tree is a global offensive alliance of
//!   size at most `n / 2`.
//! * A global defensive alliance `S` becomes a global offensive alliance once
//!   every edge inside `Y = V − S` is broken by moving one endpoint into `S`.
//!   The endpoints are chosen as a minimum vertex cover of the forest `T[Y]`.
//!
//! The certificate instantiates, for a global defensive alliance of size `k`,
//!
//! ```text
//! 2|E_S| + k >= |E_B|        (defensive condition summed over S)
//! |E_B|      >= n − k        (every vertex of Y has a neighbor in S)
//! 2|E_Y|     <= 4k − n − 2   (the two above, with |E_S|+|E_B|+|E_Y| = n−1, times 2)
//! ```

use std::collections::BTreeSet;

use serde::Serialize;

use crate::alliance::global_defensive_failure;
use crate::error::{Error, Result};
use crate::tree::{bipartition, Tree};
use crate::vertex_set::VertexSet;

/// The tree's edges split by how many endpoints lie in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgePartition {
    /// Both endpoints in `S`.
    pub e_s: Vec<(usize, usize)>,
    /// Exactly one endpoint in `S`.
    pub e_b: Vec<(usize, usize)>,
    /// Both endpoints in `Y = V − S`.
    pub e_y: Vec<(usize, usize)>,
    pub k: usize,
    pub n: usize,
}

/// One instantiated inequality `lhs <op> rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl Inequality {
    fn at_least(lhs: i64, rhs: i64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs >= rhs,
        }
    }

    fn at_most(lhs: i64, rhs: i64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub partition: EdgePartition,
    /// `2|E_S| + k >= |E_B|`
    pub ineq_degree: Inequality,
    /// `|E_B| >= n − k`
    pub ineq_domination: Inequality,
    /// `2|E_Y| <= 4k − n − 2`
    pub ineq_star: Inequality,
    pub all_hold: bool,
}

/// The smaller color class, or the class of vertex 0 on a tie.
pub fn smaller_side_offensive(tree: &Tree) -> Result<VertexSet> {
    if tree.n() < 2 {
        return Err(Error::DegenerateInstance(
            "the one-vertex tree has no dominating color class".into(),
        ));
    }
    let sides = bipartition(tree);
    Ok(if sides.side_b.len() < sides.side_a.len() {
        sides.side_b
    } else {
        sides.side_a
    })
}

pub fn edge_partition(tree: &Tree, s: &VertexSet) -> Result<EdgePartition> {
    if let Some(v) = s.iter().find(|&v| v >= tree.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: tree.n(),
        });
    }
    let mut part = EdgePartition {
        e_s: Vec::new(),
        e_b: Vec::new(),
        e_y: Vec::new(),
        k: s.len(),
        n: tree.n(),
    };
    for &(u, v) in tree.edges() {
        match (s.contains(u), s.contains(v)) {
            (true, true) => part.e_s.push((u, v)),
            (false, false) => part.e_y.push((u, v)),
            _ => part.e_b.push((u, v)),
        }
    }
    Ok(part)
}

/// Instantiates the three counting inequalities for a global defensive alliance.
pub fn defensive_certificate(tree: &Tree, s: &VertexSet) -> Result<CertificateReport> {
    if let Some(reason) = global_defensive_failure(tree, s)? {
        return Err(Error::NotGlobalDefensive(reason));
    }
    let partition = edge_partition(tree, s)?;
    let (n, k) = (partition.n as i64, partition.k as i64);
    let (es, eb, ey) = (
        partition.e_s.len() as i64,
        partition.e_b.len() as i64,
        partition.e_y.len() as i64,
    );

    let ineq_degree = Inequality::at_least(2 * es + k, eb);
    let ineq_domination = Inequality::at_least(eb, n - k);
    let ineq_star = Inequality::at_most(2 * ey, 4 * k - n - 2);
    let all_hold = ineq_degree.holds && ineq_domination.holds && ineq_star.holds;
    Ok(CertificateReport {
        partition,
        ineq_degree,
        ineq_domination,
        ineq_star,
        all_hold,
    })
}

/// Minimum vertex cover of the forest induced by `y`.
///
/// Repeatedly takes the lowest-indexed leaf of what remains, puts its only
/// neighbor in the cover, and deletes both. Isolated vertices are dropped.
pub fn min_vertex_cover_forest(tree: &Tree, y: &VertexSet) -> VertexSet {
    let n = tree.n();
    let inside = |v: usize| v < n && y.contains(v);
    let mut alive: Vec<bool> = (0..n).map(inside).collect();
    let mut degree: Vec<usize> = (0..n)
        .map(|v| {
            if alive[v] {
                tree.neighbors(v).iter().filter(|&&w| alive[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| alive[v] && degree[v] == 1).collect();
    let mut cover = VertexSet::empty(n);

    while let Some(leaf) = leaves.pop_first() {
        let parent = *tree
            .neighbors(leaf)
            .iter()
            .find(|&&w| alive[w])
            .expect("a leaf has one live neighbor");
        cover.insert(parent);
        alive[leaf] = false;
        alive[parent] = false;
        leaves.remove(&parent);
        for &w in tree.neighbors(parent) {
            if alive[w] {
                degree[w] -= 1;
                match degree[w] {
                    1 => {
                        leaves.insert(w);
                    }
                    0 => {
                        leaves.remove(&w);
                        alive[w] = false;
                    }
                    _ => {}
                }
            }
        }
    }
    cover
}

/// The result of [`augment_to_offensive`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Augmentation {
    pub result: VertexSet,
    pub added: VertexSet,
}

/// `S ∪ cover(T[V − S])` for a global defensive alliance `S`.
pub fn augment_to_offensive(tree: &Tree, s: &VertexSet) -> Result<Augmentation> {
    if tree.n() < 2 {
        return Err(Error::DegenerateInstance(
            "augmentation needs at least two vertices".into(),
        ));
    }
    if let Some(reason) = global_defensive_failure(tree, s)? {
        return Err(Error::NotGlobalDefensive(reason));
    }
    let s = VertexSet::from_vertices(tree.n(), s.iter())?;
    let added = min_vertex_cover_forest(tree, &s.complement());
    Ok(Augmentation {
        result: s.union(&added),
        added,
    })
}
