//! Exact global alliance numbers with deterministic minimum witnesses.
//!
//! Candidates are visited by ascending cardinality and, within one
//! cardinality, in lexicographic order of their sorted members. The search
//! is a depth-first walk over the vertices `0, 1, ...` that tries "include"
//! before "exclude", which is exactly that order. A branch is cut only when
//! some vertex provably cannot meet its condition under any completion, so
//! the first set that passes is the lexicographically first minimum one.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::Tree;
use crate::vertex_set::VertexSet;

/// Default vertex limit for exact solving.
pub const DEFAULT_MAX_EXACT_N: usize = 22;

/// Hard limit imposed by the single-word set representation.
pub const MASK_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AllianceKind {
    Defensive,
    Offensive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub kind: AllianceKind,
    pub value: usize,
    pub witness: VertexSet,
    /// Search nodes visited, partial and complete candidates alike.
    pub explored: u64,
}

/// `γ_a(T)` with the default size limit.
pub fn gamma_a(tree: &Tree) -> Result<SolveResult> {
    solve(tree, AllianceKind::Defensive, DEFAULT_MAX_EXACT_N)
}

/// `γ_o(T)` with the default size limit.
pub fn gamma_o(tree: &Tree) -> Result<SolveResult> {
    solve(tree, AllianceKind::Offensive, DEFAULT_MAX_EXACT_N)
}

/// Minimum global alliance of the given kind; `max_exact_n` bounds `n`.
pub fn solve(tree: &Tree, kind: AllianceKind, max_exact_n: usize) -> Result<SolveResult> {
    let n = tree.n();
    let cap = max_exact_n.min(MASK_LIMIT);
    if n > cap {
        return Err(Error::InstanceTooLarge {
            n,
            cap,
            hint: "raise --max-exact-n (the exact solver supports at most 64 vertices)",
        });
    }

    let mut search = Search::new(tree, kind);
    for k in 0..=n {
        if let Some(mask) = search.first_of_size(k) {
            return Ok(SolveResult {
                kind,
                value: k,
                witness: VertexSet::from_mask(n, mask),
                explored: search.explored,
            });
        }
    }
    // S = V is a global alliance of both kinds.
    unreachable!("the full vertex set always qualifies")
}

struct Search {
    n: usize,
    kind: AllianceKind,
    closed: Vec<u64>,
    /// `deg(v) + 1`, the size of `N[v]`.
    closed_len: Vec<u32>,
    explored: u64,
}

impl Search {
    fn new(tree: &Tree, kind: AllianceKind) -> Self {
        let n = tree.n();
        let closed = tree
            .vertices()
            .map(|v| {
                tree.neighbors(v)
                    .iter()
                    .fold(1u64 << v, |m, &w| m | 1u64 << w)
            })
            .collect();
        let closed_len = tree.vertices().map(|v| tree.degree(v) as u32 + 1).collect();
        Self {
            n,
            kind,
            closed,
            closed_len,
            explored: 0,
        }
    }

    fn first_of_size(&mut self, k: usize) -> Option<u64> {
        self.descend(0, 0, k)
    }

    fn descend(&mut self, next: usize, chosen: u64, budget: usize) -> Option<u64> {
        self.explored += 1;
        if budget == 0 {
            return self.qualifies(chosen).then_some(chosen);
        }
        if budget > self.n - next || !self.feasible(next, chosen, budget) {
            return None;
        }
        self.descend(next + 1, chosen | 1u64 << next, budget - 1)
            .or_else(|| self.descend(next + 1, chosen, budget))
    }

    /// Exact test of the global condition for a complete candidate.
    fn qualifies(&self, set: u64) -> bool {
        (0..self.n).all(|v| {
            let inside = (self.closed[v] & set).count_ones();
            if inside == 0 {
                return false;
            }
            let member = set >> v & 1 == 1;
            let constrained = match self.kind {
                AllianceKind::Defensive => member,
                AllianceKind::Offensive => !member,
            };
            !constrained || 2 * inside >= self.closed_len[v]
        })
    }

    /// Whether some completion of the decided prefix `0..next` with exactly
    /// `budget` more members could still qualify.
    ///
    /// Besides per-vertex reachability, vertices whose undecided candidates
    /// are pairwise disjoint need distinct picks, so the sum of their
    /// shortfalls over such a (greedy) family bounds the picks still needed.
    fn feasible(&self, next: usize, chosen: u64, budget: usize) -> bool {
        let undecided = if next >= 64 { 0 } else { !0u64 << next };
        let budget = budget as u32;
        let mut used = 0u64;
        let mut needed = 0u32;
        for v in 0..self.n {
            let inside = (self.closed[v] & chosen).count_ones();
            let candidates = self.closed[v] & undecided;
            let open = candidates.count_ones();
            let shortfall = if v < next && self.constrained(chosen, v) {
                self.closed_len[v].div_ceil(2).saturating_sub(inside)
            } else {
                u32::from(inside == 0)
            };
            if shortfall > open.min(budget) {
                return false;
            }
            if shortfall > 0 && candidates & used == 0 {
                used |= candidates;
                needed += shortfall;
                if needed > budget {
                    return false;
                }
            }
        }
        true
    }

    /// Whether decided vertex `v` carries the majority condition.
    fn constrained(&self, chosen: u64, v: usize) -> bool {
        let member = chosen >> v & 1 == 1;
        match self.kind {
            AllianceKind::Defensive => member,
            AllianceKind::Offensive => !member,
        }
    }
}
