//! Neighborhoods, boundary, domination, and the alliance predicates.
//!
//! All counts are closed-neighborhood counts: a vertex always belongs to its
//! own `N[v]`, so for `v` outside `S` the vertex itself counts against `S`.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::tree::Tree;
use crate::vertex_set::VertexSet;

/// A vertex together with its closed neighborhood `N[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodView {
    pub vertex: usize,
    pub members: VertexSet,
}

impl NeighborhoodView {
    pub fn new(tree: &Tree, v: usize) -> Result<Self> {
        Ok(Self {
            vertex: v,
            members: closed_neighborhood(tree, v)?,
        })
    }

    /// `|N[v] ∩ S|`
    pub fn inside(&self, s: &VertexSet) -> usize {
        self.members.iter().filter(|&w| s.contains(w)).count()
    }

    /// `|N[v] − S|`
    pub fn outside(&self, s: &VertexSet) -> usize {
        self.members.len() - self.inside(s)
    }
}

/// `N[v] = {v} ∪ neighbors(v)`.
pub fn closed_neighborhood(tree: &Tree, v: usize) -> Result<VertexSet> {
    if v >= tree.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: tree.n(),
        });
    }
    let mut set = VertexSet::empty(tree.n());
    set.insert(v);
    for &w in tree.neighbors(v) {
        set.insert(w);
    }
    Ok(set)
}

/// Vertices outside `S` adjacent to at least one member of `S`.
pub fn boundary(tree: &Tree, s: &VertexSet) -> Result<VertexSet> {
    let s = fit(tree, s)?;
    let mut out = VertexSet::empty(tree.n());
    for v in tree.vertices().filter(|&v| !s.contains(v)) {
        if tree.neighbors(v).iter().any(|&w| s.contains(w)) {
            out.insert(v);
        }
    }
    Ok(out)
}

/// Every vertex is in `S` or adjacent to it.
pub fn is_dominating(tree: &Tree, s: &VertexSet) -> Result<bool> {
    let s = fit(tree, s)?;
    Ok(tree
        .vertices()
        .all(|v| s.contains(v) || tree.neighbors(v).iter().any(|&w| s.contains(w))))
}

/// `|N[v] ∩ S| >= |N[v] − S|` for every `v` in `S`. Vacuously true for `S = ∅`.
pub fn is_defensive(tree: &Tree, s: &VertexSet) -> Result<bool> {
    let s = fit(tree, s)?;
    let ok = s.iter().all(|v| majority_inside(tree, &s, v));
    Ok(ok)
}

/// `|N[v] ∩ S| >= |N[v] − S|` for every boundary vertex `v`.
pub fn is_offensive(tree: &Tree, s: &VertexSet) -> Result<bool> {
    let border = boundary(tree, s)?;
    let s = fit(tree, s)?;
    let ok = border.iter().all(|v| majority_inside(tree, &s, v));
    Ok(ok)
}

pub fn is_global_defensive(tree: &Tree, s: &VertexSet) -> Result<bool> {
    Ok(is_dominating(tree, s)? && is_defensive(tree, s)?)
}

pub fn is_global_offensive(tree: &Tree, s: &VertexSet) -> Result<bool> {
    Ok(is_dominating(tree, s)? && is_offensive(tree, s)?)
}

/// Names the first failing part of the global defensive condition, if any.
pub(crate) fn global_defensive_failure(tree: &Tree, s: &VertexSet) -> Result<Option<String>> {
    let fitted = fit(tree, s)?;
    if let Some(v) = tree
        .vertices()
        .find(|&v| !fitted.contains(v) && !tree.neighbors(v).iter().any(|&w| fitted.contains(w)))
    {
        return Ok(Some(format!("not dominating: vertex {v} is not covered")));
    }
    if let Some(v) = fitted.iter().find(|&v| !majority_inside(tree, &fitted, v)) {
        let inside = closed_inside(tree, &fitted, v);
        return Ok(Some(format!(
            "not defensive at vertex {v}: {inside} inside vs {} outside",
            tree.degree(v) + 1 - inside
        )));
    }
    Ok(None)
}

fn closed_inside(tree: &Tree, s: &VertexSet, v: usize) -> usize {
    usize::from(s.contains(v)) + tree.neighbors(v).iter().filter(|&&w| s.contains(w)).count()
}

fn majority_inside(tree: &Tree, s: &VertexSet, v: usize) -> bool {
    2 * closed_inside(tree, s, v) > tree.degree(v)
}

/// Checks that `s` only names vertices of `tree`, re-embedding it in the
/// tree's universe when the universes differ.
fn fit<'a>(tree: &Tree, s: &'a VertexSet) -> Result<Cow<'a, VertexSet>> {
    if s.universe() == tree.n() {
        return Ok(Cow::Borrowed(s));
    }
    VertexSet::from_vertices(tree.n(), s.iter()).map(Cow::Owned)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig3() -> Tree {
        Tree::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 7), (3, 5), (4, 6)]).unwrap()
    }

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn closed_neighborhood_examples() {
        let p = Tree::path(3).unwrap();
        assert_eq!(closed_neighborhood(&p, 1).unwrap().to_vec(), vec![0, 1, 2]);
        assert_eq!(
            closed_neighborhood(&fig3(), 3).unwrap().to_vec(),
            vec![2, 3, 4, 5]
        );
        assert_eq!(
            closed_neighborhood(&Tree::single_vertex(), 0)
                .unwrap()
                .to_vec(),
            vec![0]
        );
        assert_eq!(
            closed_neighborhood(&p, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let view = NeighborhoodView::new(&fig3(), 3).unwrap();
        assert_eq!(view.members.len(), fig3().degree(3) + 1);
        assert_eq!(
            (
                view.inside(&set(8, &[0, 3, 4])),
                view.outside(&set(8, &[0, 3, 4]))
            ),
            (2, 2)
        );
    }

    #[test]
    fn boundary_examples() {
        let p = Tree::path(3).unwrap();
        assert_eq!(boundary(&p, &set(3, &[1])).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(
            boundary(&fig3(), &set(8, &[0, 3, 4])).unwrap().to_vec(),
            vec![1, 2, 5, 6, 7]
        );
        assert!(boundary(&p, &VertexSet::full(3)).unwrap().is_empty());
        assert!(matches!(
            boundary(&p, &set(5, &[4])),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        ));
    }

    #[test]
    fn domination_examples() {
        assert!(is_dominating(&Tree::path(3).unwrap(), &set(3, &[1])).unwrap());
        assert!(!is_dominating(&Tree::path(4).unwrap(), &set(4, &[0])).unwrap());
        assert!(is_dominating(&fig3(), &set(8, &[0, 3, 4])).unwrap());
    }

    #[test]
    fn defensive_examples() {
        assert!(is_defensive(&fig3(), &set(8, &[0, 3, 4])).unwrap());
        assert!(!is_defensive(&Tree::path(3).unwrap(), &set(3, &[1])).unwrap());
        assert!(is_defensive(&fig3(), &VertexSet::full(8)).unwrap());
        assert!(is_defensive(&fig3(), &VertexSet::empty(8)).unwrap());
    }

    #[test]
    fn offensive_examples() {
        assert!(is_offensive(&fig3(), &set(8, &[0, 2, 3, 4])).unwrap());
        assert!(!is_offensive(&Tree::path(3).unwrap(), &set(3, &[0])).unwrap());
        assert!(is_offensive(&fig3(), &VertexSet::full(8)).unwrap());
        assert!(is_offensive(&fig3(), &VertexSet::empty(8)).unwrap());
    }

    #[test]
    fn global_examples() {
        let s = set(8, &[0, 3, 4]);
        assert!(is_global_defensive(&fig3(), &s).unwrap());
        assert!(!is_global_offensive(&fig3(), &s).unwrap());
        assert!(is_global_offensive(&fig3(), &set(8, &[0, 2, 3, 4])).unwrap());
        for t in [Tree::single_vertex(), Tree::path(4).unwrap(), fig3()] {
            let empty = VertexSet::empty(t.n());
            assert!(!is_global_defensive(&t, &empty).unwrap());
            assert!(!is_global_offensive(&t, &empty).unwrap());
        }
    }

    #[test]
    fn failure_reasons() {
        let p = Tree::path(3).unwrap();
        assert!(global_defensive_failure(&p, &set(3, &[0]))
            .unwrap()
            .unwrap()
            .contains("dominating"));
        assert!(global_defensive_failure(&p, &set(3, &[1]))
            .unwrap()
            .unwrap()
            .contains("defensive"));
        assert_eq!(
            global_defensive_failure(&p, &set(3, &[0, 1])).unwrap(),
            None
        );
    }
}
