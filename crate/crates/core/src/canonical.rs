//! AHU canonical codes for free trees.
//!
//! A rooted code is `(` followed by the sorted codes of the children and
//! `)`. A free tree is rooted at its center; a bicentral tree is cut at the
//! central edge and encoded as the sorted pair of the two halves joined by
//! `|`. Two trees get the same code exactly when they are isomorphic.

use crate::tree::{centers, Tree};

/// Canonical isomorphism code of a free tree.
pub fn canonical_code(tree: &Tree) -> String {
    match centers(tree).as_slice() {
        [c] => rooted_code(tree, *c, None),
        [a, b] => {
            let mut halves = [
                rooted_code(tree, *a, Some(*b)),
                rooted_code(tree, *b, Some(*a)),
            ];
            halves.sort();
            format!("{}|{}", halves[0], halves[1])
        }
        other => unreachable!("a tree has one or two centers, got {other:?}"),
    }
}

/// AHU code of the tree rooted at `root`, ignoring the component of `blocked`.
pub fn rooted_code(tree: &Tree, root: usize, blocked: Option<usize>) -> String {
    let n = tree.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    parent[root] = root;
    if let Some(b) = blocked {
        parent[b] = b;
    }
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for &w in tree.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                order.push(w);
            }
        }
    }

    let mut children: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut code = String::new();
    for &v in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[v]);
        kids.sort_unstable();
        let mut own = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        own.push('(');
        for k in &kids {
            own.push_str(k);
        }
        own.push(')');
        if v == root {
            code = own;
        } else {
            children[parent[v]].push(own);
        }
    }
    code
}
