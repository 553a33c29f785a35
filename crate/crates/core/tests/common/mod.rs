//! Test-only oracles. Nothing here calls the solver, the cover routine, or
//! the canonical code it is used to check.

#![allow(dead_code)]

use std::path::PathBuf;

use tree_alliances::Tree;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn load_fixture(name: &str) -> Tree {
    let text = std::fs::read_to_string(fixture(name)).expect("fixture exists");
    tree_alliances::parse_tree(&text).expect("fixture parses")
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kind {
    Defensive,
    Offensive,
}

/// Global alliance test by direct counting over an explicit membership vector.
pub fn oracle_is_global(n: usize, edges: &[(usize, usize)], member: &[bool], kind: Kind) -> bool {
    let adj = adjacency(n, edges);
    for v in 0..n {
        let inside = usize::from(member[v]) + adj[v].iter().filter(|&&w| member[w]).count();
        let outside = adj[v].len() + 1 - inside;
        if inside == 0 {
            return false;
        }
        let checked = match kind {
            Kind::Defensive => member[v],
            Kind::Offensive => !member[v],
        };
        if checked && inside < outside {
            return false;
        }
    }
    true
}

/// Every k-subset of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Minimum global alliance by trying every subset, smallest first, each size
/// in lexicographic order. Returns `(value, first witness)`.
pub fn oracle_gamma(tree: &Tree, kind: Kind) -> (usize, Vec<usize>) {
    let n = tree.n();
    for k in 0..=n {
        for combo in combinations(n, k) {
            let mut member = vec![false; n];
            for &v in &combo {
                member[v] = true;
            }
            if oracle_is_global(n, tree.edges(), &member, kind) {
                return (k, combo);
            }
        }
    }
    unreachable!("the full set qualifies")
}

/// Minimum vertex cover of the edges inside `y`, by trying all subsets of `y`.
pub fn brute_force_cover(tree: &Tree, y: &[usize]) -> usize {
    let inside: Vec<bool> = (0..tree.n()).map(|v| y.contains(&v)).collect();
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| inside[u] && inside[v])
        .collect();
    let m = y.len();
    (0u32..1 << m)
        .filter(|mask| {
            let pick = |v: usize| {
                let i = y.iter().position(|&x| x == v).unwrap();
                mask >> i & 1 == 1
            };
            edges.iter().all(|&(u, v)| pick(u) || pick(v))
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

/// Isomorphism invariant that is complete for trees: the least rooted
/// parenthesis encoding over all choices of root.
pub fn all_roots_form(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let adj = adjacency(n, edges);
    (0..n).map(|r| rooted(&adj, r, usize::MAX)).min().unwrap()
}

fn rooted(adj: &[Vec<usize>], v: usize, parent: usize) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted(adj, w, v))
        .collect();
    kids.sort();
    let mut out = vec![b'1'];
    for k in kids {
        out.extend(k);
    }
    out.push(b'0');
    out
}

/// Standard Prüfer decode with a scan for the smallest leaf at each step.
pub fn slow_decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    if n == 1 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::new();
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] = 0;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Free trees on `n` vertices by growing every class on `n − 1` vertices by a
/// leaf, deduplicated with [`all_roots_form`]; returns the number of classes.
pub fn grown_class_count(n: usize) -> usize {
    let mut classes: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for m in 2..=n {
        let mut seen = std::collections::HashSet::new();
        let mut next = Vec::new();
        for edges in &classes {
            for v in 0..m - 1 {
                let mut grown = edges.clone();
                grown.push((v, m - 1));
                if seen.insert(all_roots_form(m, &grown)) {
                    next.push(grown);
                }
            }
        }
        classes = next;
    }
    classes.len()
}

/// Centers by repeated removal of all current leaves.
fn peel_centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut remaining = n;
    while remaining > 2 {
        let leaves: Vec<usize> = (0..n).filter(|&v| alive[v] && degree[v] <= 1).collect();
        for &v in &leaves {
            alive[v] = false;
            for &w in &adj[v] {
                degree[w] = degree[w].saturating_sub(1);
            }
        }
        remaining -= leaves.len();
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Complete tree invariant computed from at most two roots: the least
/// rooted encoding over the centers.
pub fn center_form(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let adj = adjacency(n, edges);
    peel_centers(&adj)
        .into_iter()
        .map(|c| rooted(&adj, c, usize::MAX))
        .min()
        .unwrap()
}

/// `|Aut(T)|` from the rooted structure at the center.
pub fn automorphism_count(n: usize, edges: &[(usize, usize)]) -> u128 {
    fn count(adj: &[Vec<usize>], v: usize, parent: usize) -> (Vec<u8>, u128) {
        let mut kids: Vec<(Vec<u8>, u128)> = adj[v]
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| count(adj, w, v))
            .collect();
        kids.sort();
        let mut total: u128 = kids.iter().map(|k| k.1).product();
        let mut run = 1u128;
        for i in 1..=kids.len() {
            if i < kids.len() && kids[i].0 == kids[i - 1].0 {
                run += 1;
                total *= run;
            } else {
                run = 1;
            }
        }
        let mut form = vec![b'1'];
        for (k, _) in kids {
            form.extend(k);
        }
        form.push(b'0');
        (form, total)
    }
    let adj = adjacency(n, edges);
    match peel_centers(&adj)[..] {
        [c] => count(&adj, c, usize::MAX).1,
        [a, b] => {
            let (fa, ca) = count(&adj, a, b);
            let (fb, cb) = count(&adj, b, a);
            ca * cb * if fa == fb { 2 } else { 1 }
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}
