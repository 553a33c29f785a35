//! Tree corpora: every labeled tree, one tree per isomorphism class, or
//! uniformly random labeled trees.
//!
//! Free-tree representatives are the lexicographically least Prüfer
//! sequence in each class. The classes themselves are first obtained by
//! growing every class on `n − 1` vertices by one leaf; the labeled
//! sequences are then scanned in lexicographic order until every class has
//! been met, so the first hit per class is its least encoding.

use std::collections::{HashMap, HashSet};
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::canonical::canonical_code;
use crate::error::{Error, Result};
use crate::pruefer::{format_dump_line, from_pruefer, to_pruefer, PrueferSequences};
use crate::tree::Tree;

/// Largest `n` for exhaustive labeled enumeration (`9^7` trees).
pub const MAX_LABELED_N: usize = 9;
/// Largest `n` for free-tree enumeration.
pub const MAX_FREE_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusMode {
    ExhaustiveLabeled,
    ExhaustiveFree,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub n_min: usize,
    pub n_max: usize,
    /// Number of samples in random mode; ignored otherwise.
    pub samples: u64,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive_free(n: RangeInclusive<usize>) -> Self {
        Self::exhaustive(CorpusMode::ExhaustiveFree, n)
    }

    pub fn exhaustive_labeled(n: RangeInclusive<usize>) -> Self {
        Self::exhaustive(CorpusMode::ExhaustiveLabeled, n)
    }

    pub fn random(n: RangeInclusive<usize>, samples: u64, seed: u64) -> Self {
        Self {
            mode: CorpusMode::Random,
            n_min: *n.start(),
            n_max: *n.end(),
            samples,
            seed,
        }
    }

    fn exhaustive(mode: CorpusMode, n: RangeInclusive<usize>) -> Self {
        Self {
            mode,
            n_min: *n.start(),
            n_max: *n.end(),
            samples: 0,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        if self.n_min > self.n_max {
            return Err(Error::InvalidSpec(format!(
                "empty range {}..{}",
                self.n_min, self.n_max
            )));
        }
        match self.mode {
            CorpusMode::Random if self.samples == 0 => Err(Error::InvalidSpec(
                "random mode needs at least one sample".into(),
            )),
            CorpusMode::ExhaustiveLabeled if self.n_max > MAX_LABELED_N => {
                Err(too_large(self.n_max, MAX_LABELED_N))
            }
            CorpusMode::ExhaustiveFree if self.n_max > MAX_FREE_N => {
                Err(too_large(self.n_max, MAX_FREE_N))
            }
            _ => Ok(()),
        }
    }
}

/// A corpus tree with enough provenance to regenerate it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub sequence: Vec<usize>,
    pub tree: Tree,
    /// `(seed, index)` for random samples.
    pub sample: Option<(u64, u64)>,
}

impl CorpusEntry {
    fn from_sequence(sequence: Vec<usize>, n: usize) -> Self {
        let tree = from_pruefer(&sequence, n).expect("enumerated sequences are valid");
        Self {
            sequence,
            tree,
            sample: None,
        }
    }

    /// The dump line `n:p1,...`, which identifies the labeled tree.
    pub fn instance_id(&self) -> String {
        format_dump_line(self.tree.n(), &self.sequence)
    }
}

/// All `n^(n−2)` labeled trees in lexicographic Prüfer order.
pub fn enumerate_labeled_trees(n: usize) -> Result<impl Iterator<Item = Tree>> {
    Ok(labeled_entries(n)?.map(|e| e.tree))
}

pub fn labeled_entries(n: usize) -> Result<impl Iterator<Item = CorpusEntry>> {
    check_n(n, MAX_LABELED_N)?;
    Ok(PrueferSequences::new(n).map(move |seq| CorpusEntry::from_sequence(seq, n)))
}

/// One tree per isomorphism class, ordered by representative encoding.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Tree>> {
    Ok(free_entries(n)?.into_iter().map(|e| e.tree).collect())
}

pub fn free_entries(n: usize) -> Result<Vec<CorpusEntry>> {
    check_n(n, MAX_FREE_N)?;
    let classes = free_tree_classes(n);
    let mut found = HashSet::with_capacity(classes.len());
    let mut out = Vec::with_capacity(classes.len());
    for seq in PrueferSequences::new(n) {
        let entry = CorpusEntry::from_sequence(seq, n);
        let code = canonical_code(&entry.tree);
        debug_assert!(classes.contains_key(&code), "leaf growth missed a class");
        if found.insert(code) {
            out.push(entry);
            if found.len() == classes.len() {
                break;
            }
        }
    }
    Ok(out)
}

/// Canonical code → some tree, for every free tree on `n` vertices.
fn free_tree_classes(n: usize) -> HashMap<String, Tree> {
    let one = Tree::single_vertex();
    let mut classes = HashMap::from([(canonical_code(&one), one)]);
    for m in 2..=n {
        let mut next = HashMap::new();
        for tree in classes.values() {
            for v in tree.vertices() {
                let edges = tree.edges().iter().copied().chain([(v, m - 1)]);
                let grown = Tree::from_edges(m, edges).expect("adding a leaf keeps a tree");
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        classes = next;
    }
    classes
}

/// A uniformly random labeled tree; the same `(n, seed)` gives the same tree.
pub fn random_tree(n: usize, seed: u64) -> Tree {
    random_entry(n..=n, seed, 0).tree
}

/// Sample `index` of the random stream for `seed`. The sample's state comes
/// from `(seed, index)` alone, so samples can be drawn in any order. With a
/// range, `n` is drawn uniformly from it first.
pub fn random_entry(n: RangeInclusive<usize>, seed: u64, index: u64) -> CorpusEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let (lo, hi) = (*n.start(), *n.end());
    assert!(
        lo >= 1 && lo <= hi,
        "random trees need a nonempty range of n >= 1"
    );
    let size = if lo == hi { lo } else { rng.gen_range(lo..=hi) };
    let sequence: Vec<usize> = (0..size.saturating_sub(2))
        .map(|_| rng.gen_range(0..size))
        .collect();
    let mut entry = CorpusEntry::from_sequence(sequence, size);
    entry.sample = Some((seed, index));
    entry
}

/// Materializes a corpus in its deterministic order.
pub fn corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    let range = spec.n_min..=spec.n_max;
    Ok(match spec.mode {
        CorpusMode::ExhaustiveLabeled => {
            let mut out = Vec::new();
            for n in range {
                out.extend(labeled_entries(n)?);
            }
            out
        }
        CorpusMode::ExhaustiveFree => {
            let mut out = Vec::new();
            for n in range {
                out.extend(free_entries(n)?);
            }
            out
        }
        CorpusMode::Random => (0..spec.samples)
            .map(|i| random_entry(range.clone(), spec.seed, i))
            .collect(),
    })
}

/// One dump line per tree.
pub fn dump<'a, I>(trees: I) -> String
where
    I: IntoIterator<Item = &'a Tree>,
{
    let mut out = String::new();
    for tree in trees {
        out.push_str(&format_dump_line(tree.n(), &to_pruefer(tree)));
        out.push('\n');
    }
    out
}

fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSpec("n must be at least 1".into()));
    }
    if n > cap {
        return Err(too_large(n, cap));
    }
    Ok(())
}

fn too_large(n: usize, cap: usize) -> Error {
    Error::InstanceTooLarge {
        n,
        cap,
        hint: "exhaustive enumeration is limited to small n",
    }
}
