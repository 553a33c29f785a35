//! Per-tree evaluation of the alliance inequalities and corpus sweeps.
//!
//! Everything is scaled by 6 so no fractions appear:
//!
//! * `slack6      = 6·γ_a + n − 6·γ_o − 2`, claimed `>= 0` for `n >= 2`;
//! * `conj_slack6 = 6·γ_a + n − 6·γ_o`, claimed `>= 0` for all `n`;
//! * the older bound `|γ_o − γ_a| <= n/2` is checked as `2·|γ_o − γ_a| <= n`.
//!
//! A tree is sharp when `slack6 == 0`. The one-vertex tree has
//! `slack6 = −1`; it is reported as degenerate and only takes part in the
//! `conj_slack6` check.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::alliance::is_global_offensive;
use crate::construct::smaller_side_offensive;
use crate::corpus::{corpus, CorpusEntry, CorpusSpec};
use crate::error::{Error, Result};
use crate::pruefer::{format_dump_line, to_pruefer};
use crate::solver::{gamma_a, gamma_o, solve, AllianceKind, DEFAULT_MAX_EXACT_N};
use crate::tree::Tree;
use crate::vertex_set::VertexSet;

/// `6·γ_a + n − 6·γ_o − 2`.
pub fn slack6(n: usize, gamma_a: usize, gamma_o: usize) -> i64 {
    conj_slack6(n, gamma_a, gamma_o) - 2
}

/// `6·γ_a + n − 6·γ_o`.
pub fn conj_slack6(n: usize, gamma_a: usize, gamma_o: usize) -> i64 {
    6 * gamma_a as i64 + n as i64 - 6 * gamma_o as i64
}

/// `2·|γ_o − γ_a| <= n`.
pub fn prior_bound_holds(n: usize, gamma_a: usize, gamma_o: usize) -> bool {
    2 * gamma_a.abs_diff(gamma_o) <= n
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRecord {
    pub instance_id: String,
    pub n: usize,
    pub gamma_a: usize,
    pub gamma_a_witness: VertexSet,
    pub gamma_o: usize,
    pub gamma_o_witness: VertexSet,
    pub slack6: i64,
    pub conj_slack6: i64,
    pub prior_bound_ok: bool,
    pub sharp: bool,
}

/// Exact record for one tree, identified by its Prüfer encoding.
pub fn check_theorem(tree: &Tree) -> Result<TheoremRecord> {
    let id = format_dump_line(tree.n(), &to_pruefer(tree));
    check_theorem_with(tree, id, DEFAULT_MAX_EXACT_N)
}

pub fn check_theorem_with(
    tree: &Tree,
    instance_id: String,
    max_exact_n: usize,
) -> Result<TheoremRecord> {
    if tree.n() < 2 {
        return Err(Error::DegenerateInstance(
            "the one-vertex tree gives slack6 = 6 + 1 - 6 - 2 = -1; the inequality needs n >= 2"
                .into(),
        ));
    }
    let a = solve(tree, AllianceKind::Defensive, max_exact_n)?;
    let o = solve(tree, AllianceKind::Offensive, max_exact_n)?;
    Ok(record(
        tree.n(),
        instance_id,
        a.value,
        a.witness,
        o.value,
        o.witness,
    ))
}

fn record(
    n: usize,
    instance_id: String,
    ga: usize,
    ga_witness: VertexSet,
    go: usize,
    go_witness: VertexSet,
) -> TheoremRecord {
    let slack = slack6(n, ga, go);
    TheoremRecord {
        instance_id,
        n,
        gamma_a: ga,
        gamma_a_witness: ga_witness,
        gamma_o: go,
        gamma_o_witness: go_witness,
        slack6: slack,
        conj_slack6: conj_slack6(n, ga, go),
        prior_bound_ok: prior_bound_holds(n, ga, go),
        sharp: slack == 0,
    }
}

/// Checks that remain sound when the tree is too large to solve exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsRecord {
    pub instance_id: String,
    pub n: usize,
    /// Size of the smaller color class, an upper bound on `γ_o`.
    pub gamma_o_upper: usize,
    pub smaller_side_offensive: bool,
    /// `2·gamma_o_upper <= n`
    pub step1_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SweepRecord {
    Checked {
        #[serde(flatten)]
        record: TheoremRecord,
        #[serde(skip_serializing_if = "Option::is_none")]
        sample_index: Option<u64>,
    },
    /// `n = 1`: exact values, excluded from the `slack6` check.
    Degenerate {
        instance_id: String,
        n: usize,
        gamma_a: usize,
        gamma_o: usize,
        slack6: i64,
        conj_slack6: i64,
    },
    BoundsOnly {
        #[serde(flatten)]
        record: BoundsRecord,
        #[serde(skip_serializing_if = "Option::is_none")]
        sample_index: Option<u64>,
    },
}

impl SweepRecord {
    pub fn instance_id(&self) -> &str {
        match self {
            Self::Checked { record, .. } => &record.instance_id,
            Self::Degenerate { instance_id, .. } => instance_id,
            Self::BoundsOnly { record, .. } => &record.instance_id,
        }
    }

    pub fn as_checked(&self) -> Option<&TheoremRecord> {
        match self {
            Self::Checked { record, .. } => Some(record),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `slack6 < 0` with `n >= 2`.
    Theorem,
    /// `conj_slack6 < 0`.
    Conjecture,
    PriorBound,
    /// `γ_o > n/2`, or the smaller color class is not a global offensive alliance.
    Step1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub instance_id: String,
    pub kind: ViolationKind,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub spec: CorpusSpec,
    pub max_exact_n: usize,
    pub count: usize,
    pub checked: usize,
    pub degenerate: usize,
    pub bounds_only: usize,
    /// Minimum `slack6` over exactly checked trees with `n >= 2`.
    pub min_slack6: Option<i64>,
    pub min_conj_slack6: Option<i64>,
    pub violations: Vec<Violation>,
    pub sharp: Vec<String>,
    pub wall_time_ms: u128,
    pub records: Vec<SweepRecord>,
}

/// Evaluates every corpus tree; results are in corpus order.
pub fn sweep(spec: &CorpusSpec, max_exact_n: usize) -> Result<SweepReport> {
    let started = Instant::now();
    let entries = corpus(spec)?;
    let records = entries
        .par_iter()
        .map(|entry| {
            evaluate(entry, max_exact_n).map_err(|e| Error::Instance {
                instance: entry.instance_id(),
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut report = SweepReport {
        spec: spec.clone(),
        max_exact_n,
        count: records.len(),
        checked: 0,
        degenerate: 0,
        bounds_only: 0,
        min_slack6: None,
        min_conj_slack6: None,
        violations: Vec::new(),
        sharp: Vec::new(),
        wall_time_ms: 0,
        records: Vec::new(),
    };
    for rec in &records {
        report.absorb(rec);
    }
    report.records = records;
    report.wall_time_ms = started.elapsed().as_millis();
    Ok(report)
}

impl SweepReport {
    fn absorb(&mut self, rec: &SweepRecord) {
        let id = rec.instance_id().to_string();
        match rec {
            SweepRecord::Checked { record: r, .. } => {
                self.checked += 1;
                self.min_slack6 = Some(self.min_slack6.map_or(r.slack6, |m| m.min(r.slack6)));
                self.note_conj(&id, r.conj_slack6);
                if r.slack6 < 0 {
                    self.violate(
                        &id,
                        ViolationKind::Theorem,
                        format!("slack6 = {}", r.slack6),
                    );
                }
                if !r.prior_bound_ok {
                    self.violate(
                        &id,
                        ViolationKind::PriorBound,
                        format!(
                            "gamma_a = {}, gamma_o = {}, n = {}",
                            r.gamma_a, r.gamma_o, r.n
                        ),
                    );
                }
                if 2 * r.gamma_o > r.n {
                    self.violate(
                        &id,
                        ViolationKind::Step1,
                        format!("gamma_o = {}", r.gamma_o),
                    );
                }
                if r.sharp {
                    self.sharp.push(id);
                }
            }
            SweepRecord::Degenerate { conj_slack6, .. } => {
                self.degenerate += 1;
                self.note_conj(&id, *conj_slack6);
            }
            SweepRecord::BoundsOnly { record: b, .. } => {
                self.bounds_only += 1;
                if !b.smaller_side_offensive || !b.step1_ok {
                    self.violate(
                        &id,
                        ViolationKind::Step1,
                        format!("smaller side of size {} failed", b.gamma_o_upper),
                    );
                }
            }
        }
    }

    fn note_conj(&mut self, id: &str, value: i64) {
        self.min_conj_slack6 = Some(self.min_conj_slack6.map_or(value, |m| m.min(value)));
        if value < 0 {
            self.violate(
                id,
                ViolationKind::Conjecture,
                format!("conj_slack6 = {value}"),
            );
        }
    }

    fn violate(&mut self, id: &str, kind: ViolationKind, detail: String) {
        self.violations.push(Violation {
            instance_id: id.to_string(),
            kind,
            detail,
        });
    }
}

fn evaluate(entry: &CorpusEntry, max_exact_n: usize) -> Result<SweepRecord> {
    let tree = &entry.tree;
    let n = tree.n();
    let id = entry.instance_id();
    let sample_index = entry.sample.map(|(_, i)| i);
    if n == 1 {
        let (ga, go) = (gamma_a(tree)?.value, gamma_o(tree)?.value);
        return Ok(SweepRecord::Degenerate {
            instance_id: id,
            n,
            gamma_a: ga,
            gamma_o: go,
            slack6: slack6(n, ga, go),
            conj_slack6: conj_slack6(n, ga, go),
        });
    }
    if n > max_exact_n {
        let side = smaller_side_offensive(tree)?;
        return Ok(SweepRecord::BoundsOnly {
            record: BoundsRecord {
                instance_id: id,
                n,
                gamma_o_upper: side.len(),
                smaller_side_offensive: is_global_offensive(tree, &side)?,
                step1_ok: 2 * side.len() <= n,
            },
            sample_index,
        });
    }
    Ok(SweepRecord::Checked {
        record: check_theorem_with(tree, id, max_exact_n)?,
        sample_index,
    })
}

/// Flat CSV row: `instance_id, n, gamma_a, gamma_o, slack6, sharp, prior_bound_ok`.
/// Bounds-only rows leave the unknown fields empty.
#[derive(Debug, Serialize)]
pub struct CsvRow<'a> {
    pub instance_id: &'a str,
    pub n: usize,
    pub gamma_a: Option<usize>,
    pub gamma_o: Option<usize>,
    pub slack6: Option<i64>,
    pub sharp: Option<bool>,
    pub prior_bound_ok: Option<bool>,
}

impl<'a> From<&'a SweepRecord> for CsvRow<'a> {
    fn from(rec: &'a SweepRecord) -> Self {
        match rec {
            SweepRecord::Checked { record: r, .. } => Self {
                instance_id: &r.instance_id,
                n: r.n,
                gamma_a: Some(r.gamma_a),
                gamma_o: Some(r.gamma_o),
                slack6: Some(r.slack6),
                sharp: Some(r.sharp),
                prior_bound_ok: Some(r.prior_bound_ok),
            },
            SweepRecord::Degenerate {
                instance_id,
                n,
                gamma_a,
                gamma_o,
                slack6,
                ..
            } => Self {
                instance_id,
                n: *n,
                gamma_a: Some(*gamma_a),
                gamma_o: Some(*gamma_o),
                slack6: Some(*slack6),
                sharp: Some(false),
                prior_bound_ok: Some(prior_bound_holds(*n, *gamma_a, *gamma_o)),
            },
            SweepRecord::BoundsOnly { record: b, .. } => Self {
                instance_id: &b.instance_id,
                n: b.n,
                gamma_a: None,
                gamma_o: None,
                slack6: None,
                sharp: None,
                prior_bound_ok: None,
            },
        }
    }
}

/// Writes records as CSV with a header line.
pub fn write_csv<W: std::io::Write>(records: &[SweepRecord], out: W) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for rec in records {
        writer.serialize(CsvRow::from(rec))?;
    }
    writer.flush()?;
    Ok(())
}
