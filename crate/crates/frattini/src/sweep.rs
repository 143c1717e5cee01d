//! Exhaustive verification harness: run [`converse_verdict`] over every
//! subgroup of every group in a catalog and tabulate the outcomes.
//!
//! Cases are independent, so groups may be processed on several threads;
//! rows are sorted canonically afterwards, making the report deterministic
//! for any thread count. Anything inconsistent is a counterexample to the
//! normality equivalence and is counted, never swallowed.

use std::fmt::Write as _;
use std::time::Instant;

use thiserror::Error;

use crate::argument::{converse_verdict, FrattiniError};
use crate::catalog::{direct_product, make_alternating, make_cyclic, make_dihedral,
    make_quaternion, make_symmetric};
use crate::group::Group;
use crate::subgroup::{all_subgroups, SubgroupError};

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("group {name} has order {order}, above the sweep cap {max_order}")]
    GroupTooLarge {
        name: String,
        order: usize,
        max_order: usize,
    },
    #[error("in group {name}: {source}")]
    Subgroups {
        name: String,
        #[source]
        source: SubgroupError,
    },
    #[error("in group {name}: {source}")]
    Verdict {
        name: String,
        #[source]
        source: FrattiniError,
    },
}

/// One verified `(G, K)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepCase {
    pub group_name: String,
    pub group_order: usize,
    pub subgroup_fingerprint: String,
    pub subgroup_order: usize,
    pub condition_holds: bool,
    pub normal: bool,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepTotals {
    pub groups: usize,
    pub subgroups: usize,
    pub inconsistencies: usize,
}

pub struct SweepReport {
    pub cases: Vec<SweepCase>,
    pub totals: SweepTotals,
    pub runtime_seconds: f64,
}

/// Default order ceiling for [`default_catalog`] and the CLI sweep.
pub const DEFAULT_MAX_ORDER: usize = 48;

/// The stock catalog: S2–S4, A3–A4, C1–C24, D3–D12, Q8 and the direct
/// products C2×C2×C2, S3×C2, A4×C2. Covers abelian and nonabelian groups,
/// several primes, and nontrivial Sylow counts, all at desk scale.
pub fn default_catalog() -> Vec<(String, Group)> {
    let mut catalog: Vec<(String, Group)> = Vec::new();
    for n in 2..=4 {
        catalog.push((format!("S{n}"), make_symmetric(n).expect("S_n builds")));
    }
    for n in 3..=4 {
        catalog.push((format!("A{n}"), make_alternating(n).expect("A_n builds")));
    }
    for n in 1..=24 {
        catalog.push((format!("C{n}"), make_cyclic(n).expect("C_n builds")));
    }
    for n in 3..=12 {
        catalog.push((format!("D{n}"), make_dihedral(n).expect("D_n builds")));
    }
    catalog.push(("Q8".into(), make_quaternion()));

    let c2 = make_cyclic(2).expect("C2 builds");
    let c2c2 = direct_product(&c2, &c2).expect("product builds");
    catalog.push((
        "C2xC2xC2".into(),
        direct_product(&c2c2, &c2).expect("product builds"),
    ));
    catalog.push((
        "S3xC2".into(),
        direct_product(&make_symmetric(3).expect("S3 builds"), &c2).expect("product builds"),
    ));
    catalog.push((
        "A4xC2".into(),
        direct_product(&make_alternating(4).expect("A4 builds"), &c2).expect("product builds"),
    ));
    catalog
}

/// Sweeps every subgroup of every selected group. All selected groups must
/// respect `max_order`; `threads` ≥ 2 fans the groups out over that many
/// worker threads.
pub fn sweep(
    selection: &[(String, Group)],
    max_order: usize,
    threads: usize,
) -> Result<SweepReport, SweepError> {
    for (name, group) in selection {
        if group.order() > max_order {
            return Err(SweepError::GroupTooLarge {
                name: name.clone(),
                order: group.order(),
                max_order,
            });
        }
    }
    let started = Instant::now();

    let mut cases: Vec<SweepCase> = if threads <= 1 || selection.len() <= 1 {
        let mut cases = Vec::new();
        for pair in selection {
            cases.extend(sweep_one(pair)?);
        }
        cases
    } else {
        let workers = threads.min(selection.len());
        let results: Vec<Result<Vec<SweepCase>, SweepError>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        for pair in selection.iter().skip(w).step_by(workers) {
                            local.extend(sweep_one(pair)?);
                        }
                        Ok(local)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep worker panicked"))
                .collect()
        });
        let mut cases = Vec::new();
        for result in results {
            cases.extend(result?);
        }
        cases
    };

    cases.sort_by(|a, b| {
        (&a.group_name, a.subgroup_order, &a.subgroup_fingerprint).cmp(&(
            &b.group_name,
            b.subgroup_order,
            &b.subgroup_fingerprint,
        ))
    });
    let totals = SweepTotals {
        groups: selection.len(),
        subgroups: cases.len(),
        inconsistencies: cases.iter().filter(|c| !c.consistent).count(),
    };
    Ok(SweepReport {
        cases,
        totals,
        runtime_seconds: started.elapsed().as_secs_f64(),
    })
}

fn sweep_one((name, group): &(String, Group)) -> Result<Vec<SweepCase>, SweepError> {
    let subgroups = all_subgroups(group).map_err(|source| SweepError::Subgroups {
        name: name.clone(),
        source,
    })?;
    let mut cases = Vec::with_capacity(subgroups.len());
    for k in subgroups {
        let verdict = converse_verdict(group, &k).map_err(|source| SweepError::Verdict {
            name: name.clone(),
            source,
        })?;
        cases.push(SweepCase {
            group_name: name.clone(),
            group_order: group.order(),
            subgroup_fingerprint: k.fingerprint(),
            subgroup_order: k.order(),
            condition_holds: verdict.condition_holds,
            normal: verdict.normal,
            consistent: verdict.consistent,
        });
    }
    Ok(cases)
}

impl SweepReport {
    /// Fixed tabular rendering of the cases and totals. The runtime is not
    /// included, so equal inputs render byte-identically.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{:<10} {:>5}  {:<16} {:>5}  {:<9} {:<6} consistent",
            "group", "|G|", "subgroup", "|K|", "condition", "normal"
        )
        .expect("writing to String cannot fail");
        for case in &self.cases {
            writeln!(
                out,
                "{:<10} {:>5}  {:<16} {:>5}  {:<9} {:<6} {}",
                case.group_name,
                case.group_order,
                case.subgroup_fingerprint,
                case.subgroup_order,
                yes_no(case.condition_holds),
                yes_no(case.normal),
                if case.consistent { "yes" } else { "NO — COUNTEREXAMPLE" },
            )
            .expect("writing to String cannot fail");
        }
        writeln!(
            out,
            "totals: groups={} subgroups={} inconsistencies={}",
            self.totals.groups, self.totals.subgroups, self.totals.inconsistencies
        )
        .expect("writing to String cannot fail");
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
