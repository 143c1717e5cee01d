//! The exhaustive sweep: every subgroup of every catalog group, checking
//! that the coverage condition and normality always agree.
//!
//! Run with: cargo run -p frattini --example catalog_sweep

use frattini::{default_catalog, sweep};

fn main() {
    let catalog = default_catalog();
    let report = sweep(&catalog, 48, 1).unwrap();

    // Print only the summary here; `frattini sweep` prints the full table.
    let mut per_group: Vec<(String, usize)> = Vec::new();
    for case in &report.cases {
        match per_group.last_mut() {
            Some((name, count)) if *name == case.group_name => *count += 1,
            _ => per_group.push((case.group_name.clone(), 1)),
        }
    }
    for (name, count) in &per_group {
        println!("{name:<10} {count:>3} subgroups");
    }
    println!(
        "\n{} groups, {} (G, K) pairs, {} inconsistencies, {:.3}s",
        report.totals.groups,
        report.totals.subgroups,
        report.totals.inconsistencies,
        report.runtime_seconds
    );
    assert_eq!(report.totals.inconsistencies, 0);
}
