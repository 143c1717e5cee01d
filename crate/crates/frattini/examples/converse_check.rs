//! The converse direction as an empirical check: the coverage condition
//! holds exactly when K is normal, on every subgroup of a group.
//!
//! Run with: cargo run -p frattini --example converse_check

use frattini::{all_subgroups, converse_verdict, frattini_condition, make_symmetric};

fn main() {
    let s4 = make_symmetric(4).unwrap();
    println!("K per subgroup of S4: coverage condition vs normality");
    for k in all_subgroups(&s4).unwrap() {
        let verdict = converse_verdict(&s4, &k).unwrap();
        println!(
            "  |K| = {:>2}  condition {:<5}  normal {:<5}  consistent {}",
            k.order(),
            verdict.condition_holds,
            verdict.normal,
            verdict.consistent
        );
        assert!(verdict.consistent, "a counterexample would show up here");
    }

    // Zoom into one failing case: a transposition subgroup covers almost
    // nothing of S4.
    let k = &all_subgroups(&s4).unwrap()[1];
    let report = frattini_condition(&s4, k).unwrap();
    let entry = &report.entries[0];
    println!(
        "\nsmallest nontrivial K: P = {:?}, |N_G(P)| = {}, |K·N_G(P)| = {} of {}",
        entry.sylow,
        entry.normalizer_order,
        entry.product_size,
        s4.order()
    );
}
