//! The classical direction: K normal in G forces G = K·N_G(P) for every
//! Sylow subgroup P of K.
//!
//! Run with: cargo run -p frattini --example frattini_forward

use frattini::{frattini_forward, make_symmetric, Permutation, Subgroup};

fn main() {
    let s4 = make_symmetric(4).unwrap();
    let a4 = Subgroup::generated(
        &s4,
        &[
            Permutation::parse_cycles("(1 2 3)", 4).unwrap(),
            Permutation::parse_cycles("(2 3 4)", 4).unwrap(),
        ],
    )
    .unwrap();

    let report = frattini_forward(&s4, &a4).unwrap();
    println!("G = S4 (order 24), K = A4 (order 12)");
    println!("{:>2} {:>10} {:>12}  sylow subgroup", "p", "|N_G(P)|", "|K N_G(P)|");
    for entry in &report.entries {
        println!(
            "{:>2} {:>10} {:>12}  {:?}",
            entry.prime, entry.normalizer_order, entry.product_size, entry.sylow
        );
        assert!(entry.holds);
    }
    println!("every product covers G: {}", report.condition_holds);
}
