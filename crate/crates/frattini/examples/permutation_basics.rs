//! Cycle notation, composition, conjugation and element orders.
//!
//! Run with: cargo run -p frattini --example permutation_basics

use frattini::Permutation;

fn main() {
    let a = Permutation::parse_cycles("(1 2)", 5).unwrap();
    let b = Permutation::parse_cycles("(2 3 4 5)", 5).unwrap();

    // Products read left to right: a.compose(&b) applies a first.
    println!("a       = {a}");
    println!("b       = {b}");
    println!("a b     = {}", a.compose(&b));
    println!("b a     = {}", b.compose(&a));
    println!("b^-1    = {}", b.inverse());

    // Conjugation relabels cycles: a^b has the cycle (b(1) b(2)).
    println!("a^b     = {}", a.conjugate(&b));

    // Orders are lcms of cycle lengths.
    let c = Permutation::parse_cycles("(1 2)(3 4 5)", 5).unwrap();
    println!("|{c}| = {}", c.order());
    println!("|{b}| = {}", b.order());

    // Everything round-trips through the text form.
    let text = c.to_string();
    assert_eq!(Permutation::parse_cycles(&text, 5).unwrap(), c);
    println!("round-trip through {text:?} ok");
}
