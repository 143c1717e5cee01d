//! Building, serializing, replaying and tampering with a normality
//! certificate.
//!
//! Run with: cargo run -p frattini --example normality_certificate

use frattini::{
    build_certificate, check_certificate, make_symmetric, NormalityCertificate, Permutation,
    Subgroup,
};

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
    let x = Permutation::parse_cycles("(1 2 3)", 4).unwrap();
    let g = Permutation::parse_cycles("(1 4)", 4).unwrap();

    let cert = build_certificate(&s4, &a4, &x, &g).unwrap();
    println!("--- certificate ---");
    print!("{}", cert.to_text());
    println!("-------------------");

    // The checker replays every step from scratch.
    check_certificate(&cert, &s4, &a4).unwrap();
    println!("checker: ACCEPTED ({})^({}) = {} ∈ K", cert.x, cert.g, cert.result);

    // The text form is what the CLI writes and reads.
    let reparsed = NormalityCertificate::from_text(&cert.to_text()).unwrap();
    assert_eq!(reparsed, cert);

    // Any single-field tampering is caught.
    let mut bad = cert.clone();
    bad.result = bad.result.compose(&Permutation::parse_cycles("(1 2)", 4).unwrap());
    let failure = check_certificate(&bad, &s4, &a4).unwrap_err();
    println!("tampered result: REJECTED ({failure})");
}
