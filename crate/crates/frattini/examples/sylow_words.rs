//! Shortest words over the Sylow alphabet: every element of K as a product
//! of elements drawn from K's Sylow subgroups.
//!
//! Run with: cargo run -p frattini --example sylow_words

use frattini::{all_sylow_subgroups, make_cyclic, sylow_word, word_product, Subgroup};

fn main() {
    // C6 is the smallest case where a single Sylow element is not enough:
    // an order-6 element needs one order-2 and one order-3 letter.
    let c6 = make_cyclic(6).unwrap();
    let k = Subgroup::whole(&c6);
    let flat = all_sylow_subgroups(&k).unwrap();
    for (i, sub) in flat.iter().enumerate() {
        println!("sylow[{i}] = {sub:?}");
    }

    for x in k.elements() {
        let word = sylow_word(&k, x).unwrap();
        let spelled: Vec<String> = word
            .iter()
            .map(|l| format!("{}@{}", l.element, l.sylow_index))
            .collect();
        println!("{x:<14} = {}", if spelled.is_empty() { "(empty word)".into() } else { spelled.join(" · ") });
        assert_eq!(&word_product(6, &word), x);
    }
}
