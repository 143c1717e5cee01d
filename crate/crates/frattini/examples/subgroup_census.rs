//! Exhaustive subgroup enumeration with normalizers and normality.
//!
//! Run with: cargo run -p frattini --example subgroup_census

use std::collections::BTreeMap;

use frattini::{all_subgroups, is_normal, make_symmetric, normalizer};

fn main() {
    let s4 = make_symmetric(4).unwrap();
    let subgroups = all_subgroups(&s4).unwrap();
    println!("S4 has {} subgroups", subgroups.len());

    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for sub in &subgroups {
        *by_order.entry(sub.order()).or_default() += 1;
    }
    for (order, count) in &by_order {
        println!("  order {order:>2}: {count} subgroup(s)");
    }

    println!("\nnormal subgroups and their normalizers:");
    for sub in &subgroups {
        let n = normalizer(&s4, sub).unwrap();
        let normal = is_normal(&s4, sub).unwrap();
        if normal {
            assert_eq!(n.order(), s4.order());
            println!(
                "  order {:>2}, fingerprint {}: normal",
                sub.order(),
                sub.fingerprint()
            );
        }
    }
}
