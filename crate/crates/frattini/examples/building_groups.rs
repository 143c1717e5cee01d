//! Builtin constructors, generated groups, direct products and group files.
//!
//! Run with: cargo run -p frattini --example building_groups

use frattini::{
    direct_product, format_group_file, make_cyclic, make_dihedral, make_quaternion,
    make_symmetric, parse_group_file, Group, Permutation,
};

fn main() {
    for (name, group) in [
        ("S4", make_symmetric(4).unwrap()),
        ("D6", make_dihedral(6).unwrap()),
        ("Q8", make_quaternion()),
    ] {
        println!("{name}: degree {}, order {}", group.degree(), group.order());
    }

    // Any generating set works; the element table is enumerated exactly.
    let gens = vec![
        Permutation::parse_cycles("(1 2 3)", 4).unwrap(),
        Permutation::parse_cycles("(2 3 4)", 4).unwrap(),
    ];
    let a4 = Group::build(4, gens).unwrap();
    println!("<(1 2 3), (2 3 4)>: order {} (A4)", a4.order());

    let product = direct_product(&a4, &make_cyclic(2).unwrap()).unwrap();
    println!(
        "A4 x C2: degree {}, order {}",
        product.degree(),
        product.order()
    );

    // Groups serialize to a line-oriented file format and back.
    let text = format_group_file(&a4);
    println!("--- group file ---\n{text}------------------");
    let reloaded = parse_group_file(&text).unwrap();
    assert!(reloaded.same_group(&a4));
    println!("reloaded group matches the original element table");
}
