//! Sylow classes: representatives, conjugate orbits and the counting laws.
//!
//! Run with: cargo run -p frattini --example sylow_structure

use frattini::{make_alternating, make_symmetric, p_part, sylow_classes, Subgroup};

fn main() {
    for (name, group) in [
        ("S3", make_symmetric(3).unwrap()),
        ("A4", make_alternating(4).unwrap()),
        ("S4", make_symmetric(4).unwrap()),
    ] {
        let k = Subgroup::whole(&group);
        println!("{name} (order {}):", k.order());
        for class in sylow_classes(&k).unwrap() {
            let order = p_part(k.order(), class.prime).unwrap();
            println!(
                "  p = {}: Sylow order {}, n_{} = {}",
                class.prime,
                order,
                class.prime,
                class.count()
            );
            for sub in &class.conjugates {
                println!("    {:?}", sub);
            }
            // Sylow's counting laws, checked live.
            assert_eq!(class.count() % class.prime, 1);
            assert_eq!((k.order() / order) % class.count(), 0);
        }
    }
}
