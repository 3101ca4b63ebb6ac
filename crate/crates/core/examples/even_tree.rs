//! The tree of even integers. Reading edge digits from the root spells the
//! base 3/2 numeral of each node.

use num_bigint::BigUint;
use threehalves::even_tree::{build_tree, level_counts, path_representation};

fn main() {
    let tree = build_tree(5);
    print!("{}", tree.render());

    for (k, level) in tree.levels().iter().enumerate() {
        let values: Vec<String> = level.iter().map(|v| v.to_string()).collect();
        println!("level {}: {}", k + 1, values.join(" "));
    }

    let counts: Vec<String> = level_counts(20).iter().map(|c| c.to_string()).collect();
    println!("even integers by digit count: {}", counts.join(", "));

    let x = BigUint::from(1000u32);
    println!("path to 1000: {}", path_representation(&x).unwrap());
}
