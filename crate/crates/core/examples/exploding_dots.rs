//! Runs the exploding-dots machine by hand. Three dots in a box explode
//! into two dots one box to the left.

use threehalves::numeral::{normalize, ExplodingMachine};
use threehalves::BaseSpec;

fn show(m: &ExplodingMachine) -> String {
    m.boxes_lsb_first()
        .iter()
        .rev()
        .map(|d| format!("[{d}]"))
        .collect()
}

fn main() {
    let b = BaseSpec::THREE_HALVES;
    // eleven dots in the units box
    let mut m = ExplodingMachine::new(b, &[11]);
    println!("{}", show(&m));
    while let Some(&i) = m.unstable_boxes().first() {
        m.fire(i);
        println!("{}", show(&m));
    }
    let numeral = m.into_numeral();
    println!("11 = {numeral}");

    // adding digitwise and then exploding is base 3/2 addition
    let raw = [2 + 2, 1 + 1, 2 + 2, 2 + 2];
    println!("2122 + 2122 -> {}", normalize(&raw, b));
}
