//! Powers of 2 and 3, and look-and-say with counts written in base 3/2.

use threehalves::sequences::{
    counting_numbers, look_and_say_inverse, powers, LookAndSay, PowerBase,
};

fn main() {
    let twos = powers(PowerBase::Two, 10);
    let threes = powers(PowerBase::Three, 10);
    for (n, (t, h)) in twos.iter().zip(&threes).enumerate() {
        println!("2^{n} = {:<14} 3^{n} = {h}", t.to_string());
    }

    let terms: Vec<_> = LookAndSay::new().take(10).collect();
    for w in terms.windows(2) {
        let counts = counting_numbers(w[0].digits());
        println!("{:<24} counts {}", w[1].to_string(), counts.join(" "));
        assert_eq!(look_and_say_inverse(w[1].digits()).unwrap(), w[0].digits());
    }
}
