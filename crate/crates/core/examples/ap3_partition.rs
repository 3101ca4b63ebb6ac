//! Greedy partition of the nonnegative integers into sequences free of
//! 3-term arithmetic progressions, compared against its digit recurrence.

use threehalves::ap3::{a006999_terms, characteristic, contains_three_term_ap, greedy_partition};

fn main() {
    let p = greedy_partition(3usize.pow(6));
    for k in 0..4 {
        let head: Vec<String> = p.class(k).iter().take(12).map(|n| n.to_string()).collect();
        println!("T_{k}: {} ...", head.join(", "));
        assert!(!contains_three_term_ap(p.class(k)));
    }

    let agree = (0..p.limit()).all(|n| p.class_of(n) == Some(characteristic(n as u64) as usize));
    println!(
        "greedy agrees with the recurrence below {}: {agree}",
        p.limit()
    );

    let b: Vec<String> = a006999_terms(15).iter().map(|t| t.to_string()).collect();
    println!("A006999: {}", b.join(", "));
}
