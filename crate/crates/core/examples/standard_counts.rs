//! Number of groves for standard initial conditions, against 3^floor(n^2/4).

use cube_recurrence::lattice::Preset;
use cube_recurrence::recurrence::all_ones_count;
use num_bigint::BigInt;

fn main() {
    println!("{:>3} {:>14} {:>14}", "n", "f(0,0,0)", "3^floor(n^2/4)");
    for n in 1..=9u32 {
        let ic = Preset::standard(n).build().unwrap();
        let count = all_ones_count(&ic).unwrap();
        let formula = BigInt::from(3).pow(n * n / 4);
        println!("{n:>3} {count:>14} {formula:>14}");
        assert_eq!(count, formula);
    }
}
