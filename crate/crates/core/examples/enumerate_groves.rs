//! Enumerates groves two ways and checks the sum of their monomials.
//!
//! Usage: `cargo run --example enumerate_groves -- [n]` (standard(n), default 3).

use std::sync::Arc;

use cube_recurrence::groves::{enumerate_bruteforce, enumerate_local_moves, monomial_sum, DEFAULT_BRUTE_CAP};
use cube_recurrence::lattice::Preset;
use cube_recurrence::recurrence::{f_symbolic, RecurrenceMode};

fn main() {
    let n: u32 = std::env::args().nth(1).map_or(3, |s| s.parse().expect("n"));
    let ic = Arc::new(Preset::standard(n).build().unwrap());
    let local = enumerate_local_moves(&ic).unwrap();
    println!("standard({n}): {} groves by local moves", local.len());

    match enumerate_bruteforce(&ic, ic.min_cutoff(), DEFAULT_BRUTE_CAP) {
        Ok(brute) => println!(
            "brute force at N = {}: {} groves, equal: {}",
            ic.min_cutoff(),
            brute.len(),
            brute == local
        ),
        Err(e) => println!("brute force skipped: {e}"),
    }

    let f = f_symbolic(&ic, &RecurrenceMode::EdgeVars).unwrap();
    println!("sum of m(G) = f(0,0,0): {}", monomial_sum(&local) == f);
}
