//! Simplified groves: the even half of a grove, from which the rest follows.

use std::sync::Arc;

use cube_recurrence::groves::{enumerate_local_moves, from_simplified, to_simplified};
use cube_recurrence::lattice::Preset;

fn main() {
    let ic = Arc::new(Preset::standard(4).build().unwrap());
    let n = ic.min_odd_cutoff();
    let groves = enumerate_local_moves(&ic).unwrap();
    let mut components = std::collections::BTreeMap::new();
    for g in &groves {
        let s = to_simplified(g, n).unwrap();
        assert_eq!(&from_simplified(&s).unwrap(), g);
        *components.entry(s.component_count()).or_insert(0) += 1;
    }
    let first = to_simplified(groves.first().unwrap(), n).unwrap();
    println!("standard(4) at N = {n}: {} groves, all round-trip", groves.len());
    println!(
        "components per simplified grove: {components:?} (expected {})",
        (3 * n + 5) / 2
    );
    println!(
        "first simplified grove has {} even vertices and {} edges",
        first.vertices().len(),
        first.edges().len()
    );
}
