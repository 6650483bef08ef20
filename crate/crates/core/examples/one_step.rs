//! The smallest nontrivial case: one point moved into the upper set.
//!
//! `f(0,0,0)` has three terms and there are three groves, one per term.

use std::sync::Arc;

use cube_recurrence::groves::enumerate_local_moves;
use cube_recurrence::lattice::{Point3, Preset};
use cube_recurrence::recurrence::{f_symbolic, RecurrenceMode};

fn main() {
    let ic = Arc::new(Preset::explicit([Point3::ORIGIN]).build().unwrap());
    let f = f_symbolic(&ic, &RecurrenceMode::EdgeVars).unwrap();
    println!("f(0,0,0) = {f}");
    for g in enumerate_local_moves(&ic).unwrap() {
        println!("  {}  m(G) = {}", g.to_json_line(), g.monomial());
    }
}
