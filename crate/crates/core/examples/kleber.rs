//! Kleber's initial conditions: grove counts and the coefficient-1 property.

use std::collections::HashSet;
use std::sync::Arc;

use cube_recurrence::groves::enumerate_local_moves;
use cube_recurrence::lattice::Preset;
use cube_recurrence::recurrence::{all_ones_count, f_symbolic, RecurrenceMode};

fn main() {
    for (i, j, k) in [(1, 1, 1), (2, 2, 2), (2, 3, 2), (3, 3, 3)] {
        let ic = Arc::new(Preset::kleber(i, j, k).build().unwrap());
        let f = f_symbolic(&ic, &RecurrenceMode::EdgeVars).unwrap();
        let groves = enumerate_local_moves(&ic).unwrap();
        let tables: HashSet<_> = groves.iter().map(|g| g.stats().degree).collect();
        println!(
            "kleber({i},{j},{k}): |U_fin| = {:>3}, f(1,...,1) = {:>6}, groves = {:>6}, all coefficients 1: {}, distinct degree tables: {}",
            ic.u_fin().len(),
            all_ones_count(&ic).unwrap(),
            groves.len(),
            f.terms().all(|(_, c)| *c == 1.into()),
            tables.len() == groves.len(),
        );
    }
}
