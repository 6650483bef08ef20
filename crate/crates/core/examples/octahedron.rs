//! The shifted-octahedron specialization, computed directly and through the
//! coordinate change to the octahedron recurrence.

use cube_recurrence::lattice::Preset;
use cube_recurrence::recurrence::octahedron_check;

fn main() {
    for n in 1..=6 {
        let ic = Preset::standard(n).build().unwrap();
        let rep = octahedron_check(&ic).unwrap();
        println!(
            "standard({n}): {} terms, routes agree: {}",
            rep.shift_octa.len(),
            rep.equal
        );
    }
}
