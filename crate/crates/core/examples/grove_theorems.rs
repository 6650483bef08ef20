//! Runs the property suite on a few initial conditions and prints a table.

use cube_recurrence::cli::verify::{run_checks, Property, Status, VerifyOptions};
use cube_recurrence::lattice::Preset;

fn main() {
    let presets = ["standard:3", "standard:4", "kleber:2,2,2", "gr:4,1,2,10", "gr:1,2,3,9"];
    for name in presets {
        let ic = Preset::parse_short(name).unwrap().build().unwrap();
        let results = run_checks(&ic, &Property::ALL, &VerifyOptions::default());
        let line: Vec<String> = results
            .iter()
            .map(|r| {
                let mark = match &r.status {
                    Status::Pass => "ok",
                    Status::Fail(_) => "FAIL",
                    Status::Skipped(_) => "-",
                };
                format!("{}={mark}", r.property.name())
            })
            .collect();
        println!("{name:<14} {}", line.join(" "));
    }
}
