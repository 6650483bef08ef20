//! Somos-6 and Somos-7 terms, each certified as a number of groves.

use cube_recurrence::sequences::{gr_certificate, gr_terms, GaleRobinsonSpec, DEFAULT_CERTIFICATE_BOUND};

fn main() {
    for (name, spec) in [
        ("Somos-6", GaleRobinsonSpec::somos6()),
        ("Somos-7", GaleRobinsonSpec::somos7()),
    ] {
        let terms = gr_terms(&spec, 16).unwrap();
        let values: Vec<String> = terms.iter().map(|t| t.value.to_string()).collect();
        println!("{name}: {}", values.join(", "));
        for l in spec.n() as u32..=12 {
            match gr_certificate(spec.p, spec.q, spec.r, l, DEFAULT_CERTIFICATE_BOUND) {
                Ok(c) => println!("  y({l}) = {} = #groves {}: {}", c.value, c.grove_count, c.holds()),
                Err(e) => println!("  y({l}): {e}"),
            }
        }
    }
}
