//! Writes SVG figures: a lattice window, a grove, a simplified grove and an
//! alternating-sign triangle.
//!
//! Usage: `cargo run --example render_figures -- [out_dir]` (default `figures`).

use std::path::PathBuf;
use std::sync::Arc;

use cube_recurrence::groves::{asm_triangle, enumerate_local_moves, to_simplified};
use cube_recurrence::lattice::Preset;
use cube_recurrence::render::{render_asm, render_grove, render_lattice, render_simplified, Layer, RenderOptions};

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    std::fs::create_dir_all(&dir).unwrap();

    let ic = Arc::new(Preset::standard(4).build().unwrap());
    let grove = enumerate_local_moves(&ic).unwrap().into_iter().nth(40).unwrap();
    let opts = RenderOptions::default();
    let labelled = opts
        .clone()
        .with_layers([Layer::Rhombi, Layer::VertexLabels, Layer::BoundaryClasses]);

    let figures = [
        ("lattice.svg", render_lattice(&ic, &labelled)),
        ("grove.svg", render_grove(&grove, &opts)),
        (
            "simplified.svg",
            render_simplified(&to_simplified(&grove, 3).unwrap(), &opts),
        ),
        ("asm.svg", render_asm(&asm_triangle(&grove).unwrap(), 40.0)),
    ];
    for (name, svg) in figures {
        let path = dir.join(name);
        std::fs::write(&path, svg.unwrap()).unwrap();
        println!("wrote {}", path.display());
    }
}
