//! Benchmark inputs shared by the criterion targets.

use gluck_core::groups::{complement_presentation, Presentation};
use gluck_core::kirby::KirbyDiagram;
use gluck_core::BandedUnlink;

/// Kirby diagram of the degree-`n` cable with the +1 circle added.
pub fn twisted_cable(n: usize) -> KirbyDiagram {
    let d = BandedUnlink::cable_diagram(n).expect("n >= 1");
    KirbyDiagram::handle_decomposition(&d).expect("cable is a 2-knot").gluck_twist(0).expect("fresh diagram")
}

pub fn spun_trefoil_group() -> Presentation {
    complement_presentation(&BandedUnlink::spun_trefoil()).expect("valid diagram")
}

pub fn connected_sum_group(copies: usize) -> Presentation {
    let mut d = BandedUnlink::spun_trefoil();
    for _ in 1..copies {
        d = d.connected_sum(&BandedUnlink::spun_figure_eight()).expect("valid sum");
    }
    complement_presentation(&d).expect("valid diagram")
}
