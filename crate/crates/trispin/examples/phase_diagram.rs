//! Ground-state segments of the energy lower envelope in the field h.
//!
//! Each level's energy is affine in h, so the ground state walks through a
//! short sequence of levels separated by sharp crossings; the zero-T
//! alternate-pair concurrence is constant on every segment.
//!
//! ```bash
//! cargo run --example phase_diagram
//! ```

use trispin::analysis::ground_segments;
use trispin::model::{analytic_spectrum, ModelParams};

fn main() {
    for k in [0.0, 0.5, 1.0, 1.5, -1.5] {
        println!("k = {k} (J = 1), h in [-5, 5]:");
        let segments = ground_segments(1.0, k, -5.0, 5.0).expect("J != 0");
        for seg in &segments {
            let levels: Vec<String> = seg.ground_levels.iter().map(|l| l.to_string()).collect();
            println!(
                "  h in [{:>9.5}, {:>9.5}]  phi_{:<4} C13 = {:.6}",
                seg.h_lo,
                seg.h_hi,
                levels.join("+"),
                seg.pair_c13
            );
        }
        // degeneracies at the interior boundaries
        for w in segments.windows(2) {
            let h = w[0].h_hi;
            let s = analytic_spectrum(&ModelParams::new(1.0, h, k)).unwrap();
            println!("  crossing at h = {:>9.5}: levels {:?}", h, s.ground_levels());
        }
        println!();
    }
}
