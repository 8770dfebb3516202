//! The sudden change of the dip magnitude as |k| passes |J|.
//!
//! Just below the crossing the dip value approaches 1/2 - sqrt(2)/3; at
//! |k| = |J| four levels meet and the value is exactly 0; just above it
//! jumps to 1/6. The same discontinuity sits at k = -|J| with the dip
//! mirrored to positive field.
//!
//! ```bash
//! cargo run --example mutation
//! ```

use trispin::analysis::{dip, mutation_scan};

fn main() {
    println!("{:>10} {:>12} {:>12} {:>12}", "eps", "below", "at", "above");
    for eps in [1e-3, 1e-4, 1e-5, 1e-6] {
        let m = mutation_scan(1.0, eps).expect("valid eps");
        println!(
            "{:>10.0e} {:>12.8} {:>12.8} {:>12.8}",
            eps, m.c_dip_below, m.c_dip_at, m.c_dip_above
        );
    }
    println!(
        "{:>10} {:>12.8} {:>12} {:>12.8}   (limits)",
        "0",
        0.5 - 2.0_f64.sqrt() / 3.0,
        "0",
        1.0 / 6.0
    );

    println!("\ndip trajectory through the mutation (J = 1):");
    println!("{:>8} {:>12} {:>12} {:>14}", "k", "h_dip", "c_dip", "crossing");
    for k in [0.995, 1.0, 1.005, -0.995, -1.0, -1.005] {
        let d = dip(k, 1.0).unwrap();
        println!(
            "{:>8} {:>12.6} {:>12.8} {:>14}",
            k,
            d.h_dip,
            d.c_dip,
            format!("{:?}", d.crossing_levels)
        );
    }
}
