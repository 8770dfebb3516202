//! Nearest-neighbor pairs (1,2) and (2,3): same curves, suppressed by k.
//!
//! Both bonds behave identically by the outer-qubit exchange symmetry, and
//! increasing |k| drains their entanglement: the plateau height is
//! 2|J|/sqrt(8 J^2 + k^2) and the negative boot is gone for k >= |J|.
//!
//! ```bash
//! cargo run --example nearest_neighbors
//! ```

use trispin::analysis::boot_heights;
use trispin::model::{ModelParams, Pair};
use trispin::thermal::{thermal_concurrence, zero_t_concurrence};

fn main() {
    println!("plateau heights, J = 1:");
    println!("{:>6} {:>10} {:>10} {:>10}", "k", "C+ (12)", "C- (12)", "C+ (13)");
    for k in [0.0, 0.5, 1.0, 1.5, 2.0, 5.0, 10.0, 100.0] {
        let nn = boot_heights(k, 1.0, Pair::OneTwo).unwrap();
        let alt = boot_heights(k, 1.0, Pair::OneThree).unwrap();
        println!(
            "{:>6} {:>10.6} {:>10.6} {:>10.6}",
            k, nn.c_plus, nn.c_minus, alt.c_plus
        );
    }

    // the two bonds agree point by point
    let p = ModelParams::new(1.0, -0.8, 0.6);
    let c12 = thermal_concurrence(&p, 0.1, Pair::OneTwo).unwrap().concurrence;
    let c23 = thermal_concurrence(&p, 0.1, Pair::TwoThree).unwrap().concurrence;
    println!("\nat (J,h,k,T) = (1, -0.8, 0.6, 0.1): C12 = {c12:.12}, C23 = {c23:.12}");
    println!("|C12 - C23| = {:.2e}", (c12 - c23).abs());

    // no negative boot beyond k = |J|: the level-3 segment is a
    // nearest-neighbor product region
    let p = ModelParams::new(1.0, -1.2, 1.5);
    println!(
        "zero-T nearest-neighbor concurrence on the level-3 segment: {}",
        zero_t_concurrence(&p, Pair::OneTwo).unwrap()
    );
    println!(
        "  (the same point holds C13 = {} for the alternate pair)",
        zero_t_concurrence(&p, Pair::OneThree).unwrap()
    );
}
