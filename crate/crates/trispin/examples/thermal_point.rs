//! One point of the concurrence surface, computed both ways.
//!
//! Shows the Boltzmann-weight record (u, v, w, y, Z) of the reduced
//! alternate-pair state and the agreement between the closed-form
//! concurrence and the Gibbs -> partial trace -> Wootters pipeline.
//!
//! ```bash
//! cargo run --example thermal_point
//! ```

use trispin::model::{ModelParams, Pair};
use trispin::thermal::thermal_concurrence;

fn main() {
    let p = ModelParams::new(1.0, -0.5, 0.5);
    println!("couplings: J = {}, h = {}, k = {}", p.j, p.h, p.k);
    println!(
        "{:>8} {:>14} {:>14} {:>10}",
        "T", "C (numeric)", "C (closed)", "|diff|"
    );
    for t in [2.0, 1.0, 0.5, 0.2, 0.1, 0.05, 0.01, 0.001] {
        let point = thermal_concurrence(&p, t, Pair::OneThree).expect("valid point");
        let closed = point.closed_form.expect("pair 13 carries the closed form");
        println!(
            "{:>8} {:>14.10} {:>14.10} {:>10.2e}",
            t,
            point.concurrence,
            closed,
            (point.concurrence - closed).abs()
        );
    }

    let point = thermal_concurrence(&p, 0.2, Pair::OneThree).unwrap();
    let x = point.xstate.unwrap();
    println!("\nweight record at T = 0.2 (common factor exp({:.4}) removed):", x.log_scale);
    println!("  u = {:.9}\n  v = {:.9}\n  w = {:.9}\n  y = {:.9}\n  Z = {:.9}", x.u, x.v, x.w, x.y, x.z);
    println!("  trace residual:       {:.2e}", x.trace_residual());
    println!("  weight-sum residual:  {:.2e}", x.degenerate_weight_residual());

    // nearest-neighbor pairs run through the numeric pipeline only
    for pair in [Pair::OneTwo, Pair::TwoThree] {
        let nn = thermal_concurrence(&p, 0.2, pair).unwrap();
        println!("pair {}: C = {:.10}", pair, nn.concurrence);
    }
}
