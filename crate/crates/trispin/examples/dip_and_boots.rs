//! Dip location/magnitude and boot heights as functions of k.
//!
//! Writes the alternate-pair and nearest-neighbor curves to CSV and prints
//! the characteristic values: the dip sits at h = -k while |k| < |J|, then
//! at (k - sqrt(k^2 + 8 J^2))/2, which creeps back toward zero field.
//!
//! ```bash
//! cargo run --example dip_and_boots
//! ```

use std::fs::File;
use std::io::{BufWriter, Write};

use trispin::analysis::{dip_curve, GridSpec};
use trispin::model::Pair;

fn main() {
    let grid = GridSpec::new(0.0, 3.0, 301).unwrap();

    for (pair, name) in [
        (Pair::OneThree, "dip_alternate.csv"),
        (Pair::OneTwo, "dip_nearest.csv"),
    ] {
        let rows = dip_curve(&grid, 1.0, pair).expect("dip curve");
        let mut out = BufWriter::new(File::create(name).expect("create file"));
        writeln!(out, "k,h_dip,c_dip,c_plus,c_minus").unwrap();
        writeln!(out, "# J=1 pair={pair}").unwrap();
        for r in &rows {
            writeln!(out, "{},{},{},{},{}", r.k, r.h_dip, r.c_dip, r.c_plus, r.c_minus).unwrap();
        }
        eprintln!("pair {pair}: {} rows -> {name}", rows.len());
    }

    println!("\nalternate pair (1,3), J = 1:");
    println!(
        "{:>5} {:>10} {:>10} {:>8} {:>8}",
        "k", "h_dip", "c_dip", "C+", "C-"
    );
    for k in [0.0, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 10.0] {
        let rows = dip_curve(&GridSpec::new(k, k + 1.0, 2).unwrap(), 1.0, Pair::OneThree).unwrap();
        let r = &rows[0];
        println!(
            "{:>5} {:>10.6} {:>10.6} {:>8.5} {:>8.5}",
            k, r.h_dip, r.c_dip, r.c_plus, r.c_minus
        );
    }
}
