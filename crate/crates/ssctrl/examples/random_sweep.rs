//! Sweep entry density and watch the fraction of structurally controllable
//! random systems rise, for a few state dimensions.
//!
//! ```bash
//! cargo run -p ssctrl --example random_sweep
//! ```

use ssctrl::criteria::decide;
use ssctrl::generate::gen_random;

fn main() {
    let densities = [0.05, 0.10, 0.15, 0.20, 0.30, 0.50, 0.80];
    let samples = 200;
    println!("fraction controllable over {samples} samples (m = 2, r = 1):");
    print!("{:>6}", "n");
    for d in densities {
        print!("{d:>8.2}");
    }
    println!();
    for n in [2, 3, 4, 6] {
        print!("{n:>6}");
        for (di, density) in densities.iter().enumerate() {
            let hits = (0..samples)
                .filter(|&s| {
                    let seed = (n * 10_000 + di * 1_000 + s) as u64;
                    let sys = gen_random(n, 1, 2, *density, seed).unwrap();
                    decide(&sys).controllable
                })
                .count();
            print!("{:>8.2}", hits as f64 / samples as f64);
        }
        println!();
    }
}
