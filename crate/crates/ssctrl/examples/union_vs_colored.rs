//! The color-blind union graph gives a sufficient test only; the colored
//! union graph gives the exact answer. This example walks two systems where
//! the two tests diverge.
//!
//! ```bash
//! cargo run -p ssctrl --example union_vs_colored
//! ```

use ssctrl::criteria::{decide, g_rank, union_sufficient_check};
use ssctrl::SwitchedSystem;

fn compare(name: &str, sys: &SwitchedSystem) {
    let union = union_sufficient_check(sys);
    let verdict = decide(sys);
    let sum = sys.sum_pattern();
    let stacked = sys.stacked_pattern();
    println!("== {name}");
    println!(
        "   union test:   accessible = {}, dilation-free = {} -> {}",
        union.accessible,
        union.dilation_free,
        if union.sufficient() {
            "proves controllability"
        } else {
            "inconclusive"
        }
    );
    println!(
        "   colored test: controllable = {} (g-rank: sum {}/{}, stacked {}/{})",
        verdict.controllable,
        g_rank(&sum),
        sys.n(),
        g_rank(&stacked),
        sys.n()
    );
    println!();
}

fn main() {
    // Superposing the two subsystems collapses their B columns into one
    // column of the sum pattern, so the union graph contains a dilation;
    // keeping the colors separates the columns again.
    let collapsing = SwitchedSystem::from_supports(
        3,
        1,
        &[(vec![], vec![(2, 0)]), (vec![(1, 2)], vec![(0, 0)])],
    )
    .unwrap();
    compare("B columns collapse in the union", &collapsing);

    // The same effect in its purest form: two all-zero A's, both inputs
    // fully actuating. The union graph sees one column feeding two states.
    let dual = SwitchedSystem::from_supports(
        2,
        1,
        &[(vec![], vec![(0, 0), (1, 0)]), (vec![], vec![(0, 0), (1, 0)])],
    )
    .unwrap();
    compare("two fully-actuating single columns", &dual);

    // When one subsystem is already structurally controllable on its own,
    // the union test succeeds too and the two criteria agree.
    let agreeing =
        SwitchedSystem::from_supports(2, 1, &[(vec![(1, 0)], vec![(0, 0)])]).unwrap();
    compare("single controllable subsystem", &agreeing);
}
