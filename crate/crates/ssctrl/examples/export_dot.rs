//! Render a system's graphs as Graphviz DOT: each subsystem, the union
//! graph, and the colored union graph.
//!
//! ```bash
//! cargo run -p ssctrl --example export_dot > graphs.dot
//! ```

use ssctrl::graph::{colored_union_graph, export_dot, subsystem_graph, union_graph};
use ssctrl::SwitchedSystem;

fn main() {
    let sys = SwitchedSystem::from_supports(
        3,
        1,
        &[(vec![], vec![(2, 0)]), (vec![(1, 2)], vec![(0, 0)])],
    )
    .unwrap();

    for i in 1..=sys.m() {
        println!("// subsystem {i}");
        print!("{}", export_dot(&subsystem_graph(&sys, i).unwrap()));
    }
    println!("// union graph (color-blind)");
    print!("{}", export_dot(&union_graph(&sys)));
    println!("// colored union graph");
    print!("{}", export_dot(&colored_union_graph(&sys)));
}
