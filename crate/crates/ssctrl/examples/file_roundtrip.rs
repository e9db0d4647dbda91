//! The JSON system format: render a system, parse it back, and show that
//! the round trip is the identity.
//!
//! ```bash
//! cargo run -p ssctrl --example file_roundtrip
//! ```

use ssctrl::io::{parse_system, render_system};
use ssctrl::SwitchedSystem;

fn main() {
    let sys = SwitchedSystem::from_supports(
        2,
        2,
        &[(vec![(0, 1)], vec![(0, 0)]), (vec![], vec![(1, 1)])],
    )
    .unwrap();

    let text = render_system(&sys);
    println!("{text}");

    let parsed = parse_system(&text).expect("rendered documents always parse");
    assert_eq!(parsed, sys);
    println!("round trip: parse(render(system)) == system  ✓");

    // Cells may also be bare "*": parameters are then auto-named by
    // subsystem, row, and combined column.
    let starred = r#"{
        "n": 2, "r": 1, "m": 1,
        "subsystems": [ { "A": [[0,"*"],[0,0]], "B": [[0],["*"]] } ]
    }"#;
    let sys2 = parse_system(starred).unwrap();
    let names: Vec<_> = sys2.params().map(|p| p.name.as_str().to_owned()).collect();
    println!("auto-generated names: {names:?}");
}
