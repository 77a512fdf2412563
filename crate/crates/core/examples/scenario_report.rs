//! Parses a bundled scenario, prints its text report and the first lines
//! of the JSON form, and echoes the instance back to scenario syntax.
//!
//! `cargo run --example scenario_report -- steiner_pencil.orb`

use orbigeo::scenario::{analyze, bundled_scenario, render_report, AnalyzeOptions, Format, BUNDLED};

fn main() -> orbigeo::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "steiner_octic.orb".to_string());
    let instances = bundled_scenario(&name)?;
    let report = analyze(&name, &instances[0], &AnalyzeOptions::default())?;
    print!("{}", render_report(&report, Format::Text));
    for line in render_report(&report, Format::Json).lines().take(12) {
        println!("{line}");
    }
    print!("{}", instances[0].echo());
    println!("bundled: {}", BUNDLED.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", "));
    Ok(())
}
