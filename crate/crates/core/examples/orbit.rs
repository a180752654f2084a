//! Repeated left gyration until the configuration is fixed.

use tfpl::gyration::iterate_to_stable;
use tfpl::render::{tfpl_ascii, RenderOptions};
use tfpl::TfplConfig;

fn main() -> tfpl::Result<()> {
    let f = TfplConfig::from_json(include_str!("../data/sample7.json"))?;
    let orbit = iterate_to_stable(&f)?;
    for (i, b) in orbit.boundaries.iter().enumerate() {
        println!("{i:>2}  {b}  excess {}", b.excess());
    }
    println!("stable after {} steps (bound {})", orbit.steps, 2 * f.n() - 1);
    print!("{}", tfpl_ascii(&orbit.stable, RenderOptions { parity: true }));
    Ok(())
}
