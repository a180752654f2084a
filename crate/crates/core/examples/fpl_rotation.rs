//! Square-grid FPLs, their link patterns and rotation under gyration.

use tfpl::fpl::{enumerate_fpl, verify_rotation_invariance, FplConfig};
use tfpl::render::{fpl_ascii, RenderOptions};
use tfpl::Parity;

fn main() -> tfpl::Result<()> {
    for n in 1..=5 {
        println!("size {n}: {} FPLs", enumerate_fpl(n, 5)?.len());
    }

    let report = verify_rotation_invariance(4, 5)?;
    for (pattern, a) in &report.counts {
        println!("A{pattern} = {a}");
    }
    println!("rotation invariant: {}, odd gyration shifts by {:?}", report.failures.is_empty(), report.gyration_shift);

    let f = FplConfig::from_json(include_str!("../data/square8.json"))?;
    println!("size-8 sample, link pattern {}", f.link_pattern());
    print!("{}", fpl_ascii(&f, RenderOptions::default()));
    let g = f.gyrate(Parity::Odd);
    println!("after gyration with odd cells active, link pattern {}", g.link_pattern());
    print!("{}", fpl_ascii(&g, RenderOptions::default()));
    Ok(())
}
