//! Reads a size-7 TFPL, checks it and extracts its boundary `(u, v; w)`.

use tfpl::render::{tfpl_ascii, RenderOptions};
use tfpl::TfplConfig;

fn main() -> tfpl::Result<()> {
    let f = TfplConfig::from_json(include_str!("../data/sample7.json"))?;
    match f.validate() {
        Ok(()) => println!("valid TFPL of size {} with {} edges", f.n(), f.edge_count()),
        Err(v) => println!("invalid: {v}"),
    }
    let b = f.boundary();
    println!("boundary {b}");
    println!(
        "|λ(u)| = {}, |λ(v)| = {}, |λ(w)| = {}, excess {}",
        b.u.inversions(),
        b.v.inversions(),
        b.w.inversions(),
        b.excess()
    );
    print!("{}", tfpl_ascii(&f, RenderOptions::default()));
    Ok(())
}
