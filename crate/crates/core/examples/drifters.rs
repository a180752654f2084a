//! Drifters are the vertical edges whose top end is odd. A TFPL is fixed
//! by gyration exactly when it has none.

use tfpl::gyration::{is_stable, wl};
use tfpl::render::{tfpl_ascii, RenderOptions};
use tfpl::verify::enumerate_tfpl;
use tfpl::TfplConfig;

fn main() -> tfpl::Result<()> {
    let f = TfplConfig::from_json(include_str!("../data/sample7.json"))?;
    let mut cols: Vec<usize> = f.drifters().iter().map(|d| d.column()).collect();
    cols.sort();
    println!("drifters in columns {cols:?}; stable: {}", is_stable(&f));
    print!("{}", tfpl_ascii(&f, RenderOptions { parity: true }));

    let g = wl(&f);
    let mut after: Vec<usize> = g.drifters().iter().map(|d| d.column()).collect();
    after.sort();
    println!("after one WL: {after:?}");

    for n in 1..=5 {
        let all = enumerate_tfpl(n, 5)?;
        let stable = all.iter().filter(|f| is_stable(f)).count();
        let drifter_free = all.iter().filter(|f| f.drifters().is_empty()).count();
        println!("size {n}: {} TFPLs, {stable} stable, {drifter_free} without drifters", all.len());
    }
    Ok(())
}
