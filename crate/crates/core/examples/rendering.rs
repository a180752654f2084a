//! ASCII and SVG pictures. Writes `sample7.svg` to the directory given as
//! the first argument, or the temp directory.

use std::path::PathBuf;

use tfpl::render::{tfpl_ascii, tfpl_svg, RenderOptions};
use tfpl::TfplConfig;

fn main() -> std::io::Result<()> {
    let f = TfplConfig::from_json(include_str!("../data/sample7.json")).expect("bundled sample");
    let opts = RenderOptions { parity: true };
    print!("{}", tfpl_ascii(&f, opts));

    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let path = dir.join("sample7.svg");
    std::fs::write(&path, tfpl_svg(&f, opts))?;
    println!("wrote {}", path.display());
    Ok(())
}
