//! One step of left gyration `WL_{u⁻}` and its inverse `WR_v`.

use tfpl::gyration::{predict_right_boundary, wieland_left, wieland_right};
use tfpl::words::horizontal_strip_predecessors;
use tfpl::TfplConfig;

fn main() -> tfpl::Result<()> {
    let f = TfplConfig::from_json(include_str!("../data/sample7.json"))?;
    let b = f.boundary();
    println!("f has boundary {b}");
    println!("right boundary after any WL_u⁻, read off f: {}", predict_right_boundary(&f));

    for u_minus in horizontal_strip_predecessors(&b.u) {
        let g = wieland_left(&f, &u_minus)?;
        let back = wieland_right(&g, &b.v)?;
        println!(
            "WL_{u_minus}: {} (valid {}), WR_{} restores f: {}",
            g.boundary(),
            g.is_valid(),
            b.v,
            back == f
        );
    }

    // u⁻ must be a horizontal-strip predecessor of u
    if let Err(e) = wieland_left(&f, &"1001111".parse()?) {
        println!("rejected: {e}");
    }
    Ok(())
}
