//! At excess 0 the TFPL counts are Littlewood–Richardson coefficients.

use tfpl::verify::{count_by_boundary, lr_coefficient, verify_excess_zero};

fn main() -> tfpl::Result<()> {
    let table = count_by_boundary(4, 5)?;
    for (b, e) in table.iter().filter(|(b, e)| b.excess() == 0 && e.count > 1) {
        let c = lr_coefficient(&b.u, &b.v, &b.w)?;
        println!("{b}: t = {}, c = {c}, stable {}", e.count, e.stable);
    }
    for n in 1..=5 {
        let report = verify_excess_zero(n, 5)?;
        println!("size {n}: {} excess-0 boundaries, all match: {}", report.checks.len(), report.passed());
    }
    Ok(())
}
