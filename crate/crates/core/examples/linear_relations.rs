//! Counts `t_{u,v}^w` and the linear relations between them.

use tfpl::verify::{count_by_boundary, verify_linear_relation};
use tfpl::words::all_words;

fn main() -> tfpl::Result<()> {
    let n = 4;
    let table = count_by_boundary(n, 5)?;
    println!("{} TFPLs of size {n} over {} boundaries", table.total(), table.len());
    print!("{}", table.to_text().lines().take(8).map(|l| format!("{l}\n")).collect::<String>());

    let mut checked = 0;
    for u in all_words(n) {
        for v in all_words(n).filter(|v| v.same_type(&u)) {
            for w in all_words(n).filter(|w| w.same_type(&u)) {
                let sums = verify_linear_relation(&u, &v, &w, &table)?;
                if sums.left > 2 && checked < 5 {
                    println!("({u},{v};{w}): {} = {}", sums.left, sums.right);
                    checked += 1;
                }
                assert!(sums.holds());
            }
        }
    }
    Ok(())
}
