//! Binary words, their Young diagrams, and horizontal/vertical strips.

use tfpl::words::{horizontal_strip_successors, is_horizontal_strip, is_vertical_strip, vertical_strip_successors};
use tfpl::BinaryWord;

fn main() -> tfpl::Result<()> {
    let w: BinaryWord = "1101101".parse()?;
    let lambda = w.to_partition();
    println!("λ({w}) = {lambda}, {} cells, {} inversions", lambda.size(), w.inversions());
    for row in lambda.rows() {
        println!("  {}", "□".repeat(*row));
    }
    let (k, l) = w.zeros_ones();
    println!("back from the diagram: {}", BinaryWord::from_partition(&lambda, k, l)?);
    println!("transpose via reverse complement: {}", w.reverse_complement().to_partition());

    let (a, b) = ("0111100110".parse()?, "1111001100".parse()?);
    println!("{a} →ʰ {b}: {}", is_horizontal_strip(&a, &b));
    let (a, b) = ("1001111001".parse()?, "1100111100".parse()?);
    println!("{a} →ᵛ {b}: {}", is_vertical_strip(&a, &b));

    let u: BinaryWord = "0101".parse()?;
    let fmt = |ws: Vec<BinaryWord>| ws.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
    println!("horizontal successors of {u}: {}", fmt(horizontal_strip_successors(&u)));
    println!("vertical successors of {u}:   {}", fmt(vertical_strip_successors(&u)));
    Ok(())
}
