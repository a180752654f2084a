//! Littlewood–Richardson coefficients by direct enumeration of LR tableaux:
//! semistandard fillings of `λ/μ` with content `ν` whose reverse reading
//! word (rows top to bottom, each right to left) is a lattice word.

use crate::error::{Error, Result};
use crate::words::{BinaryWord, Partition};

/// `c^λ_{μ,ν}` for partitions.
pub fn lr_coefficient_partitions(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.row(r)..lambda.row(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut filling = Filling {
        lambda,
        mu,
        content: nu.rows().to_vec(),
        used: vec![0; nu.len()],
        grid: (0..lambda.len()).map(|r| vec![0; lambda.row(r)]).collect(),
    };
    filling.count(&cells, 0)
}

struct Filling<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    content: Vec<usize>,
    used: Vec<usize>,
    // 1-based entries, 0 = unfilled or inside μ
    grid: Vec<Vec<usize>>,
}

impl Filling<'_> {
    fn count(&mut self, cells: &[(usize, usize)], k: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        // weakly increasing along rows: bounded by the entry to the right
        let max = if c + 1 < self.lambda.row(r) { self.grid[r][c + 1] } else { self.content.len() };
        // strictly increasing down columns
        let min = if r > 0 && c >= self.mu.row(r - 1) { self.grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for x in min..=max {
            let i = x - 1;
            if self.used[i] == self.content[i] {
                continue;
            }
            if i > 0 && self.used[i] + 1 > self.used[i - 1] {
                continue;
            }
            self.used[i] += 1;
            self.grid[r][c] = x;
            total += self.count(cells, k + 1);
            self.grid[r][c] = 0;
            self.used[i] -= 1;
        }
        total
    }
}

/// `c_{u,v}^w` for the diagrams `λ(u)`, `λ(v)`, `λ(w)`. The three words
/// must have a common length and a common number of zeros.
pub fn lr_coefficient(u: &BinaryWord, v: &BinaryWord, w: &BinaryWord) -> Result<u64> {
    for x in [v, w] {
        if x.len() != u.len() {
            return Err(Error::LengthMismatch { expected: u.len(), got: x.len() });
        }
        if x.zeros() != u.zeros() {
            return Err(Error::TypeMismatch(u.to_string(), x.to_string()));
        }
    }
    Ok(lr_coefficient_partitions(&w.to_partition(), &u.to_partition(), &v.to_partition()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient_partitions(&p("[]"), &p("[]"), &p("[]")), 1);
        assert_eq!(lr_coefficient_partitions(&p("[2]"), &p("[1]"), &p("[1]")), 1);
        assert_eq!(lr_coefficient_partitions(&p("[1,1]"), &p("[1]"), &p("[1]")), 1);
        assert_eq!(lr_coefficient_partitions(&p("[3]"), &p("[1]"), &p("[1]")), 0);
        // s_{21} s_{21} contains s_{321} twice
        assert_eq!(lr_coefficient_partitions(&p("[3,2,1]"), &p("[2,1]"), &p("[2,1]")), 2);
        assert_eq!(lr_coefficient_partitions(&p("[4,2]"), &p("[2,1]"), &p("[2,1]")), 1);
        assert_eq!(lr_coefficient_partitions(&p("[2,2]"), &p("[1]"), &p("[2,1]")), 1);
    }

    // Pieri: multiplying by a one-row shape adds a horizontal strip.
    #[test]
    fn pieri_rule() {
        let cases = [("[3,1]", "[2]", "[2]", 1), ("[2,2]", "[2]", "[2]", 1), ("[2,1,1]", "[2]", "[2]", 0)];
        for (l, m, n, c) in cases {
            assert_eq!(lr_coefficient_partitions(&p(l), &p(m), &p(n)), c, "{l} {m} {n}");
        }
    }

    #[test]
    fn word_form_checks_types() {
        let w = |s: &str| s.parse::<BinaryWord>().unwrap();
        assert_eq!(lr_coefficient(&w("0011"), &w("0011"), &w("0011")).unwrap(), 1);
        assert!(lr_coefficient(&w("0011"), &w("0111"), &w("0011")).is_err());
        assert!(lr_coefficient(&w("0011"), &w("011"), &w("0011")).is_err());
    }
}
