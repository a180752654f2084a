//! Slow, independent reference implementations used to cross-check the
//! library. None of them calls into the code paths they check.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use tfpl::{Edge, TfplConfig};

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn load_tfpl(name: &str) -> TfplConfig {
    TfplConfig::from_json(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

/// `λ(σ)` as rows, largest first: one row per zero, holding the number of
/// ones before that zero.
pub fn diagram(word: &str) -> Vec<usize> {
    let mut ones = 0;
    let mut rows = Vec::new();
    for ch in word.chars() {
        if ch == '1' {
            ones += 1;
        } else {
            rows.push(ones);
        }
    }
    rows.reverse();
    rows
}

fn type_of(word: &str) -> (usize, usize) {
    let zeros = word.chars().filter(|&c| c == '0').count();
    (zeros, word.len() - zeros)
}

/// Cells `(row, col)` of `λ(big) / λ(small)`, or `None` when the smaller
/// diagram does not fit inside the larger.
fn skew_cells(small: &str, big: &str) -> Option<Vec<(usize, usize)>> {
    if small.len() != big.len() || type_of(small) != type_of(big) {
        return None;
    }
    let (a, b) = (diagram(small), diagram(big));
    let mut cells = Vec::new();
    for (r, (&x, &y)) in a.iter().zip(&b).enumerate() {
        if x > y {
            return None;
        }
        cells.extend((x..y).map(|c| (r, c)));
    }
    Some(cells)
}

/// Skew shape with no two cells in one column.
pub fn horizontal_strip_by_shape(small: &str, big: &str) -> bool {
    skew_cells(small, big).is_some_and(|cells| {
        let cols: BTreeSet<usize> = cells.iter().map(|c| c.1).collect();
        cols.len() == cells.len()
    })
}

/// Skew shape with no two cells in one row.
pub fn vertical_strip_by_shape(small: &str, big: &str) -> bool {
    skew_cells(small, big).is_some_and(|cells| {
        let rows: BTreeSet<usize> = cells.iter().map(|c| c.0).collect();
        rows.len() == cells.len()
    })
}

pub fn words_of_length(n: usize) -> Vec<String> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|i| if m >> (n - 1 - i) & 1 == 1 { '1' } else { '0' }).collect())
        .collect()
}

/// Every TFPL of size `n`, found by trying all subsets of internal edges
/// with the external edges fixed, and checking the definition directly.
/// Only feasible for `n ≤ 3`.
pub fn tfpls_by_brute_force(n: usize) -> BTreeSet<TfplConfig> {
    let in_grid = |r: usize, c: usize| (1..=n).contains(&r) && c + r > n && c <= n + 1 + r;
    let vertices: Vec<(usize, usize)> = (1..=n)
        .flat_map(|r| (1..=2 * n + 1).map(move |c| (r, c)))
        .filter(|&(r, c)| in_grid(r, c))
        .collect();
    let index: HashMap<(usize, usize), usize> =
        vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut internal = Vec::new();
    for &(r, c) in &vertices {
        if in_grid(r, c + 1) {
            internal.push(Edge::east(r, c));
        }
        if in_grid(r + 1, c) {
            internal.push(Edge::south(r, c));
        }
    }
    let external: Vec<Edge> = (1..=2 * n + 1).filter(|c| c % 2 == 0).map(|c| Edge::south(n, c)).collect();
    let ends = |e: &Edge| {
        let a = index[&(e.row, e.col)];
        let b = if e.is_horizontal() { index[&(e.row, e.col + 1)] } else { index[&(e.row + 1, e.col)] };
        (a, b)
    };
    let internal_ends: Vec<(usize, usize)> = internal.iter().map(ends).collect();
    let left: Vec<usize> = (1..=n).map(|i| index[&(n + 1 - i, i)]).collect();
    let right: Vec<usize> = (1..=n).map(|i| index[&(i, n + 1 + i)]).collect();
    let side = |v: usize| left.contains(&v) || right.contains(&v);

    let mut base_degree = vec![0usize; vertices.len()];
    for e in &external {
        base_degree[index[&(e.row, e.col)]] += 1;
    }

    let mut found = BTreeSet::new();
    for mask in 0u64..1 << internal.len() {
        let mut degree = base_degree.clone();
        for (k, &(a, b)) in internal_ends.iter().enumerate() {
            if mask >> k & 1 == 1 {
                degree[a] += 1;
                degree[b] += 1;
            }
        }
        let degrees_ok = (0..vertices.len())
            .all(|v| if side(v) { degree[v] <= 1 } else { degree[v] == 2 });
        if !degrees_ok {
            continue;
        }
        // components by plain flood fill
        let mut adj = vec![Vec::new(); vertices.len()];
        for (k, &(a, b)) in internal_ends.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut comp = vec![usize::MAX; vertices.len()];
        for s in 0..vertices.len() {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = s;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if comp[y] == usize::MAX {
                        comp[y] = s;
                        stack.push(y);
                    }
                }
            }
        }
        let distinct = |set: &[usize]| {
            let roots: BTreeSet<usize> = set.iter().map(|&v| comp[v]).collect();
            roots.len() == set.len()
        };
        if !distinct(&left) || !distinct(&right) {
            continue;
        }
        let edges = internal
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, e)| *e)
            .chain(external.iter().copied());
        found.insert(TfplConfig::from_edges(n, edges).unwrap());
    }
    found
}

/// Number of `n × n` alternating sign matrices, built row by row while
/// tracking which columns currently have an unmatched `1` above.
pub fn alternating_sign_matrices(n: usize) -> u64 {
    fn rows(n: usize, r: usize, open: &mut Vec<bool>) -> u64 {
        if r == n {
            return open.iter().all(|&o| o) as u64;
        }
        let mut total = 0;
        let mut row = vec![0i8; n];
        fill(n, r, 0, 0, &mut row, open, &mut total);
        total
    }
    // Row entries alternate 1, -1, …, 1 from the left; a -1 may only sit
    // under an open column, a 1 only under a closed one.
    fn fill(n: usize, r: usize, c: usize, sum: i8, row: &mut Vec<i8>, open: &mut Vec<bool>, total: &mut u64) {
        if c == n {
            if sum == 1 {
                let saved = open.clone();
                for (o, &x) in open.iter_mut().zip(row.iter()) {
                    match x {
                        1 => *o = true,
                        -1 => *o = false,
                        _ => {}
                    }
                }
                *total += rows(n, r + 1, open);
                *open = saved;
            }
            return;
        }
        row[c] = 0;
        fill(n, r, c + 1, sum, row, open, total);
        if sum == 0 && !open[c] {
            row[c] = 1;
            fill(n, r, c + 1, 1, row, open, total);
        }
        if sum == 1 && open[c] {
            row[c] = -1;
            fill(n, r, c + 1, 0, row, open, total);
        }
        row[c] = 0;
    }
    rows(n, 0, &mut vec![false; n])
}
