//! The finite families of skew diagrams used by the verification suites.

use crate::diagram::{Partition, SkewDiagram};

/// All partitions with at most `rows` parts, each at most `width`, in
/// lexicographic order of their parts.
pub fn partitions_in_box(rows: usize, width: usize) -> Vec<Partition> {
    fn go(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing"));
        if cur.len() == rows {
            return;
        }
        for part in 1..=max {
            cur.push(part);
            go(rows, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, width, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.parts().cmp(b.parts()));
    out
}

/// Skew diagrams λ/μ with λ₁ ≤ `max_width`, l(λ) ≤ `max_rows` and at most
/// `max_cells` cells, ordered by cell count, then λ, then μ.
pub fn skew_diagrams(max_cells: usize, max_rows: usize, max_width: usize) -> Vec<SkewDiagram> {
    let shapes = partitions_in_box(max_rows, max_width);
    let mut out = Vec::new();
    for lambda in &shapes {
        for mu in &shapes {
            if lambda.contains(mu) && lambda.size() - mu.size() <= max_cells {
                out.push(SkewDiagram::new(lambda.clone(), mu.clone()).expect("contained"));
            }
        }
    }
    out.sort_by(|a, b| {
        (a.num_cells(), a.lambda().parts(), a.mu().parts()).cmp(&(
            b.num_cells(),
            b.lambda().parts(),
            b.mu().parts(),
        ))
    });
    out
}

/// The same family restricted to shapes satisfying the positivity condition for `n`.
pub fn positive_skew_diagrams(n: u32, max_cells: usize, max_rows: usize, max_width: usize) -> Vec<SkewDiagram> {
    skew_diagrams(max_cells, max_rows, max_width)
        .into_iter()
        .filter(|d| d.positivity_holds(n))
        .collect()
}
