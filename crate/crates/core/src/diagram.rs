//! Partitions and skew diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (1-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The skew diagram lambda/mu. Rows are indexed 1..=l(lambda); mu is read with
/// zero padding up to that length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewDiagram {
    lambda: Partition,
    mu: Partition,
}

impl SkewDiagram {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self> {
        if !lambda.contains(&mu) {
            return Err(Error::NotContained {
                lambda: lambda.to_string(),
                mu: mu.to_string(),
            });
        }
        Ok(SkewDiagram { lambda, mu })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewDiagram {
            lambda,
            mu: Partition::empty(),
        }
    }

    pub fn parse(lambda: &str, mu: &str) -> Result<Self> {
        SkewDiagram::new(lambda.parse()?, mu.parse()?)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// Number of rows, l(lambda).
    pub fn rows(&self) -> usize {
        self.lambda.len()
    }

    /// Number of columns, lambda_1.
    pub fn columns(&self) -> usize {
        self.lambda.part(1)
    }

    pub fn lambda_part(&self, i: usize) -> usize {
        self.lambda.part(i)
    }

    pub fn mu_part(&self, i: usize) -> usize {
        self.mu.part(i)
    }

    /// Length of row `i` of the skew shape.
    pub fn row_len(&self, i: usize) -> usize {
        self.lambda.part(i) - self.mu.part(i)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.rows() && j > self.mu.part(i) && j <= self.lambda.part(i)
    }

    /// Cells (i, j) in row-major order, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (1..=self.rows())
            .flat_map(|i| (self.mu.part(i) + 1..=self.lambda.part(i)).map(move |j| (i, j)))
            .collect()
    }

    pub fn num_cells(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    /// Rows occupied in column `j`, as the inclusive range (top, bottom); `None` if empty.
    pub fn column_range(&self, j: usize) -> Option<(usize, usize)> {
        let top = self.mu.conjugate().part(j) + 1;
        let bottom = self.lambda.conjugate().part(j);
        (top <= bottom).then_some((top, bottom))
    }

    /// Maximal column height of lambda/mu.
    pub fn depth(&self) -> usize {
        let lc = self.lambda.conjugate();
        let mc = self.mu.conjugate();
        (1..=lc.len()).map(|j| lc.part(j) - mc.part(j)).max().unwrap_or(0)
    }

    pub fn positivity_holds(&self, n: u32) -> bool {
        self.depth() <= n as usize + 1
    }

    /// The row form of the positivity condition: lambda_{i+n+1} <= mu_i for all i.
    pub fn positivity_by_rows(&self, n: u32) -> bool {
        let shift = n as usize + 1;
        (1..=self.rows()).all(|i| self.lambda.part(i + shift) <= self.mu.part(i))
    }

    pub fn require_positivity(&self, n: u32) -> Result<()> {
        if self.positivity_holds(n) {
            Ok(())
        } else {
            Err(Error::Positivity {
                depth: self.depth(),
                n,
            })
        }
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("").conjugate(), p(""));
        assert_eq!(p("2,2,2").conjugate(), p("3,3"));
    }

    #[test]
    fn depths() {
        assert_eq!(SkewDiagram::parse("2,2,2", "").unwrap().depth(), 3);
        assert_eq!(SkewDiagram::parse("3,1", "1").unwrap().depth(), 1);
        assert_eq!(SkewDiagram::parse("1,1,1,1", "").unwrap().depth(), 4);
        assert_eq!(SkewDiagram::parse("", "").unwrap().depth(), 0);
    }

    #[test]
    fn positivity() {
        let d = SkewDiagram::parse("1,1,1,1", "").unwrap();
        assert!(!d.positivity_holds(2));
        assert!(SkewDiagram::parse("2,1", "").unwrap().positivity_holds(2));
        assert!(SkewDiagram::parse("2,2,2", "").unwrap().positivity_holds(2));
        assert!(d.require_positivity(3).is_ok());
        assert!(matches!(d.require_positivity(2), Err(Error::Positivity { depth: 4, n: 2 })));
    }

    #[test]
    fn parse_errors() {
        assert!("2,3".parse::<Partition>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
        assert!("2,0,1".parse::<Partition>().is_err());
        assert_eq!(p("2,1,0"), p("2,1"));
        assert!(SkewDiagram::parse("2,1", "3").is_err());
        assert!(SkewDiagram::parse("2", "1,1").is_err());
    }

    #[test]
    fn cells_and_columns() {
        let d = SkewDiagram::parse("3,2", "1").unwrap();
        assert_eq!(d.cells(), vec![(1, 2), (1, 3), (2, 1), (2, 2)]);
        assert_eq!(d.column_range(1), Some((2, 2)));
        assert_eq!(d.column_range(2), Some((1, 2)));
        assert_eq!(d.column_range(3), Some((1, 1)));
        assert_eq!(d.column_range(4), None);
    }

    fn partition_strategy() -> impl Strategy<Value = Partition> {
        prop::collection::vec(1usize..=8, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(lam in partition_strategy()) {
            prop_assert_eq!(lam.conjugate().conjugate(), lam);
        }

        #[test]
        fn cell_counts_agree(lam in partition_strategy(), cut in prop::collection::vec(0usize..=8, 8)) {
            let mu_parts: Vec<usize> = (1..=lam.len()).map(|i| cut[i - 1].min(lam.part(i))).collect();
            let mut mu_sorted = mu_parts.clone();
            mu_sorted.sort_unstable_by(|a, b| b.cmp(a));
            // only keep containments that are themselves partitions
            prop_assume!(mu_sorted == mu_parts);
            let mu = Partition::new(mu_parts).unwrap();
            let d = SkewDiagram::new(lam.clone(), mu.clone()).unwrap();
            let lc = lam.conjugate();
            let mc = mu.conjugate();
            let by_cols: usize = (1..=lc.len()).map(|j| lc.part(j) - mc.part(j)).sum();
            prop_assert_eq!(d.cells().len(), d.num_cells());
            prop_assert_eq!(d.num_cells(), by_cols);
            for n in 1..=4 {
                prop_assert_eq!(d.positivity_holds(n), d.positivity_by_rows(n));
            }
        }
    }
}
