//! Partitions, standard tableaux and strips.
//!
//! Canonical order on partitions: by size, then reverse-lexicographic, so
//! `(3) < (2,1) < (1,1,1)`. Rows are numbered from 1 at the longest row.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

/// Partition parse or validation failure.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("malformed partition string {0:?}")]
    Syntax(String),
    #[error("parts {0:?} are not weakly decreasing")]
    NotDecreasing(Vec<usize>),
}

impl Partition {
    /// Validates and builds a partition; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Partition, PartitionError> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Builds from parts known to be valid; panics otherwise.
    pub fn from_parts(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).expect("invalid partition")
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)` (empty for `n = 0`).
    pub fn row(n: usize) -> Partition {
        if n == 0 {
            Partition::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Partition {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// Whether the diagram of `other` is contained in that of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().enumerate().all(|(i, &p)| p <= self.0[i])
    }

    /// All `λ + □` with the 1-based row of the added box.
    pub fn boxes_added(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i) < self.part(i - 1) {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push((Partition(p), i + 1));
            }
        }
        out
    }

    /// All `λ − □` with the 1-based row of the removed box.
    pub fn boxes_removed(&self) -> Vec<(Partition, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            if self.part(i) > self.part(i + 1) {
                let mut p = self.0.clone();
                p[i] -= 1;
                out.push((Partition::new(p).unwrap(), i + 1));
            }
        }
        out
    }

    /// `λ(s+)`: add a box in 1-based row `s`, if that yields a partition.
    pub fn add_box(&self, s: usize) -> Option<Partition> {
        self.boxes_added().into_iter().find(|(_, r)| *r == s).map(|(p, _)| p)
    }

    /// `λ(s−)`: remove a box from 1-based row `s`, if that yields a partition.
    pub fn remove_box(&self, s: usize) -> Option<Partition> {
        self.boxes_removed().into_iter().find(|(_, r)| *r == s).map(|(p, _)| p)
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.part(i) - j - 1;
        let leg = self.0.iter().skip(i + 1).filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Cells `(row, col)` in reading order (rows top to bottom, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j))).collect()
    }

    /// Dominance order: `self ⊵ other` (same size assumed).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `z_λ = Π_i i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.len() {
            let v = self.0[i];
            let mut m = 0;
            while i < self.len() && self.0[i] == v {
                m += 1;
                i += 1;
                z *= (v as u128) * m as u128;
            }
        }
        z
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses `"3,1"`; `"0"` and `""` denote the empty partition.
    fn from_str(s: &str) -> Result<Partition, PartitionError> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> = t.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|_| PartitionError::Syntax(s.to_string()))?;
        if parts.contains(&0) {
            return Err(PartitionError::Syntax(s.to_string()));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Partition, D::Error> {
        let s = String::deserialize(d)?;
        Partition::from_str(&s).map_err(serde::de::Error::custom)
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard tableaux by the hook length formula.
pub fn syt_count(lambda: &Partition) -> u128 {
    let n = lambda.size();
    let mut num: u128 = (1..=n as u128).product();
    let mut hooks: Vec<u128> = lambda.cells().iter().map(|&(i, j)| lambda.hook(i, j) as u128).collect();
    hooks.sort_unstable();
    for h in hooks {
        num /= h;
    }
    num
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal `k`-strip, in canonical order.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    // Row i may grow up to λ_{i-1} (unbounded for i = 0); one new row of length ≤ λ_last.
    let rows = lambda.len() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0usize; rows];
    fn rec(lambda: &Partition, i: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == cur.len() {
            if left == 0 {
                let parts: Vec<usize> = (0..cur.len()).map(|r| lambda.part(r) + cur[r]).collect();
                out.push(Partition::new(parts).unwrap());
            }
            return;
        }
        let cap = if i == 0 { left } else { (lambda.part(i - 1) - lambda.part(i)).min(left) };
        for a in 0..=cap {
            cur[i] = a;
            rec(lambda, i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    rec(lambda, 0, k, &mut cur, &mut out);
    out.sort();
    out
}

/// All `μ ⊇ λ` with `μ/λ` a vertical `k`-strip, in canonical order.
pub fn vertical_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strips(&lambda.conjugate(), k).iter().map(|m| m.conjugate()).collect();
    out.sort();
    out
}

/// A standard Young tableau, stored as rows of entries `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Validates shape-consistency, bijectivity and strict row/column increase.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<StandardTableau> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect()).ok()?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for r in &rows {
            for &x in r {
                if x == 0 || x > n || seen[x] {
                    return None;
                }
                seen[x] = true;
            }
        }
        for (i, r) in rows.iter().enumerate() {
            for j in 0..r.len() {
                if j + 1 < r.len() && r[j] >= r[j + 1] {
                    return None;
                }
                if i + 1 < rows.len() && j < rows[i + 1].len() && r[j] >= rows[i + 1][j] {
                    return None;
                }
            }
        }
        Some(StandardTableau { rows })
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Columns of the tableau, left to right.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width).map(|j| self.rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect()).collect()
    }

    /// The row-reading tableau `T_row(λ)`.
    pub fn row_reading(lambda: &Partition) -> StandardTableau {
        let mut next = 1;
        let rows = lambda
            .parts()
            .iter()
            .map(|&p| {
                let r: Vec<usize> = (next..next + p).collect();
                next += p;
                r
            })
            .collect();
        StandardTableau { rows }
    }

    /// The column-reading tableau `T_col(λ)`.
    pub fn column_reading(lambda: &Partition) -> StandardTableau {
        let conj = lambda.conjugate();
        let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
        let mut next = 1;
        for (j, &h) in conj.parts().iter().enumerate() {
            for row in rows.iter_mut().take(h) {
                row[j] = next;
                next += 1;
            }
        }
        StandardTableau { rows }
    }
}

/// All standard tableaux of shape `λ`, ordered by the row sequence of entries.
pub fn enumerate_syt(lambda: &Partition) -> Vec<StandardTableau> {
    // Place n, n-1, ..., 1 into removable corners.
    fn rec(shape: &Partition, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        let n = shape.size();
        if n == 0 {
            out.push(StandardTableau { rows: rows.clone() });
            return;
        }
        for (smaller, r) in shape.boxes_removed() {
            let j = shape.part(r - 1) - 1;
            rows[r - 1][j] = n;
            rec(&smaller, rows, out);
            rows[r - 1][j] = 0;
        }
    }
    let mut rows: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut out = Vec::new();
    rec(lambda, &mut rows, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("0").conjugate(), p("0"));
        assert_eq!(p("1,1,1").conjugate(), p("3"));
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("3,1").to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "0");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn boxes() {
        assert_eq!(Partition::empty().boxes_added(), vec![(p("1"), 1)]);
        assert_eq!(p("2,1").boxes_added(), vec![(p("3,1"), 1), (p("2,2"), 2), (p("2,1,1"), 3)]);
        assert_eq!(p("2,2").boxes_removed(), vec![(p("2,1"), 2)]);
    }

    #[test]
    fn canonical_order() {
        let parts = enumerate_partitions(4);
        let names: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["4", "3,1", "2,2", "2,1,1", "1,1,1,1"]);
        let mut sorted = parts.clone();
        sorted.sort();
        assert_eq!(sorted, parts);
    }

    #[test]
    fn strips() {
        assert_eq!(horizontal_strips(&p("1"), 2), vec![p("3"), p("2,1")]);
        assert_eq!(vertical_strips(&p("1"), 2), vec![p("2,1"), p("1,1,1")]);
        assert_eq!(horizontal_strips(&p("2,1"), 0), vec![p("2,1")]);
    }

    #[test]
    fn tableaux() {
        assert_eq!(syt_count(&p("2,1")), 2);
        assert_eq!(syt_count(&p("2,2")), 2);
        assert_eq!(enumerate_syt(&p("2,1")).len(), 2);
        let t = StandardTableau::column_reading(&p("3,1"));
        assert_eq!(t.rows(), &[vec![1, 3, 4], vec![2]]);
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_none());
    }

    #[test]
    fn z_values() {
        assert_eq!(p("1,1").z(), 2);
        assert_eq!(p("2,1").z(), 2);
        assert_eq!(p("3").z(), 3);
        assert_eq!(p("2,2,1").z(), 8);
    }
}
