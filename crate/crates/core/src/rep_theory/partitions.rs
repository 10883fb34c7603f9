use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Nonincreasing sequence of positive integers; the empty partition is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParsePartitionError {
    #[error("partition parts must be positive and nonincreasing: {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cannot parse partition {0:?}")]
    Syntax(String),
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ParsePartitionError;
    fn try_from(v: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ParsePartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParsePartitionError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `m`, the number partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Accepts `"2,1"`, `"(2,1)"`, and `""`, `"()"` or `"∅"` for the empty partition.
impl FromStr for Partition {
    type Err = ParsePartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "∅" {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| ParsePartitionError::Syntax(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `m` in reverse lexicographic order.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if m == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=m.min(max)).rev() {
            cur.push(k);
            rec(m - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, m, &mut Vec::new(), &mut out);
    out
}

/// A pair of partitions of the same `m` with `l(α) + l(β) ≤ n`, giving the
/// weight `(α_1, ..., α_l, 0, ..., 0, -β_l', ..., -β_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightLabel {
    pub alpha: Partition,
    pub beta: Partition,
    pub n: usize,
}

impl WeightLabel {
    pub fn new(alpha: Partition, beta: Partition, n: usize) -> Option<Self> {
        (alpha.size() == beta.size() && alpha.len() + beta.len() <= n).then_some(WeightLabel { alpha, beta, n })
    }

    pub fn trivial(n: usize) -> Self {
        WeightLabel { alpha: Partition::empty(), beta: Partition::empty(), n }
    }

    pub fn m(&self) -> usize {
        self.alpha.size()
    }

    pub fn vector(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.n];
        for (i, a) in self.alpha.parts().iter().enumerate() {
            v[i] = *a as i64;
        }
        for (i, b) in self.beta.parts().iter().enumerate() {
            v[self.n - 1 - i] = -(*b as i64);
        }
        v
    }

    pub fn is_trivial(&self) -> bool {
        self.m() == 0
    }
}

impl fmt::Display for WeightLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]_{}", self.alpha, self.beta, self.n)
    }
}

/// All labels `[α,β]_n` with `m ≤ mmax`.
pub fn labels_up_to(n: usize, mmax: usize) -> Vec<WeightLabel> {
    let mut out = Vec::new();
    for m in 0..=mmax {
        for a in partitions(m) {
            for b in partitions(m) {
                if let Some(l) = WeightLabel::new(a.clone(), b, n) {
                    out.push(l);
                }
            }
        }
    }
    out
}
