//! Young diagrams, interlacing, the grading semigroup `Λ_{n-1,n}`, branching
//! multiplicities and the `T_L` weight bookkeeping.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::check_rank;

/// Weakly decreasing nonnegative row lengths, stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram(Vec<u32>);

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(YoungDiagram(parts))
    }

    pub fn empty() -> Self {
        YoungDiagram(Vec::new())
    }

    /// Row `i` (1-based); zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Rows `1..=k`, zero-padded.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        (1..=k).map(|i| self.part(i)).collect()
    }

    pub fn transpose(&self) -> YoungDiagram {
        let width = self.part(1);
        YoungDiagram((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count() as u32).collect())
    }

    fn add(&self, other: &YoungDiagram) -> YoungDiagram {
        let k = self.len().max(other.len());
        YoungDiagram((1..=k).map(|i| self.part(i) + other.part(i)).collect())
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        YoungDiagram::new(parts)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.0
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Comma-separated parts; the empty string (or `()`) is the empty diagram.
impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad diagram part {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(parts)
    }
}

/// `D ⊑ F`: `f_i >= d_i >= f_{i+1}` for every row.
pub fn interlaces(d: &YoungDiagram, f: &YoungDiagram) -> bool {
    let rows = d.len().max(f.len());
    (1..=rows).all(|i| f.part(i) >= d.part(i) && d.part(i) >= f.part(i + 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Ge,
    Le,
    Eq,
}

/// A word over `{>=, <=}` of length `n - 1`; the generalized form also
/// allows `=`, which satisfies both letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderType(pub Vec<Relation>);

impl OrderType {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether this (generalized) type satisfies the plain or generalized type `sigma`.
    pub fn satisfies(&self, sigma: &OrderType) -> bool {
        self.len() == sigma.len()
            && self.0.iter().zip(&sigma.0).all(|(mine, want)| {
                matches!((mine, want), (Relation::Eq, _) | (_, Relation::Eq)) || mine == want
            })
    }

    /// Every plain word of the given length.
    pub fn all_plain(len: usize) -> Vec<OrderType> {
        (0..1u64 << len)
            .map(|bits| {
                OrderType(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 1 { Relation::Le } else { Relation::Ge })
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.0 {
            f.write_str(match r {
                Relation::Ge => ">=",
                Relation::Le => "<=",
                Relation::Eq => "=",
            })?;
        }
        Ok(())
    }
}

impl FromStr for OrderType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rest = s.trim();
        let mut word = Vec::new();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix(">=") {
                word.push(Relation::Ge);
                rest = r;
            } else if let Some(r) = rest.strip_prefix("<=") {
                word.push(Relation::Le);
                rest = r;
            } else if let Some(r) = rest.strip_prefix('=') {
                word.push(Relation::Eq);
                rest = r;
            } else {
                return Err(Error::Parse(format!("bad order type {s:?}")));
            }
        }
        Ok(OrderType(word))
    }
}

impl Serialize for OrderType {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// An element `(D, F)` of `Λ_{n-1,n}`: `ℓ(D) <= n - 1`, `ℓ(F) <= n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightPair {
    d: YoungDiagram,
    f: YoungDiagram,
    n: usize,
}

impl WeightPair {
    pub fn new(d: YoungDiagram, f: YoungDiagram, n: usize) -> Result<Self> {
        check_rank(n)?;
        if d.len() > n - 1 {
            return Err(Error::LengthViolation { diagram: d.to_string(), len: d.len(), max: n - 1 });
        }
        if f.len() > n {
            return Err(Error::LengthViolation { diagram: f.to_string(), len: f.len(), max: n });
        }
        Ok(WeightPair { d, f, n })
    }

    pub fn d(&self) -> &YoungDiagram {
        &self.d
    }

    pub fn f(&self) -> &YoungDiagram {
        &self.f
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Admissible range of `e_j`: `max(f_{j+1}, d_j) ..= min(f_j, d_{j-1})`.
    fn middle_range(&self, j: usize) -> (u32, u32) {
        let lo = self.f.part(j + 1).max(self.d.part(j));
        let hi = self.f.part(j).min(self.d.part(j - 1));
        (lo, hi)
    }

    /// Number of `E = (e_1..e_n)` with `D ⊑ E ⊑ F`.
    ///
    /// Each `e_j` is constrained only by `D` and `F`, so the count is a
    /// product of independent interval widths.
    pub fn multiplicity(&self) -> u64 {
        (1..=self.n)
            .map(|j| {
                let (lo, hi) = self.middle_range(j);
                if hi >= lo { (hi - lo) as u64 + 1 } else { 0 }
            })
            .try_fold(1u64, |acc, w| acc.checked_mul(w))
            .expect("branching multiplicity overflows u64")
    }

    /// `f_j >= d_j >= f_{j+2}` for `j = 1..n-1`, with `f_{n+1} = 0`.
    pub fn multiplicity_nonzero(&self) -> bool {
        (1..self.n).all(|j| self.f.part(j) >= self.d.part(j) && self.d.part(j) >= self.f.part(j + 2))
    }

    /// All middle diagrams, lexicographically descending.
    pub fn enumerate_middle(&self) -> Vec<YoungDiagram> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.n);
        self.extend_middle(&mut current, &mut out);
        out
    }

    fn extend_middle(&self, current: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        let j = current.len() + 1;
        if j > self.n {
            out.push(YoungDiagram::new(current.clone()).expect("interlacing rows decrease"));
            return;
        }
        let (lo, hi) = self.middle_range(j);
        for e in (lo..=hi).rev() {
            current.push(e);
            self.extend_middle(current, out);
            current.pop();
        }
    }

    /// Position `i` compares `d_i` with `f_{i+1}`.
    pub fn order_type(&self) -> OrderType {
        OrderType(
            (1..self.n)
                .map(|i| match self.d.part(i).cmp(&self.f.part(i + 1)) {
                    std::cmp::Ordering::Greater => Relation::Ge,
                    std::cmp::Ordering::Less => Relation::Le,
                    std::cmp::Ordering::Equal => Relation::Eq,
                })
                .collect(),
        )
    }

    /// Componentwise sum in `Λ_{n-1,n}`.
    pub fn add(&self, other: &WeightPair) -> Result<WeightPair> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        WeightPair::new(self.d.add(&other.d), self.f.add(&other.f), self.n)
    }

    /// `(x_1 >= y_1 >= ... >= x_n >= y_n)`: the descending rearrangement of
    /// `d_1..d_{n-1}, d_n = 0, f_1..f_n`.
    fn sorted_pairs(&self) -> Vec<(u32, u32)> {
        let mut all: Vec<u32> = self.d.padded(self.n);
        all.extend(self.f.padded(self.n));
        all.sort_unstable_by(|a, b| b.cmp(a));
        all.chunks(2).map(|c| (c[0], c[1])).collect()
    }

    /// `r_i = x_i - y_i`: the highest weights of the `SL_2` tensor factors.
    pub fn tensor_factors(&self) -> Vec<u32> {
        self.sorted_pairs().into_iter().map(|(x, y)| x - y).collect()
    }

    /// Exponents `2 e_i - x_i - y_i` of the `T_L` character attached to `E`.
    pub fn tl_weight(&self, e: &YoungDiagram) -> Result<Vec<i64>> {
        if e.len() > self.n || !interlaces(&self.d, e) || !interlaces(e, &self.f) {
            return Err(Error::NotInterlacing(format!("{} ⊑ {} ⊑ {}", self.d, e, self.f)));
        }
        Ok(self
            .sorted_pairs()
            .into_iter()
            .enumerate()
            .map(|(i, (x, y))| 2 * e.part(i + 1) as i64 - x as i64 - y as i64)
            .collect())
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.f, self.d)
    }
}

/// Every Young diagram with at most `rows` rows and parts at most `max_part`,
/// in lexicographic order of padded parts.
pub fn diagrams_in_box(rows: usize, max_part: u32) -> Vec<YoungDiagram> {
    fn rec(rows: usize, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if cur.len() == rows {
            out.push(YoungDiagram::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        for p in 0..=cap {
            cur.push(p);
            rec(rows, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, max_part, &mut Vec::new(), &mut out);
    out
}

/// All pairs in `Λ_{n-1,n}` with parts at most `max_part`.
pub fn pairs_in_box(n: usize, max_part: u32) -> Result<Vec<WeightPair>> {
    check_rank(n)?;
    let ds = diagrams_in_box(n - 1, max_part);
    let fs = diagrams_in_box(n, max_part);
    let mut out = Vec::with_capacity(ds.len() * fs.len());
    for f in &fs {
        for d in &ds {
            out.push(WeightPair::new(d.clone(), f.clone(), n)?);
        }
    }
    Ok(out)
}
