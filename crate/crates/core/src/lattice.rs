//! The distributive lattice `L` of column index sets and its Birkhoff
//! embedding into the three-level interlacing poset `Γ`.
//!
//! At rank `n` the lattice has `4n - 2` elements
//!
//! ```text
//! I_i  = {1..i}            1 <= i <= n-1
//! J_j  = {1..j, n}         0 <= j <= n-1
//! J'_j = {1..j, n+1}       0 <= j <= n-1
//! K_k  = {1..k, n, n+1}    0 <= k <= n-2
//! ```
//!
//! Every element is determined by its *level counts*
//! `(m(n-1), m(n), m(n+1))`, where `m(k)` is the number of entries `<= k`.
//! The complement `S_C ⊆ Γ` of the order ideal attached to `C` takes the
//! first `m(k)` cells of level `k`, so `a ⪯ b` exactly when `S_b ⊆ S_a`, i.e.
//! when the counts of `a` dominate those of `b` componentwise. That
//! comparison is the primary order; [`hasse_leq`] recomputes it from the
//! covering relations.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    I,
    J,
    Jp,
    K,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::I => "I",
            Kind::J => "J",
            Kind::Jp => "J'",
            Kind::K => "K",
        }
    }

    /// Tiebreak used by the canonical total order; only `I_i` and `K_{i-1}`
    /// ever tie on height.
    fn tiebreak(self) -> u8 {
        match self {
            Kind::K => 0,
            Kind::I => 1,
            Kind::Jp => 2,
            Kind::J => 3,
        }
    }
}

/// An element of `L` at rank `n`.
///
/// The derived `Ord` is a linear extension of `⪯` (see [`ColumnIndex::cmp`]),
/// so sorting any chain yields its `⪯`-ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColumnIndex")]
pub struct ColumnIndex {
    kind: Kind,
    idx: usize,
    n: usize,
}

#[derive(Deserialize)]
struct RawColumnIndex {
    kind: Kind,
    idx: usize,
    n: usize,
}

impl TryFrom<RawColumnIndex> for ColumnIndex {
    type Error = Error;

    fn try_from(raw: RawColumnIndex) -> Result<Self> {
        ColumnIndex::new(raw.kind, raw.idx, raw.n)
    }
}

pub(crate) fn check_rank(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidRank(n));
    }
    Ok(())
}

impl ColumnIndex {
    pub fn new(kind: Kind, idx: usize, n: usize) -> Result<Self> {
        check_rank(n)?;
        let ok = match kind {
            Kind::I => (1..n).contains(&idx),
            Kind::J | Kind::Jp => idx < n,
            Kind::K => idx + 2 <= n,
        };
        if !ok {
            return Err(Error::InvalidColumn { kind: kind.label(), idx, n });
        }
        Ok(ColumnIndex { kind, idx, n })
    }

    pub fn i(idx: usize, n: usize) -> Result<Self> {
        Self::new(Kind::I, idx, n)
    }

    pub fn j(idx: usize, n: usize) -> Result<Self> {
        Self::new(Kind::J, idx, n)
    }

    pub fn jp(idx: usize, n: usize) -> Result<Self> {
        Self::new(Kind::Jp, idx, n)
    }

    pub fn k(idx: usize, n: usize) -> Result<Self> {
        Self::new(Kind::K, idx, n)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn idx(&self) -> usize {
        self.idx
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// The strictly increasing column set, entries in `1..=n+1`.
    pub fn column_set(&self) -> Vec<usize> {
        let mut set: Vec<usize> = (1..=self.idx).collect();
        match self.kind {
            Kind::I => {}
            Kind::J => set.push(self.n),
            Kind::Jp => set.push(self.n + 1),
            Kind::K => set.extend([self.n, self.n + 1]),
        }
        set
    }

    pub fn size(&self) -> usize {
        self.level_counts()[2]
    }

    /// `(m(n-1), m(n), m(n+1))`: how many entries are at most `n-1`, `n`, `n+1`.
    pub fn level_counts(&self) -> [usize; 3] {
        let i = self.idx;
        match self.kind {
            Kind::I => [i, i, i],
            Kind::J => [i, i + 1, i + 1],
            Kind::Jp => [i, i, i + 1],
            Kind::K => [i, i + 1, i + 2],
        }
    }

    /// Inverse of [`level_counts`](Self::level_counts).
    pub fn from_level_counts(counts: [usize; 3], n: usize) -> Result<Self> {
        let [a, b, c] = counts;
        if b < a || c < b {
            return Err(Error::NotALatticeElement(vec![a, b, c], n));
        }
        let kind = match (b - a, c - b) {
            (0, 0) => Kind::I,
            (1, 0) => Kind::J,
            (0, 1) => Kind::Jp,
            (1, 1) => Kind::K,
            _ => return Err(Error::NotALatticeElement(vec![a, b, c], n)),
        };
        ColumnIndex::new(kind, a, n)
    }

    /// Recognizes a column set such as `[1,2,4,5]` at rank `n`.
    pub fn from_set(set: &[usize], n: usize) -> Result<Self> {
        check_rank(n)?;
        let bad = || Error::NotALatticeElement(set.to_vec(), n);
        if set.windows(2).any(|w| w[0] >= w[1]) || set.iter().any(|&c| c == 0 || c > n + 1) {
            return Err(bad());
        }
        let low = set.iter().take_while(|&&c| c < n).count();
        if set[..low].iter().enumerate().any(|(r, &c)| c != r + 1) {
            return Err(bad());
        }
        let kind = match &set[low..] {
            [] => Kind::I,
            [x] if *x == n => Kind::J,
            [x] if *x == n + 1 => Kind::Jp,
            [x, y] if *x == n && *y == n + 1 => Kind::K,
            _ => return Err(bad()),
        };
        ColumnIndex::new(kind, low, n).map_err(|_| bad())
    }

    /// Parses the token form `I3`, `J0`, `J'2`, `K1`.
    pub fn parse(token: &str, n: usize) -> Result<Self> {
        let token = token.trim();
        let (kind, rest) = if let Some(r) = token.strip_prefix("J'") {
            (Kind::Jp, r)
        } else if let Some(r) = token.strip_prefix('I') {
            (Kind::I, r)
        } else if let Some(r) = token.strip_prefix('J') {
            (Kind::J, r)
        } else if let Some(r) = token.strip_prefix('K') {
            (Kind::K, r)
        } else {
            return Err(Error::Parse(format!("unknown column token {token:?}")));
        };
        let idx = rest
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad index in column token {token:?}")))?;
        ColumnIndex::new(kind, idx, n)
    }

    /// Set form, e.g. `[1,2,4,5]`.
    pub fn set_string(&self) -> String {
        let parts: Vec<String> = self.column_set().iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// The partial order `⪯`, via the Birkhoff embedding.
    pub fn leq(&self, other: &ColumnIndex) -> Result<bool> {
        same_rank(self, other)?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &ColumnIndex) -> bool {
        let a = self.level_counts();
        let b = other.level_counts();
        a.iter().zip(&b).all(|(x, y)| x >= y)
    }

    pub fn comparable(&self, other: &ColumnIndex) -> Result<bool> {
        Ok(self.leq(other)? || other.leq(self)?)
    }

    pub fn meet(&self, other: &ColumnIndex) -> Result<ColumnIndex> {
        same_rank(self, other)?;
        let (a, b) = (self.level_counts(), other.level_counts());
        ColumnIndex::from_level_counts([a[0].max(b[0]), a[1].max(b[1]), a[2].max(b[2])], self.n)
    }

    pub fn join(&self, other: &ColumnIndex) -> Result<ColumnIndex> {
        same_rank(self, other)?;
        let (a, b) = (self.level_counts(), other.level_counts());
        ColumnIndex::from_level_counts([a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])], self.n)
    }

    /// `S_C`: the first `m(k)` cells of each level `k`. Its complement in `Γ`
    /// is the order-decreasing subset attached to `C`.
    pub fn birkhoff_complement(&self) -> BTreeSet<GammaCell> {
        let n = self.n;
        let counts = self.level_counts();
        let mut cells = BTreeSet::new();
        for (offset, &m) in counts.iter().enumerate() {
            let level = n - 1 + offset;
            cells.extend((1..=m).map(|pos| GammaCell { level, pos }));
        }
        cells
    }

    fn sort_key(&self) -> (usize, std::cmp::Reverse<usize>, u8) {
        let height: usize = self.level_counts().iter().sum();
        (self.n, std::cmp::Reverse(height), self.kind.tiebreak())
    }
}

fn same_rank(a: &ColumnIndex, b: &ColumnIndex) -> Result<()> {
    if a.n != b.n {
        return Err(Error::RankMismatch(a.n, b.n));
    }
    Ok(())
}

/// Canonical total order: by rank, then `⪯`-ascending, ties `K < I`.
///
/// The sum of level counts drops by at least one along every strict cover,
/// so ordering by descending sum extends `⪯`.
impl Ord for ColumnIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for ColumnIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColumnIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.label(), self.idx)
    }
}

/// All `4n - 2` elements in canonical order.
pub fn elements(n: usize) -> Result<Vec<ColumnIndex>> {
    check_rank(n)?;
    let mut all = Vec::with_capacity(4 * n - 2);
    for i in 1..n {
        all.push(ColumnIndex { kind: Kind::I, idx: i, n });
    }
    for j in 0..n {
        all.push(ColumnIndex { kind: Kind::J, idx: j, n });
        all.push(ColumnIndex { kind: Kind::Jp, idx: j, n });
    }
    for k in 0..n - 1 {
        all.push(ColumnIndex { kind: Kind::K, idx: k, n });
    }
    all.sort();
    Ok(all)
}

/// The `n - 1` incomparable pairs `(I_i, K_{i-1})`.
pub fn incomparable_pairs(n: usize) -> Result<Vec<(ColumnIndex, ColumnIndex)>> {
    check_rank(n)?;
    Ok((1..n)
        .map(|i| {
            (
                ColumnIndex { kind: Kind::I, idx: i, n },
                ColumnIndex { kind: Kind::K, idx: i - 1, n },
            )
        })
        .collect())
}

/// Covering relations `(lower, upper)` read off the Hasse diagram:
/// `J_i ⋖ J'_i ⋖ {I_i, K_{i-1}} ⋖ J_{i-1} ⋖ J'_{i-1}`.
pub fn covering_relations(n: usize) -> Result<Vec<(ColumnIndex, ColumnIndex)>> {
    check_rank(n)?;
    let c = |kind, idx| ColumnIndex { kind, idx, n };
    let mut covers = Vec::new();
    for i in 1..n {
        covers.push((c(Kind::J, i), c(Kind::Jp, i)));
        covers.push((c(Kind::Jp, i), c(Kind::I, i)));
        covers.push((c(Kind::Jp, i), c(Kind::K, i - 1)));
        covers.push((c(Kind::I, i), c(Kind::J, i - 1)));
        covers.push((c(Kind::K, i - 1), c(Kind::J, i - 1)));
    }
    covers.push((c(Kind::J, 0), c(Kind::Jp, 0)));
    Ok(covers)
}

/// `a ⪯ b` computed as reachability along covering relations.
pub fn hasse_leq(a: &ColumnIndex, b: &ColumnIndex) -> Result<bool> {
    same_rank(a, b)?;
    let covers = covering_relations(a.n)?;
    let mut seen = BTreeSet::from([*a]);
    let mut queue = VecDeque::from([*a]);
    while let Some(x) = queue.pop_front() {
        if x == *b {
            return Ok(true);
        }
        for (lo, hi) in &covers {
            if *lo == x && seen.insert(*hi) {
                queue.push_back(*hi);
            }
        }
    }
    Ok(false)
}

/// A cell `t_pos^(level)` of `Γ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GammaCell {
    pub level: usize,
    pub pos: usize,
}

/// The `3n - 1` cells of `Γ` at rank `n`.
pub fn gamma_cells(n: usize) -> Result<Vec<GammaCell>> {
    check_rank(n)?;
    let mut cells = Vec::with_capacity(3 * n - 1);
    for level in n - 1..=n + 1 {
        cells.extend((1..=level.min(n)).map(|pos| GammaCell { level, pos }));
    }
    Ok(cells)
}

/// Relations `(upper, lower)` of `Γ`: `t_j^(i+1) >= t_j^(i) >= t_{j+1}^(i+1)`.
pub fn gamma_relations(n: usize) -> Result<Vec<(GammaCell, GammaCell)>> {
    let cells: BTreeSet<GammaCell> = gamma_cells(n)?.into_iter().collect();
    let mut rel = Vec::new();
    for level in n - 1..=n {
        for pos in 1..=level.min(n) {
            let here = GammaCell { level, pos };
            let above = GammaCell { level: level + 1, pos };
            let above_right = GammaCell { level: level + 1, pos: pos + 1 };
            if cells.contains(&above) {
                rel.push((above, here));
            }
            if cells.contains(&above_right) {
                rel.push((here, above_right));
            }
        }
    }
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(c: ColumnIndex) -> Vec<usize> {
        c.column_set()
    }

    #[test]
    fn column_sets() {
        assert_eq!(set(ColumnIndex::k(0, 4).unwrap()), vec![4, 5]);
        assert_eq!(set(ColumnIndex::j(3, 4).unwrap()), vec![1, 2, 3, 4]);
        assert_eq!(set(ColumnIndex::k(2, 4).unwrap()), vec![1, 2, 4, 5]);
        assert_eq!(set(ColumnIndex::j(0, 4).unwrap()), vec![4]);
        assert_eq!(set(ColumnIndex::jp(0, 4).unwrap()), vec![5]);
    }

    #[test]
    fn invalid_columns() {
        assert!(ColumnIndex::i(0, 4).is_err());
        assert!(ColumnIndex::i(4, 4).is_err());
        assert!(ColumnIndex::j(4, 4).is_err());
        assert!(ColumnIndex::k(3, 4).is_err());
        assert!(ColumnIndex::j(0, 1).is_err());
    }

    #[test]
    fn sizes_and_counts() {
        for n in 2..=6 {
            let all = elements(n).unwrap();
            assert_eq!(all.len(), 4 * n - 2);
            for c in all {
                let cs = c.column_set();
                assert_eq!(cs.len(), c.size());
                assert!(cs.windows(2).all(|w| w[0] < w[1]));
                let counts = [n - 1, n, n + 1].map(|k| cs.iter().filter(|&&x| x <= k).count());
                assert_eq!(counts, c.level_counts());
                assert_eq!(ColumnIndex::from_level_counts(counts, n).unwrap(), c);
                assert_eq!(ColumnIndex::from_set(&cs, n).unwrap(), c);
            }
        }
    }

    #[test]
    fn order_examples() {
        let n = 4;
        let k2 = ColumnIndex::k(2, n).unwrap();
        let jp2 = ColumnIndex::jp(2, n).unwrap();
        assert!(k2.leq(&jp2).unwrap());
        let i1 = ColumnIndex::i(1, n).unwrap();
        assert!(i1.leq(&i1).unwrap());
        let k0 = ColumnIndex::k(0, n).unwrap();
        assert!(!i1.leq(&k0).unwrap());
        assert!(!k0.leq(&i1).unwrap());
        assert!(i1.leq(&ColumnIndex::k(0, 3).unwrap()).is_err());
    }

    #[test]
    fn meet_join_examples() {
        let n = 4;
        let i2 = ColumnIndex::i(2, n).unwrap();
        let k1 = ColumnIndex::k(1, n).unwrap();
        assert_eq!(i2.meet(&k1).unwrap(), ColumnIndex::jp(2, n).unwrap());
        assert_eq!(i2.join(&k1).unwrap(), ColumnIndex::j(1, n).unwrap());
        let j1 = ColumnIndex::j(1, n).unwrap();
        assert_eq!(j1.meet(&j1).unwrap(), j1);
    }

    #[test]
    fn hasse_closure_agrees_with_birkhoff_order() {
        for n in 2..=6 {
            let all = elements(n).unwrap();
            for a in &all {
                for b in &all {
                    assert_eq!(a.leq(b).unwrap(), hasse_leq(a, b).unwrap(), "{a} vs {b} at n={n}");
                }
            }
        }
    }

    #[test]
    fn incomparable_pairs_are_exactly_the_diamonds() {
        for n in 2..=6 {
            let all = elements(n).unwrap();
            let mut found = Vec::new();
            for (x, a) in all.iter().enumerate() {
                for b in &all[x + 1..] {
                    if !a.comparable(b).unwrap() {
                        let pair = if a.kind() == Kind::I { (*a, *b) } else { (*b, *a) };
                        found.push(pair);
                    }
                }
            }
            found.sort();
            let mut expected = incomparable_pairs(n).unwrap();
            expected.sort();
            assert_eq!(found, expected);
        }
        let n2 = incomparable_pairs(2).unwrap();
        assert_eq!(n2.len(), 1);
        assert_eq!(n2[0].0.to_string(), "I1");
        assert_eq!(n2[0].1.to_string(), "K0");
        let n4: Vec<String> = incomparable_pairs(4)
            .unwrap()
            .iter()
            .map(|(a, b)| format!("{a}{b}"))
            .collect();
        assert_eq!(n4, ["I1K0", "I2K1", "I3K2"]);
    }

    #[test]
    fn lattice_axioms() {
        for n in 2..=5 {
            let all = elements(n).unwrap();
            for a in &all {
                for b in &all {
                    let m = a.meet(b).unwrap();
                    let j = a.join(b).unwrap();
                    assert!(m.leq(a).unwrap() && m.leq(b).unwrap());
                    assert!(a.leq(&j).unwrap() && b.leq(&j).unwrap());
                    assert_eq!(a.meet(&a.join(b).unwrap()).unwrap(), *a);
                    assert_eq!(a.join(&a.meet(b).unwrap()).unwrap(), *a);
                    if a.leq(b).unwrap() {
                        assert_eq!(m, *a);
                        assert_eq!(j, *b);
                    }
                    for c in &all {
                        assert_eq!(
                            a.meet(&b.meet(c).unwrap()).unwrap(),
                            a.meet(b).unwrap().meet(c).unwrap()
                        );
                        assert_eq!(
                            a.join(&b.join(c).unwrap()).unwrap(),
                            a.join(b).unwrap().join(c).unwrap()
                        );
                        assert_eq!(
                            a.meet(&b.join(c).unwrap()).unwrap(),
                            a.meet(b).unwrap().join(&a.meet(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_order_extends_partial_order() {
        for n in 2..=6 {
            let all = elements(n).unwrap();
            for a in &all {
                for b in &all {
                    if a.leq(b).unwrap() {
                        assert!(a <= b);
                        assert!(a.size() >= b.size());
                    }
                }
            }
        }
        let k0 = ColumnIndex::k(0, 3).unwrap();
        let i1 = ColumnIndex::i(1, 3).unwrap();
        assert!(k0 < i1);
    }

    #[test]
    fn birkhoff_examples() {
        let n = 4;
        let rows = |c: ColumnIndex| {
            let s = c.birkhoff_complement();
            [n + 1, n, n - 1].map(|level| {
                (1..=level.min(n))
                    .map(|pos| s.contains(&GammaCell { level, pos }) as u8)
                    .collect::<Vec<_>>()
            })
        };
        let a = ColumnIndex::from_set(&[1, 2, 4, 5], n).unwrap();
        assert_eq!(rows(a), [vec![1, 1, 1, 1], vec![1, 1, 1, 0], vec![1, 1, 0]]);
        let c = ColumnIndex::from_set(&[1, 4], n).unwrap();
        assert_eq!(rows(c), [vec![1, 1, 0, 0], vec![1, 1, 0, 0], vec![1, 0, 0]]);
        let jp0 = ColumnIndex::jp(0, n).unwrap();
        assert_eq!(rows(jp0), [vec![1, 0, 0, 0], vec![0, 0, 0, 0], vec![0, 0, 0]]);
    }

    #[test]
    fn birkhoff_complement_is_order_increasing() {
        // Γ ∖ S_C must be order-decreasing, i.e. S_C is closed upwards.
        for n in 2..=6 {
            let rel = gamma_relations(n).unwrap();
            assert_eq!(gamma_cells(n).unwrap().len(), 3 * n - 1);
            for c in elements(n).unwrap() {
                let s = c.birkhoff_complement();
                for (hi, lo) in &rel {
                    if s.contains(lo) {
                        assert!(s.contains(hi), "{c}: {lo:?} in S but {hi:?} not");
                    }
                }
            }
        }
    }

    #[test]
    fn order_is_subset_containment() {
        for n in 2..=6 {
            let all = elements(n).unwrap();
            let cells: BTreeSet<_> = gamma_cells(n).unwrap().into_iter().collect();
            for a in &all {
                let za: BTreeSet<_> = cells.difference(&a.birkhoff_complement()).copied().collect();
                for b in &all {
                    let zb: BTreeSet<_> =
                        cells.difference(&b.birkhoff_complement()).copied().collect();
                    assert_eq!(a.leq(b).unwrap(), za.is_subset(&zb));
                }
            }
        }
    }

    #[test]
    fn text_forms() {
        let n = 4;
        for c in elements(n).unwrap() {
            assert_eq!(ColumnIndex::parse(&c.to_string(), n).unwrap(), c);
        }
        assert_eq!(ColumnIndex::parse("J'2", 4).unwrap().set_string(), "[1,2,5]");
        assert!(ColumnIndex::parse("X1", 4).is_err());
        assert!(ColumnIndex::parse("K3", 4).is_err());
        assert!(ColumnIndex::from_set(&[1, 3], 4).is_err());
        assert!(ColumnIndex::from_set(&[2, 4], 4).is_err());
    }

    #[test]
    fn json_form() {
        let k2 = ColumnIndex::k(2, 4).unwrap();
        let s = serde_json::to_string(&k2).unwrap();
        assert_eq!(s, r#"{"kind":"K","idx":2,"n":4}"#);
        assert_eq!(serde_json::from_str::<ColumnIndex>(&s).unwrap(), k2);
        assert!(serde_json::from_str::<ColumnIndex>(r#"{"kind":"K","idx":3,"n":4}"#).is_err());
    }
}
