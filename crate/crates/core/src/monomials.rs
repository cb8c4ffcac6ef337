//! Monomials in the generators `δ_C`, standard monomials (multichains in `L`)
//! and their tableau realization.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagrams::{interlaces, OrderType, Relation, WeightPair, YoungDiagram};
use crate::error::{Error, Result};
use crate::lattice::{check_rank, ColumnIndex, Kind};

/// A multiset of lattice elements at a fixed rank, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    n: usize,
    cols: Vec<ColumnIndex>,
}

impl Monomial {
    pub fn new(n: usize, mut cols: Vec<ColumnIndex>) -> Result<Self> {
        check_rank(n)?;
        if let Some(c) = cols.iter().find(|c| c.rank() != n) {
            return Err(Error::RankMismatch(n, c.rank()));
        }
        cols.sort();
        Ok(Monomial { n, cols })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// Parses `[I1,K0]`, `[]`, or a bare token list `I1,K0`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        let cols = if inner.is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|t| ColumnIndex::parse(t, n)).collect::<Result<_>>()?
        };
        Self::new(n, cols)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[ColumnIndex] {
        &self.cols
    }

    pub fn degree(&self) -> usize {
        self.cols.len()
    }

    pub fn is_standard(&self) -> bool {
        is_chain(&self.cols)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        let mut cols = self.cols.clone();
        cols.extend_from_slice(&other.cols);
        Monomial::new(self.n, cols)
    }

    /// Columns of the tableau are the column sets, left to right in canonical
    /// order, so column heights weakly decrease.
    pub fn to_tableau(&self) -> Tableau {
        let height = self.cols.first().map_or(0, |c| c.size());
        let mut rows = vec![Vec::new(); height];
        for c in &self.cols {
            for (r, entry) in c.column_set().into_iter().enumerate() {
                rows[r].push(entry as u32);
            }
        }
        Tableau { rows }
    }

    pub fn tokens(&self) -> Vec<String> {
        self.cols.iter().map(|c| c.to_string()).collect()
    }

    pub(crate) fn remove_pair(&mut self, a: ColumnIndex, b: ColumnIndex) -> bool {
        let Some(x) = self.cols.iter().position(|c| *c == a) else { return false };
        self.cols.remove(x);
        let Some(y) = self.cols.iter().position(|c| *c == b) else {
            self.cols.insert(x, a);
            return false;
        };
        self.cols.remove(y);
        true
    }

    pub(crate) fn with(&self, extra: [ColumnIndex; 2]) -> Monomial {
        let mut cols = self.cols.clone();
        cols.extend(extra);
        cols.sort();
        Monomial { n: self.n, cols }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.tokens().join(","))
    }
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.tokens().serialize(serializer)
    }
}

/// Pairwise comparability under `⪯`. Mixed ranks are never a chain.
pub fn is_chain(cols: &[ColumnIndex]) -> bool {
    cols.iter().enumerate().all(|(x, a)| {
        cols[x + 1..].iter().all(|b| a.comparable(b).unwrap_or(false))
    })
}

/// A monomial whose columns form a multichain in `L`: one basis vector `δ_Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct StandardMonomial(Monomial);

impl StandardMonomial {
    pub fn new(n: usize, cols: Vec<ColumnIndex>) -> Result<Self> {
        Monomial::new(n, cols)?.try_into()
    }

    pub fn empty(n: usize) -> Result<Self> {
        Ok(StandardMonomial(Monomial::one(n)?))
    }

    pub fn monomial(&self) -> &Monomial {
        &self.0
    }

    pub fn into_monomial(self) -> Monomial {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.n
    }

    pub fn columns(&self) -> &[ColumnIndex] {
        &self.0.cols
    }

    pub fn to_tableau(&self) -> Tableau {
        self.0.to_tableau()
    }

    /// `F/D`: `F` is the transpose of the column heights and `d_k` counts
    /// the entries equal to `k`, for `k < n`.
    pub fn shape(&self) -> WeightPair {
        let n = self.rank();
        let heights: Vec<u32> = self.columns().iter().map(|c| c.size() as u32).collect();
        let f = YoungDiagram::new(heights).expect("chain heights decrease").transpose();
        let mut d = vec![0u32; n - 1];
        for c in self.columns() {
            for entry in c.column_set() {
                if entry < n {
                    d[entry - 1] += 1;
                }
            }
        }
        let d = YoungDiagram::new(d).expect("initial segments give a partition");
        WeightPair::new(d, f, n).expect("column heights are at most n")
    }

    /// Row lengths after erasing every box labelled `n + 1`.
    pub fn middle_diagram(&self) -> YoungDiagram {
        let top = (self.rank() + 1) as u32;
        let rows = self
            .to_tableau()
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&x| x != top).count() as u32)
            .collect();
        YoungDiagram::new(rows).expect("erasing the largest label keeps a diagram")
    }

    /// `σ_i` is `>=` if `I_i` occurs, `<=` if `K_{i-1}` occurs, else `=`.
    pub fn order_type(&self) -> OrderType {
        let n = self.rank();
        OrderType(
            (1..n)
                .map(|i| {
                    let has = |kind, idx| self.columns().iter().any(|c| c.kind() == kind && c.idx() == idx);
                    if has(Kind::I, i) {
                        Relation::Ge
                    } else if has(Kind::K, i - 1) {
                        Relation::Le
                    } else {
                        Relation::Eq
                    }
                })
                .collect(),
        )
    }

    /// Weight under the natural `SL_2`: `#J - #J'`.
    pub fn natural_sl2_weight(&self) -> i64 {
        self.columns()
            .iter()
            .map(|c| match c.kind() {
                Kind::J => 1,
                Kind::Jp => -1,
                _ => 0,
            })
            .sum()
    }

    /// The `T_L` exponents of the labelled triple `(D, E, F)`.
    pub fn tl_weight(&self) -> Vec<i64> {
        self.shape()
            .tl_weight(&self.middle_diagram())
            .expect("a chain yields a doubly interlacing triple")
    }

    /// Inverse of `(shape, middle_diagram)`: fill `F/E` with `n+1`, `E/D`
    /// with `n`, and the rest of row `i` with `i`.
    pub fn from_triple(d: &YoungDiagram, e: &YoungDiagram, f: &YoungDiagram, n: usize) -> Result<Self> {
        let pair = WeightPair::new(d.clone(), f.clone(), n)?;
        if e.len() > n || !interlaces(d, e) || !interlaces(e, f) {
            return Err(Error::NotInterlacing(format!("{d} ⊑ {e} ⊑ {f}")));
        }
        let width = pair.f().part(1) as usize;
        let mut columns = vec![Vec::new(); width];
        for i in 1..=n {
            let (di, ei, fi) = (d.part(i) as usize, e.part(i) as usize, f.part(i) as usize);
            for (c, col) in columns.iter_mut().enumerate().take(fi) {
                col.push(if c < di {
                    i
                } else if c < ei {
                    n
                } else {
                    n + 1
                });
            }
        }
        let cols = columns
            .iter()
            .map(|set| ColumnIndex::from_set(set, n))
            .collect::<Result<Vec<_>>>()?;
        StandardMonomial::new(n, cols)
    }

    /// All standard monomials of shape `F/D`, one per middle diagram.
    pub fn enumerate(pair: &WeightPair) -> Vec<StandardMonomial> {
        pair.enumerate_middle()
            .iter()
            .map(|e| {
                StandardMonomial::from_triple(pair.d(), e, pair.f(), pair.rank())
                    .expect("middle diagrams interlace")
            })
            .collect()
    }
}

impl TryFrom<Monomial> for StandardMonomial {
    type Error = Error;

    fn try_from(m: Monomial) -> Result<Self> {
        if !m.is_standard() {
            return Err(Error::NotAChain(m.to_string()));
        }
        Ok(StandardMonomial(m))
    }
}

impl fmt::Display for StandardMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Left-justified rows of positive entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    pub rows: Vec<Vec<u32>>,
}

impl Tableau {
    /// Rows weakly increase, columns strictly increase, row lengths weakly decrease.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let shape_ok = self.rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && shape_ok && cols_ok
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}
