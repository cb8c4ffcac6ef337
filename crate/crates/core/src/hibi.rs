//! The Hibi algebra over `L` as the semigroup ring of order-preserving maps
//! `Γ -> Z_{>=0}`: characteristic functions, the chain/pattern bijection and
//! pattern counting with fixed outer rows.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::{WeightPair, YoungDiagram};
use crate::error::{Error, Result};
use crate::lattice::{check_rank, gamma_relations, ColumnIndex, GammaCell};
use crate::monomials::StandardMonomial;

/// An order-preserving map on `Γ`, stored by level: `top` is level `n+1`,
/// `mid` level `n`, `bot` level `n-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPattern")]
pub struct PatternMap {
    top: Vec<u32>,
    mid: Vec<u32>,
    bot: Vec<u32>,
}

#[derive(Deserialize)]
struct RawPattern {
    top: Vec<u32>,
    mid: Vec<u32>,
    bot: Vec<u32>,
}

impl TryFrom<RawPattern> for PatternMap {
    type Error = Error;

    fn try_from(raw: RawPattern) -> Result<Self> {
        PatternMap::new(raw.top, raw.mid, raw.bot)
    }
}

impl PatternMap {
    pub fn new(top: Vec<u32>, mid: Vec<u32>, bot: Vec<u32>) -> Result<Self> {
        let n = top.len();
        check_rank(n)?;
        if mid.len() != n || bot.len() + 1 != n {
            return Err(Error::RankMismatch(n, mid.len().max(bot.len() + 1)));
        }
        let p = PatternMap { top, mid, bot };
        if !p.is_order_preserving() {
            return Err(Error::NotOrderPreserving(p.to_string()));
        }
        Ok(p)
    }

    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(PatternMap { top: vec![0; n], mid: vec![0; n], bot: vec![0; n - 1] })
    }

    pub fn rank(&self) -> usize {
        self.top.len()
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn mid(&self) -> &[u32] {
        &self.mid
    }

    pub fn bot(&self) -> &[u32] {
        &self.bot
    }

    /// Value at a cell of `Γ`.
    pub fn value(&self, cell: GammaCell) -> u32 {
        let n = self.rank();
        let row = match cell.level - (n - 1) {
            0 => &self.bot,
            1 => &self.mid,
            _ => &self.top,
        };
        row[cell.pos - 1]
    }

    pub fn is_order_preserving(&self) -> bool {
        gamma_relations(self.rank())
            .expect("rank checked on construction")
            .into_iter()
            .all(|(upper, lower)| self.value(upper) >= self.value(lower))
    }

    /// Cells sent to zero.
    pub fn zero_set(&self) -> Vec<GammaCell> {
        crate::lattice::gamma_cells(self.rank())
            .expect("rank checked on construction")
            .into_iter()
            .filter(|&c| self.value(c) == 0)
            .collect()
    }

    /// Pointwise sum.
    pub fn add(&self, other: &PatternMap) -> Result<PatternMap> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch(self.rank(), other.rank()));
        }
        let sum = |a: &[u32], b: &[u32]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        Ok(PatternMap {
            top: sum(&self.top, &other.top),
            mid: sum(&self.mid, &other.mid),
            bot: sum(&self.bot, &other.bot),
        })
    }

    /// The rows as `(D, E, F)`.
    pub fn diagrams(&self) -> (YoungDiagram, YoungDiagram, YoungDiagram) {
        let yd = |row: &[u32]| YoungDiagram::new(row.to_vec()).expect("order-preserving rows decrease");
        (yd(&self.bot), yd(&self.mid), yd(&self.top))
    }

    /// Staggered layout: row `r` (top = 0) starts `r` cells in and entries
    /// sit two cells apart.
    pub fn pretty(&self) -> String {
        let w = self
            .top
            .iter()
            .chain(&self.mid)
            .chain(&self.bot)
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        [&self.top, &self.mid, &self.bot]
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut line = " ".repeat(r * w);
                for (j, v) in row.iter().enumerate() {
                    if j > 0 {
                        line.push_str(&" ".repeat(w));
                    }
                    line.push_str(&format!("{v:>w$}"));
                }
                line.trim_end().to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// `top/mid/bot` with parenthesized rows.
impl fmt::Display for PatternMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |r: &[u32]| r.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({})/({})/({})", row(&self.top), row(&self.mid), row(&self.bot))
    }
}

/// Indicator of the first `m(k)` cells of each level `k`.
pub fn chi(c: &ColumnIndex) -> PatternMap {
    let n = c.rank();
    let [b, m, t] = c.level_counts();
    let ind = |len: usize, ones: usize| (0..len).map(|j| u32::from(j < ones)).collect();
    PatternMap { top: ind(n, t), mid: ind(n, m), bot: ind(n - 1, b) }
}

/// `Σ χ(C)` over the columns of the chain.
pub fn chain_to_pattern(m: &StandardMonomial) -> PatternMap {
    m.columns()
        .iter()
        .fold(PatternMap::zero(m.rank()).expect("valid rank"), |acc, c| {
            acc.add(&chi(c)).expect("same rank")
        })
}

/// Layer-cake decomposition: the `h`-th column has level counts
/// `(#{d_j >= h}, #{e_j >= h}, #{f_j >= h})`.
pub fn pattern_to_chain(p: &PatternMap) -> Result<StandardMonomial> {
    if !p.is_order_preserving() {
        return Err(Error::NotOrderPreserving(p.to_string()));
    }
    let n = p.rank();
    let height = p.top.first().copied().unwrap_or(0);
    let at_least = |row: &[u32], h: u32| row.iter().filter(|&&v| v >= h).count();
    let cols = (1..=height)
        .map(|h| ColumnIndex::from_level_counts([at_least(&p.bot, h), at_least(&p.mid, h), at_least(&p.top, h)], n))
        .collect::<Result<Vec<_>>>()?;
    StandardMonomial::new(n, cols)
}

/// Number of order-preserving maps with `top = F` and `bot = D`, by search
/// over the middle row against the relations of `Γ`.
pub fn count_patterns(pair: &WeightPair) -> u64 {
    let n = pair.rank();
    let top = pair.f().padded(n);
    let bot = pair.d().padded(n - 1);
    if !(1..n).all(|j| top[j - 1] >= top[j]) {
        return 0;
    }
    let relations = gamma_relations(n).expect("valid rank");
    let first_max = top[0];
    (0..=first_max)
        .into_par_iter()
        .map(|e1| {
            let mut mid = vec![0u32; n];
            mid[0] = e1;
            count_from(&top, &mut mid, &bot, 1, &relations)
        })
        .sum()
}

fn count_from(top: &[u32], mid: &mut Vec<u32>, bot: &[u32], filled: usize, relations: &[(GammaCell, GammaCell)]) -> u64 {
    let n = top.len();
    let value = |mid: &[u32], c: GammaCell| -> Option<u32> {
        match c.level - (n - 1) {
            0 => Some(bot[c.pos - 1]),
            1 if c.pos <= filled => Some(mid[c.pos - 1]),
            1 => None,
            _ => Some(top[c.pos - 1]),
        }
    };
    let consistent = relations.iter().all(|&(u, l)| match (value(mid, u), value(mid, l)) {
        (Some(a), Some(b)) => a >= b,
        _ => true,
    });
    if !consistent {
        return 0;
    }
    if filled == n {
        return 1;
    }
    let mut total = 0;
    for e in 0..=top[0] {
        mid[filled] = e;
        total += count_from(top, mid, bot, filled + 1, relations);
    }
    mid[filled] = 0;
    total
}
