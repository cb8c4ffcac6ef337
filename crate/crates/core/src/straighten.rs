//! Formal polynomials in the generators `δ_C`, the straightening algorithm,
//! the weight filtration and the Hibi (initial-term) normal form.
//!
//! The only incomparable pairs in `L` are `(I_i, K_{i-1})`, and each has the
//! quadratic relation
//!
//! ```text
//! δ_{I_i} δ_{K_{i-1}} = δ_{J'_i} δ_{J_{i-1}} - δ_{J_i} δ_{J'_{i-1}}
//! ```
//!
//! whose right-hand side consists of chains. Rewriting one pair at a time
//! removes one `I` and one `K` factor per step, so the process terminates.
//! Keeping only the first term gives the relation of the Hibi algebra.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{check_rank, ColumnIndex, Kind};
use crate::monomials::Monomial;
use crate::rational::{parse_rational, to_fraction_string, Rational};

/// A finite rational combination of monomials; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl FormalPolynomial {
    pub fn zero(n: usize) -> Result<Self> {
        check_rank(n)?;
        Ok(FormalPolynomial { n, terms: BTreeMap::new() })
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut p = FormalPolynomial { n: m.rank(), terms: BTreeMap::new() };
        p.add_term(m, Rational::one());
        p
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        assert_eq!(m.rank(), self.n, "monomial rank differs from polynomial rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &FormalPolynomial) -> Result<FormalPolynomial> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &FormalPolynomial) -> Result<FormalPolynomial> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> FormalPolynomial {
        let mut out = FormalPolynomial { n: self.n, terms: BTreeMap::new() };
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &FormalPolynomial) -> Result<FormalPolynomial> {
        self.check_rank(other)?;
        let mut out = FormalPolynomial { n: self.n, terms: BTreeMap::new() };
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b)?, x * y);
            }
        }
        Ok(out)
    }

    fn check_rank(&self, other: &FormalPolynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// True when every monomial is a multichain.
    pub fn is_standard(&self) -> bool {
        self.terms.keys().all(Monomial::is_standard)
    }

    /// Rewrites the lowest-index incomparable pair first.
    pub fn straighten(&self) -> FormalPolynomial {
        self.straighten_by(|_, _| 0)
    }

    /// Straightening with a caller-chosen rewrite order: `pick` receives the
    /// monomial and its incomparable pairs (ascending `i`) and returns the
    /// index of the pair to rewrite.
    pub fn straighten_by<P>(&self, pick: P) -> FormalPolynomial
    where
        P: FnMut(&Monomial, &[(ColumnIndex, ColumnIndex)]) -> usize,
    {
        self.rewrite(pick, true)
    }

    /// Normal form in the Hibi algebra: `I_i K_{i-1} -> J'_i J_{i-1}`.
    pub fn hibi_normal_form(&self) -> FormalPolynomial {
        self.rewrite(|_, _| 0, false)
    }

    fn rewrite<P>(&self, mut pick: P, full: bool) -> FormalPolynomial
    where
        P: FnMut(&Monomial, &[(ColumnIndex, ColumnIndex)]) -> usize,
    {
        let n = self.n;
        let mut done = FormalPolynomial { n, terms: BTreeMap::new() };
        let mut pending = FormalPolynomial { n, terms: self.terms.clone() };
        while let Some((m, c)) = pending.terms.pop_first() {
            let pairs = incomparable_factor_pairs(&m);
            if pairs.is_empty() {
                done.add_term(m, c);
                continue;
            }
            let choice = pick(&m, &pairs).min(pairs.len() - 1);
            let (i_col, k_col) = pairs[choice];
            let i = i_col.idx();
            let col = |kind, idx| ColumnIndex::new(kind, idx, n).expect("indices from a valid pair");
            let mut rest = m.clone();
            let removed = rest.remove_pair(i_col, k_col);
            debug_assert!(removed);
            pending.add_term(rest.with([col(Kind::Jp, i), col(Kind::J, i - 1)]), c.clone());
            if full {
                pending.add_term(rest.with([col(Kind::J, i), col(Kind::Jp, i - 1)]), -c);
            }
        }
        done
    }

    /// Parses the text form, e.g. `1*[I1,K0] - 2*[J1,J'0]` or `1/2*[J0]`.
    /// A bare coefficient multiplies the empty monomial.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut out = FormalPolynomial::zero(n)?;
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pos = 0;
        let mut first = true;
        while pos < src.len() {
            let mut sign = Rational::one();
            match src[pos] {
                '+' => pos += 1,
                '-' => {
                    sign = -sign;
                    pos += 1;
                }
                _ if first => {}
                other => return Err(Error::Parse(format!("expected '+' or '-' at {other:?}"))),
            }
            first = false;
            let start = pos;
            while pos < src.len() && (src[pos].is_ascii_digit() || src[pos] == '/') {
                pos += 1;
            }
            let coeff = if pos > start {
                let text: String = src[start..pos].iter().collect();
                parse_rational(&text)?
            } else {
                Rational::one()
            };
            let has_coeff = pos > start;
            if pos < src.len() && src[pos] == '*' {
                pos += 1;
            }
            let mono = if pos < src.len() && src[pos] == '[' {
                let close = src[pos..]
                    .iter()
                    .position(|&c| c == ']')
                    .ok_or_else(|| Error::Parse("unclosed '['".into()))?;
                let text: String = src[pos..=pos + close].iter().collect();
                pos += close + 1;
                Monomial::parse(&text, n)?
            } else if has_coeff {
                Monomial::one(n)?
            } else {
                return Err(Error::Parse(format!("expected a term at offset {pos}")));
            };
            out.add_term(mono, sign * coeff);
        }
        Ok(out)
    }

    /// Terms ordered by lattice weight (base `2n + 1`), then canonically.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let base = default_weight_base(self.n);
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (lattice_weight(m, base).expect("default base is legal"), m, c))
            .collect();
        terms.sort_by(|a, b| (&a.0, a.1).cmp(&(&b.0, b.1)));
        terms.into_iter().map(|(_, m, c)| (m, c)).collect()
    }

    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.sorted_terms()
            .into_iter()
            .map(|(m, c)| JsonTerm { coeff: to_fraction_string(c), monomial: m.tokens() })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm], n: usize) -> Result<Self> {
        let mut out = FormalPolynomial::zero(n)?;
        for t in terms {
            let cols = t
                .monomial
                .iter()
                .map(|tok| ColumnIndex::parse(tok, n))
                .collect::<Result<Vec<_>>>()?;
            out.add_term(Monomial::new(n, cols)?, parse_rational(&t.coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for FormalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (x, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            match (x, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// JSON form of one term: `{"coeff": "num/den", "monomial": [tokens]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub monomial: Vec<String>,
}

impl Serialize for FormalPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(serializer)
    }
}

/// The pairs `(I_i, K_{i-1})` that both occur in `m`, by ascending `i`.
pub fn incomparable_factor_pairs(m: &Monomial) -> Vec<(ColumnIndex, ColumnIndex)> {
    let cols = m.columns();
    let has = |kind, idx| cols.iter().any(|c: &ColumnIndex| c.kind() == kind && c.idx() == idx);
    (1..m.rank())
        .filter(|&i| has(Kind::I, i) && has(Kind::K, i - 1))
        .map(|i| {
            (
                ColumnIndex::i(i, m.rank()).expect("valid"),
                ColumnIndex::k(i - 1, m.rank()).expect("valid"),
            )
        })
        .collect()
}

/// Number of incomparable factor pairs counted with multiplicity.
pub fn incomparable_pair_count(m: &Monomial) -> usize {
    let count = |kind, idx| m.columns().iter().filter(|c| c.kind() == kind && c.idx() == idx).count();
    (1..m.rank()).map(|i| count(Kind::I, i) * count(Kind::K, i - 1)).sum()
}

/// `wt(C) = Σ_r c_r N^{n-r}`, summed over the factors of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeWeight(pub BigUint);

impl fmt::Display for LatticeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for LatticeWeight {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

pub fn default_weight_base(n: usize) -> u64 {
    2 * n as u64 + 1
}

pub fn column_weight(c: &ColumnIndex, base: u64) -> Result<LatticeWeight> {
    let n = c.rank();
    if base <= 2 * n as u64 {
        return Err(Error::WeightBaseTooSmall { base, twice_n: 2 * n });
    }
    let base = BigUint::from(base);
    let total = c
        .column_set()
        .iter()
        .enumerate()
        .map(|(r, &entry)| BigUint::from(entry) * base.pow((n - r - 1) as u32))
        .sum();
    Ok(LatticeWeight(total))
}

pub fn lattice_weight(m: &Monomial, base: u64) -> Result<LatticeWeight> {
    if base <= 2 * m.rank() as u64 {
        return Err(Error::WeightBaseTooSmall { base, twice_n: 2 * m.rank() });
    }
    let mut total = BigUint::zero();
    for c in m.columns() {
        total += column_weight(c, base)?.0;
    }
    Ok(LatticeWeight(total))
}
