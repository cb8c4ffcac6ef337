//! Exact evaluation of the generators `δ_C` as top-justified minors, exact
//! sampling of symplectic, unipotent and torus elements, and the identity
//! checks built on them.
//!
//! Rows and columns are 1-based in the math and 0-based in storage. The
//! symplectic form is `Ω = [[0, Q], [-Q, 0]]` with `Q` the `n × n`
//! antidiagonal, so `Ω(a, ā) = ε_a` where `ā = 2n + 1 - a` and `ε_a = +1` for
//! `a <= n`, `-1` otherwise.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::diagrams::WeightPair;
use crate::error::{Error, Result};
use crate::lattice::{check_rank, ColumnIndex, Kind};
use crate::linalg;
use crate::monomials::{Monomial, StandardMonomial};
use crate::rational::{from_i64, parse_rational, pow, to_fraction_string, Rational};
use crate::straighten::FormalPolynomial;

/// Dense square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        ExactMatrix { dim, entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Self::from_fn(dim, |_, _| Rational::zero())
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        Self::from_fn(diag.len(), |r, c| if r == c { diag[r].clone() } else { Rational::zero() })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Parse("matrix is not square".into()));
        }
        Ok(ExactMatrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.dim).map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let d = self.dim;
        let mut out = Self::zeros(d);
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * d + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.rows())
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim;
        let mut a = self.rows();
        let mut inv = Self::identity(d).rows();
        for col in 0..d {
            let p = (col..d).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].recip();
            for j in 0..d {
                a[col][j] *= &pivot;
                inv[col][j] *= &pivot;
            }
            for r in 0..d {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for j in 0..d {
                    let x = &a[col][j] * &factor;
                    a[r][j] -= x;
                    let y = &inv[col][j] * &factor;
                    inv[r][j] -= y;
                }
            }
        }
        Some(ExactMatrix { dim: d, entries: inv.into_iter().flatten().collect() })
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        (0..self.dim).all(|r| {
            (0..self.dim).all(|c| match r.cmp(&c) {
                std::cmp::Ordering::Equal => self.get(r, c).is_one(),
                std::cmp::Ordering::Less => self.get(r, c).is_zero(),
                std::cmp::Ordering::Greater => true,
            })
        })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.transpose().is_lower_unitriangular()
    }

    /// Rows of `"num/den"` strings.
    pub fn to_json_rows(&self) -> Vec<Vec<String>> {
        self.rows().iter().map(|r| r.iter().map(to_fraction_string).collect()).collect()
    }

    pub fn from_json_rows(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

impl Serialize for ExactMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(deserializer)?;
        ExactMatrix::from_json_rows(&rows).map_err(serde::de::Error::custom)
    }
}

fn bar(a: usize, n: usize) -> usize {
    2 * n + 1 - a
}

fn eps(a: usize, n: usize) -> i64 {
    if a <= n { 1 } else { -1 }
}

/// `[[0, Q_n], [-Q_n, 0]]`.
pub fn symplectic_form(n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(2 * n, |r, c| {
        let (a, b) = (r + 1, c + 1);
        if b == bar(a, n) { from_i64(eps(a, n)) } else { Rational::zero() }
    })
}

/// `Xᵀ Ω X = Ω`, exactly.
pub fn is_symplectic(x: &ExactMatrix) -> bool {
    if !x.dim().is_multiple_of(2) || x.dim() < 2 {
        return false;
    }
    let omega = symplectic_form(x.dim() / 2);
    x.transpose().mul(&omega).mul(x) == omega
}

/// The top-justified minor on rows `1..=|C|` and columns `C`.
pub fn delta(c: &ColumnIndex, x: &ExactMatrix) -> Rational {
    assert_eq!(x.dim(), 2 * c.rank(), "matrix size must be 2n");
    let cols = c.column_set();
    let rows: Vec<Vec<Rational>> = (0..cols.len())
        .map(|r| cols.iter().map(|&col| x.get(r, col - 1).clone()).collect())
        .collect();
    linalg::determinant(&rows)
}

pub fn eval_monomial(m: &Monomial, x: &ExactMatrix) -> Rational {
    let mut cache: HashMap<ColumnIndex, Rational> = HashMap::new();
    let mut out = Rational::one();
    for c in m.columns() {
        let v = cache.entry(*c).or_insert_with(|| delta(c, x));
        out *= &*v;
    }
    out
}

pub fn eval_poly(p: &FormalPolynomial, x: &ExactMatrix) -> Rational {
    let mut cache: HashMap<ColumnIndex, Rational> = HashMap::new();
    let mut total = Rational::zero();
    for (m, coeff) in p.terms() {
        let mut term = coeff.clone();
        for c in m.columns() {
            let v = cache.entry(*c).or_insert_with(|| delta(c, x));
            term *= &*v;
        }
        total += term;
    }
    total
}

/// `(t, s)` in `T_n × T_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusElement {
    pub t: Vec<Rational>,
    pub s: Vec<Rational>,
}

impl TorusElement {
    pub fn new(t: Vec<Rational>, s: Vec<Rational>) -> Result<Self> {
        check_rank(t.len())?;
        if s.len() + 1 != t.len() {
            return Err(Error::RankMismatch(t.len(), s.len() + 1));
        }
        if t.iter().chain(&s).any(Zero::is_zero) {
            return Err(Error::Parse("torus entries must be nonzero".into()));
        }
        Ok(TorusElement { t, s })
    }

    pub fn random(n: usize, rng: &mut impl Rng) -> Self {
        let mut draw = || loop {
            let v = rng.gen_range(-4i64..=4);
            if v != 0 {
                return Rational::new(v.into(), rng.gen_range(1i64..=3).into());
            }
        };
        let t = (0..n).map(|_| draw()).collect();
        let s = (0..n - 1).map(|_| draw()).collect();
        TorusElement { t, s }
    }

    pub fn rank(&self) -> usize {
        self.t.len()
    }

    /// `diag(t_1..t_n, t_n^{-1}..t_1^{-1})`.
    pub fn left_matrix(&self) -> ExactMatrix {
        let mut diag = self.t.clone();
        diag.extend(self.t.iter().rev().map(Rational::recip));
        ExactMatrix::diagonal(&diag)
    }

    /// `diag(s_1..s_{n-1}, 1, 1, s_{n-1}^{-1}..s_1^{-1})`.
    pub fn right_matrix(&self) -> ExactMatrix {
        let mut diag = self.s.clone();
        diag.extend([Rational::one(), Rational::one()]);
        diag.extend(self.s.iter().rev().map(Rational::recip));
        ExactMatrix::diagonal(&diag)
    }

    /// `t^{-F} s^{D}` for the shape `F/D`.
    pub fn character(&self, shape: &WeightPair) -> Rational {
        let n = self.rank();
        let mut out = Rational::one();
        for i in 1..=n {
            out *= pow(&self.t[i - 1], -(shape.f().part(i) as i64));
        }
        for k in 1..n {
            out *= pow(&self.s[k - 1], shape.d().part(k) as i64);
        }
        out
    }
}

/// A factor of a sampled symplectic element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymplecticFactor {
    /// `diag(t, t^{-1})` with the given integer entries.
    Torus(Vec<i64>),
    /// `exp(param · X_{a,b}) = I + param · X_{a,b}` for a root vector, 1-based.
    Root { a: usize, b: usize, param: i64 },
}

/// The root vector `E_{a,b} - ε_a ε_b E_{b̄,ā}` (or `E_{a,ā}` when `b = ā`)
/// of the symplectic Lie algebra; it squares to zero.
pub fn root_vector(n: usize, a: usize, b: usize) -> ExactMatrix {
    assert!(a != b && (1..=2 * n).contains(&a) && (1..=2 * n).contains(&b));
    let mut m = ExactMatrix::zeros(2 * n);
    m.set(a - 1, b - 1, Rational::one());
    if b != bar(a, n) {
        m.set(bar(b, n) - 1, bar(a, n) - 1, from_i64(-eps(a, n) * eps(b, n)));
    }
    m
}

impl SymplecticFactor {
    pub fn matrix(&self, n: usize) -> ExactMatrix {
        match self {
            SymplecticFactor::Torus(t) => {
                let t: Vec<Rational> = t.iter().map(|&v| from_i64(v)).collect();
                let mut diag = t.clone();
                diag.extend(t.iter().rev().map(Rational::recip));
                ExactMatrix::diagonal(&diag)
            }
            SymplecticFactor::Root { a, b, param } => {
                let mut m = root_vector(n, *a, *b);
                let p = from_i64(*param);
                for v in m.entries.iter_mut() {
                    *v *= &p;
                }
                for d in 0..2 * n {
                    m.entries[d * 2 * n + d] += Rational::one();
                }
                m
            }
        }
    }
}

pub fn compose(n: usize, factors: &[SymplecticFactor]) -> ExactMatrix {
    factors.iter().fold(ExactMatrix::identity(2 * n), |acc, f| acc.mul(&f.matrix(n)))
}

/// SplitMix64 step: derives independent per-trial seeds from a base seed.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

const NONZERO_PARAMS: [i64; 6] = [-3, -2, -1, 1, 2, 3];

/// The factor sequence behind [`random_symplectic`]. Parameters avoid zero,
/// which would only contribute an identity factor.
pub fn random_symplectic_factors(n: usize, seed: u64) -> Vec<SymplecticFactor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = rng.gen_range(3 * n..=5 * n);
    (0..count)
        .map(|_| {
            if rng.gen_bool(0.2) {
                SymplecticFactor::Torus(
                    (0..n)
                        .map(|_| *NONZERO_PARAMS.choose(&mut rng).expect("nonempty"))
                        .collect(),
                )
            } else {
                let a = rng.gen_range(1..=2 * n);
                let b = loop {
                    let b = rng.gen_range(1..=2 * n);
                    if b != a {
                        break b;
                    }
                };
                SymplecticFactor::Root { a, b, param: *NONZERO_PARAMS.choose(&mut rng).expect("nonempty") }
            }
        })
        .collect()
}

/// A seeded exact element of `Sp(C^{2n}, Q_n)`.
pub fn random_symplectic(n: usize, seed: u64) -> Result<ExactMatrix> {
    check_rank(n)?;
    Ok(compose(n, &random_symplectic_factors(n, seed)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnipotentKind {
    /// `U_n^-`: lower unitriangular elements of `G_n`.
    LowerFull,
    /// Upper unitriangular elements of `G_{n-1}`, embedded so that `e_n`
    /// and `e_{n̄}` are fixed.
    UpperEmbedded,
}

/// Product of root exponentials over every root of the requested subgroup,
/// in a shuffled order with parameters in `[-3, 3]`.
pub fn random_unipotent(n: usize, which: UnipotentKind, seed: u64) -> Result<ExactMatrix> {
    check_rank(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut roots: Vec<(usize, usize)> = Vec::new();
    for a in 1..=2 * n {
        for b in 1..=2 * n {
            let keep = match which {
                UnipotentKind::LowerFull => a > b,
                UnipotentKind::UpperEmbedded => {
                    a < b && ![n, n + 1].contains(&a) && ![n, n + 1].contains(&b)
                }
            };
            // (a, b) and (b̄, ā) give the same root.
            if keep && (a, b) <= (bar(b, n), bar(a, n)) {
                roots.push((a, b));
            }
        }
    }
    roots.shuffle(&mut rng);
    let factors: Vec<SymplecticFactor> = roots
        .into_iter()
        .map(|(a, b)| SymplecticFactor::Root { a, b, param: rng.gen_range(-3..=3) })
        .collect();
    Ok(compose(n, &factors))
}

/// Entries `p/q` with `p ∈ [-9, 9]`, `q ∈ [1, 4]`.
pub fn random_rational_matrix(dim: usize, seed: u64) -> ExactMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    ExactMatrix::from_fn(dim, |_, _| Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into()))
}

/// `δ_{I_i} δ_{K_{i-1}} - δ_{J'_i} δ_{J_{i-1}} + δ_{J_i} δ_{J'_{i-1}} = 0` for every `i`.
pub fn verify_straightening_identity(x: &ExactMatrix) -> bool {
    let n = x.dim() / 2;
    (1..n).all(|i| {
        let c = |kind, idx| ColumnIndex::new(kind, idx, n).expect("valid index");
        let d = |kind, idx| delta(&c(kind, idx), x);
        let lhs = d(Kind::I, i) * d(Kind::K, i - 1);
        let rhs = d(Kind::Jp, i) * d(Kind::J, i - 1) - d(Kind::J, i) * d(Kind::Jp, i - 1);
        lhs == rhs
    })
}

/// `δ_Δ(u_1^{-1} X u_2) = δ_Δ(X)` for seeded `u_1 ∈ U_n^-`, `u_2 ∈ U_{n-1}`
/// and symplectic `X`.
pub fn verify_invariance(m: &StandardMonomial, seed: u64) -> bool {
    let n = m.rank();
    let x = random_symplectic(n, derive_seed(seed, 0)).expect("rank checked by monomial");
    let u1 = random_unipotent(n, UnipotentKind::LowerFull, derive_seed(seed, 1)).expect("valid rank");
    let u2 = random_unipotent(n, UnipotentKind::UpperEmbedded, derive_seed(seed, 2)).expect("valid rank");
    let u1_inv = u1.inverse().expect("unipotent elements are invertible");
    let moved = u1_inv.mul(&x).mul(&u2);
    eval_monomial(m.monomial(), &moved) == eval_monomial(m.monomial(), &x)
}

/// `δ_Δ(t^{-1} X s) = t^{-F} s^{D} δ_Δ(X)`.
pub fn verify_torus_weight(m: &StandardMonomial, torus: &TorusElement, x: &ExactMatrix) -> bool {
    let left = torus.left_matrix().inverse().expect("torus elements are invertible");
    let moved = left.mul(x).mul(&torus.right_matrix());
    eval_monomial(m.monomial(), &moved) == torus.character(&m.shape()) * eval_monomial(m.monomial(), x)
}

/// Result of an exact rank certification for one graded component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependenceOutcome {
    pub multiplicity: u64,
    pub rank: usize,
    pub batches: usize,
    pub certified: bool,
    /// Seed of the last batch tried.
    pub last_seed: u64,
}

/// Evaluates the standard monomials of shape `F/D` at `2 * multiplicity + 2`
/// symplectic points per batch and certifies full column rank. Gives up
/// after `trials` batches and reports the best rank seen.
///
/// Short products of root elements are often degenerate, so a batch of
/// barely more points than functions misses full rank far more often than
/// one of twice as many.
pub fn verify_independence(pair: &WeightPair, trials: usize, seed: u64) -> IndependenceOutcome {
    let basis = StandardMonomial::enumerate(pair);
    let multiplicity = basis.len() as u64;
    let mut best = 0;
    let mut last_seed = seed;
    for batch in 0..trials.max(1) {
        let batch_seed = derive_seed(seed, batch as u64);
        last_seed = batch_seed;
        let rows: Vec<Vec<Rational>> = (0..2 * basis.len() + 2)
            .map(|p| {
                let x = random_symplectic(pair.rank(), derive_seed(batch_seed, p as u64)).expect("valid rank");
                basis.iter().map(|m| eval_monomial(m.monomial(), &x)).collect()
            })
            .collect();
        let r = linalg::rank(&rows);
        best = best.max(r);
        if r == basis.len() {
            return IndependenceOutcome { multiplicity, rank: r, batches: batch + 1, certified: true, last_seed };
        }
    }
    IndependenceOutcome { multiplicity, rank: best, batches: trials.max(1), certified: false, last_seed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::YoungDiagram;
    use crate::lattice::elements;
    use crate::rational::ratio;

    fn yd(parts: &[u32]) -> YoungDiagram {
        YoungDiagram::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn delta_examples() {
        for n in 2..=4 {
            let id = ExactMatrix::identity(2 * n);
            for r in 1..n {
                assert_eq!(delta(&ColumnIndex::i(r, n).unwrap(), &id), Rational::one());
            }
            assert_eq!(delta(&ColumnIndex::j(0, n).unwrap(), &id), Rational::zero());
        }
        let n = 3;
        let x = random_rational_matrix(2 * n, 7);
        let k0 = delta(&ColumnIndex::k(0, n).unwrap(), &x);
        let expected = x.get(0, n - 1) * x.get(1, n) - x.get(0, n) * x.get(1, n - 1);
        assert_eq!(k0, expected);
    }

    #[test]
    fn eval_examples() {
        let n = 4;
        let x = random_rational_matrix(2 * n, 3);
        assert_eq!(eval_monomial(&Monomial::one(n).unwrap(), &x), Rational::one());
        let chain = Monomial::parse("[J3,K2,J'2,J1,J'0]", n).unwrap();
        assert_eq!(eval_monomial(&chain, &ExactMatrix::identity(2 * n)), Rational::zero());
        let p = FormalPolynomial::parse("2*[I1] - 1/3*[J0,K1]", n).unwrap();
        let q = FormalPolynomial::parse("[J'0]", n).unwrap();
        let lhs = eval_poly(&p.add(&q).unwrap(), &x);
        assert_eq!(lhs, eval_poly(&p, &x) + eval_poly(&q, &x));
    }

    #[test]
    fn form_and_symplectic_checks() {
        let n = 3;
        let omega = symplectic_form(n);
        assert_eq!(omega.transpose(), omega.mul(&ExactMatrix::diagonal(&vec![from_i64(-1); 2 * n])));
        assert!(is_symplectic(&ExactMatrix::identity(2 * n)));
        let mut bad = vec![Rational::one(); 2 * n];
        bad[0] = from_i64(2);
        assert!(!is_symplectic(&ExactMatrix::diagonal(&bad)));
    }

    #[test]
    fn root_vectors_lie_in_the_symplectic_algebra() {
        for n in 2..=4 {
            let omega = symplectic_form(n);
            for a in 1..=2 * n {
                for b in 1..=2 * n {
                    if a == b {
                        continue;
                    }
                    let x = root_vector(n, a, b);
                    let lhs = x.transpose().mul(&omega);
                    let rhs = omega.mul(&x);
                    let sum = ExactMatrix::from_fn(2 * n, |r, c| lhs.get(r, c) + rhs.get(r, c));
                    assert_eq!(sum, ExactMatrix::zeros(2 * n));
                    assert_eq!(x.mul(&x), ExactMatrix::zeros(2 * n));
                }
            }
        }
    }

    #[test]
    fn random_symplectic_contract() {
        for seed in 0..100 {
            let n = 2 + (seed as usize % 3);
            let x = random_symplectic(n, seed).unwrap();
            assert!(is_symplectic(&x), "seed {seed}");
            assert_eq!(x.determinant(), Rational::one());
        }
        assert_eq!(random_symplectic(3, 11).unwrap(), random_symplectic(3, 11).unwrap());
        assert_eq!(compose(2, &[]), ExactMatrix::identity(4));
        assert_eq!(compose(2, &[SymplecticFactor::Root { a: 1, b: 3, param: 0 }]), ExactMatrix::identity(4));
    }

    #[test]
    fn unipotent_contract() {
        for n in 2..=4 {
            for seed in 0..5 {
                let lower = random_unipotent(n, UnipotentKind::LowerFull, seed).unwrap();
                assert!(lower.is_lower_unitriangular());
                assert!(is_symplectic(&lower));
                let upper = random_unipotent(n, UnipotentKind::UpperEmbedded, seed).unwrap();
                assert!(upper.is_upper_unitriangular());
                assert!(is_symplectic(&upper));
                for fixed in [n - 1, n] {
                    for k in 0..2 * n {
                        let expect = if k == fixed { Rational::one() } else { Rational::zero() };
                        assert_eq!(upper.get(k, fixed), &expect);
                        assert_eq!(upper.get(fixed, k), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let x = random_symplectic(3, 5).unwrap();
        assert_eq!(x.mul(&x.inverse().unwrap()), ExactMatrix::identity(6));
        assert!(ExactMatrix::zeros(2).inverse().is_none());
    }

    #[test]
    fn straightening_identity_on_general_matrices() {
        for n in 2..=5 {
            assert!(verify_straightening_identity(&ExactMatrix::identity(2 * n)));
            for seed in 0..20 {
                assert!(verify_straightening_identity(&random_rational_matrix(2 * n, seed)));
            }
        }
    }

    #[test]
    fn straightening_identity_detects_a_wrong_sign() {
        // Flip the sign of the second term and the identity must fail.
        let n = 3;
        let x = random_rational_matrix(2 * n, 1);
        let c = |kind, idx| delta(&ColumnIndex::new(kind, idx, n).unwrap(), &x);
        let wrong = c(Kind::Jp, 1) * c(Kind::J, 0) + c(Kind::J, 1) * c(Kind::Jp, 0);
        assert_ne!(c(Kind::I, 1) * c(Kind::K, 0), wrong);
    }

    #[test]
    fn generators_are_invariant() {
        let n = 3;
        for c in elements(n).unwrap() {
            let m = StandardMonomial::new(n, vec![c]).unwrap();
            for seed in 0..10 {
                assert!(verify_invariance(&m, seed), "{c} seed {seed}");
            }
        }
        let chain = StandardMonomial::new(4, Monomial::parse("[J3,K2,J'2,J1,J'0]", 4).unwrap().columns().to_vec())
            .unwrap();
        assert!(verify_invariance(&chain, 42));
    }

    #[test]
    fn non_invariant_function_is_caught() {
        // δ_{{2}} is not a lattice generator and is not U_n^- invariant.
        let n = 2;
        let x = compose(n, &[SymplecticFactor::Root { a: 1, b: 2, param: 1 }]);
        let u1 = compose(n, &[SymplecticFactor::Root { a: 2, b: 1, param: 2 }]);
        assert!(u1.is_lower_unitriangular());
        let moved = u1.inverse().unwrap().mul(&x);
        assert_ne!(moved.get(1, 1), x.get(1, 1));
    }

    #[test]
    fn torus_weights() {
        let n = 2;
        let i1 = StandardMonomial::new(n, vec![ColumnIndex::i(1, n).unwrap()]).unwrap();
        let torus = TorusElement::new(vec![ratio(3, 2), from_i64(5)], vec![from_i64(7)]).unwrap();
        // shape F/D = (1)/(1): t_1^{-1} s_1
        assert_eq!(torus.character(&i1.shape()), ratio(2, 3) * from_i64(7));
        let x = random_symplectic(n, 1).unwrap();
        assert!(verify_torus_weight(&i1, &torus, &x));

        let chain = StandardMonomial::new(4, Monomial::parse("[J3,K2,J'2,J1,J'0]", 4).unwrap().columns().to_vec())
            .unwrap();
        assert_eq!(chain.shape(), WeightPair::new(yd(&[4, 3, 1]), yd(&[5, 4, 3, 2]), 4).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for seed in 0..5 {
            let t = TorusElement::random(4, &mut rng);
            let x = random_symplectic(4, seed).unwrap();
            assert!(verify_torus_weight(&chain, &t, &x));
        }
    }

    #[test]
    fn general_diagonal_weights_of_generators() {
        // (t, s)·δ_C = (t_1 .. t_r)^{-1} (s_{c_1} .. s_{c_r}) δ_C for arbitrary diagonals.
        let n = 3;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for seed in 0..10 {
            let x = random_rational_matrix(2 * n, seed);
            let t: Vec<Rational> = (0..2 * n).map(|_| from_i64(rng.gen_range(1..=5))).collect();
            let s: Vec<Rational> = (0..2 * n).map(|_| ratio(rng.gen_range(1..=5), rng.gen_range(1..=3))).collect();
            let moved = ExactMatrix::diagonal(&t).inverse().unwrap().mul(&x).mul(&ExactMatrix::diagonal(&s));
            for c in elements(n).unwrap() {
                let cols = c.column_set();
                let mut factor = Rational::one();
                for (r, &col) in cols.iter().enumerate() {
                    factor *= t[r].recip() * &s[col - 1];
                }
                assert_eq!(delta(&c, &moved), factor * delta(&c, &x));
            }
        }
    }

    #[test]
    fn independence_examples() {
        let p = WeightPair::new(yd(&[1]), yd(&[1, 1]), 2).unwrap();
        let out = verify_independence(&p, 3, 1);
        assert!(out.certified);
        assert_eq!((out.multiplicity, out.rank), (2, 2));
        let big = WeightPair::new(yd(&[4, 3, 1]), yd(&[5, 4, 3, 2]), 4).unwrap();
        let out = verify_independence(&big, 3, 2);
        assert_eq!((out.rank, out.certified), (16, true));
        let trivial = WeightPair::new(YoungDiagram::empty(), YoungDiagram::empty(), 2).unwrap();
        let out = verify_independence(&trivial, 1, 1);
        assert_eq!((out.rank, out.certified), (1, true));
    }

    #[test]
    fn matrix_json() {
        let m = ExactMatrix::from_rows(vec![vec![ratio(1, 2), from_i64(-3)], vec![from_i64(0), from_i64(1)]]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[["1/2","-3/1"],["0/1","1/1"]]"#);
        assert_eq!(serde_json::from_str::<ExactMatrix>(&s).unwrap(), m);
    }
}
