//! Exact combinatorics and algebra for the branching algebra of the pair
//! `(Sp_2n, Sp_{2n-2})`: the distributive lattice `L` of generators, standard
//! monomials and straightening, branching multiplicities and torus weights,
//! the degeneration to a Hibi semigroup ring, and an exact evaluation oracle
//! that checks identities on rational and symplectic matrices.

pub mod diagrams;
pub mod error;
pub mod exacteval;
pub mod hibi;
pub mod lattice;
pub mod linalg;
pub mod monomials;
pub mod rational;
pub mod straighten;
pub mod verify;

pub use diagrams::{OrderType, Relation, WeightPair, YoungDiagram};
pub use error::{Error, Result};
pub use exacteval::{ExactMatrix, TorusElement};
pub use hibi::PatternMap;
pub use lattice::{ColumnIndex, GammaCell, Kind};
pub use monomials::{Monomial, StandardMonomial, Tableau};
pub use rational::Rational;
pub use straighten::{FormalPolynomial, LatticeWeight};
