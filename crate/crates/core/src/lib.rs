//! Exact construction and verification of group quotients of finite
//! dg-categories: skew group dg-categories, skew group algebras, equivariant
//! modules and orbit categories, over the rationals or a prime field.

#![allow(clippy::needless_range_loop)]

pub mod corpus;
pub mod dgcat;
pub mod equivmod;
pub mod error;
pub mod exactlin;
pub mod field;
pub mod graded;
pub mod groupact;
pub mod json;
pub mod orbit;
pub mod report;
pub mod skew;

pub use dgcat::{Algebra, BasisIndex, DgCategory, DgFunctor, HomBasis};
pub use equivmod::{EquivariantModule, RightModule};
pub use error::{Error, Result};
pub use exactlin::Matrix;
pub use field::{Field, FieldSpec, Fp, Rational, F2, F3, F5};
pub use graded::{ChainComplex, GradedDims, GradedMap};
pub use groupact::{FiniteMonoid, Orbits, StrictAction};
pub use orbit::{BoundedComplex, OrbitMorphism};
pub use report::{Report, Violation};
pub use skew::{Freeified, Reduced, SkewResult};

/// Matrices over the rationals.
pub type RationalMatrix = Matrix<Rational>;
pub type RationalCategory = DgCategory<Rational>;
pub type RationalAction = StrictAction<Rational>;
pub type RationalModule = RightModule<Rational>;
pub type RationalComplex = BoundedComplex<Rational>;
