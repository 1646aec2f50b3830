//! Exact-arithmetic discriminant geometry of finite reflection groups.
//!
//! This crate computes, in exact rational or cyclotomic arithmetic, the
//! standard cast of characters attached to a finite reflection group: basic
//! invariants and their Jacobian, the reflection arrangement and the
//! discriminant, matrix factorizations of the discriminant coming from
//! multiplication on the coinvariant algebra, Hilbert–Poincaré series of
//! isotypical components with their rank formulas, and McKay quivers.
//!
//! The supported families are the cyclic groups, the symmetric groups in
//! their natural and essential reflection representations, and the full
//! monomial groups G(r,1,n). The crate ships a CLI (`catoptron`) and an
//! mdbook guide under `book/`; the book's code snippets are compiled and run
//! as doc-tests.
//!
//! ```
//! use catoptron::group::{Family, ReflectionGroup};
//!
//! let g = ReflectionGroup::build(Family::SymEssential(4)).unwrap();
//! assert_eq!(g.order(), 24);
//! assert_eq!(g.degrees, vec![2, 3, 4]);
//! assert_eq!(g.m(), 6);  // six transpositions
//! assert_eq!(g.m1(), 6); // six mirrors
//! ```

pub mod book;
pub mod chars;
pub mod error;
pub mod group;
pub mod invariant;
pub mod hovinen;
pub mod isotypic;
pub mod matfact;
pub mod matrix;
pub mod mckay;
pub mod poly;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
