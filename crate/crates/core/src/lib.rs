//! Exact computations in the bialgebras of packed integer matrices, NSym and
//! QSym, with morphisms between them, polynomial realizations and counting
//! sequences.

pub mod counts;
pub mod error;
pub mod exactlin;
pub mod hopfpack;
pub mod limits;
pub mod matrices;
pub mod morphisms;
pub mod nsymqsym;
pub mod parse;
pub mod realization;
pub mod surjections;
pub mod verify;

pub use error::{Error, Result};
pub use exactlin::{LinComb, Rational};
pub use hopfpack::{CounitKind, HMatElem, HPack2, HPackElem};
pub use limits::Limits;
pub use matrices::{Composition, Matrix, PackedMatrix};
pub use morphisms::RationalPair;
pub use nsymqsym::{NSymElem, Permutation, Polynomial1, QSymElem};
pub use realization::{Grid, Monomial2};
pub use surjections::{AdmPair, Surjection};
