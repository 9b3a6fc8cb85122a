//! Monomial ideals attached to finite meet-semilattices: their free
//! resolutions, Betti numbers and regularity, and the Alexander-duality
//! constructions around them.

pub mod bits;
pub mod cli;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod linalg;
pub mod monomial;
pub mod poset;
pub mod resolution;
pub mod semilattice;
pub mod suite;

pub use error::{Error, Result};
pub use linalg::Field;
pub use monomial::{MonomialIdeal, SquarefreeMonomial, Variables};
pub use poset::{Poset, PosetCoideal, PosetIdeal};
pub use semilattice::MeetSemilattice;
