//! Combinatorics of cyclically fully commutative (CFC) elements in the
//! Coxeter groups `W(A_n)`.
//!
//! The crate covers word rewriting ([`word`]), the bridge to the symmetric
//! group ([`perm`]), FC/CFC classification ([`classify`]), heaps of pieces
//! ([`heap`]), rings and the conjugacy decision with explicit conjugators
//! ([`ring`]), the cycle-structure conjecture checker ([`conjecture`]) and
//! the class tables behind the `cfc` binary ([`table`]).

pub mod classify;
pub mod conjecture;
pub mod error;
pub mod heap;
pub mod limits;
pub mod perm;
pub mod ring;
pub mod table;
pub mod word;

pub use classify::{is_cfc, is_cyclically_reduced, is_fc, CfcMethod, CfcVerdict, FcMethod, FcVerdict};
pub use error::{CfcError, Result};
pub use heap::{build_heap, Heap};
pub use limits::Limits;
pub use perm::{Cycle, Permutation};
pub use ring::{conjugacy_witness, is_conjugate_cfc, ConjugacyCertificate, Ring};
pub use word::{commutation_classes, m_value, reduced_expressions, ElementId, Generator, Rank, Word};
