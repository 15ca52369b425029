//! Finite bounded posets carrying a unary complement map, the set-valued
//! operators it induces,
//!
//! ```text
//! x ⊙ y = Min U(x, y') ∧ y        x → y = x' ∨ Max L(x, y)
//! ```
//!
//! and exhaustive verification of the laws relating them to the order.
//!
//! * [`poset`]: orders from cover relations, partial meets and joins,
//!   set-valued bounds, the non-empty element set type.
//! * [`ortho`]: the individual structural conditions and classification
//!   into the orthomodular and weakly/dually weakly orthomodular families.
//! * [`residuation`]: the two operators, their tables, the existential set
//!   order, and lifts to set arguments.
//! * [`laws`]: law sweeps with first-counterexample reporting.
//! * [`sum`]: horizontal sums glued at shared bounds.
//! * [`corpus`]: named example structures with known classifications.
//! * [`format`]: the text file format for structures.

pub mod corpus;
pub mod format;
pub mod laws;
pub mod ortho;
pub mod poset;
pub mod residuation;
pub mod sum;

pub use laws::{run_suite, LawId, LawReport, LawStatus, Suite};
pub use ortho::{classify, ClassReport, Verdict};
pub use poset::{
    BuildError, Complementation, ComplementError, ESet, Lifted, Poset, UndefinedAt,
};
pub use residuation::{arrow, build_table, odot, sqsubseteq, OpKind, OpTable};
pub use sum::{horizontal_sum, HorizontalSum, Summand};
