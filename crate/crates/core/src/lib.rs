//! Exact plethystic operator calculus for Macdonald polynomial theory.

pub mod gcdring;
pub mod error;
pub mod linalg;
pub mod macdonald;
pub mod ops;
pub mod negut;
pub mod partitions;
pub mod qmn;
pub mod qt;
pub mod suite;
pub mod symfunc;
pub mod textio;
pub mod zlaurent;

pub use error::{Error, Result};
pub use partitions::{partitions_of, partitions_up_to, Dominance, Partition};
pub use qt::{MPolyQT, RatQT};
pub use symfunc::{AlphabetExpr, Basis, SymFunc, ZSeriesSF, ZWindow};
