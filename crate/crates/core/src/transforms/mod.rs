//! Graph surgeries that strictly increase the Harary index while keeping
//! the order and the number of cut vertices. Each builder validates its
//! hypotheses and returns the `(before, after)` pair.

mod per1;
mod per2;
pub mod random;
mod shift;

pub use per1::{build_per1, Per1Instance};
pub use per2::{build_per2, Attachment, Per2Instance};
pub use shift::{attach_two_paths, balance_sequence, path_shift};
