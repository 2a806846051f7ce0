//! Square-tiled half-translation surfaces ("origamis"): encodings and equivalence, Veech groups
//! as stabilizers of the `PSL(2,Z)` action, compatible moduli lists and the flat geometry they
//! define, and Veech groups of unbranched coverings.
//!
//! Conventions used throughout: permutations compose as functions, `(p∘q)(i) = p(q(i))`;
//! words in `T, S` act on the right (the first letter is applied first); moduli are
//! height over width.

pub mod cover;
pub mod error;
pub mod linalg;
pub mod moduli;
pub mod origami;
pub mod perm;
pub mod render;
mod schreier;
pub mod text;
pub mod veech;
pub mod word;

pub use error::{Error, Result};
pub use origami::{Dir, Origami, Sign, Xye};
pub use perm::{Perm, SPerm};
pub use word::{GroupWord, Letter, Mat2, Mode};
