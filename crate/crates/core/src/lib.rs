pub mod algebra;
pub mod almost_split;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod finalg;
pub mod homalg;
pub mod linalg;
pub mod nakayama;
pub mod quiver;
pub mod rep;
pub mod workspace;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
