//! Computation with premaniplexes: edge-colored flag graphs generalizing the
//! flag structure of abstract polytopes and maps.
//!
//! The core type is [`Premaniplex`], a connected graph on flags whose edge
//! colors are involutions with commuting distant colors. On top of it the
//! crate provides automorphism groups and symmetry type graphs
//! ([`symmetry`]), coverings and the mix ([`mixing`]), polytopality tests and
//! variance/chirality groups ([`polytopality`]), ready-made families
//! ([`catalog`]), and a JSON document format plus DOT export ([`document`],
//! [`dot`]).

pub mod catalog;
pub mod colors;
pub mod document;
pub mod dot;
pub mod error;
pub mod mixing;
pub mod partition;
pub mod polytopality;
pub mod premaniplex;
pub mod symmetry;

pub use colors::ColorSet;
pub use error::{Error, Result};
pub use premaniplex::{Face, Flag, Premaniplex, Rooted};
