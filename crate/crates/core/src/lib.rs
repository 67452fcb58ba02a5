//! Combinatorial game engine for wildflowers: ordinal sums `G:H` of an
//! impartial base and a partizan top, studied in normal and misère play.

pub mod arena;
pub mod dyadic;
pub mod engine;
pub mod error;
pub mod misere;
pub mod normal;
pub mod notation;
pub mod outcome;
pub mod position;
pub mod sat;
pub mod sweeps;
pub mod taxonomy;
pub mod twin;

pub use arena::{Form, FormId};
pub use dyadic::Dyadic;
pub use engine::{Atom, Engine};
pub use error::{Error, Result};
pub use misere::{Genus, TamenessClass};
pub use outcome::OutcomeClass;
pub use position::Position;
pub use taxonomy::{Color, MutantFlower, Tri, Wildflower};
pub use twin::{FamilyRule, TwinReport};
