//! Library surface of the batch front end: the diagram file grammar, the
//! runner and the renderers. The `abchase` binary is a thin wrapper over
//! these.

pub mod emit;
pub mod model;
pub mod parse;
pub mod render;
pub mod run;
