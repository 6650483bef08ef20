pub mod cli;
pub mod groves;
pub mod lattice;
pub mod laurent;
pub mod recurrence;
pub mod render;
pub mod sequences;
