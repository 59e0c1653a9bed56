pub mod cli;
pub mod identities;
pub mod ring;
pub mod sequences;
