//! Character tables and the calculus of class functions.

mod class_function;
pub mod dixon;
mod linear;
mod table;

pub use class_function::ClassFunction;
pub use linear::{linear_characters, linear_characters_labelled, LinearCharacter};
pub use table::{character_table, kernel, CharacterTable, ClassExport, Orthogonality, TableExport};
