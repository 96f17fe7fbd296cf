pub mod field;
pub mod combinatorics;
pub mod geometry;
pub mod moduli;
pub mod corpus;
pub mod witness;
pub mod render;
