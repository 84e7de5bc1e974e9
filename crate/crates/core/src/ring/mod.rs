//! The graded polynomial ring R = F_p[x0,...,x4] with the graded
//! reverse-lexicographic order, and a deterministic seeded generator for
//! "general" choices.

pub mod field;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod rng;
