//! Local checks for combinatorial upper bound (CUB) structures on ordered
//! simplicial complexes, cube complexes and complexes of groups.

pub mod complex;
pub mod corpus;
pub mod cube;
pub mod generators;
pub mod groups;
pub mod link;
pub mod metric;
pub mod par;
pub mod poset;
pub mod rational;
pub mod selftest;
pub mod tightspan;
