pub mod cli;
pub mod gen;
pub mod grammar;
pub mod graph;
pub mod languages;
pub mod reach;
pub mod reductions;
