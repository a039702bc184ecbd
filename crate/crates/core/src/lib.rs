//! Wire diagrams for stringent symmetric monoidal 2-categories: presentations,
//! rewriting of 1-morphisms, 2-morphism scripts, and evaluation in concrete
//! models.

pub mod cli;
pub mod diagram;
pub mod dsl;
pub mod examples;
pub mod model;
pub mod render;
pub mod signature;
pub mod twocell;
