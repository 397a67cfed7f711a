//! Quasi-hereditary algebra toolkit: exact linear algebra, finite-dimensional
//! algebras from quivers with relations, module categories, homological
//! dimensions, highest weight theory, tilting modules, Ringel duals and
//! partition combinatorics for Schur algebra blocks.

pub mod exactlin;
pub mod algebra;
pub mod quiver;
pub mod modcat;
pub mod homodim;
pub mod highest_weight;
pub mod tilting;
pub mod schur;
