//! Exact-arithmetic construction of the simple Lie algebra of type E6 through
//! five explicit models, realization of its six fine gradings with infinite
//! universal grading group, and mechanical certification of the associated
//! Weyl groups.

pub mod cyclotomic;
pub mod composition;
pub mod exactlin;
pub mod gradings;
pub mod jordan;
pub mod liealg;
pub mod models;
pub mod modular;
pub mod report;
pub mod weyl;
