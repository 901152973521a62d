//! Data ingestion, table reproduction, worked examples, exhaustive sweeps and
//! the command-line front end for [`resdeg_core`].

pub mod data;
pub mod examples;
pub mod sweep;
pub mod table;
