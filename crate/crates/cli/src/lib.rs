//! Command line and HTTP front ends for `monofun`.

pub mod api;
pub mod output;
pub mod service;
