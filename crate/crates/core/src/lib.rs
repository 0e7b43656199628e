#![no_std]
// Errors and decisions carry exact rationals by value.
#![allow(clippy::result_large_err, clippy::large_enum_variant)]

extern crate alloc;

pub mod bipartite;
pub mod chebyshev;
pub mod continuation;
pub mod elliptic;
pub mod error;
pub mod fk;
pub mod interval;
pub mod multipartite;
pub mod partitions;
pub mod poly;
pub mod quadrature;
pub mod quartic;
pub mod rational;
pub mod render;
pub mod roots;
pub mod surd;
