#![no_std]
extern crate alloc;

pub mod models;
pub mod poly;
pub mod spectral;
