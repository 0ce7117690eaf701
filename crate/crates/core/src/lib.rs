//! Closed chromatic numbers `χ_{n,k}(G)`: the least number of distinct
//! integer labels in a proper labeling whose closed-neighbourhood sums are
//! all `≡ k (mod n)`.
//!
//! - [`zmod`] solves linear systems over `Z/n` through the Smith normal form.
//! - [`graphs`] holds the graph type and the studied families.
//! - [`engine`] computes exact values, witnesses and verification reports.
//! - [`closedforms`] evaluates the known closed-form results for families.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closedforms;
pub mod engine;
pub mod graphs;
pub mod zmod;
