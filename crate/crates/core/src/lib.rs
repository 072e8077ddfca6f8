//! Core primitives for scoring the faithfulness and factuality of long-form
//! RAG answers: corpus chunking, exact dense retrieval, LLM-judge prompt
//! rendering and reply parsing, claim-support metrics, and dataset adapters.
//!
//! Everything in this crate is deterministic and IO-free. File formats,
//! providers that talk to real services, caching, and the CLI live in the
//! companion `groundcheck` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod datasets;
pub mod judge;
pub mod pipeline;
pub mod retrieval;
