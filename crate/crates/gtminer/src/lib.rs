//! Grounded-theory text mining with numeric triangulation.
//!
//! The crate parses break-tagged interview transcripts and numeric CSV
//! tables, derives open-coding categories, an axial coding dictionary,
//! topics (LDA by collapsed Gibbs sampling) and sentiment from the text,
//! and runs small from-scratch ML routines (MLP, linear SVM, k-means,
//! KNN, PCA, oversampling) over the numbers. Every randomized routine is
//! driven by the seeded generator in [`rng`], so results are reproducible
//! bit for bit.

pub mod coding;
pub mod corpus;
pub mod ml;
pub mod nlp;
pub mod rng;
pub mod sentiment;
pub mod topics;
