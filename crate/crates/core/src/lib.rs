//! Neutrosophic n-matrices, n-graphs, and fuzzy or neutrosophic cognitive
//! and relational maps with several experts.
//!
//! Values are exact `a + bI` integers ([`neutro::NeutroValue`]). An
//! n-matrix ([`nmatrix::NMatrix`]) is an ordered union of component
//! matrices; maps step a state vector through it, threshold, and run until
//! a joint state repeats.
//!
//! ```
//! use neutromaps::dynamics::StateVector;
//! use neutromaps::cognitive::CognitiveMap;
//! use neutromaps::neutro::ThresholdPolicy;
//!
//! let m = "0 1 0\n0 0 I\n1 0 0\n".parse().unwrap();
//! let map = CognitiveMap::new(m, vec![vec!["A".into(), "B".into(), "C".into()]]).unwrap();
//! let start = StateVector::from_bits(&[&[1, 0, 0]]);
//! let hp = map.hidden_pattern(&start, ThresholdPolicy::default()).unwrap();
//! assert_eq!(hp.verdicts[0].to_string(), "FIXED(1 1 I)");
//! ```
//!
//! Runnable examples, one per capability (`cargo run --example <name>`):
//!
//! - `neutro_arithmetic`: scalar arithmetic and threshold modes
//! - `nmatrix_algebra`: sums, products, shape and content classes
//! - `bigraph_taxonomy`: gluing, order, biregularity, neutrosophic classes
//! - `graph_matrices`: adjacency, incidence, weighted and Kirchhoff matrices
//! - `fuzzy_cognitive_bimap`, `fuzzy_cognitive_trimap`: hidden patterns
//! - `relational_maps`: domain/range iteration
//! - `neutrosophic_cognitive_maps`, `neutrosophic_relational_maps`
//! - `combine_experts`: summing aligned maps
//! - `mapfile_roundtrip`: the `.nmap` text format and JSON

pub mod cli;
pub mod cognitive;
pub mod dynamics;
pub mod mapfile;
pub mod neutro;
pub mod ngraph;
pub mod nmatrix;
pub mod relational;
