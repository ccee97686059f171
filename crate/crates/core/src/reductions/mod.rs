//! Hardness reductions: 3-colorability to identically-zero polynomials over
//! `S_{H₃}`, and the substitutions carrying such questions to `S_{H_n}`, to
//! ideal extensions, and to rank-one matrix semigroups.

pub mod coloring;
pub mod graph;
pub mod lifts;
pub mod search;
pub mod tau;
pub mod zeta;

pub use coloring::{decode_coloring, encode_coloring, sigma, structured_witness, walk_term};
pub use graph::{edge_walk, EdgeWalk, SimpleGraph};
pub use lifts::{alpha, rho, sat_lift};
pub use search::extend;
pub use tau::Tau;
pub use zeta::Zeta;
