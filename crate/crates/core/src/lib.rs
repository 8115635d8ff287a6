//! Path decompositions of complete graphs within the Gallai bound
//! `⌊(n+1)/2⌋`, and of complete graphs with a star or a tadpole removed.
//!
//! ```
//! use gallai::{construct, gallai_bound, verify_decomposition};
//!
//! let d = construct(9).unwrap();
//! assert_eq!(d.paths().len(), gallai_bound(9).unwrap());
//! assert!(verify_decomposition(&d).passed());
//! ```

pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod removal;
mod workbench;

pub use constructions::{construct, construction_name};
pub use enumeration::{
    automorphism_count, canonical_form, count_labeled, enumerate_decompositions, CanonicalForm,
    EnumerationConfig, IsoClass,
};
pub use error::{Error, Result};
pub use graph::{
    complete_graph, gallai_bound, is_connected, verify_decomposition, Edge, LabeledGraph, Path,
    PathDecomposition, Permutation, VerificationReport, Vertex, Violation,
};
pub use removal::{
    path_ends_feasible, remove_star, remove_tadpole, trim_path_ends, RemovalKind, RemovalRecord,
    Surgery, TrimWitness,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/data-model.md")]
    mod data_model {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/surgery.md")]
    mod surgery {}
    #[doc = include_str!("../../../book/src/trimming.md")]
    mod trimming {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
