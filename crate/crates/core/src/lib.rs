//! Deciding when a finite metric space embeds isometrically in a Hilbert
//! space, and what that means for the structure of its critical graph.
//!
//! The crate provides:
//!
//! - metric spaces, weighted graphs, shortest-path metrics, and critical
//!   graphs ([`metric`]);
//! - a dense symmetric eigensolver and double centering ([`symmat`]);
//! - the spectral embeddability test, witness vectors, base-point kernels,
//!   and explicit Euclidean coordinates ([`schoenberg`]);
//! - structural classifiers for critical graphs and an exhaustive check
//!   that unweighted graph metrics embed iff the graph is a path or
//!   complete ([`structure`]);
//! - geometric Fiedler values over arbitrary finite targets, a sparsest-cut
//!   oracle, and the orthogonality functional for vertex maps
//!   ([`geomspec`]);
//! - generators for all named metric families ([`families`]);
//! - fixed-format JSON and DOT interchange ([`json`]).

pub mod error;
pub mod families;
pub mod geomspec;
pub mod json;
pub mod metric;
pub mod rng;
pub mod schoenberg;
pub mod structure;
pub mod symmat;

pub use error::{Error, Result};
pub use families::{generate, paper_witness, random_euclidean, FamilySpec, WitnessConfig};
pub use geomspec::{
    classic_lambda2, geometric_fiedler, geometric_rayleigh, normalized_laplacian,
    orthogonality_defect, sparsest_cut_oracle, GeometricFiedlerResult, HarmonicMap,
};
pub use metric::{
    critical_graph, generates_metric, shortest_path_metric, validate_metric, CriticalGraph,
    MetricSpace, SimpleGraph, WeightedGraph,
};
pub use schoenberg::{
    embed_coordinates, is_embeddable, kernel_at_base, kernel_trace_profile,
    squared_distance_matrix, verify_isometry, Embedding, EmbeddabilityReport, Kernel,
};
pub use structure::{
    classify_4point, classify_unweighted, connectivity_report, match_pivot_structure,
    verify_unweighted_theorem, ConnectivityReport, PivotDecomposition, StructureClass,
};
pub use symmat::{
    centered_sum_of_squares, definiteness, double_center, jacobi_eigen, Definiteness,
    EigenDecomposition, SymmetricMatrix,
};
