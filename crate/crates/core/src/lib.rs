//! Recognition of graphs with threshold dimension at most two.
//!
//! Given a graph `G`, [`cover2`] either returns two threshold subgraphs
//! whose edges cover `E(G)`, or an odd cycle in the auxiliary graph `G*`
//! (whose vertices are the edges of `G`, adjacent when they are opposite
//! edges of an alternating 4-cycle), which certifies that no such cover
//! exists.
//!
//! ```
//! use thcover::{cover2, parse_graph, CoverOptions, CoverOutcome, verify_cover};
//!
//! let g = parse_graph("4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap();
//! let result = cover2(&g, &CoverOptions::default()).unwrap();
//! let CoverOutcome::Cover { h1, h2 } = &result.outcome else { unreachable!() };
//! assert!(verify_cover(&g, h1, h2));
//! ```

pub mod auxiliary;
pub mod cover;
pub mod detect;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod lexbfs;
pub mod oracle;
pub mod ordering;
pub mod partition;
pub mod patterns;
pub mod recognition;
pub mod reductions;

pub use auxiliary::{build_auxiliary, format_auxiliary, two_color, AuxiliaryGraph, OddCycleCertificate};
pub use cover::{
    assemble_cover, check_cover, compute_s, cover2, phase3, verify_cover, CoverCheck, CoverError, CoverOptions,
    CoverOutcome, CoverResult, Diagnostics, OrderingSource, PentagonSets,
};
pub use detect::{
    detect_ap6, detect_pentagon, detect_switching, fold_free, Ap6Witness, PentagonWitness, SwitchingKind,
    SwitchingWitness,
};
pub use graph::{EdgeId, EdgePair, Graph, GraphError};
pub use io::{format_ordering, format_pairs, parse_graph, parse_ordering, serialize_graph, ParseError};
pub use lexbfs::{lexbfs, lexbfs_with_priority, verify_lexbfs, LexBfsViolation};
pub use ordering::{pair_lex_compare, OrderingError, VertexOrdering};
pub use partition::{EdgeClass, TriPartition};
pub use patterns::{find_induced, Pattern, PatternWitness};
pub use recognition::{
    is_chain, is_paraglider_free, is_threshold, split_partition, AlternatingFourCycle, ChainCheck, PartitionError,
    SplitPartition, ThresholdCertificate, ThresholdCheck,
};
pub use reductions::{
    bipartition, chain_cover2, cover2_paraglider_free, cover2_split, cover2_split_with_order, hat_graph, ChainCover,
    ChainCoverOutcome, HatGraph, ReductionError, Side,
};
