//! Geometrically localized cycle representatives.
//!
//! Given a simplicial complex embedded in `R^d`, finds cycles whose
//! vertices fit in a small ball: for a fixed homology class, for a whole
//! homology basis, and for the bars of a persistence barcode.
//!
//! Work over sites is spread across threads with `rayon` when the
//! `parallel` feature is enabled (the default).

pub mod cli;
pub mod complex;
pub mod error;
pub mod exec;
pub mod filtration;
pub mod fixtures;
pub mod io;
pub mod oracle;
pub mod optimize;
pub mod radius;
pub mod report;
pub mod z2linalg;

pub use complex::{EmbeddedComplex, PointCloud, SimplexRef, SubcomplexView};
pub use error::{Error, Result};
pub use exec::Execution;
pub use filtration::{compute_persistence, Barcode, Death, Filtration, Interval};
pub use optimize::{
    opt_homologous_cycle, opt_homology_basis, opt_pers_hom_rep, opt_persistent_basis, shorten_cycle,
    OptimalCycleResult, Options,
};
pub use radius::SphereCertificate;
pub use z2linalg::{ChainVector, Z2Matrix};
