//! Generalized Cartan matrices, real roots, small generating root sets,
//! spectral-bound certificates, and exact finite-group checks for rank-2
//! Chevalley groups and the symmetric-power representations of `SL_2`.

pub mod bounds;
pub mod chevalley;
pub mod gcm;
pub mod report;
pub mod ring;
pub mod rng;
pub mod roots;
pub mod sigma;
pub mod symrep;

pub use bounds::{bound_report, certify_property_t, BoundReport, BoundVerdict, Certificate, OverallVerdict};
pub use gcm::{catalogue, ideal_index_threshold, Gcm, GcmClassification, GcmError, GcmKind};
pub use report::{CheckReport, CheckResult};
pub use ring::{RingParseError, RingSpec};
pub use roots::{Coroot, Root, RootEntry, RootError, RootSlice, WeylWord};
pub use sigma::{build_sigma, build_sigma_pseudo, certify, PairCertificate, SigmaError, SigmaSet, Verdict};
