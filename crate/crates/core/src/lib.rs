//! Invariants of tunnels built from middle tunnels of torus knots by cabling
//! and splitting constructions.
//!
//! ```
//! use tunnelcalc::{split, SplittingKind, SplittingSpec, TorusKnot};
//!
//! let base = TorusKnot::new(4, 3).unwrap();
//! let spec = SplittingSpec::new(base, SplittingKind::DropRho, 1).unwrap();
//! let tunnel = split(&spec).unwrap();
//! assert_eq!(tunnel.invariants.slopes.to_string(), "[1/3], 5, 19");
//! ```

pub mod braid;
pub mod classify;
pub mod error;
pub mod slopes;
pub mod splitting;
pub mod torus;
pub mod tunnel;

pub use braid::{position_word, torus_braid_word, BraidWord, Generator, PositionWord, Token};
pub use classify::{
    coincident, identify_torus_middle, multiple_splittings, torus_middle_matches, CoincidenceCase,
    FamilyKind, IdentifiedTunnel, SplittingFamily, Verdict, DEFAULT_SEARCH_BOUND,
};
pub use error::{Error, Result};
pub use slopes::{mod_one, reduce, simple_slope, Rational, SlopeClass, SlopePair};
pub use splitting::{
    band_sum, gamma_slope, linking_number, sigma_slope, split, BandSum, HomologyClass,
    SplittingKind, SplittingSpec,
};
pub use torus::{
    associated_matrix, continued_fraction, diag, middle_tunnel_sequence, normalize,
    AssociatedMatrix, ContinuedFraction, Letter, Matrix2, MiddleTunnel, Normalization, TorusKnot,
    ULWord,
};
pub use tunnel::{
    AssociatedKnot, BinaryInvariants, CablingStep, Classification, Disk, SlopeInvariants, StepKind,
    TunnelDescriptor, TunnelInvariants,
};
