//! Shared numeric tolerances.
//!
//! Certification thresholds (hermiticity, unitarity, positivity) sit at
//! 1e-10; equality assertions between quantities computed along different
//! routes at 1e-9; exact-construction checks at 1e-12. Entanglement
//! detection uses 1e-9, comfortably above spectral-solver noise for
//! matrices up to 27x27.

/// Max |m - m^dagger| entry accepted before an input is rejected as
/// non-Hermitian.
pub const HERMITICITY: f64 = 1e-10;

/// Max |U U^dagger - I| entry accepted for a computed evolution operator.
pub const UNITARITY: f64 = 1e-10;

/// Equality tolerance for quantities compared across computation routes.
pub const EQUALITY: f64 = 1e-9;

/// Threshold above which negativity or CCNR is reported as detecting
/// entanglement.
pub const DETECTION: f64 = 1e-9;

/// Tolerance for exactly-constructed quantities (normalization,
/// orthogonality, commutators).
pub const EXACT: f64 = 1e-12;
