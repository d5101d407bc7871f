//! Exact algebra of trigonometric polynomials over a shared integer lattice
//! of pump frequencies and wavenumbers.
//!
//! Every field in the pipeline is a finite sum of terms
//! `A · h(ω t) · h(k_x x) · h(k_y y) · h(k_z z)` with `h ∈ {sin, cos}`.
//! Products reduce exactly through the product-to-sum identities, and
//! differentiation maps term to term, so the cubic source expansions stay
//! closed in this representation. Keys carry integer coefficients only;
//! the irrational frequencies and wavenumber units live in [`LatticeBasis`].
//! That split makes term merging exact — no floating-point key comparison
//! anywhere.
//!
//! Amplitudes are plain `f64`. Exact paper-style coefficients are recovered
//! with [`TrigPoly::snap_to_rationals`], which divides a term set by a
//! reference scale and checks each ratio against a small-denominator
//! rational.

mod basis;
mod key;
mod poly;
mod vector;

pub use basis::{BasisError, LatticeBasis, PumpRow, DISPERSION_INVARIANT_TOL};
pub use key::{Axis, AxisWave, Coord, HarmonicKey, Parity, TimeWave};
pub use poly::{
    canonicalize, RawTerm, SnapError, SpacetimePoint, TrigPoly, TrigTerm, DROP_TOLERANCE,
    SNAP_MAX_DENOMINATOR, SNAP_TOLERANCE,
};
pub use vector::{
    curl, d_time, dalembertian, dalembertian_vec, divergence, gradient, laplacian, laplacian_vec,
    VectorTrigField,
};
