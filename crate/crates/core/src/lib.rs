//! Nonlinear vacuum electrodynamics in rectangular cavities.
//!
//! Euler-Heisenberg corrections make the vacuum weakly nonlinear: the
//! effective Lagrangian gains quartic invariant terms with coefficient
//! κ = α² / (90 mₑ⁴), so strong cavity modes generate polarization and
//! magnetization cubic in the fields. Those cubic sources can, for the
//! right cavity geometry, resonantly pump signal modes at mixed
//! frequencies such as 2ω₁ − ω₂.
//!
//! The crate reproduces that analysis end to end:
//!
//! * [`trigpoly`] — exact trigonometric polynomial algebra on an integer
//!   harmonic lattice, with the differential operators of the wave
//!   equations;
//! * [`cavity`] — 1D and rectangular TE/TM pump-mode construction plus the
//!   eigenfrequency relation ω = |k|;
//! * [`nonlinear`] — field invariants, vacuum polarization/magnetization
//!   and the right-hand sides of the linearized signal wave equations;
//! * [`resonance`] — classification of every source term against the
//!   cavity dispersion relation, the triangle-inequality exclusion of the
//!   "plus" mixing mode, and root solving for resonant aspect ratios;
//! * [`simulate`] — modal oscillator dynamics verifying secular growth and
//!   1/Γ saturation;
//! * [`acceptance`] — the self-test suite binding all of the above to
//!   pinned expected values.

pub mod cavity;
pub mod trigpoly;

pub use trigpoly::{
    Axis, AxisWave, Coord, HarmonicKey, LatticeBasis, Parity, RawTerm, SpacetimePoint, TimeWave,
    TrigPoly, TrigTerm, VectorTrigField,
};
