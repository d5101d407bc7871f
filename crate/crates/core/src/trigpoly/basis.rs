//! Numeric content of the harmonic lattice: pump frequencies and the
//! per-axis wavenumber units.

use serde::Serialize;
use thiserror::Error;

use super::key::{Axis, Coord};

/// Relative tolerance on the pump dispersion relation ω² = |k|².
pub const DISPERSION_INVARIANT_TOL: f64 = 1e-12;

#[derive(Debug, Error)]
pub enum BasisError {
    #[error("axis unit must be positive and finite, got {0}")]
    InvalidUnit(f64),
    #[error("pump mode index must be nonnegative, got {0}")]
    InvalidIndex(i32),
    #[error("pump {slot} violates the dispersion relation: omega^2 = {omega_sq:e}, |k|^2 = {k_sq:e}")]
    DispersionViolation { slot: usize, omega_sq: f64, k_sq: f64 },
    #[error("pump frequency must be positive, got {0}")]
    InvalidOmega(f64),
}

/// One pump row of the lattice: integer mode indices per axis plus the
/// resulting angular frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PumpRow {
    pub indices: [i32; 3],
    pub omega: f64,
}

/// Shared lattice of up to two pump modes in one rectangular cavity.
///
/// The spatial rate of a key harmonic `m` on axis α is `m·u_α` with
/// `u_α = π/L_α`; the time rate of a key `(c₁, c₂)` is `c₁ω₁ + c₂ω₂`.
/// Single-pump problems leave the second row empty (`ω₂ = 0`, zero indices);
/// canonicalization then forces the second time coefficient to zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LatticeBasis {
    units: [f64; 3],
    pumps: [PumpRow; 2],
    single: bool,
}

impl LatticeBasis {
    /// Lattice with one pump. The pump frequency is computed from the
    /// dispersion relation ω = |k|, so the invariant holds by construction.
    pub fn single(units: [f64; 3], indices: [i32; 3]) -> Result<Self, BasisError> {
        Self::build(units, indices, None)
    }

    /// Lattice with two pumps (each in its own slot, even if the modes are
    /// identical).
    pub fn pair(
        units: [f64; 3],
        indices1: [i32; 3],
        indices2: [i32; 3],
    ) -> Result<Self, BasisError> {
        Self::build(units, indices1, Some(indices2))
    }

    /// Lattice with explicitly supplied pump frequencies. Each frequency is
    /// checked against the dispersion relation to relative
    /// [`DISPERSION_INVARIANT_TOL`].
    pub fn with_omegas(
        units: [f64; 3],
        pump1: ([i32; 3], f64),
        pump2: Option<([i32; 3], f64)>,
    ) -> Result<Self, BasisError> {
        let mut basis = Self::build(units, pump1.0, pump2.map(|p| p.0))?;
        let supplied = [pump1.1, pump2.map(|p| p.1).unwrap_or(0.0)];
        for slot in 0..2 {
            let omega = supplied[slot];
            if slot == 1 && basis.single {
                continue;
            }
            if !(omega > 0.0) || !omega.is_finite() {
                return Err(BasisError::InvalidOmega(omega));
            }
            let k_sq = basis.norm_sq(basis.pumps[slot].indices);
            let omega_sq = omega * omega;
            if (omega_sq - k_sq).abs() > DISPERSION_INVARIANT_TOL * omega_sq {
                return Err(BasisError::DispersionViolation { slot: slot + 1, omega_sq, k_sq });
            }
            basis.pumps[slot].omega = omega;
        }
        Ok(basis)
    }

    fn build(
        units: [f64; 3],
        indices1: [i32; 3],
        indices2: Option<[i32; 3]>,
    ) -> Result<Self, BasisError> {
        for &u in &units {
            if !(u > 0.0) || !u.is_finite() {
                return Err(BasisError::InvalidUnit(u));
            }
        }
        let single = indices2.is_none();
        let rows = [indices1, indices2.unwrap_or([0, 0, 0])];
        for row in &rows {
            for &i in row {
                if i < 0 {
                    return Err(BasisError::InvalidIndex(i));
                }
            }
        }
        let mut basis = LatticeBasis {
            units,
            pumps: [
                PumpRow { indices: rows[0], omega: 0.0 },
                PumpRow { indices: rows[1], omega: 0.0 },
            ],
            single,
        };
        basis.pumps[0].omega = basis.norm_sq(rows[0]).sqrt();
        if !basis.single {
            basis.pumps[1].omega = basis.norm_sq(rows[1]).sqrt();
        }
        if !(basis.pumps[0].omega > 0.0) {
            return Err(BasisError::InvalidOmega(basis.pumps[0].omega));
        }
        if !basis.single && !(basis.pumps[1].omega > 0.0) {
            return Err(BasisError::InvalidOmega(basis.pumps[1].omega));
        }
        Ok(basis)
    }

    fn norm_sq(&self, indices: [i32; 3]) -> f64 {
        let mut s = 0.0;
        for a in 0..3 {
            let k = indices[a] as f64 * self.units[a];
            s += k * k;
        }
        s
    }

    pub fn is_single_pump(&self) -> bool {
        self.single
    }

    /// π/L for the given axis.
    pub fn axis_unit(&self, axis: Axis) -> f64 {
        self.units[axis.index()]
    }

    pub fn units(&self) -> [f64; 3] {
        self.units
    }

    /// Pump frequency for slot 0 or 1 (0 for the empty second slot).
    pub fn omega(&self, slot: usize) -> f64 {
        self.pumps[slot].omega
    }

    pub fn pump_indices(&self, slot: usize) -> [i32; 3] {
        self.pumps[slot].indices
    }

    /// Pump wavevector `(i_x u_x, i_y u_y, i_z u_z)`.
    pub fn wavevector(&self, slot: usize) -> [f64; 3] {
        let idx = self.pumps[slot].indices;
        [
            idx[0] as f64 * self.units[0],
            idx[1] as f64 * self.units[1],
            idx[2] as f64 * self.units[2],
        ]
    }

    /// Angular rate of a time key: `c₁ω₁ + c₂ω₂`.
    pub fn time_rate(&self, coeffs: [i32; 2]) -> f64 {
        coeffs[0] as f64 * self.pumps[0].omega + coeffs[1] as f64 * self.pumps[1].omega
    }

    /// Spatial rate of a harmonic number on the given axis: `m·u_α`.
    pub fn axis_rate(&self, axis: Axis, harmonic: i32) -> f64 {
        harmonic as f64 * self.units[axis.index()]
    }

    pub(crate) fn rate(&self, coord: Coord, time_coeffs: [i32; 2], harmonic: i32) -> f64 {
        match coord.axis() {
            None => self.time_rate(time_coeffs),
            Some(axis) => self.axis_rate(axis, harmonic),
        }
    }

    /// Reduce time coefficients over degenerate slots so that numerically
    /// identical arguments always share one key: an empty second slot zeroes
    /// `c₂`, and bitwise-equal pump frequencies fold both slots together.
    pub(crate) fn reduce_time_coeffs(&self, coeffs: [i32; 2]) -> [i32; 2] {
        if self.pumps[1].omega == 0.0 {
            [coeffs[0], 0]
        } else if self.pumps[0].omega == self.pumps[1].omega {
            [coeffs[0] + coeffs[1], 0]
        } else {
            coeffs
        }
    }
}
