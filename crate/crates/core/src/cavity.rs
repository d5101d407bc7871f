//! Pump-mode construction for rectangular cavities.
//!
//! Supported configurations:
//!
//! * the quasi-1D standing mode of a cavity with L_x ≪ L_y, L_z, with
//!   electric field `F₀·sin(kₙx)·sin(ωₙt)` polarized at an angle α in the
//!   y–z plane (α = 0 puts E along y and B along z);
//! * the TE_npq / TM_npq eigenmodes of a closed rectangular box with
//!   perfectly conducting walls, in the standard forms (Hill, "Electromagnetic
//!   Fields in Cavities"; Pozar ch. 6), normalized so the largest electric
//!   component amplitude equals F₀.
//!
//! Every electric field carries sin(ωt) time dependence; the magnetic field
//! is obtained symbolically from Faraday's law, `B = −∫ (∇×E) dt`, which
//! makes the pair satisfy the full source-free Maxwell system term by term.
//! Eigenfrequencies obey ω_npq = |k_npq| = π·√(n²/L_x² + p²/L_y² + q²/L_z²).

use serde::Serialize;
use thiserror::Error;

use crate::trigpoly::{
    curl, dalembertian_vec, LatticeBasis, Parity, RawTerm, TrigPoly, VectorTrigField,
};

#[derive(Debug, Error)]
pub enum CavityError {
    #[error("cavity dimensions must be positive and finite, got ({0}, {1}, {2})")]
    InvalidGeometry(f64, f64, f64),
    #[error("invalid mode: {0}")]
    InvalidMode(String),
    #[error("a run needs one or two pump modes, got {0}")]
    BadPumpCount(usize),
    #[error(transparent)]
    Basis(#[from] crate::trigpoly::BasisError),
}

/// Box dimensions (natural units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CavityGeometry {
    pub lx: f64,
    pub ly: f64,
    pub lz: f64,
}

impl CavityGeometry {
    pub fn new(lx: f64, ly: f64, lz: f64) -> Result<Self, CavityError> {
        let ok = |v: f64| v > 0.0 && v.is_finite();
        if ok(lx) && ok(ly) && ok(lz) {
            Ok(CavityGeometry { lx, ly, lz })
        } else {
            Err(CavityError::InvalidGeometry(lx, ly, lz))
        }
    }

    pub fn lengths(&self) -> [f64; 3] {
        [self.lx, self.ly, self.lz]
    }

    /// Wavenumber unit π/L per axis.
    pub fn axis_units(&self) -> [f64; 3] {
        let pi = std::f64::consts::PI;
        [pi / self.lx, pi / self.ly, pi / self.lz]
    }

    /// ω_npq = π·√(n²/L_x² + p²/L_y² + q²/L_z²).
    ///
    /// Errors on the all-zero index triple, which labels no mode.
    pub fn eigenfrequency(&self, indices: [u32; 3]) -> Result<f64, CavityError> {
        if indices == [0, 0, 0] {
            return Err(CavityError::InvalidMode("index triple (0,0,0)".into()));
        }
        let units = self.axis_units();
        let mut s = 0.0;
        for a in 0..3 {
            let k = indices[a] as f64 * units[a];
            s += k * k;
        }
        Ok(s.sqrt())
    }
}

/// Mode family of a pump.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModeKind {
    /// Quasi-1D standing wave along x.
    OneD,
    /// Transverse electric (E_z = 0) rectangular-cavity mode.
    Te,
    /// Transverse magnetic (B_z = 0) rectangular-cavity mode.
    Tm,
}

/// A pump mode request: family, integer indices, field strength and (for 1D)
/// the polarization angle in the y–z plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ModeSpec {
    pub kind: ModeKind,
    pub indices: [u32; 3],
    pub amplitude: f64,
    pub alpha: f64,
}

impl ModeSpec {
    pub fn one_d(n: u32, alpha: f64, amplitude: f64) -> Result<Self, CavityError> {
        let spec = ModeSpec { kind: ModeKind::OneD, indices: [n, 0, 0], amplitude, alpha };
        spec.validate()?;
        Ok(spec)
    }

    pub fn te(n: u32, p: u32, q: u32, amplitude: f64) -> Result<Self, CavityError> {
        let spec = ModeSpec { kind: ModeKind::Te, indices: [n, p, q], amplitude, alpha: 0.0 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn tm(n: u32, p: u32, q: u32, amplitude: f64) -> Result<Self, CavityError> {
        let spec = ModeSpec { kind: ModeKind::Tm, indices: [n, p, q], amplitude, alpha: 0.0 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), CavityError> {
        let [n, p, q] = self.indices;
        if !self.amplitude.is_finite() || !self.alpha.is_finite() {
            return Err(CavityError::InvalidMode("non-finite amplitude or angle".into()));
        }
        let ok = match self.kind {
            ModeKind::OneD => n >= 1 && p == 0 && q == 0,
            // TE_npq needs a standing wave along z and at least one
            // transverse index; TM_npq needs both transverse indices.
            ModeKind::Te => q >= 1 && (n, p) != (0, 0),
            ModeKind::Tm => n >= 1 && p >= 1,
        };
        if ok {
            Ok(())
        } else {
            Err(CavityError::InvalidMode(format!("{:?} indices ({n},{p},{q})", self.kind)))
        }
    }

    pub fn label(&self) -> String {
        let [n, p, q] = self.indices;
        match self.kind {
            ModeKind::OneD => format!("1D:n={n},alpha={}", self.alpha),
            ModeKind::Te => format!("TE{n}{p}{q}"),
            ModeKind::Tm => format!("TM{n}{p}{q}"),
        }
    }
}

/// The six-component electromagnetic configuration of a mode or source.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct FieldPair {
    pub e: VectorTrigField,
    pub b: VectorTrigField,
}

impl FieldPair {
    pub fn add(&self, other: &FieldPair) -> FieldPair {
        FieldPair { e: self.e.add(&other.e), b: self.b.add(&other.b) }
    }

    pub fn is_empty(&self) -> bool {
        self.e.is_empty() && self.b.is_empty()
    }
}

/// Which lattice slot a pump occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PumpSlot {
    First,
    Second,
}

impl PumpSlot {
    pub fn index(self) -> usize {
        match self {
            PumpSlot::First => 0,
            PumpSlot::Second => 1,
        }
    }
}

/// Resolved data of one assembled pump.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PumpModeInfo {
    pub spec: ModeSpec,
    pub slot: usize,
    pub omega: f64,
    pub wavevector: [f64; 3],
}

/// A ready-to-analyze pump configuration: lattice, summed fields and
/// per-pump bookkeeping. Sources are computed on the sum field, so all
/// self- and cross-interaction terms arise from one cubic expansion.
#[derive(Debug, Clone)]
pub struct PumpSetup {
    pub geometry: CavityGeometry,
    pub basis: LatticeBasis,
    pub fields: FieldPair,
    pub pumps: Vec<PumpModeInfo>,
}

/// Build the lattice and fields for one or two pump modes. Each pump gets
/// its own lattice slot (even when both request the same mode); single-pump
/// runs leave the second slot empty.
pub fn assemble(geometry: &CavityGeometry, specs: &[ModeSpec]) -> Result<PumpSetup, CavityError> {
    if specs.is_empty() || specs.len() > 2 {
        return Err(CavityError::BadPumpCount(specs.len()));
    }
    for spec in specs {
        spec.validate()?;
    }
    let units = geometry.axis_units();
    let to_lattice = |s: &ModeSpec| [s.indices[0] as i32, s.indices[1] as i32, s.indices[2] as i32];
    let basis = if specs.len() == 1 {
        LatticeBasis::single(units, to_lattice(&specs[0]))?
    } else {
        LatticeBasis::pair(units, to_lattice(&specs[0]), to_lattice(&specs[1]))?
    };

    let mut fields = FieldPair::default();
    let mut pumps = Vec::with_capacity(specs.len());
    for (i, spec) in specs.iter().enumerate() {
        let slot = if i == 0 { PumpSlot::First } else { PumpSlot::Second };
        let pair = build_mode(geometry, spec, slot, &basis)?;
        fields = fields.add(&pair);
        pumps.push(PumpModeInfo {
            spec: *spec,
            slot: i,
            omega: basis.omega(i),
            wavevector: basis.wavevector(i),
        });
    }
    Ok(PumpSetup { geometry: *geometry, basis, fields, pumps })
}

/// Dispatch on the mode family.
pub fn build_mode(
    geometry: &CavityGeometry,
    spec: &ModeSpec,
    slot: PumpSlot,
    basis: &LatticeBasis,
) -> Result<FieldPair, CavityError> {
    match spec.kind {
        ModeKind::OneD => build_mode_1d(geometry, spec, slot, basis),
        ModeKind::Te | ModeKind::Tm => build_mode_3d(geometry, spec, slot, basis),
    }
}

/// Quasi-1D pump: `E = F₀·sin(kₙx)·sin(ωₙt)·(0, cos α, sin α)` and the
/// standing-wave partner `B = F₀·cos(kₙx)·cos(ωₙt)·(0, −sin α, cos α)`.
///
/// The B convention for α ≠ 0 is the rigid rotation of the α = 0 pair about
/// the x axis; any other choice would differ only by a field redefinition of
/// the same mode.
pub fn build_mode_1d(
    geometry: &CavityGeometry,
    spec: &ModeSpec,
    slot: PumpSlot,
    basis: &LatticeBasis,
) -> Result<FieldPair, CavityError> {
    if spec.kind != ModeKind::OneD {
        return Err(CavityError::InvalidMode(format!("expected a 1D mode, got {:?}", spec.kind)));
    }
    spec.validate()?;
    let _ = geometry;
    let n = spec.indices[0] as i32;
    let f0 = spec.amplitude;
    let (sa, ca) = spec.alpha.sin_cos();
    let tc = time_unit(slot);

    let e = VectorTrigField::new(
        TrigPoly::zero(),
        one_term(f0 * ca, (Parity::Sin, tc), [(Parity::Sin, n), c0(), c0()], basis),
        one_term(f0 * sa, (Parity::Sin, tc), [(Parity::Sin, n), c0(), c0()], basis),
    );
    let b = faraday_partner(&e, basis);
    Ok(FieldPair { e, b })
}

/// Rectangular-cavity TE/TM mode with the z axis as the reference direction.
///
/// With k = (nπ/L_x, pπ/L_y, qπ/L_z) and k_c² = k_x² + k_y², the spatial
/// electric profiles are
///
/// TE:  Ê = A·( (k_y/k_c²)·cos sin sin, −(k_x/k_c²)·sin cos sin, 0 )
/// TM:  Ê = E₀·( −(k_x k_z/k_c²)·cos sin sin, −(k_y k_z/k_c²)·sin cos sin,
///               sin sin cos )
///
/// where the sin/cos pattern runs over (x, y, z). Both satisfy ∇·Ê = 0 and
/// vanish tangentially on the walls. The overall constant is fixed so the
/// largest component amplitude equals F₀.
pub fn build_mode_3d(
    geometry: &CavityGeometry,
    spec: &ModeSpec,
    slot: PumpSlot,
    basis: &LatticeBasis,
) -> Result<FieldPair, CavityError> {
    if spec.kind == ModeKind::OneD {
        return Err(CavityError::InvalidMode("expected a TE/TM mode".into()));
    }
    spec.validate()?;
    let units = geometry.axis_units();
    let [n, p, q] = spec.indices.map(|v| v as i32);
    let kx = n as f64 * units[0];
    let ky = p as f64 * units[1];
    let kz = q as f64 * units[2];
    let kc_sq = kx * kx + ky * ky;
    let tc = time_unit(slot);
    let f0 = spec.amplitude;

    // Unnormalized component amplitudes; the sign layout matches the curl
    // structure of the generating Hertz potential.
    let (ax, ay, az): (f64, f64, f64) = match spec.kind {
        ModeKind::Te => (ky / kc_sq, -kx / kc_sq, 0.0),
        ModeKind::Tm => (-kx * kz / kc_sq, -ky * kz / kc_sq, 1.0),
        ModeKind::OneD => unreachable!(),
    };
    let peak = ax.abs().max(ay.abs()).max(az.abs());
    let scale = f0 / peak;

    let e = VectorTrigField::new(
        one_term(
            scale * ax,
            (Parity::Sin, tc),
            [(Parity::Cos, n), (Parity::Sin, p), (Parity::Sin, q)],
            basis,
        ),
        one_term(
            scale * ay,
            (Parity::Sin, tc),
            [(Parity::Sin, n), (Parity::Cos, p), (Parity::Sin, q)],
            basis,
        ),
        one_term(
            scale * az,
            (Parity::Sin, tc),
            [(Parity::Sin, n), (Parity::Sin, p), (Parity::Cos, q)],
            basis,
        ),
    );
    let b = faraday_partner(&e, basis);
    Ok(FieldPair { e, b })
}

fn c0() -> (Parity, i32) {
    (Parity::Cos, 0)
}

fn time_unit(slot: PumpSlot) -> [i32; 2] {
    match slot {
        PumpSlot::First => [1, 0],
        PumpSlot::Second => [0, 1],
    }
}

fn one_term(
    amplitude: f64,
    time: (Parity, [i32; 2]),
    space: [(Parity, i32); 3],
    basis: &LatticeBasis,
) -> TrigPoly {
    TrigPoly::from_raw_terms([RawTerm { amplitude, time, space }], basis)
}

/// `B = −∫ (∇×E) dt`, term by term. Standing modes have no static field
/// component, so the integration constant is zero.
fn faraday_partner(e: &VectorTrigField, basis: &LatticeBasis) -> VectorTrigField {
    curl(e, basis).map(|component| {
        let raw = component.terms().filter_map(|term| {
            let rate = basis.time_rate(term.key.time.coeffs);
            if rate == 0.0 {
                return None;
            }
            let (parity, amp) = match term.key.time.parity {
                // -\int sin = cos/rate ; -\int cos = -sin/rate
                Parity::Sin => (Parity::Cos, term.amplitude / rate),
                Parity::Cos => (Parity::Sin, -term.amplitude / rate),
            };
            Some(RawTerm {
                amplitude: amp,
                time: (parity, term.key.time.coeffs),
                space: [
                    (term.key.space[0].parity, term.key.space[0].harmonic),
                    (term.key.space[1].parity, term.key.space[1].harmonic),
                    (term.key.space[2].parity, term.key.space[2].harmonic),
                ],
            })
        });
        TrigPoly::from_raw_terms(raw.collect::<Vec<_>>(), basis)
    })
}

/// Residual of the source-free Maxwell system for a constructed pair:
/// (□E, □B, ∇·E, ∇·B, ∇×E + ∂ₜB). All five must be empty.
pub fn maxwell_residuals(
    pair: &FieldPair,
    basis: &LatticeBasis,
) -> (VectorTrigField, VectorTrigField, TrigPoly, TrigPoly, VectorTrigField) {
    use crate::trigpoly::{d_time, divergence};
    let box_e = dalembertian_vec(&pair.e, basis);
    let box_b = dalembertian_vec(&pair.b, basis);
    let div_e = divergence(&pair.e, basis);
    let div_b = divergence(&pair.b, basis);
    let faraday = curl(&pair.e, basis).add(&d_time(&pair.b, basis));
    (box_e, box_b, div_e, div_b, faraday)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trigpoly::{AxisWave, HarmonicKey, SpacetimePoint, TimeWave};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    fn cube() -> CavityGeometry {
        CavityGeometry::new(PI, PI, PI).unwrap()
    }

    #[test]
    fn eigenfrequency_direct_values() {
        let g = CavityGeometry::new(1.0, 1.0, 1.0).unwrap();
        assert!((g.eigenfrequency([1, 0, 0]).unwrap() - PI).abs() < 1e-15);
        assert!((g.eigenfrequency([1, 1, 0]).unwrap() - PI * 2.0_f64.sqrt()).abs() < 1e-14);
        assert!(matches!(g.eigenfrequency([0, 0, 0]), Err(CavityError::InvalidMode(_))));
    }

    #[test]
    fn resonant_aspect_ratio_identity() {
        // In the box (1, 1, sqrt(sqrt(5)-2)): 2*w_011 - w_110 = w_130.
        let r = (5.0_f64.sqrt() - 2.0).sqrt();
        let g = CavityGeometry::new(1.0, 1.0, r).unwrap();
        let lhs = 2.0 * g.eigenfrequency([0, 1, 1]).unwrap() - g.eigenfrequency([1, 1, 0]).unwrap();
        let rhs = g.eigenfrequency([1, 3, 0]).unwrap();
        assert!((lhs - rhs).abs() <= 1e-12 * rhs);
    }

    #[test]
    fn one_d_mode_matches_reference_form() {
        // n=1, alpha=0, F0=1, L_x=pi: E_y = sin(x)sin(t), B_z = cos(x)cos(t).
        let g = cube();
        let spec = ModeSpec::one_d(1, 0.0, 1.0).unwrap();
        let setup = assemble(&g, &[spec]).unwrap();
        let e_y_key = HarmonicKey {
            time: TimeWave { coeffs: [1, 0], parity: Parity::Sin },
            space: [
                AxisWave { harmonic: 1, parity: Parity::Sin },
                AxisWave::CONST,
                AxisWave::CONST,
            ],
        };
        let b_z_key = HarmonicKey {
            time: TimeWave { coeffs: [1, 0], parity: Parity::Cos },
            space: [
                AxisWave { harmonic: 1, parity: Parity::Cos },
                AxisWave::CONST,
                AxisWave::CONST,
            ],
        };
        assert_eq!(setup.fields.e.components[1].amplitude(&e_y_key), Some(1.0));
        assert_eq!(setup.fields.b.components[2].amplitude(&b_z_key), Some(1.0));
        assert!(setup.fields.e.components[0].is_empty());
        assert!(setup.fields.e.components[2].is_empty());
        assert!(setup.fields.b.components[0].is_empty());
        assert!(setup.fields.b.components[1].is_empty());
        assert!((setup.basis.omega(0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn constructed_pairs_satisfy_free_maxwell() {
        let g = CavityGeometry::new(1.3, 0.9, 2.1).unwrap();
        let specs = [
            ModeSpec::one_d(2, 0.7, 1.3).unwrap(),
            ModeSpec::te(0, 1, 1, 1.0).unwrap(),
            ModeSpec::te(2, 1, 3, 0.8).unwrap(),
            ModeSpec::tm(1, 1, 0, 1.0).unwrap(),
            ModeSpec::tm(2, 3, 1, 1.1).unwrap(),
        ];
        for spec in specs {
            let setup = assemble(&g, &[spec]).unwrap();
            let (be, bb, de, db, far) = maxwell_residuals(&setup.fields, &setup.basis);
            assert!(be.is_empty(), "box E nonzero for {}", spec.label());
            assert!(bb.is_empty(), "box B nonzero for {}", spec.label());
            assert!(de.is_empty(), "div E nonzero for {}", spec.label());
            assert!(db.is_empty(), "div B nonzero for {}", spec.label());
            assert!(far.is_empty(), "Faraday residual nonzero for {}", spec.label());
        }
    }

    #[test]
    fn one_d_energy_density_is_polarization_invariant() {
        // eval of E.E must not depend on alpha.
        let g = cube();
        let mut rng = StdRng::seed_from_u64(5);
        let setups: Vec<_> = [0.0, PI / 2.0, 0.37]
            .iter()
            .map(|&alpha| {
                assemble(&g, &[ModeSpec::one_d(1, alpha, 1.0).unwrap()]).unwrap()
            })
            .collect();
        let dots: Vec<_> =
            setups.iter().map(|s| (s.fields.e.dot(&s.fields.e), &s.basis)).collect();
        for _ in 0..100 {
            let p = SpacetimePoint::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            );
            let reference = dots[0].0.eval(p, dots[0].1);
            for (poly, basis) in &dots[1..] {
                assert!((poly.eval(p, basis) - reference).abs() <= 1e-12 * reference.abs().max(1.0));
            }
        }
        // alpha = pi/2 rotates the pattern into (E_z, B_y)
        let quarter = &setups[1];
        assert!(quarter.fields.e.components[1].max_abs_amplitude() < 1e-15);
        assert!(!quarter.fields.e.components[2].is_empty());
        assert!(!quarter.fields.b.components[1].is_empty());
    }

    #[test]
    fn tm110_is_longitudinal_only() {
        let g = cube();
        let setup = assemble(&g, &[ModeSpec::tm(1, 1, 0, 1.0).unwrap()]).unwrap();
        assert!(setup.fields.e.components[0].is_empty());
        assert!(setup.fields.e.components[1].is_empty());
        let key = HarmonicKey {
            time: TimeWave { coeffs: [1, 0], parity: Parity::Sin },
            space: [
                AxisWave { harmonic: 1, parity: Parity::Sin },
                AxisWave { harmonic: 1, parity: Parity::Sin },
                AxisWave::CONST,
            ],
        };
        assert_eq!(setup.fields.e.components[2].amplitude(&key), Some(1.0));
    }

    #[test]
    fn tangential_e_vanishes_on_walls() {
        let g = CavityGeometry::new(1.1, 0.8, 1.7).unwrap();
        let mut rng = StdRng::seed_from_u64(17);
        for spec in [ModeSpec::te(0, 1, 1, 1.0).unwrap(), ModeSpec::tm(2, 1, 3, 1.0).unwrap()] {
            let setup = assemble(&g, &[spec]).unwrap();
            for _ in 0..100 {
                let t = rng.gen_range(0.0..10.0);
                let u = rng.gen_range(0.0..1.0);
                let v = rng.gen_range(0.0..1.0);
                // one random point on each of the six walls
                for (wall_axis, coord) in
                    [(0, 0.0), (0, g.lx), (1, 0.0), (1, g.ly), (2, 0.0), (2, g.lz)]
                {
                    let mut xyz = [u * g.lx, v * g.ly, (u + v) / 2.0 * g.lz];
                    xyz[wall_axis] = coord;
                    let p = SpacetimePoint::new(t, xyz[0], xyz[1], xyz[2]);
                    let e = setup.fields.e.eval(p, &setup.basis);
                    for tangential in (0..3).filter(|&a| a != wall_axis) {
                        assert!(
                            e[tangential].abs() <= 1e-12,
                            "tangential E on wall: {} ({})",
                            e[tangential],
                            spec.label()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mode_validation_rejects_bad_indices() {
        assert!(ModeSpec::one_d(0, 0.0, 1.0).is_err());
        assert!(ModeSpec::te(0, 0, 1, 1.0).is_err());
        assert!(ModeSpec::te(1, 1, 0, 1.0).is_err());
        assert!(ModeSpec::tm(0, 1, 1, 1.0).is_err());
        assert!(ModeSpec::tm(1, 0, 1, 1.0).is_err());
        assert!(ModeSpec::te(0, 1, 1, 1.0).is_ok());
        assert!(ModeSpec::tm(1, 1, 0, 1.0).is_ok());
    }

    #[test]
    fn assemble_rejects_bad_pump_counts() {
        let g = cube();
        assert!(matches!(assemble(&g, &[]), Err(CavityError::BadPumpCount(0))));
        let m = ModeSpec::one_d(1, 0.0, 1.0).unwrap();
        assert!(matches!(assemble(&g, &[m, m, m]), Err(CavityError::BadPumpCount(3))));
    }

    #[test]
    fn eigenfrequency_agrees_with_registered_omega() {
        let g = CavityGeometry::new(0.9, 1.4, 2.2).unwrap();
        let spec = ModeSpec::te(2, 0, 1, 1.0).unwrap();
        let setup = assemble(&g, &[spec]).unwrap();
        let w = g.eigenfrequency(spec.indices).unwrap();
        assert_eq!(w, setup.basis.omega(0));
    }
}
