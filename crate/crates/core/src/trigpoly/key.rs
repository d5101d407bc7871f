//! Integer-lattice harmonic keys.
//!
//! A key identifies one basis function
//! `h((c₁ω₁+c₂ω₂)t) · h(m_x u_x x) · h(m_y u_y y) · h(m_z u_z z)`
//! where each `h` is sin or cos, `(c₁, c₂)` are integer multipliers of the
//! two pump frequencies and `m_α` is an integer harmonic number on the
//! spatial axis α (unit `u_α = π/L_α`, shared by both pumps since they live
//! in the same cavity). All irrational content stays in [`LatticeBasis`];
//! keys are pure integers, so equal arguments always merge exactly.
//!
//! [`LatticeBasis`]: super::LatticeBasis

use serde::Serialize;

/// Sine/cosine selector of one harmonic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Parity {
    Cos,
    Sin,
}

impl Parity {
    /// Evaluate the factor at phase `arg`.
    pub fn apply(self, arg: f64) -> f64 {
        match self {
            Parity::Cos => arg.cos(),
            Parity::Sin => arg.sin(),
        }
    }
}

/// Spatial axis of the cavity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        match self {
            Axis::X => 0,
            Axis::Y => 1,
            Axis::Z => 2,
        }
    }
}

/// A differentiation / evaluation coordinate: time or one spatial axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coord {
    T,
    X,
    Y,
    Z,
}

impl Coord {
    pub fn axis(self) -> Option<Axis> {
        match self {
            Coord::T => None,
            Coord::X => Some(Axis::X),
            Coord::Y => Some(Axis::Y),
            Coord::Z => Some(Axis::Z),
        }
    }
}

impl From<Axis> for Coord {
    fn from(a: Axis) -> Self {
        match a {
            Axis::X => Coord::X,
            Axis::Y => Coord::Y,
            Axis::Z => Coord::Z,
        }
    }
}

/// Time factor `h((c₁ω₁ + c₂ω₂) t)`.
///
/// Canonical form: the first nonzero coefficient is positive (a sign flip is
/// absorbed into the term amplitude via sin oddness / cos evenness), and the
/// all-zero sin key does not occur (it is identically zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TimeWave {
    pub coeffs: [i32; 2],
    pub parity: Parity,
}

impl TimeWave {
    pub const CONST: TimeWave = TimeWave { coeffs: [0, 0], parity: Parity::Cos };

    pub fn is_constant(self) -> bool {
        self.coeffs == [0, 0]
    }
}

/// Spatial factor `h(m u_α x_α)` with integer harmonic number `m`.
///
/// Canonical form: `m ≥ 0`, and `m = 0` only with cos parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AxisWave {
    pub harmonic: i32,
    pub parity: Parity,
}

impl AxisWave {
    pub const CONST: AxisWave = AxisWave { harmonic: 0, parity: Parity::Cos };

    pub fn is_constant(self) -> bool {
        self.harmonic == 0
    }
}

/// Full key of one trigonometric term: a time factor and three axis factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct HarmonicKey {
    pub time: TimeWave,
    pub space: [AxisWave; 3],
}

impl HarmonicKey {
    /// The constant key `cos(0)·cos(0)·cos(0)·cos(0)`.
    pub const CONST: HarmonicKey =
        HarmonicKey { time: TimeWave::CONST, space: [AxisWave::CONST; 3] };

    pub fn axis(&self, axis: Axis) -> AxisWave {
        self.space[axis.index()]
    }

    /// Integer wavenumber triple `(m_x, m_y, m_z)`; canonical keys are
    /// nonnegative, i.e. valid cavity mode indices.
    pub fn wavenumbers(&self) -> [i32; 3] {
        [self.space[0].harmonic, self.space[1].harmonic, self.space[2].harmonic]
    }

    /// True when the time coefficients are `±(3,0)` or `±(0,3)`: a third
    /// harmonic of one pump.
    pub fn is_third_harmonic(&self) -> bool {
        let [c1, c2] = self.time.coeffs;
        (c1.abs() == 3 && c2 == 0) || (c1 == 0 && c2.abs() == 3)
    }

    /// True when the time coefficients are of the `2ωᵢ ± ωⱼ` mixing type.
    pub fn is_combined_frequency(&self) -> bool {
        let [c1, c2] = self.time.coeffs;
        (c1.abs() == 2 && c2.abs() == 1) || (c1.abs() == 1 && c2.abs() == 2)
    }

    /// True for the "plus" combination `2ωᵢ + ωⱼ` (both coefficients carry
    /// the same sign in canonical form).
    pub fn is_plus_combination(&self) -> bool {
        let [c1, c2] = self.time.coeffs;
        self.is_combined_frequency() && c1.signum() * c2.signum() > 0
    }

    /// Human-readable frequency label, e.g. `w1`, `3w1`, `2w1-w2`.
    ///
    /// With `single_pump` the slot index is dropped (`w`, `3w`).
    pub fn frequency_label(&self, single_pump: bool) -> String {
        time_label(self.time.coeffs, single_pump)
    }
}

pub(crate) fn time_label(coeffs: [i32; 2], single_pump: bool) -> String {
    let sym = |slot: usize| -> String {
        if single_pump {
            "w".to_string()
        } else {
            format!("w{}", slot + 1)
        }
    };
    let mut out = String::new();
    for (slot, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push(if c < 0 { '-' } else { '+' });
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&sym(slot));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
