//! Canonical trigonometric polynomials and their ring/differential operations.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use thiserror::Error;

use super::basis::LatticeBasis;
use super::key::{Axis, AxisWave, Coord, HarmonicKey, Parity, TimeWave};

/// Relative drop threshold: a term is deleted when its magnitude is at or
/// below this fraction of the largest contribution it was merged from (and,
/// after merging, of the largest surviving amplitude). Cancellations in the
/// cubic expansions are exact in infinite precision; this separates true
/// zeros from roundoff residue.
pub const DROP_TOLERANCE: f64 = 1e-12;

/// Tolerance of the rational-snap utility.
pub const SNAP_TOLERANCE: f64 = 1e-9;

/// Largest denominator the rational-snap utility will accept.
pub const SNAP_MAX_DENOMINATOR: i64 = 16;

#[derive(Debug, Error)]
pub enum SnapError {
    #[error("scale must be nonzero and finite, got {0}")]
    InvalidScale(f64),
    #[error("amplitude ratio {0} is not within {SNAP_TOLERANCE} of a rational with denominator <= {SNAP_MAX_DENOMINATOR}")]
    NoRational(f64),
}

/// A spacetime evaluation point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimePoint {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        SpacetimePoint { t, x, y, z }
    }

    fn spatial(&self, axis: Axis) -> f64 {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }
}

/// One canonical term: amplitude times the key's basis function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigTerm {
    pub key: HarmonicKey,
    pub amplitude: f64,
}

/// An uncanonicalized term, as produced by constructors and tests.
///
/// Defaults to the constant function: cos parity with zero coefficients in
/// every coordinate.
#[derive(Debug, Clone, Copy)]
pub struct RawTerm {
    pub amplitude: f64,
    pub time: (Parity, [i32; 2]),
    pub space: [(Parity, i32); 3],
}

impl RawTerm {
    pub fn new(amplitude: f64) -> Self {
        RawTerm {
            amplitude,
            time: (Parity::Cos, [0, 0]),
            space: [(Parity::Cos, 0); 3],
        }
    }

    pub fn time(mut self, parity: Parity, coeffs: [i32; 2]) -> Self {
        self.time = (parity, coeffs);
        self
    }

    pub fn axis(mut self, axis: Axis, parity: Parity, harmonic: i32) -> Self {
        self.space[axis.index()] = (parity, harmonic);
        self
    }

    pub fn x(self, parity: Parity, harmonic: i32) -> Self {
        self.axis(Axis::X, parity, harmonic)
    }

    pub fn y(self, parity: Parity, harmonic: i32) -> Self {
        self.axis(Axis::Y, parity, harmonic)
    }

    pub fn z(self, parity: Parity, harmonic: i32) -> Self {
        self.axis(Axis::Z, parity, harmonic)
    }
}

/// Sign-normalize a raw term over the given basis.
///
/// Returns the canonical term, or `None` when the term is identically zero:
/// a sin factor with zero argument, or a vanishing amplitude. Sign flips of
/// the integer content are absorbed into the amplitude (sin is odd, cos is
/// even).
pub fn canonicalize(raw: RawTerm, basis: &LatticeBasis) -> Option<TrigTerm> {
    let mut reduced = raw;
    reduced.time.1 = basis.reduce_time_coeffs(raw.time.1);
    canonicalize_reduced(reduced)
}

/// Merging accumulator. Tracks, per key, the largest contribution magnitude
/// so that sums cancelling to roundoff residue are recognized as exact zeros.
#[derive(Debug, Default)]
pub(crate) struct PolyAccumulator {
    slots: BTreeMap<HarmonicKey, (f64, f64)>,
}

impl PolyAccumulator {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn push(&mut self, key: HarmonicKey, amplitude: f64) {
        if amplitude == 0.0 {
            return;
        }
        let slot = self.slots.entry(key).or_insert((0.0, 0.0));
        slot.0 += amplitude;
        slot.1 = slot.1.max(amplitude.abs());
    }

    pub(crate) fn push_raw(&mut self, raw: RawTerm, basis: &LatticeBasis) {
        if let Some(term) = canonicalize(raw, basis) {
            self.push(term.key, term.amplitude);
        }
    }

    pub(crate) fn finish(self) -> TrigPoly {
        let mut terms: BTreeMap<HarmonicKey, f64> = self
            .slots
            .into_iter()
            .filter(|(_, (sum, max_contrib))| sum.abs() > DROP_TOLERANCE * max_contrib)
            .map(|(key, (sum, _))| (key, sum))
            .collect();
        let scale = terms.values().fold(0.0_f64, |m, a| m.max(a.abs()));
        terms.retain(|_, a| a.abs() > DROP_TOLERANCE * scale);
        TrigPoly { terms }
    }
}

/// A finite sum of canonical trigonometric terms, unique by key.
///
/// Values are immutable after construction; all operations are pure and the
/// representation is ordered, so results are deterministic regardless of
/// evaluation schedule.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrigPoly {
    terms: BTreeMap<HarmonicKey, f64>,
}

impl TrigPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant polynomial `c`.
    pub fn constant(c: f64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0.0 {
            terms.insert(HarmonicKey::CONST, c);
        }
        TrigPoly { terms }
    }

    pub fn from_raw_terms<I>(raw: I, basis: &LatticeBasis) -> Self
    where
        I: IntoIterator<Item = RawTerm>,
    {
        let mut acc = PolyAccumulator::new();
        for r in raw {
            acc.push_raw(r, basis);
        }
        acc.finish()
    }

    pub fn from_term(term: TrigTerm) -> Self {
        let mut terms = BTreeMap::new();
        if term.amplitude != 0.0 {
            terms.insert(term.key, term.amplitude);
        }
        TrigPoly { terms }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn amplitude(&self, key: &HarmonicKey) -> Option<f64> {
        self.terms.get(key).copied()
    }

    pub fn max_abs_amplitude(&self) -> f64 {
        self.terms.values().fold(0.0_f64, |m, a| m.max(a.abs()))
    }

    pub fn terms(&self) -> impl Iterator<Item = TrigTerm> + '_ {
        self.terms.iter().map(|(key, amp)| TrigTerm { key: *key, amplitude: *amp })
    }

    /// Weighted sum `Σ cᵢ·pᵢ` merged through a single accumulator, so that
    /// cancellations spread across the inputs are detected against the
    /// largest contribution rather than the (possibly tiny) result.
    pub fn linear_combination(parts: &[(f64, &TrigPoly)]) -> TrigPoly {
        let mut acc = PolyAccumulator::new();
        for &(coeff, poly) in parts {
            if coeff == 0.0 {
                continue;
            }
            for (key, amp) in &poly.terms {
                acc.push(*key, coeff * amp);
            }
        }
        acc.finish()
    }

    pub fn scale(&self, factor: f64) -> TrigPoly {
        TrigPoly::linear_combination(&[(factor, self)])
    }

    /// Exact product via the product-to-sum identities. Each coordinate pair
    /// of factors expands into two half-amplitude harmonics with summed and
    /// differenced integer content; a term pair therefore contributes up to
    /// sixteen raw terms, which are canonicalized and merged.
    pub fn multiply(&self, other: &TrigPoly) -> TrigPoly {
        let mut acc = PolyAccumulator::new();
        for (ka, &aa) in &self.terms {
            for (kb, &ab) in &other.terms {
                expand_product(*ka, aa, *kb, ab, &mut acc);
            }
        }
        acc.finish()
    }

    /// Partial derivative along `coord`. Each term's amplitude is multiplied
    /// by its angular rate and the parity toggles (sin → cos, cos → −sin);
    /// integer content is unchanged, so the result is canonical.
    pub fn differentiate(&self, coord: Coord, basis: &LatticeBasis) -> TrigPoly {
        let mut acc = PolyAccumulator::new();
        for (key, &amp) in &self.terms {
            let (parity, harmonic) = match coord.axis() {
                None => (key.time.parity, 0),
                Some(axis) => {
                    let w = key.axis(axis);
                    (w.parity, w.harmonic)
                }
            };
            let rate = basis.rate(coord, key.time.coeffs, harmonic);
            if rate == 0.0 {
                continue;
            }
            let (new_parity, new_amp) = match parity {
                Parity::Sin => (Parity::Cos, amp * rate),
                Parity::Cos => (Parity::Sin, -amp * rate),
            };
            let mut new_key = *key;
            match coord.axis() {
                None => new_key.time.parity = new_parity,
                Some(axis) => new_key.space[axis.index()].parity = new_parity,
            }
            acc.push(new_key, new_amp);
        }
        acc.finish()
    }

    /// Numeric value at a spacetime point.
    pub fn eval(&self, point: SpacetimePoint, basis: &LatticeBasis) -> f64 {
        let mut sum = 0.0;
        for (key, &amp) in &self.terms {
            let mut v = amp * key.time.parity.apply(basis.time_rate(key.time.coeffs) * point.t);
            for axis in Axis::ALL {
                let w = key.axis(axis);
                v *= w.parity.apply(basis.axis_rate(axis, w.harmonic) * point.spatial(axis));
            }
            sum += v;
        }
        sum
    }

    /// Divide every amplitude by `scale` and snap the ratios to rationals
    /// with denominator at most [`SNAP_MAX_DENOMINATOR`]. Fails when any
    /// ratio is farther than [`SNAP_TOLERANCE`] from such a rational —
    /// exact paper coefficients stay checkable without a symbolic
    /// coefficient field.
    pub fn snap_to_rationals(
        &self,
        scale: f64,
    ) -> Result<Vec<(HarmonicKey, Rational64)>, SnapError> {
        if scale == 0.0 || !scale.is_finite() {
            return Err(SnapError::InvalidScale(scale));
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (key, &amp) in &self.terms {
            let ratio = amp / scale;
            out.push((*key, snap_value(ratio)?));
        }
        Ok(out)
    }
}

pub(crate) fn snap_value(ratio: f64) -> Result<Rational64, SnapError> {
    for den in 1..=SNAP_MAX_DENOMINATOR {
        let num = (ratio * den as f64).round();
        if num.abs() > i64::MAX as f64 / 2.0 {
            return Err(SnapError::NoRational(ratio));
        }
        if (ratio - num / den as f64).abs() <= SNAP_TOLERANCE {
            return Ok(Rational64::new(num as i64, den));
        }
    }
    Err(SnapError::NoRational(ratio))
}

/// Expand the product of two canonical terms into the accumulator.
fn expand_product(ka: HarmonicKey, aa: f64, kb: HarmonicKey, ab: f64, acc: &mut PolyAccumulator) {
    // Two options per coordinate, from
    //   sin a sin b = ½[cos(a−b) − cos(a+b)]
    //   cos a cos b = ½[cos(a−b) + cos(a+b)]
    //   sin a cos b = ½[sin(a+b) + sin(a−b)]
    //   cos a sin b = ½[sin(a+b) − sin(a−b)]
    fn options(pa: Parity, pb: Parity) -> [(Parity, bool, f64); 2] {
        // (result parity, use sum of integer content, half-amplitude sign)
        match (pa, pb) {
            (Parity::Sin, Parity::Sin) => [(Parity::Cos, false, 0.5), (Parity::Cos, true, -0.5)],
            (Parity::Cos, Parity::Cos) => [(Parity::Cos, false, 0.5), (Parity::Cos, true, 0.5)],
            (Parity::Sin, Parity::Cos) => [(Parity::Sin, true, 0.5), (Parity::Sin, false, 0.5)],
            (Parity::Cos, Parity::Sin) => [(Parity::Sin, true, 0.5), (Parity::Sin, false, -0.5)],
        }
    }

    let t_opts = options(ka.time.parity, kb.time.parity);
    let x_opts = options(ka.space[0].parity, kb.space[0].parity);
    let y_opts = options(ka.space[1].parity, kb.space[1].parity);
    let z_opts = options(ka.space[2].parity, kb.space[2].parity);

    for &(tp, t_sum, tf) in &t_opts {
        let t_coeffs = combine2(ka.time.coeffs, kb.time.coeffs, t_sum);
        for &(xp, x_sum, xf) in &x_opts {
            let mx = combine1(ka.space[0].harmonic, kb.space[0].harmonic, x_sum);
            for &(yp, y_sum, yf) in &y_opts {
                let my = combine1(ka.space[1].harmonic, kb.space[1].harmonic, y_sum);
                for &(zp, z_sum, zf) in &z_opts {
                    let mz = combine1(ka.space[2].harmonic, kb.space[2].harmonic, z_sum);
                    let raw = RawTerm {
                        amplitude: aa * ab * tf * xf * yf * zf,
                        time: (tp, t_coeffs),
                        space: [(xp, mx), (yp, my), (zp, mz)],
                    };
                    // Operands are canonical, so no degenerate-slot reduction
                    // is needed here; sign normalization suffices.
                    if let Some(term) = canonicalize_reduced(raw) {
                        acc.push(term.key, term.amplitude);
                    }
                }
            }
        }
    }
}

/// Canonicalize a raw term whose time coefficients are already reduced over
/// degenerate slots (true for any combination of canonical keys).
fn canonicalize_reduced(raw: RawTerm) -> Option<TrigTerm> {
    let mut amplitude = raw.amplitude;
    let (t_parity, mut t_coeffs) = raw.time;
    if t_coeffs == [0, 0] {
        if t_parity == Parity::Sin {
            return None;
        }
    } else {
        let lead = if t_coeffs[0] != 0 { t_coeffs[0] } else { t_coeffs[1] };
        if lead < 0 {
            t_coeffs = [-t_coeffs[0], -t_coeffs[1]];
            if t_parity == Parity::Sin {
                amplitude = -amplitude;
            }
        }
    }
    let mut space = [AxisWave::CONST; 3];
    for i in 0..3 {
        let (parity, mut m) = raw.space[i];
        if m == 0 {
            if parity == Parity::Sin {
                return None;
            }
        } else if m < 0 {
            m = -m;
            if parity == Parity::Sin {
                amplitude = -amplitude;
            }
        }
        space[i] = AxisWave { harmonic: m, parity };
    }
    if amplitude == 0.0 {
        return None;
    }
    Some(TrigTerm {
        key: HarmonicKey { time: TimeWave { coeffs: t_coeffs, parity: t_parity }, space },
        amplitude,
    })
}

fn combine2(a: [i32; 2], b: [i32; 2], sum: bool) -> [i32; 2] {
    if sum {
        [a[0] + b[0], a[1] + b[1]]
    } else {
        [a[0] - b[0], a[1] - b[1]]
    }
}

fn combine1(a: i32, b: i32, sum: bool) -> i32 {
    if sum {
        a + b
    } else {
        a - b
    }
}

impl Add for &TrigPoly {
    type Output = TrigPoly;

    fn add(self, rhs: &TrigPoly) -> TrigPoly {
        TrigPoly::linear_combination(&[(1.0, self), (1.0, rhs)])
    }
}

impl Sub for &TrigPoly {
    type Output = TrigPoly;

    fn sub(self, rhs: &TrigPoly) -> TrigPoly {
        TrigPoly::linear_combination(&[(1.0, self), (-1.0, rhs)])
    }
}

impl Neg for &TrigPoly {
    type Output = TrigPoly;

    fn neg(self) -> TrigPoly {
        self.scale(-1.0)
    }
}

impl Mul for &TrigPoly {
    type Output = TrigPoly;

    fn mul(self, rhs: &TrigPoly) -> TrigPoly {
        self.multiply(rhs)
    }
}

impl Mul<f64> for &TrigPoly {
    type Output = TrigPoly;

    fn mul(self, rhs: f64) -> TrigPoly {
        self.scale(rhs)
    }
}
