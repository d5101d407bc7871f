//! Three-component trigonometric vector fields and the differential
//! operators needed by the wave equations: curl, divergence, gradient,
//! Laplacian and d'Alembertian.

use super::basis::LatticeBasis;
use super::key::{Axis, Coord};
use super::poly::{SpacetimePoint, TrigPoly};

/// A vector field whose components are trigonometric polynomials. Houses
/// E, B, P and M.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VectorTrigField {
    pub components: [TrigPoly; 3],
}

impl VectorTrigField {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(x: TrigPoly, y: TrigPoly, z: TrigPoly) -> Self {
        VectorTrigField { components: [x, y, z] }
    }

    pub fn component(&self, axis: Axis) -> &TrigPoly {
        &self.components[axis.index()]
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(TrigPoly::is_empty)
    }

    pub fn max_abs_amplitude(&self) -> f64 {
        self.components.iter().map(TrigPoly::max_abs_amplitude).fold(0.0, f64::max)
    }

    pub fn add(&self, other: &VectorTrigField) -> VectorTrigField {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &VectorTrigField) -> VectorTrigField {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: f64) -> VectorTrigField {
        self.map(|c| c.scale(factor))
    }

    /// Componentwise product with a scalar polynomial.
    pub fn scaled_by(&self, scalar: &TrigPoly) -> VectorTrigField {
        self.map(|c| c * scalar)
    }

    /// Scalar product `Σ aᵢ·bᵢ`, merged through one accumulator.
    pub fn dot(&self, other: &VectorTrigField) -> TrigPoly {
        let products: Vec<TrigPoly> = Axis::ALL
            .iter()
            .map(|&a| self.component(a) * other.component(a))
            .collect();
        TrigPoly::linear_combination(&[
            (1.0, &products[0]),
            (1.0, &products[1]),
            (1.0, &products[2]),
        ])
    }

    pub fn eval(&self, point: SpacetimePoint, basis: &LatticeBasis) -> [f64; 3] {
        [
            self.components[0].eval(point, basis),
            self.components[1].eval(point, basis),
            self.components[2].eval(point, basis),
        ]
    }

    pub fn map(&self, mut f: impl FnMut(&TrigPoly) -> TrigPoly) -> VectorTrigField {
        VectorTrigField {
            components: [
                f(&self.components[0]),
                f(&self.components[1]),
                f(&self.components[2]),
            ],
        }
    }

    fn zip(
        &self,
        other: &VectorTrigField,
        mut f: impl FnMut(&TrigPoly, &TrigPoly) -> TrigPoly,
    ) -> VectorTrigField {
        VectorTrigField {
            components: [
                f(&self.components[0], &other.components[0]),
                f(&self.components[1], &other.components[1]),
                f(&self.components[2], &other.components[2]),
            ],
        }
    }
}

fn d(f: &TrigPoly, c: Coord, basis: &LatticeBasis) -> TrigPoly {
    f.differentiate(c, basis)
}

/// ∇×F
pub fn curl(f: &VectorTrigField, basis: &LatticeBasis) -> VectorTrigField {
    let [fx, fy, fz] = &f.components;
    VectorTrigField::new(
        &d(fz, Coord::Y, basis) - &d(fy, Coord::Z, basis),
        &d(fx, Coord::Z, basis) - &d(fz, Coord::X, basis),
        &d(fy, Coord::X, basis) - &d(fx, Coord::Y, basis),
    )
}

/// ∇·F
pub fn divergence(f: &VectorTrigField, basis: &LatticeBasis) -> TrigPoly {
    let dx = d(&f.components[0], Coord::X, basis);
    let dy = d(&f.components[1], Coord::Y, basis);
    let dz = d(&f.components[2], Coord::Z, basis);
    TrigPoly::linear_combination(&[(1.0, &dx), (1.0, &dy), (1.0, &dz)])
}

/// ∇φ
pub fn gradient(f: &TrigPoly, basis: &LatticeBasis) -> VectorTrigField {
    VectorTrigField::new(
        d(f, Coord::X, basis),
        d(f, Coord::Y, basis),
        d(f, Coord::Z, basis),
    )
}

/// Δφ = ∂²ₓφ + ∂²ᵧφ + ∂²_zφ
pub fn laplacian(f: &TrigPoly, basis: &LatticeBasis) -> TrigPoly {
    let dxx = d(&d(f, Coord::X, basis), Coord::X, basis);
    let dyy = d(&d(f, Coord::Y, basis), Coord::Y, basis);
    let dzz = d(&d(f, Coord::Z, basis), Coord::Z, basis);
    TrigPoly::linear_combination(&[(1.0, &dxx), (1.0, &dyy), (1.0, &dzz)])
}

/// □φ = ∂²ₜφ − Δφ.
///
/// All four second derivatives feed one accumulator, so a free wave (where
/// the time and space rates cancel exactly up to roundoff) reduces to the
/// empty polynomial.
pub fn dalembertian(f: &TrigPoly, basis: &LatticeBasis) -> TrigPoly {
    let dtt = d(&d(f, Coord::T, basis), Coord::T, basis);
    let dxx = d(&d(f, Coord::X, basis), Coord::X, basis);
    let dyy = d(&d(f, Coord::Y, basis), Coord::Y, basis);
    let dzz = d(&d(f, Coord::Z, basis), Coord::Z, basis);
    TrigPoly::linear_combination(&[(1.0, &dtt), (-1.0, &dxx), (-1.0, &dyy), (-1.0, &dzz)])
}

/// Componentwise Laplacian.
pub fn laplacian_vec(f: &VectorTrigField, basis: &LatticeBasis) -> VectorTrigField {
    f.map(|c| laplacian(c, basis))
}

/// Componentwise d'Alembertian.
pub fn dalembertian_vec(f: &VectorTrigField, basis: &LatticeBasis) -> VectorTrigField {
    f.map(|c| dalembertian(c, basis))
}

/// Componentwise time derivative.
pub fn d_time(f: &VectorTrigField, basis: &LatticeBasis) -> VectorTrigField {
    f.map(|c| c.differentiate(Coord::T, basis))
}
