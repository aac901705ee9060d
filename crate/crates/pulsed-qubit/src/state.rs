// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! Qubit state representations: coherent-state angles, Bloch vectors,
//! density matrices, and the closed-form 2x2 eigensystem.
//!
//! Conventions are fixed once here and shared by every other module. The
//! basis is ordered (|0> ground, |1> excited), the Pauli matrices are
//! normalized so u_i = <sigma_i> lies in [-1, 1], and the atomic coherent
//! state |theta, phi> = cos(theta/2)|0> + e^{-i phi} sin(theta/2)|1> maps to
//! the Bloch vector (sin theta cos phi, sin theta sin phi, -cos theta).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// sigma_x in the ordered basis (|0>, |1>).
pub const SIGMA_X: [[Complex64; 2]; 2] = [[ZERO, ONE], [ONE, ZERO]];

/// sigma_y; the sign is tied to sigma_+ = |1><0| through
/// sigma_± = (sigma_x ± i sigma_y)/2.
pub const SIGMA_Y: [[Complex64; 2]; 2] = [[ZERO, I], [Complex64::new(0.0, -1.0), ZERO]];

/// sigma_z = diag(-1, +1): the ground state has u_z = -1.
pub const SIGMA_Z: [[Complex64; 2]; 2] = [[Complex64::new(-1.0, 0.0), ZERO], [ZERO, ONE]];

/// Raising operator sigma_+ = |1><0|.
pub const SIGMA_PLUS: [[Complex64; 2]; 2] = [[ZERO, ZERO], [ONE, ZERO]];

/// Lowering operator sigma_- = |0><1|.
pub const SIGMA_MINUS: [[Complex64; 2]; 2] = [[ZERO, ONE], [ZERO, ZERO]];

/// Polar and azimuthal angles of an atomic coherent state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateAngles {
    /// Polar angle in [0, pi].
    pub theta: f64,
    /// Azimuthal angle, reduced into [0, 2*pi) on construction.
    pub phi: f64,
}

impl StateAngles {
    /// Validates theta and reduces phi mod 2*pi.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta)
        {
            return Err(Error::InvalidAngles { theta });
        }
        let phi = phi.rem_euclid(2.0 * std::f64::consts::PI);
        Ok(Self { theta, phi })
    }

    /// Initial Bloch vector of |theta, phi>:
    /// (sin theta cos phi, sin theta sin phi, -cos theta).
    pub fn bloch(&self) -> BlochVector {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        BlochVector::new(st * cp, st * sp, -ct)
    }
}

/// Vector of Pauli expectation values (u_x, u_y, u_z).
///
/// The type itself does not restrict the norm: the first-order iterative
/// propagator legitimately produces |u| slightly above 1, and norm checks
/// belong to the point where a density matrix is built.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn scaled(&self, s: f64) -> BlochVector {
        BlochVector::new(s * self.x, s * self.y, s * self.z)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

/// Eigendecomposition of a qubit density matrix, ordered by descending
/// eigenvalue.
///
/// `vectors[k]` is the normalized eigenvector for `values[k]`, with the
/// global phase fixed so the first component of modulus above 1e-8 is real
/// and non-negative.
#[derive(Debug, Clone, Copy)]
pub struct Eigensystem {
    pub values: [f64; 2],
    pub vectors: [[Complex64; 2]; 2],
}

/// A single-qubit density matrix rho = (I + u . sigma)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitDensity {
    m: [[Complex64; 2]; 2],
}

impl QubitDensity {
    /// Builds rho from a Bloch vector. Norms up to 1 + `tol::NORM_SLACK`
    /// are admitted (rounding in upstream closed forms); anything larger is
    /// rejected as non-physical.
    pub fn from_bloch(u: BlochVector) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::NonPhysicalState { norm: f64::NAN });
        }
        let norm = u.norm();
        if norm > 1.0 + tol::NORM_SLACK {
            return Err(Error::NonPhysicalState { norm });
        }
        Ok(Self::build(u))
    }

    /// Like [`from_bloch`](Self::from_bloch), but rescales any |u| > 1 back
    /// onto the unit sphere. This is the explicit opt-in for trajectories of
    /// the truncated O(lambda) propagator.
    pub fn from_bloch_clamped(u: BlochVector) -> Result<Self> {
        if !u.is_finite() {
            return Err(Error::NonPhysicalState { norm: f64::NAN });
        }
        let norm = u.norm();
        let u = if norm > 1.0 { u.scaled(1.0 / norm) } else { u };
        Ok(Self::build(u))
    }

    fn build(u: BlochVector) -> Self {
        let half = 0.5;
        Self {
            m: [
                [
                    Complex64::new(half * (1.0 - u.z), 0.0),
                    Complex64::new(half * u.x, half * u.y),
                ],
                [
                    Complex64::new(half * u.x, -half * u.y),
                    Complex64::new(half * (1.0 + u.z), 0.0),
                ],
            ],
        }
    }

    /// Builds rho from explicit entries, enforcing hermiticity, unit trace,
    /// and positivity within the documented tolerances.
    pub fn from_entries(m: [[Complex64; 2]; 2]) -> Result<Self> {
        for row in &m {
            for e in row {
                if !e.re.is_finite() || !e.im.is_finite() {
                    return Err(Error::InvalidDensity("non-finite entry".into()));
                }
            }
        }
        if m[0][0].im.abs() > tol::HERMITICITY
            || m[1][1].im.abs() > tol::HERMITICITY
            || (m[0][1] - m[1][0].conj()).norm() > tol::HERMITICITY
        {
            return Err(Error::InvalidDensity(format!(
                "hermiticity violated by {:e}",
                (m[0][1] - m[1][0].conj()).norm()
            )));
        }
        let trace = m[0][0].re + m[1][1].re;
        if (trace - 1.0).abs() > tol::TRACE {
            return Err(Error::InvalidDensity(format!(
                "trace = {trace}, expected 1"
            )));
        }
        // Closed-form eigenvalues: 1/2 ± sqrt((rho00 - rho11)^2/4 + |rho01|^2).
        let r = ((m[0][0].re - m[1][1].re) / 2.0).hypot(m[0][1].norm());
        if 0.5 - r < tol::POSITIVITY {
            return Err(Error::InvalidDensity(format!(
                "negative eigenvalue {:e}",
                0.5 - r
            )));
        }
        Ok(Self { m })
    }

    /// Matrix entry, row-major.
    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.m[row][col]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0].re + self.m[1][1].re
    }

    /// Bloch vector u_i = tr(rho sigma_i).
    pub fn bloch(&self) -> BlochVector {
        BlochVector::new(
            2.0 * self.m[0][1].re,
            2.0 * self.m[0][1].im,
            self.m[1][1].re - self.m[0][0].re,
        )
    }

    /// Purity tr(rho^2) = (1 + |u|^2)/2.
    pub fn purity(&self) -> f64 {
        self.m[0][0].norm_sqr() + self.m[1][1].norm_sqr() + 2.0 * self.m[0][1].norm_sqr()
    }

    /// Closed-form eigendecomposition.
    ///
    /// Eigenvalues are (1 + |u|)/2 and (1 - |u|)/2 in that order. The branch
    /// used for the eigenvectors switches on the sign of u_z/|u| so the
    /// normalizing denominator stays away from zero. States with
    /// |u| < `tol::DEGENERACY` have no preferred eigenbasis and are rejected.
    pub fn eigensystem(&self) -> Result<Eigensystem> {
        let u = self.bloch();
        let r = u.norm();
        if r < tol::DEGENERACY {
            return Err(Error::DegenerateState {
                norm: r,
                floor: tol::DEGENERACY,
            });
        }
        let n = u.scaled(1.0 / r);
        let plus = if n.z > 0.0 {
            let d = (2.0 * (1.0 + n.z)).sqrt();
            [
                Complex64::new(n.x / d, n.y / d),
                Complex64::new((1.0 + n.z) / d, 0.0),
            ]
        } else {
            let d = (2.0 * (1.0 - n.z)).sqrt();
            [
                Complex64::new((1.0 - n.z) / d, 0.0),
                Complex64::new(n.x / d, -n.y / d),
            ]
        };
        // The second eigenvector spans the orthogonal complement; the phase
        // rule below then makes it unique.
        let minus = [-plus[1].conj(), plus[0].conj()];
        Ok(Eigensystem {
            values: [(1.0 + r) / 2.0, (1.0 - r) / 2.0],
            vectors: [fix_phase(plus), fix_phase(minus)],
        })
    }
}

/// Rotates a global phase so the first component with modulus above 1e-8 is
/// real and non-negative.
fn fix_phase(v: [Complex64; 2]) -> [Complex64; 2] {
    let pivot = if v[0].norm() > tol::PHASE_PIVOT {
        v[0]
    } else {
        v[1]
    };
    let mag = pivot.norm();
    if mag == 0.0 {
        return v;
    }
    let phase = pivot.conj() / mag;
    [v[0] * phase, v[1] * phase]
}
