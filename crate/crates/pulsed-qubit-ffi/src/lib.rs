// Copyright 2026 pulsed-qubit Contributors
// SPDX-License-Identifier: Apache-2.0

//! C ABI for the pulsed-qubit library.
//!
//! The surface follows the usual conventions for C bindings:
//!
//! * Objects live behind opaque handles (`PqDrive`, `PqTrajectory`)
//!   created by `pq_*_new` and released by the matching `pq_*_free`.
//!   Freeing a null handle is a no-op; every other null pointer is
//!   reported as `PQ_STATUS_NULL_POINTER`.
//! * Every fallible call returns a `PqStatus`; outputs are written through
//!   caller-provided pointers only when the status is `PQ_STATUS_OK`.
//! * On failure, `pq_last_error_message` returns a thread-local,
//!   NUL-terminated description. The pointer stays valid until the next
//!   failing call on the same thread.
//! * Panics cannot unwind across the boundary; they surface as
//!   `PQ_STATUS_INTERNAL`.
//!
//! Times are exchanged on the scaled axis `tau = Omega * t`, matching the
//! rest of the library, so every drive used through this interface needs
//! `Omega > 0`.

use std::cell::RefCell;
use std::ffi::CString;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

use pulsed_qubit::{
    exchange_information, fidelity, nonrwa_matrix, orthogonality_overlaps, rwa_matrix, trajectory,
    BlochVector, DriveConfig, Error, ExchangeMode, QubitDensity, Scheme, StateAngles, TimeGrid,
};

/// Status code returned by every fallible ABI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PqStatus {
    /// The call succeeded and all outputs are valid.
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A value argument violates its documented domain.
    InvalidArgument = 2,
    /// The requested time lies outside the rectangular pulse.
    OutOfPulse = 3,
    /// The first-order scheme is only derived at exact resonance.
    RequiresResonance = 4,
    /// A maximally mixed state has no distinguished eigenbasis.
    DegenerateState = 5,
    /// An unexpected internal failure; see `pq_last_error_message`.
    Internal = 6,
}

/// Evolution scheme selector for `pq_evolve` and `pq_trajectory_new`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PqScheme {
    /// Exact closed form in the rotating-wave approximation.
    Rwa = 0,
    /// First-order iterative propagator with counter-rotating terms.
    NonRwa = 1,
}

/// Exchange-information entropy selector for `pq_exchange_information`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PqExchangeMode {
    /// Von Neumann entropy of the evolved state.
    VonNeumann = 0,
    /// -F ln F of the transfer fidelity.
    FidelityXlnX = 1,
    /// Binary entropy of the transfer fidelity.
    FidelityBinary = 2,
}

/// Opaque handle to a validated drive configuration.
pub struct PqDrive {
    inner: DriveConfig,
}

/// Opaque handle to a sampled Bloch-vector evolution.
pub struct PqTrajectory {
    samples: Vec<(f64, BlochVector)>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> PqStatus {
    match e {
        Error::OutOfPulse { .. } => PqStatus::OutOfPulse,
        Error::RequiresResonance { .. } => PqStatus::RequiresResonance,
        Error::DegenerateState { .. } => PqStatus::DegenerateState,
        Error::Io(_) => PqStatus::Internal,
        _ => PqStatus::InvalidArgument,
    }
}

fn fail(e: &Error) -> PqStatus {
    set_error(&e.to_string());
    status_of(e)
}

fn fail_with(status: PqStatus, message: &str) -> PqStatus {
    set_error(message);
    status
}

/// Runs `f`, converting any panic into `PQ_STATUS_INTERNAL`.
fn guarded<F: FnOnce() -> PqStatus>(f: F) -> PqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => fail_with(PqStatus::Internal, "internal panic"),
    }
}

fn scheme_of(raw: i32) -> Option<Scheme> {
    match raw {
        0 => Some(Scheme::Rwa),
        1 => Some(Scheme::NonRwa),
        _ => None,
    }
}

fn mode_of(raw: i32) -> Option<ExchangeMode> {
    match raw {
        0 => Some(ExchangeMode::VonNeumann),
        1 => Some(ExchangeMode::FidelityXlnX),
        2 => Some(ExchangeMode::FidelityBinary),
        _ => None,
    }
}

/// Reads a caller-provided `double[3]` as a Bloch vector.
unsafe fn read_vec3(p: *const f64) -> BlochVector {
    BlochVector::new(*p, *p.add(1), *p.add(2))
}

/// Writes a Bloch vector into a caller-provided `double[3]`.
unsafe fn write_vec3(p: *mut f64, u: BlochVector) {
    *p = u.x;
    *p.add(1) = u.y;
    *p.add(2) = u.z;
}

/// Builds a density matrix from a raw Bloch vector, admitting rounding
/// slack at the surface of the ball.
fn density_from(u: BlochVector) -> Result<QubitDensity, Error> {
    QubitDensity::from_bloch_clamped(u)
}

/// The library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pq_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// The most recent error message on this thread, or an empty string.
///
/// The returned pointer is invalidated by the next failing call on the
/// same thread.
#[no_mangle]
pub extern "C" fn pq_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Creates a drive configuration handle.
///
/// `omega` is the Rabi frequency (> 0 for use with scaled time), `delta`
/// the detuning, `omega_l` the laser frequency (> 0), `lambda` the
/// first-order expansion knob in [0, 0.5], and `pulse_duration` the
/// rectangular pulse length (> 0), all in mutually consistent units.
///
/// # Safety
///
/// `out` must be a valid pointer. On success it receives a handle that
/// must be released with `pq_drive_free`.
#[no_mangle]
pub unsafe extern "C" fn pq_drive_new(
    omega: f64,
    delta: f64,
    omega_l: f64,
    lambda: f64,
    pulse_duration: f64,
    out: *mut *mut PqDrive,
) -> PqStatus {
    guarded(|| {
        if out.is_null() {
            return fail_with(PqStatus::NullPointer, "out handle is null");
        }
        match DriveConfig::new(omega, delta, omega_l, lambda, pulse_duration) {
            Ok(inner) => {
                *out = Box::into_raw(Box::new(PqDrive { inner }));
                PqStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a drive handle. Passing null is a no-op.
///
/// # Safety
///
/// `drive` must be null or a handle obtained from `pq_drive_new` that has
/// not been freed before.
#[no_mangle]
pub unsafe extern "C" fn pq_drive_free(drive: *mut PqDrive) {
    if !drive.is_null() {
        drop(Box::from_raw(drive));
    }
}

/// Writes the generalized Rabi frequency `hypot(Omega, Delta)` to `out`.
///
/// # Safety
///
/// `drive` must be a live handle from `pq_drive_new`; `out` must be a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pq_drive_generalized_rabi(
    drive: *const PqDrive,
    out: *mut f64,
) -> PqStatus {
    guarded(|| {
        if drive.is_null() || out.is_null() {
            return fail_with(PqStatus::NullPointer, "drive or out is null");
        }
        let cfg = (*drive).inner;
        *out = cfg.generalized_rabi();
        PqStatus::Ok
    })
}

/// Converts state angles to a Bloch vector `out_u[3] = (ux, uy, uz)`.
///
/// `theta` must lie in [0, pi]; `phi` is periodic and only needs to be
/// finite.
///
/// # Safety
///
/// `out_u` must point to at least 3 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pq_bloch_from_angles(theta: f64, phi: f64, out_u: *mut f64) -> PqStatus {
    guarded(|| {
        if out_u.is_null() {
            return fail_with(PqStatus::NullPointer, "out_u is null");
        }
        match StateAngles::new(theta, phi) {
            Ok(angles) => {
                write_vec3(out_u, angles.bloch());
                PqStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Evolves the state `(theta, phi)` to scaled time `tau = Omega * t` and
/// writes the Bloch vector to `out_u[3]`.
///
/// `scheme` is one of `PqScheme`. The non-RWA scheme requires `delta = 0`.
///
/// # Safety
///
/// `drive` must be a live handle; `out_u` must point to at least 3
/// writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pq_evolve(
    drive: *const PqDrive,
    scheme: i32,
    theta: f64,
    phi: f64,
    tau: f64,
    out_u: *mut f64,
) -> PqStatus {
    guarded(|| {
        if drive.is_null() || out_u.is_null() {
            return fail_with(PqStatus::NullPointer, "drive or out_u is null");
        }
        let cfg = (*drive).inner;
        if cfg.omega <= 0.0 {
            return fail_with(PqStatus::InvalidArgument, "scaled time requires omega > 0");
        }
        let angles = match StateAngles::new(theta, phi) {
            Ok(a) => a,
            Err(e) => return fail(&e),
        };
        let matrix = match scheme_of(scheme) {
            Some(Scheme::Rwa) => rwa_matrix(&cfg, tau / cfg.omega),
            Some(Scheme::NonRwa) => nonrwa_matrix(&cfg, tau / cfg.omega),
            None => return fail_with(PqStatus::InvalidArgument, "unknown scheme selector"),
        };
        match matrix {
            Ok(m) => {
                write_vec3(out_u, m.apply(angles.bloch()));
                PqStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Samples the evolution of `(theta, phi)` on a uniform scaled-time grid
/// of `n_points` points over [`tau_start`, `tau_end`] and returns a
/// trajectory handle.
///
/// # Safety
///
/// `drive` must be a live handle; `out` must be a valid pointer. On
/// success it receives a handle that must be released with
/// `pq_trajectory_free`.
#[no_mangle]
pub unsafe extern "C" fn pq_trajectory_new(
    drive: *const PqDrive,
    scheme: i32,
    theta: f64,
    phi: f64,
    tau_start: f64,
    tau_end: f64,
    n_points: usize,
    out: *mut *mut PqTrajectory,
) -> PqStatus {
    guarded(|| {
        if drive.is_null() || out.is_null() {
            return fail_with(PqStatus::NullPointer, "drive or out is null");
        }
        let cfg = (*drive).inner;
        if cfg.omega <= 0.0 {
            return fail_with(PqStatus::InvalidArgument, "scaled time requires omega > 0");
        }
        let scheme = match scheme_of(scheme) {
            Some(s) => s,
            None => return fail_with(PqStatus::InvalidArgument, "unknown scheme selector"),
        };
        let angles = match StateAngles::new(theta, phi) {
            Ok(a) => a,
            Err(e) => return fail(&e),
        };
        let grid = match TimeGrid::linspace(tau_start / cfg.omega, tau_end / cfg.omega, n_points) {
            Ok(g) => g,
            Err(e) => return fail(&e),
        };
        match trajectory(&cfg, angles.bloch(), &grid, scheme) {
            Ok(samples) => {
                let samples = samples
                    .into_iter()
                    .map(|(t, u)| (t * cfg.omega, u))
                    .collect();
                *out = Box::into_raw(Box::new(PqTrajectory { samples }));
                PqStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}

/// Releases a trajectory handle. Passing null is a no-op.
///
/// # Safety
///
/// `traj` must be null or a handle obtained from `pq_trajectory_new` that
/// has not been freed before.
#[no_mangle]
pub unsafe extern "C" fn pq_trajectory_free(traj: *mut PqTrajectory) {
    if !traj.is_null() {
        drop(Box::from_raw(traj));
    }
}

/// Number of samples in a trajectory; 0 for a null handle.
///
/// # Safety
///
/// `traj` must be null or a live handle from `pq_trajectory_new`.
#[no_mangle]
pub unsafe extern "C" fn pq_trajectory_len(traj: *const PqTrajectory) -> usize {
    if traj.is_null() {
        0
    } else {
        let traj = &*traj;
        traj.samples.len()
    }
}

/// Copies sample `index` out of a trajectory: the scaled time into
/// `out_tau` and the Bloch vector into `out_u[3]`.
///
/// # Safety
///
/// `traj` must be a live handle; `out_tau` and `out_u` must point to
/// writable memory (1 and 3 doubles respectively).
#[no_mangle]
pub unsafe extern "C" fn pq_trajectory_sample(
    traj: *const PqTrajectory,
    index: usize,
    out_tau: *mut f64,
    out_u: *mut f64,
) -> PqStatus {
    guarded(|| {
        if traj.is_null() || out_tau.is_null() || out_u.is_null() {
            return fail_with(PqStatus::NullPointer, "traj, out_tau, or out_u is null");
        }
        let traj = &*traj;
        match traj.samples.get(index) {
            Some(&(tau, u)) => {
                *out_tau = tau;
                write_vec3(out_u, u);
                PqStatus::Ok
            }
            None => fail_with(PqStatus::InvalidArgument, "sample index out of range"),
        }
    })
}

/// Transfer fidelity `F = tr(rho0 rho_t)` between two Bloch vectors.
///
/// Inputs with norm above 1 are rescaled onto the unit sphere (truncated
/// first-order output lands there); non-finite components are rejected.
///
/// # Safety
///
/// `u0` and `ut` must point to at least 3 readable doubles; `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pq_fidelity(u0: *const f64, ut: *const f64, out: *mut f64) -> PqStatus {
    guarded(|| {
        if u0.is_null() || ut.is_null() || out.is_null() {
            return fail_with(PqStatus::NullPointer, "u0, ut, or out is null");
        }
        let rho0 = match density_from(read_vec3(u0)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        let rhot = match density_from(read_vec3(ut)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        *out = fidelity(&rho0, &rhot);
        PqStatus::Ok
    })
}

/// Exchange information between two Bloch vectors under the entropy
/// convention selected by `mode` (one of `PqExchangeMode`).
///
/// Inputs with norm above 1 are rescaled onto the unit sphere; non-finite
/// components are rejected.
///
/// # Safety
///
/// `u0` and `ut` must point to at least 3 readable doubles; `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pq_exchange_information(
    u0: *const f64,
    ut: *const f64,
    mode: i32,
    out: *mut f64,
) -> PqStatus {
    guarded(|| {
        if u0.is_null() || ut.is_null() || out.is_null() {
            return fail_with(PqStatus::NullPointer, "u0, ut, or out is null");
        }
        let mode = match mode_of(mode) {
            Some(m) => m,
            None => return fail_with(PqStatus::InvalidArgument, "unknown exchange mode"),
        };
        let rho0 = match density_from(read_vec3(u0)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        let rhot = match density_from(read_vec3(ut)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        *out = exchange_information(&rho0, &rhot, mode);
        PqStatus::Ok
    })
}

/// Overlap magnitudes `|Sp_ij|` between the eigenbases of two states,
/// written row-major into `out_abs[4]` as `(11, 12, 21, 22)`.
///
/// Both states must be non-degenerate (nonzero Bloch vector). Inputs with
/// norm above 1 are rescaled onto the unit sphere; non-finite components
/// are rejected.
///
/// # Safety
///
/// `u0` and `ut` must point to at least 3 readable doubles; `out_abs`
/// must point to at least 4 writable doubles.
#[no_mangle]
pub unsafe extern "C" fn pq_overlap_abs(
    u0: *const f64,
    ut: *const f64,
    out_abs: *mut f64,
) -> PqStatus {
    guarded(|| {
        if u0.is_null() || ut.is_null() || out_abs.is_null() {
            return fail_with(PqStatus::NullPointer, "u0, ut, or out_abs is null");
        }
        let rho0 = match density_from(read_vec3(u0)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        let rhot = match density_from(read_vec3(ut)) {
            Ok(r) => r,
            Err(e) => return fail(&e),
        };
        match orthogonality_overlaps(&rho0, &rhot) {
            Ok(sp) => {
                for i in 0..2 {
                    for j in 0..2 {
                        *out_abs.add(i * 2 + j) = sp.abs(i + 1, j + 1);
                    }
                }
                PqStatus::Ok
            }
            Err(e) => fail(&e),
        }
    })
}
