/* Copyright 2026 pulsed-qubit Contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C ABI for the pulsed-qubit driven-qubit library. Generated by cbindgen;
 * do not edit by hand. */

#ifndef PULSED_QUBIT_H
#define PULSED_QUBIT_H

/* This file is generated from the pulsed-qubit-ffi crate. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Exchange-information entropy selector for `pq_exchange_information`.
typedef enum {
  // Von Neumann entropy of the evolved state.
  PQ_EXCHANGE_MODE_VON_NEUMANN = 0,
  // -F ln F of the transfer fidelity.
  PQ_EXCHANGE_MODE_FIDELITY_XLN_X = 1,
  // Binary entropy of the transfer fidelity.
  PQ_EXCHANGE_MODE_FIDELITY_BINARY = 2,
} PqExchangeMode;

// Evolution scheme selector for `pq_evolve` and `pq_trajectory_new`.
typedef enum {
  // Exact closed form in the rotating-wave approximation.
  PQ_SCHEME_RWA = 0,
  // First-order iterative propagator with counter-rotating terms.
  PQ_SCHEME_NON_RWA = 1,
} PqScheme;

// Status code returned by every fallible ABI call.
typedef enum {
  // The call succeeded and all outputs are valid.
  PQ_STATUS_OK = 0,
  // A required pointer argument was null.
  PQ_STATUS_NULL_POINTER = 1,
  // A value argument violates its documented domain.
  PQ_STATUS_INVALID_ARGUMENT = 2,
  // The requested time lies outside the rectangular pulse.
  PQ_STATUS_OUT_OF_PULSE = 3,
  // The first-order scheme is only derived at exact resonance.
  PQ_STATUS_REQUIRES_RESONANCE = 4,
  // A maximally mixed state has no distinguished eigenbasis.
  PQ_STATUS_DEGENERATE_STATE = 5,
  // An unexpected internal failure; see `pq_last_error_message`.
  PQ_STATUS_INTERNAL = 6,
} PqStatus;

// Opaque handle to a validated drive configuration.
typedef struct PqDrive PqDrive;

// Opaque handle to a sampled Bloch-vector evolution.
typedef struct PqTrajectory PqTrajectory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// The library version as a static NUL-terminated string.
const char *pq_version(void);

// The most recent error message on this thread, or an empty string.
//
// The returned pointer is invalidated by the next failing call on the
// same thread.
const char *pq_last_error_message(void);

// Creates a drive configuration handle.
//
// `omega` is the Rabi frequency (> 0 for use with scaled time), `delta`
// the detuning, `omega_l` the laser frequency (> 0), `lambda` the
// first-order expansion knob in [0, 0.5], and `pulse_duration` the
// rectangular pulse length (> 0), all in mutually consistent units.
//
// # Safety
//
// `out` must be a valid pointer. On success it receives a handle that
// must be released with `pq_drive_free`.
PqStatus pq_drive_new(double omega,
                      double delta,
                      double omega_l,
                      double lambda,
                      double pulse_duration,
                      PqDrive **out);

// Releases a drive handle. Passing null is a no-op.
//
// # Safety
//
// `drive` must be null or a handle obtained from `pq_drive_new` that has
// not been freed before.
void pq_drive_free(PqDrive *drive);

// Writes the generalized Rabi frequency `hypot(Omega, Delta)` to `out`.
//
// # Safety
//
// `drive` must be a live handle from `pq_drive_new`; `out` must be a
// valid pointer.
PqStatus pq_drive_generalized_rabi(const PqDrive *drive, double *out);

// Converts state angles to a Bloch vector `out_u[3] = (ux, uy, uz)`.
//
// `theta` must lie in [0, pi]; `phi` is periodic and only needs to be
// finite.
//
// # Safety
//
// `out_u` must point to at least 3 writable doubles.
PqStatus pq_bloch_from_angles(double theta, double phi, double *out_u);

// Evolves the state `(theta, phi)` to scaled time `tau = Omega * t` and
// writes the Bloch vector to `out_u[3]`.
//
// `scheme` is one of `PqScheme`. The non-RWA scheme requires `delta = 0`.
//
// # Safety
//
// `drive` must be a live handle; `out_u` must point to at least 3
// writable doubles.
PqStatus pq_evolve(const PqDrive *drive,
                   int32_t scheme,
                   double theta,
                   double phi,
                   double tau,
                   double *out_u);

// Samples the evolution of `(theta, phi)` on a uniform scaled-time grid
// of `n_points` points over [`tau_start`, `tau_end`] and returns a
// trajectory handle.
//
// # Safety
//
// `drive` must be a live handle; `out` must be a valid pointer. On
// success it receives a handle that must be released with
// `pq_trajectory_free`.
PqStatus pq_trajectory_new(const PqDrive *drive,
                           int32_t scheme,
                           double theta,
                           double phi,
                           double tau_start,
                           double tau_end,
                           size_t n_points,
                           PqTrajectory **out);

// Releases a trajectory handle. Passing null is a no-op.
//
// # Safety
//
// `traj` must be null or a handle obtained from `pq_trajectory_new` that
// has not been freed before.
void pq_trajectory_free(PqTrajectory *traj);

// Number of samples in a trajectory; 0 for a null handle.
//
// # Safety
//
// `traj` must be null or a live handle from `pq_trajectory_new`.
size_t pq_trajectory_len(const PqTrajectory *traj);

// Copies sample `index` out of a trajectory: the scaled time into
// `out_tau` and the Bloch vector into `out_u[3]`.
//
// # Safety
//
// `traj` must be a live handle; `out_tau` and `out_u` must point to
// writable memory (1 and 3 doubles respectively).
PqStatus pq_trajectory_sample(const PqTrajectory *traj,
                              size_t index,
                              double *out_tau,
                              double *out_u);

// Transfer fidelity `F = tr(rho0 rho_t)` between two Bloch vectors.
//
// Inputs with norm above 1 are rescaled onto the unit sphere (truncated
// first-order output lands there); non-finite components are rejected.
//
// # Safety
//
// `u0` and `ut` must point to at least 3 readable doubles; `out` must be
// a valid pointer.
PqStatus pq_fidelity(const double *u0, const double *ut, double *out);

// Exchange information between two Bloch vectors under the entropy
// convention selected by `mode` (one of `PqExchangeMode`).
//
// Inputs with norm above 1 are rescaled onto the unit sphere; non-finite
// components are rejected.
//
// # Safety
//
// `u0` and `ut` must point to at least 3 readable doubles; `out` must be
// a valid pointer.
PqStatus pq_exchange_information(const double *u0, const double *ut, int32_t mode, double *out);

// Overlap magnitudes `|Sp_ij|` between the eigenbases of two states,
// written row-major into `out_abs[4]` as `(11, 12, 21, 22)`.
//
// Both states must be non-degenerate (nonzero Bloch vector). Inputs with
// norm above 1 are rescaled onto the unit sphere; non-finite components
// are rejected.
//
// # Safety
//
// `u0` and `ut` must point to at least 3 readable doubles; `out_abs`
// must point to at least 4 writable doubles.
PqStatus pq_overlap_abs(const double *u0, const double *ut, double *out_abs);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PULSED_QUBIT_H */
