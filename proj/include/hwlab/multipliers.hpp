// multipliers.hpp
// Fourier multiplier operators acting on the half-wave frequency eta (and,
// for the free flow, on xi as well):
//   * unit-scale projectors P_{1,k} built from a smooth partition of unity
//   * dyadic band projectors P_{M,k}, P_N = P_{N,0}, fattened P~_N, low-pass P_{<=N}
//   * fractional derivatives <D_y>^s and |D_y|^s
//   * the free propagator e^{itA}, A = d_xx - |D_y| (symbol -xi^2 - |eta|)
//
// Bump conventions (all C^infty, built from one smoothstep):
//   smoothstep s(t) = 1/(1+e^{1/t - 1/(1-t)}) on (0,1), s(t)+s(1-t)=1
//   phi_unit: 1 on [-1/4,1/4], supported in [-3/4,3/4], integer translates sum to 1
//   Phi (low-pass mother): 1 on [-1,1], supported in [-2,2]
//   psi_lp(x) = Phi(x) - Phi(2x) >= 0, supported in 1/2 <= |x| <= 2, psi_lp(1)=1
//   psi_fat: 1 on [1/2,2], supported in [1/4,4]
// Telescoping identity (exact): Phi(eta) + sum_{M=2..N} psi_lp(eta/M) = Phi(eta/N).
#pragma once

#include <functional>
#include <string>

#include "hwlab/grid.hpp"

namespace hwlab {

// scalar bump profiles
double smoothstep(double t);
double phi_unit(double x);
double phi_lp(double x);   // Phi
double psi_lp(double x);   // Phi(x) - Phi(2x)
double psi_fat(double x);

// Apply a diagonal multiplier sym(xi, eta); accepts either representation,
// returns the same representation as the input.
Field apply_multiplier(const Field& f, const std::function<cd(double, double)>& sym,
                       const std::string& label = "");
// y-only multiplier, vectorized over the eta lattice (fast path).
Field apply_eta_multiplier(const Field& f, const std::function<cd(double)>& sym);

// P_{1,k): unit-scale projector around integer k. Requires |k|+1 <= eta_max.
Field project_unit(const Field& f, int k);
// P_{M,k}: dyadic band M >= 2 recentered at k (psi_lp((eta-k)/M)); M == 1 gives P_{1,k}.
Field project_band(const Field& f, int M, int k);
// P_N = P_{N,0} for dyadic N >= 2; N == 1 applies the low bump Phi(eta).
Field project_dyadic(const Field& f, int N);
// Fattened projector P~_N (psi_fat(eta/N)); identity on the support of P_N.
Field project_fattened(const Field& f, int N);
// Low-pass P_{<=N}: multiplier Phi(eta/N); N may be any real >= 1 (used as N^gamma).
Field project_below(const Field& f, double N);

// <D_y>^s (inhomogeneous) or |D_y|^s (homogeneous; the eta=0 mode is set to 0).
Field fractional_y(const Field& f, double s, bool homogeneous = false);

// e^{itA}: multiply Fourier data by e^{it(-xi^2 - |eta|)}; unitary on L^2.
Field free_flow(const Field& f, double t);
// y-factor alone: e^{-it|D_y|} (translation on Hardy-class data).
Field half_wave_flow(const Field& f, double t);

// In-place spectral helpers used by the integrators (field must be Fourier).
void free_flow_inplace(Field& f, double t);
void dealias_inplace(Field& f, double fraction = 2.0 / 3.0);

}  // namespace hwlab
