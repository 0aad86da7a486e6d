// norms.hpp
// Norm functionals: anisotropic Sobolev, mass/energy, mixed space-time
// Lebesgue norms over trajectories, and the weighted dyadic-band families
//   X_{N,D}   = sum_M C_{N,D}(M)  ||P_M u||_{L^inf_t L^2}
//   S^r_{N,D} = sum_M C_{N,D}(M)  ||P_M u||_{L^8_t L^4_x L^r_y}
//   B^{rho,gamma}_{k,D} = sum_M M^rho max(1, M/N^gamma)^D ||P_{M,k} u||_{L^inf_t L^2}
//   Y^nu_N    = |<D>^nu w|_{X_{N,alpha}} + |<D>^nu w|_{X_{<=N,D}}
//             + |<D>^sigma w|_{S_{N,alpha}} + |<D>^sigma w|_{S_{<=N,D}}
// with weights C_{N,D}(M) = max(N/M, M/N)^D and C_{<=N,D}(M) = max(1, M/N)^D.
//
// The anisotropic intersection L^2_x H^s_y cap H^{2s}_x L^2_y is realized as the
// l^2 combination of the two component norms. Dyadic sums run over the grid's
// representable bands {1, 2, ..., Mmax}, 2*Mmax <= eta_max; the skipped tail
// is bounded via Bernstein and logged in NormReport::truncation_tail.
#pragma once

#include <string>
#include <vector>

#include "hwlab/grid.hpp"
#include "hwlab/trajectory.hpp"

namespace hwlab {

struct BandContribution {
    double M;
    double weight;
    double contribution;
};

struct NormReport {
    std::string label;
    double value = 0;
    double t_lo = 0, t_hi = 0;
    std::vector<BandContribution> bands;
    double truncation_tail = 0;
    std::string to_json() const;
    double band_sum() const;
};

// dyadic bands representable on the grid: {1, 2, 4, ..., Mmax} with 2*Mmax <= eta_max
std::vector<int> dyadic_bands(const Grid& g);

double weight_centered(int N, double D, int M);  // C_{N,D}(M)
double weight_below(int N, double D, int M);     // C_{<=N,D}(M)

// ---- instantaneous (single Field) ----

// ||u||_{H^s} = sqrt( ||<D_y>^s u||_L2^2 + ||<D_x>^{2s} u||_L2^2 ); homogeneous uses
// |D|^. with the zero mode dropped.
double sobolev_aniso(const Field& f, double s, bool homogeneous = false);
double mass(const Field& f);                 // ||u||_L2^2
double energy(const Field& f, double mu);    // 1/2(||d_x u||^2 + |||D_y|^{1/2}u||^2) + mu/4 ||u||_L4^4

// ||<D_y>^s P_M u||_L2 computed spectrally (no inverse transform); M = 0 means no band cut.
double band_l2(const Field& fourier, int M, double dy_s = 0);
// recentered variant ||<D_y>^s P_{M,k} u||_L2
double band_l2_centered(const Field& fourier, int M, int k, double dy_s = 0);
// ||<D_y>^s P_M u||_{L^q_x L^r_y} (inverse transform per call)
double band_mixed(const Field& fourier, int M, double dy_s, double q, double r);
double band_mixed_centered(const Field& fourier, int M, int k, double dy_s, double q, double r);

// ---- trajectory functionals ----

// ||<D_y>^{sigma_y} u||_{L^p_t L^q_x L^r_y} by trapezoid over stored snapshots.
double mixed_spacetime(const Trajectory& tr, double p, double q, double r, double sigma_y);

NormReport weighted_X(const Trajectory& tr, int N, double D, double dy_s = 0);
NormReport weighted_X_leq(const Trajectory& tr, int N, double D, double dy_s = 0);
NormReport weighted_S(const Trajectory& tr, int N, double D, double r = kLpInf, double dy_s = 0);
NormReport weighted_S_leq(const Trajectory& tr, int N, double D, double r = kLpInf, double dy_s = 0);
NormReport besov_recentered(const Trajectory& tr, int k, double rho, double gamma, double D, int N);

// the four-term remainder norm
double y_norm(const Trajectory& w, int N, double nu, double sigma, double alpha, double D);

// Sobolev-Strichartz metric: max( sup_t ||u(t)||_{H^s}, ||<D_y>^sigma u||_{L^8_t L^4_x L^inf_y} )
double xst_norm(const Trajectory& tr, double s, double sigma);

}  // namespace hwlab
