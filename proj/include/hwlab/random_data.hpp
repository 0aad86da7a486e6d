// random_data.hpp
// Unit-scale Wiener randomization in the y-direction: f0^w = sum_k g_k P_{1,k} f0
// with independent normalized complex Gaussians g_k derived from a counter-based
// generator, so g_k depends on (master_seed, k) alone. Blocks are reproducible
// independently of evaluation order and of the requested index range.
//
// Block conventions (dyadic N):
//   random_block(N):  k with N/2 <= |k| < N   (N = 1 gives k = 0)
//   truncate_leq(n):  k with |k| <= n         (general integer n >= 0)
// so sum_{M<=N, M dyadic} random_block(M) == truncate_leq(N-1).
//
// The surgery fields support independence audits: for |k| >= surgery_abs_k_min
// the Gaussian is drawn from surgery_seed instead of master_seed.
#pragma once

#include <cstdint>
#include <vector>

#include "hwlab/grid.hpp"

namespace hwlab {

// counter-based 64-bit mixing (SplitMix64 finalizer chain)
std::uint64_t mix64(std::uint64_t x);
std::uint64_t derive_key(std::uint64_t seed, std::int64_t k, std::uint32_t lane);

// standard normal from two derived 64-bit words (Box-Muller)
double normal_from_bits(std::uint64_t u_bits, std::uint64_t v_bits, bool second = false);

struct RandomSpec {
    std::uint64_t master_seed = 0;
    int k_min = 0;  // inclusive randomized mode range
    int k_max = 0;
    int surgery_abs_k_min = INT32_MAX;
    std::uint64_t surgery_seed = 0;

    // normalized complex Gaussian for mode k: E|g_k|^2 = 1, Re/Im independent
    cd gaussian(int k) const;
    bool in_range(int k) const { return k >= k_min && k <= k_max; }
};

// f0^w = sum_{k in range} g_k P_{1,k} f0. Returns a Fourier-representation field.
Field randomize(const Field& f0, const RandomSpec& spec);

// P_N f0^w: the dyadic packet of unit blocks (intersected with spec range).
Field random_block(const Field& f0, const RandomSpec& spec, int N);

// P_{<=n} f0^w for general integer n >= 0 (blocks |k| <= n, intersected with range).
Field truncate_leq(const Field& f0, const RandomSpec& spec, int n);

// Sum of g_k P_{1,k} f0 over an explicit index set.
Field randomized_sum(const Field& f0, const RandomSpec& spec, const std::vector<int>& ks);

struct KhintchineResult {
    double ratio = 0;      // (E|sum g_k a_k|^p)^{1/p} / ||a||_2
    double stderr_ = 0;    // standard error of the ratio estimate
    bool degenerate = false;
};

// Monte-Carlo moment ratio for real weights a and even p.
KhintchineResult khintchine_stats(const std::vector<double>& a, int p, std::int64_t samples,
                                  std::uint64_t seed);

}  // namespace hwlab
