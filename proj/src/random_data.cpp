// random_data.cpp

#include "hwlab/random_data.hpp"

#include <cmath>

#include "hwlab/multipliers.hpp"

namespace hwlab {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, std::int64_t k, std::uint32_t lane) {
    std::uint64_t h = mix64(seed ^ 0x243f6a8885a308d3ULL);
    h = mix64(h ^ static_cast<std::uint64_t>(k));
    h = mix64(h ^ (static_cast<std::uint64_t>(lane) << 32 | 0x13198a2eULL));
    return h;
}

double normal_from_bits(std::uint64_t u_bits, std::uint64_t v_bits, bool second) {
    // u in (0,1], v in [0,1)
    double u = ((u_bits >> 11) + 1) * 0x1.0p-53;
    double v = (v_bits >> 11) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u));
    double th = 2.0 * M_PI * v;
    return second ? r * std::sin(th) : r * std::cos(th);
}

cd RandomSpec::gaussian(int k) const {
    std::uint64_t s = (std::abs(k) >= surgery_abs_k_min) ? surgery_seed : master_seed;
    std::uint64_t u = derive_key(s, k, 0);
    std::uint64_t v = derive_key(s, k, 1);
    double re = normal_from_bits(u, v, false);
    double im = normal_from_bits(u, v, true);
    return cd(re, im) * M_SQRT1_2;  // E|g|^2 = 1
}

Field randomized_sum(const Field& f0, const RandomSpec& spec, const std::vector<int>& ks) {
    const Grid& g = f0.grid();
    for (int k : ks)
        if (std::abs(k) + 1.0 > g.eta_max())
            throw GridError("randomized_sum: mode k=" + std::to_string(k) + " exceeds eta_max");
    // combined multiplier m(eta) = sum_k g_k phi_unit(eta - k); supports overlap
    // only between adjacent k, so evaluate k near round(eta).
    std::vector<cd> coef(ks.size());
    for (std::size_t i = 0; i < ks.size(); ++i) coef[i] = spec.gaussian(ks[i]);
    Field fh = to_rep(f0, Rep::fourier);
    std::vector<cd> tab(g.ny(), cd(0, 0));
    for (int q = 0; q < g.ny(); ++q) {
        double eta = g.eta(q);
        cd m(0, 0);
        for (std::size_t i = 0; i < ks.size(); ++i) {
            double d = eta - ks[i];
            if (d > -0.75 && d < 0.75) m += coef[i] * phi_unit(d);
        }
        tab[q] = m;
    }
    for (int p = 0; p < g.nx(); ++p) {
        cd* row = fh.data() + static_cast<std::size_t>(p) * g.ny();
        for (int q = 0; q < g.ny(); ++q) row[q] *= tab[q];
    }
    return fh;
}

namespace {
std::vector<int> clamp_range(const RandomSpec& s, std::vector<int> ks) {
    std::vector<int> out;
    for (int k : ks)
        if (s.in_range(k)) out.push_back(k);
    return out;
}
}  // namespace

Field randomize(const Field& f0, const RandomSpec& spec) {
    std::vector<int> ks;
    for (int k = spec.k_min; k <= spec.k_max; ++k) ks.push_back(k);
    return randomized_sum(f0, spec, ks);
}

Field random_block(const Field& f0, const RandomSpec& spec, int N) {
    if (N < 1 || (N & (N - 1)) != 0) throw GridError("random_block: N must be dyadic");
    std::vector<int> ks;
    if (N == 1) {
        ks = {0};
    } else {
        for (int a = N / 2; a < N; ++a) {
            ks.push_back(a);
            ks.push_back(-a);
        }
    }
    return randomized_sum(f0, spec, clamp_range(spec, ks));
}

Field truncate_leq(const Field& f0, const RandomSpec& spec, int n) {
    if (n < 0) throw GridError("truncate_leq: n must be >= 0");
    std::vector<int> ks;
    for (int k = -n; k <= n; ++k) ks.push_back(k);
    return randomized_sum(f0, spec, clamp_range(spec, ks));
}

KhintchineResult khintchine_stats(const std::vector<double>& a, int p, std::int64_t samples,
                                  std::uint64_t seed) {
    if (p < 2 || p % 2 != 0) throw GridError("khintchine_stats: p must be even and >= 2");
    double a2 = 0;
    for (double v : a) a2 += v * v;
    if (a2 == 0) return {0.0, 0.0, true};
    double norm_a = std::sqrt(a2);

    double mean = 0, m2 = 0;  // running mean and sum of squared deviations
    for (std::int64_t s = 0; s < samples; ++s) {
        cd z(0, 0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            std::uint64_t u = derive_key(seed ^ (0x9e3779b97f4a7c15ULL * (s + 1)), (std::int64_t)k, 0);
            std::uint64_t v = derive_key(seed ^ (0x9e3779b97f4a7c15ULL * (s + 1)), (std::int64_t)k, 1);
            cd g = cd(normal_from_bits(u, v, false), normal_from_bits(u, v, true)) * M_SQRT1_2;
            z += g * a[k];
        }
        double w = std::pow(std::abs(z), p);
        double d = w - mean;
        mean += d / (s + 1);
        m2 += d * (w - mean);
    }
    double var = samples > 1 ? m2 / (samples - 1) : 0.0;
    double se_mean = std::sqrt(var / samples);
    double ratio = std::pow(mean, 1.0 / p) / norm_a;
    double se_ratio = mean > 0 ? ratio * se_mean / (p * mean) : 0.0;
    return {ratio, se_ratio, false};
}

}  // namespace hwlab
