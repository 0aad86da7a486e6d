// multipliers.cpp

#include "hwlab/multipliers.hpp"

#include <cmath>
#include <vector>

namespace hwlab {

double smoothstep(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return 1.0 / (1.0 + std::exp(1.0 / t - 1.0 / (1.0 - t)));
}

double phi_unit(double x) {
    double a = std::abs(x);
    if (a <= 0.25) return 1.0;
    if (a >= 0.75) return 0.0;
    return smoothstep(2.0 * (0.75 - a));
}

double phi_lp(double x) {
    double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 2.0) return 0.0;
    return smoothstep(2.0 - a);
}

double psi_lp(double x) { return phi_lp(x) - phi_lp(2.0 * x); }

double psi_fat(double x) {
    double a = std::abs(x);
    if (a <= 0.25 || a >= 4.0) return 0.0;
    if (a < 0.5) return smoothstep(4.0 * (a - 0.25));
    if (a <= 2.0) return 1.0;
    return smoothstep(0.5 * (4.0 - a));
}

Field apply_multiplier(const Field& f, const std::function<cd(double, double)>& sym,
                       const std::string&) {
    Rep orig = f.rep();
    Field fh = to_rep(f, Rep::fourier);
    const Grid& g = fh.grid();
    for (int p = 0; p < g.nx(); ++p) {
        cd* row = fh.data() + static_cast<std::size_t>(p) * g.ny();
        double xi = g.xi(p);
        for (int q = 0; q < g.ny(); ++q) row[q] *= sym(xi, g.eta(q));
    }
    return to_rep(fh, orig);
}

Field apply_eta_multiplier(const Field& f, const std::function<cd(double)>& sym) {
    Rep orig = f.rep();
    Field fh = to_rep(f, Rep::fourier);
    const Grid& g = fh.grid();
    std::vector<cd> tab(g.ny());
    for (int q = 0; q < g.ny(); ++q) tab[q] = sym(g.eta(q));
    for (int p = 0; p < g.nx(); ++p) {
        cd* row = fh.data() + static_cast<std::size_t>(p) * g.ny();
        for (int q = 0; q < g.ny(); ++q) row[q] *= tab[q];
    }
    return to_rep(fh, orig);
}

Field project_unit(const Field& f, int k) {
    const Grid& g = f.grid();
    if (std::abs(k) + 1.0 > g.eta_max())
        throw GridError("project_unit: k = " + std::to_string(k) + " outside Nyquist range");
    return apply_eta_multiplier(f, [k](double eta) { return cd(phi_unit(eta - k), 0.0); });
}

Field project_band(const Field& f, int M, int k) {
    if (M == 1) return project_unit(f, k);
    if (M < 1 || (M & (M - 1)) != 0) throw GridError("project_band: M must be dyadic");
    const Grid& g = f.grid();
    if (std::abs(k) + 2.0 * M > g.eta_max())
        throw GridError("project_band: band exceeds eta_max");
    double invM = 1.0 / M;
    return apply_eta_multiplier(f, [k, invM](double eta) { return cd(psi_lp((eta - k) * invM), 0.0); });
}

Field project_dyadic(const Field& f, int N) {
    if (N == 1)
        return apply_eta_multiplier(f, [](double eta) { return cd(phi_lp(eta), 0.0); });
    return project_band(f, N, 0);
}

Field project_fattened(const Field& f, int N) {
    const Grid& g = f.grid();
    if (2.0 * N > g.eta_max()) throw GridError("project_fattened: band exceeds eta_max");
    double invN = 1.0 / N;
    if (N == 1)
        return apply_eta_multiplier(f, [](double eta) { return cd(phi_lp(eta * 0.5), 0.0); });
    return apply_eta_multiplier(f, [invN](double eta) { return cd(psi_fat(eta * invN), 0.0); });
}

Field project_below(const Field& f, double N) {
    if (N < 1.0) throw GridError("project_below: N must be >= 1");
    double invN = 1.0 / N;
    return apply_eta_multiplier(f, [invN](double eta) { return cd(phi_lp(eta * invN), 0.0); });
}

Field fractional_y(const Field& f, double s, bool homogeneous) {
    if (s == 0.0 && !homogeneous) return f;
    if (homogeneous)
        return apply_eta_multiplier(f, [s](double eta) {
            return eta == 0.0 ? cd(0.0, 0.0) : cd(std::pow(std::abs(eta), s), 0.0);
        });
    return apply_eta_multiplier(
        f, [s](double eta) { return cd(std::pow(1.0 + eta * eta, 0.5 * s), 0.0); });
}

Field free_flow(const Field& f, double t) {
    Rep orig = f.rep();
    Field fh = to_rep(f, Rep::fourier);
    free_flow_inplace(fh, t);
    return to_rep(fh, orig);
}

void free_flow_inplace(Field& fh, double t) {
    if (fh.rep() != Rep::fourier) throw GridError("free_flow_inplace: Fourier rep required");
    if (t == 0.0) return;
    const Grid& g = fh.grid();
    // separable phase e^{-it xi^2} * e^{-it|eta|}
    std::vector<cd> py(g.ny());
    for (int q = 0; q < g.ny(); ++q) {
        double ph = -t * std::abs(g.eta(q));
        py[q] = cd(std::cos(ph), std::sin(ph));
    }
    for (int p = 0; p < g.nx(); ++p) {
        double ph = -t * g.xi(p) * g.xi(p);
        cd px(std::cos(ph), std::sin(ph));
        cd* row = fh.data() + static_cast<std::size_t>(p) * g.ny();
        for (int q = 0; q < g.ny(); ++q) row[q] *= px * py[q];
    }
}

Field half_wave_flow(const Field& f, double t) {
    return apply_eta_multiplier(f, [t](double eta) {
        double ph = -t * std::abs(eta);
        return cd(std::cos(ph), std::sin(ph));
    });
}

void dealias_inplace(Field& fh, double fraction) {
    if (fh.rep() != Rep::fourier) throw GridError("dealias_inplace: Fourier rep required");
    const Grid& g = fh.grid();
    double xc = fraction * g.xi_max(), ec = fraction * g.eta_max();
    for (int p = 0; p < g.nx(); ++p) {
        cd* row = fh.data() + static_cast<std::size_t>(p) * g.ny();
        if (std::abs(g.xi(p)) > xc) {
            for (int q = 0; q < g.ny(); ++q) row[q] = 0.0;
            continue;
        }
        for (int q = 0; q < g.ny(); ++q)
            if (std::abs(g.eta(q)) > ec) row[q] = 0.0;
    }
}

}  // namespace hwlab
