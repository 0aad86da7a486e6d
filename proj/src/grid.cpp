// grid.cpp
// Grid construction, FFTW-backed transforms with a per-shape plan cache,
// and quadrature. Inverse transforms carry 1/(nx*ny); the physical->fourier
// direction multiplies by the cell area so coefficients approximate the
// continuum transform.

#include "hwlab/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <map>
#include <mutex>

namespace hwlab {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

std::string wisdom_path() {
    if (const char* p = std::getenv("HWLAB_FFTW_WISDOM")) return p;
    if (const char* h = std::getenv("HOME")) return std::string(h) + "/.hwlab_fftw_wisdom";
    return "/tmp/.hwlab_fftw_wisdom";
}

// One forward/backward plan pair with dedicated aligned buffers.
struct PlanPair {
    fftw_complex* in;
    fftw_complex* out;
    fftw_plan fwd;
    fftw_plan bwd;
    std::size_t n;

    PlanPair(int nx, int ny) {
        n = static_cast<std::size_t>(nx) * ny;
        in = fftw_alloc_complex(n);
        out = fftw_alloc_complex(n);
        fwd = fftw_plan_dft_2d(nx, ny, in, out, FFTW_FORWARD, FFTW_MEASURE);
        bwd = fftw_plan_dft_2d(nx, ny, in, out, FFTW_BACKWARD, FFTW_MEASURE);
    }
    ~PlanPair() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(out);
    }
};

std::mutex plan_mutex;
std::map<std::pair<int, int>, std::unique_ptr<PlanPair>>& plan_cache() {
    static std::map<std::pair<int, int>, std::unique_ptr<PlanPair>> cache;
    return cache;
}
bool wisdom_loaded = false;

PlanPair& get_plan(int nx, int ny) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    if (!wisdom_loaded) {
        fftw_import_wisdom_from_filename(wisdom_path().c_str());
        wisdom_loaded = true;
    }
    auto key = std::make_pair(nx, ny);
    auto it = plan_cache().find(key);
    if (it == plan_cache().end()) {
        it = plan_cache().emplace(key, std::make_unique<PlanPair>(nx, ny)).first;
        fftw_export_wisdom_to_filename(wisdom_path().c_str());
    }
    return *it->second;
}

}  // namespace

void load_fft_wisdom() {
    std::lock_guard<std::mutex> lock(plan_mutex);
    if (!wisdom_loaded) {
        fftw_import_wisdom_from_filename(wisdom_path().c_str());
        wisdom_loaded = true;
    }
}
void save_fft_wisdom() {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_export_wisdom_to_filename(wisdom_path().c_str());
}

Grid::Grid(int nx, int ny, double lx, double ly) : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
    dxi_ = 2.0 * M_PI / lx_;
    deta_ = 2.0 * M_PI / ly_;
    xs_.resize(nx_);
    ys_.resize(ny_);
    xis_.resize(nx_);
    etas_.resize(ny_);
    for (int i = 0; i < nx_; ++i) xs_[i] = -0.5 * lx_ + i * (lx_ / nx_);
    for (int j = 0; j < ny_; ++j) ys_[j] = -0.5 * ly_ + j * (ly_ / ny_);
    for (int p = 0; p < nx_; ++p) xis_[p] = dxi_ * (p < nx_ / 2 ? p : p - nx_);
    for (int q = 0; q < ny_; ++q) etas_[q] = deta_ * (q < ny_ / 2 ? q : q - ny_);
}

GridPtr make_grid(int nx, int ny, double lx, double ly) {
    if (!is_pow2(nx)) throw GridError("make_grid: nx=" + std::to_string(nx) + " is not a power of two");
    if (!is_pow2(ny)) throw GridError("make_grid: ny=" + std::to_string(ny) + " is not a power of two");
    if (!(lx > 0) || !(ly > 0)) throw GridError("make_grid: box lengths must be positive");
    double deta = 2.0 * M_PI / ly;
    if (deta > 0.125 * (1 + 1e-12))
        throw GridError("make_grid: deta = " + std::to_string(deta) +
                        " exceeds 1/8 (unit-scale resolution requires ly >= 16*pi)");
    return std::make_shared<const Grid>(nx, ny, lx, ly);
}

Field::Field(GridPtr g, Rep rep) : grid_(std::move(g)), rep_(rep), v_(grid_->size(), cd(0, 0)) {}
Field::Field(GridPtr g, Rep rep, std::vector<cd> values)
    : grid_(std::move(g)), rep_(rep), v_(std::move(values)) {
    if (v_.size() != grid_->size()) throw GridError("Field: value size mismatch");
}

Field& Field::operator+=(const Field& o) {
    if (!(grid() == o.grid()) || rep_ != o.rep_) throw GridError("Field+=: grid/rep mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}
Field& Field::operator-=(const Field& o) {
    if (!(grid() == o.grid()) || rep_ != o.rep_) throw GridError("Field-=: grid/rep mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}
Field& Field::operator*=(cd a) {
    for (auto& z : v_) z *= a;
    return *this;
}

// Coefficients are cell-area-scaled DFT values paired with the FFT-ordered
// frequency lattice. Sample 0 sits at x=-lx/2; the resulting half-box phase
// relative to the centered continuum transform is left in place, since every
// Fourier-side operation here is a diagonal multiplier and commutes with it.
Field transform_forward(const Field& f) {
    if (f.rep() != Rep::physical) throw GridError("transform_forward: field already in Fourier rep");
    const Grid& g = f.grid();
    PlanPair& pp = get_plan(g.nx(), g.ny());
    std::memcpy(pp.in, f.data(), sizeof(cd) * pp.n);
    fftw_execute(pp.fwd);
    Field out(f.grid_ptr(), Rep::fourier);
    const double scale = g.dx() * g.dy();
    const cd* src = reinterpret_cast<const cd*>(pp.out);
    cd* dst = out.data();
    for (std::size_t i = 0; i < pp.n; ++i) dst[i] = scale * src[i];
    return out;
}

Field transform_inverse(const Field& f) {
    if (f.rep() != Rep::fourier) throw GridError("transform_inverse: field already physical");
    const Grid& g = f.grid();
    PlanPair& pp = get_plan(g.nx(), g.ny());
    std::memcpy(pp.in, f.data(), sizeof(cd) * pp.n);
    fftw_execute(pp.bwd);
    Field out(f.grid_ptr(), Rep::physical);
    const double scale = 1.0 / (g.lx() * g.ly());
    const cd* res = reinterpret_cast<const cd*>(pp.out);
    cd* dst = out.data();
    for (std::size_t i = 0; i < pp.n; ++i) dst[i] = scale * res[i];
    return out;
}

Field to_rep(const Field& f, Rep r) {
    if (f.rep() == r) return f;
    return r == Rep::fourier ? transform_forward(f) : transform_inverse(f);
}

double lp_norm(const Field& f, double p) {
    if (f.rep() != Rep::physical) throw GridError("lp_norm: physical representation required");
    const Grid& g = f.grid();
    if (p == kLpInf) {
        double m = 0;
        for (std::size_t i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f.data()[i]));
        return m;
    }
    double s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::pow(std::abs(f.data()[i]), p);
    return std::pow(s * g.dx() * g.dy(), 1.0 / p);
}

double l2_norm(const Field& f) {
    const Grid& g = f.grid();
    double s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += std::norm(f.data()[i]);
    double w = (f.rep() == Rep::physical)
                   ? g.dx() * g.dy()
                   : g.dxi() * g.deta() / (4.0 * M_PI * M_PI);
    return std::sqrt(s * w);
}

double l2_inner_real(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid()) || a.rep() != b.rep()) throw GridError("l2_inner: mismatch");
    const Grid& g = a.grid();
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::real(std::conj(a.data()[i]) * b.data()[i]);
    double w = (a.rep() == Rep::physical)
                   ? g.dx() * g.dy()
                   : g.dxi() * g.deta() / (4.0 * M_PI * M_PI);
    return s * w;
}

double mixed_xy_norm(const Field& f, double q, double r) {
    if (f.rep() != Rep::physical) throw GridError("mixed_xy_norm: physical representation required");
    const Grid& g = f.grid();
    const int nx = g.nx(), ny = g.ny();
    double outer = 0, outer_max = 0;
    for (int i = 0; i < nx; ++i) {
        const cd* row = f.data() + static_cast<std::size_t>(i) * ny;
        double inner;
        if (r == kLpInf) {
            inner = 0;
            for (int j = 0; j < ny; ++j) inner = std::max(inner, std::abs(row[j]));
        } else {
            double s = 0;
            for (int j = 0; j < ny; ++j) s += std::pow(std::abs(row[j]), r);
            inner = std::pow(s * g.dy(), 1.0 / r);
        }
        if (q == kLpInf)
            outer_max = std::max(outer_max, inner);
        else
            outer += std::pow(inner, q);
    }
    if (q == kLpInf) return outer_max;
    return std::pow(outer * g.dx(), 1.0 / q);
}

}  // namespace hwlab
