// grid.hpp
// Periodic 2-D grid (x: Schrodinger direction, y: half-wave direction),
// complex fields convertible between physical and Fourier representation,
// and rectangle-rule quadrature for L^p and mixed L^q_x L^r_y norms.
//
// Conventions:
//   * row-major storage, y contiguous: values[ix*ny + iy]
//   * frequency lattices xi_p = 2*pi*p/lx, eta_q = 2*pi*q/ly in FFT order
//   * discrete transform approximates fhat(xi,eta) = integral f e^{-i(xi x + eta y)},
//     i.e. DFT scaled by the cell area dx*dy; inverse carries deta*dxi/(2pi)^2.
#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hwlab {

using cd = std::complex<double>;

struct GridError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Grid {
  public:
    Grid(int nx, int ny, double lx, double ly);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double lx() const { return lx_; }
    double ly() const { return ly_; }
    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

    double dx() const { return lx_ / nx_; }
    double dy() const { return ly_ / ny_; }
    double dxi() const { return dxi_; }
    double deta() const { return deta_; }
    double eta_max() const { return deta_ * (ny_ / 2); }
    double xi_max() const { return dxi_ * (nx_ / 2); }

    // physical coordinates, sample i in [0,n): centered box [-l/2, l/2)
    double x(int i) const { return xs_[i]; }
    double y(int j) const { return ys_[j]; }
    // frequencies in FFT index order
    double xi(int p) const { return xis_[p]; }
    double eta(int q) const { return etas_[q]; }
    const std::vector<double>& etas() const { return etas_; }
    const std::vector<double>& xis() const { return xis_; }

    bool operator==(const Grid& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && lx_ == o.lx_ && ly_ == o.ly_;
    }

  private:
    int nx_, ny_;
    double lx_, ly_;
    double dxi_, deta_;
    std::vector<double> xs_, ys_, xis_, etas_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Factory enforcing the discretization contract: power-of-two sizes,
// unit-scale resolution deta <= 1/8.
GridPtr make_grid(int nx, int ny, double lx, double ly);

enum class Rep { physical, fourier };

class Field {
  public:
    Field() = default;
    Field(GridPtr g, Rep rep);
    Field(GridPtr g, Rep rep, std::vector<cd> values);

    static Field zero(GridPtr g, Rep rep = Rep::physical) { return Field(g, rep); }

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    Rep rep() const { return rep_; }

    cd* data() { return v_.data(); }
    const cd* data() const { return v_.data(); }
    std::size_t size() const { return v_.size(); }
    cd& at(int ix, int iy) { return v_[static_cast<std::size_t>(ix) * grid_->ny() + iy]; }
    const cd& at(int ix, int iy) const {
        return v_[static_cast<std::size_t>(ix) * grid_->ny() + iy];
    }

    // in-place arithmetic (representation-agnostic, grids must match)
    Field& operator+=(const Field& o);
    Field& operator-=(const Field& o);
    Field& operator*=(cd a);
    friend Field operator+(Field a, const Field& b) { return a += b; }
    friend Field operator-(Field a, const Field& b) { return a -= b; }
    friend Field operator*(cd a, Field f) { return f *= a; }

  private:
    GridPtr grid_;
    Rep rep_ = Rep::physical;
    std::vector<cd> v_;

    friend Field transform_forward(const Field&);
    friend Field transform_inverse(const Field&);
};

// Physical -> Fourier; throws if the field is already in Fourier representation.
Field transform_forward(const Field& f);
// Fourier -> physical.
Field transform_inverse(const Field& f);
// Convenience: return f in the requested representation.
Field to_rep(const Field& f, Rep r);

// Sample a function of (x, y) into a physical field.
template <class F>
Field sample(GridPtr g, F&& fn) {
    Field out(g, Rep::physical);
    for (int i = 0; i < g->nx(); ++i)
        for (int j = 0; j < g->ny(); ++j) out.at(i, j) = fn(g->x(i), g->y(j));
    return out;
}

// L^p norm over the box, rectangle rule; p = inf -> max modulus. Physical rep required.
double lp_norm(const Field& f, double p);
// L^2 norm valid in either representation (Parseval-consistent quadrature).
double l2_norm(const Field& f);
// Mixed norm L^q_x L^r_y (inner norm in y per x-slice, outer in x). Physical rep.
double mixed_xy_norm(const Field& f, double q, double r);

double l2_inner_real(const Field& a, const Field& b);  // Re <a,b>_{L^2}

constexpr double kLpInf = std::numeric_limits<double>::infinity();

// FFTW wisdom persistence: load at startup / save after planning new sizes.
// Path defaults to $HWLAB_FFTW_WISDOM or a home-cache location; no-op on failure.
void load_fft_wisdom();
void save_fft_wisdom();

}  // namespace hwlab
