// trajectory.hpp
// Time-indexed field sequence on a symmetric interval [-T, T] containing t=0.
// Snapshots are stored in Fourier representation; off-grid queries use linear
// interpolation of Fourier coefficients (O(dt^2), matching the integrators).
//
// Storage gauge: snapshots may be kept in the interaction picture
// v(t) = e^{-itA} u(t), where they vary on the nonlinear time scale only, so a
// coarse snapshot stride loses almost nothing when interpolating; at() always
// returns the lab-frame field. Gauge 'lab' stores u(t) directly.
#pragma once

#include <vector>

#include "hwlab/grid.hpp"

namespace hwlab {

enum class Gauge { lab, interaction };

class Trajectory {
  public:
    Trajectory() = default;
    Trajectory(GridPtr g, double dt, Gauge gauge = Gauge::lab);

    // record u(t) given in lab frame (any representation)
    void append(double t, const Field& u_lab);
    // sort by time after out-of-order appends (outward marching)
    void finalize();

    const std::vector<double>& times() const { return times_; }
    std::size_t count() const { return times_.size(); }
    double tmin() const { return times_.front(); }
    double tmax() const { return times_.back(); }
    double dt() const { return dt_; }
    Gauge gauge() const { return gauge_; }
    GridPtr grid_ptr() const { return grid_; }
    const Grid& grid() const { return *grid_; }

    // stored snapshot i in lab frame (Fourier representation)
    Field snapshot(std::size_t i) const;
    double time(std::size_t i) const { return times_[i]; }
    // lab-frame field at arbitrary t in [tmin, tmax]
    Field at(double t) const;

    // raw stored data (gauge frame) for size-conscious consumers
    const Field& stored(std::size_t i) const { return snaps_[i]; }

    bool blown_up = false;
    double blowup_time = 0.0;

  private:
    GridPtr grid_;
    double dt_ = 0.0;
    Gauge gauge_ = Gauge::lab;
    std::vector<double> times_;
    std::vector<Field> snaps_;
    std::size_t locate(double t) const;
};

// Assemble the pointwise sum a + b (+ c) sampled at a's stored times.
Trajectory sum_trajectories(const Trajectory& a, const Trajectory& b);
Trajectory sum_trajectories(const Trajectory& a, const Trajectory& b, const Trajectory& c);

// Export: one HWF1 dump per snapshot plus a JSON manifest {dt, T, times, flags, files}.
void export_trajectory(const Trajectory& tr, const std::string& dir, const std::string& stem);

}  // namespace hwlab
