// trajectory.cpp

#include "hwlab/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "json.hpp"

#include "hwlab/io.hpp"
#include "hwlab/multipliers.hpp"

namespace hwlab {

Trajectory::Trajectory(GridPtr g, double dt, Gauge gauge)
    : grid_(std::move(g)), dt_(dt), gauge_(gauge) {}

void Trajectory::append(double t, const Field& u_lab) {
    Field fh = to_rep(u_lab, Rep::fourier);
    if (gauge_ == Gauge::interaction && t != 0.0) free_flow_inplace(fh, -t);
    times_.push_back(t);
    snaps_.push_back(std::move(fh));
}

void Trajectory::finalize() {
    std::vector<std::size_t> idx(times_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return times_[a] < times_[b]; });
    std::vector<double> ts;
    std::vector<Field> ss;
    ts.reserve(times_.size());
    ss.reserve(snaps_.size());
    for (std::size_t i : idx) {
        ts.push_back(times_[i]);
        ss.push_back(std::move(snaps_[i]));
    }
    times_ = std::move(ts);
    snaps_ = std::move(ss);
}

Field Trajectory::snapshot(std::size_t i) const {
    Field f = snaps_[i];
    if (gauge_ == Gauge::interaction && times_[i] != 0.0) free_flow_inplace(f, times_[i]);
    return f;
}

std::size_t Trajectory::locate(double t) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) return 0;
    if (it == times_.end()) return times_.size() - 1;
    return static_cast<std::size_t>(it - times_.begin());
}

Field Trajectory::at(double t) const {
    if (times_.empty()) throw GridError("Trajectory::at: empty trajectory");
    const double eps = 1e-12 * std::max(1.0, std::abs(t));
    if (t < times_.front() - eps || t > times_.back() + eps)
        throw GridError("Trajectory::at: t out of range");
    std::size_t hi = locate(t);
    if (std::abs(times_[hi] - t) <= eps) return snapshot(hi);
    std::size_t lo = hi - 1;
    if (std::abs(times_[lo] - t) <= eps) return snapshot(lo);
    double w = (t - times_[lo]) / (times_[hi] - times_[lo]);
    Field f = snaps_[lo];
    const Field& g = snaps_[hi];
    cd* a = f.data();
    const cd* b = g.data();
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = (1.0 - w) * a[i] + w * b[i];
    if (gauge_ == Gauge::interaction && t != 0.0) free_flow_inplace(f, t);
    return f;
}

Trajectory sum_trajectories(const Trajectory& a, const Trajectory& b) {
    Trajectory out(a.grid_ptr(), a.dt(), Gauge::lab);
    for (std::size_t i = 0; i < a.count(); ++i) {
        Field s = a.snapshot(i);
        s += b.at(a.time(i));
        out.append(a.time(i), s);
    }
    out.finalize();
    return out;
}

Trajectory sum_trajectories(const Trajectory& a, const Trajectory& b, const Trajectory& c) {
    Trajectory out(a.grid_ptr(), a.dt(), Gauge::lab);
    for (std::size_t i = 0; i < a.count(); ++i) {
        Field s = a.snapshot(i);
        s += b.at(a.time(i));
        s += c.at(a.time(i));
        out.append(a.time(i), s);
    }
    out.finalize();
    return out;
}

void export_trajectory(const Trajectory& tr, const std::string& dir, const std::string& stem) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::ordered_json man;
    man["dt"] = tr.dt();
    man["T"] = std::max(std::abs(tr.tmin()), std::abs(tr.tmax()));
    man["times"] = tr.times();
    man["flags"] = {{"blown_up", tr.blown_up}, {"blowup_time", tr.blowup_time}};
    std::vector<std::string> files;
    for (std::size_t i = 0; i < tr.count(); ++i) {
        std::string name = stem + "_" + std::to_string(i) + ".hwf";
        write_field(fs::path(dir) / name, to_rep(tr.snapshot(i), Rep::physical));
        files.push_back(name);
    }
    man["files"] = files;
    std::ofstream os(fs::path(dir) / (stem + "_manifest.json"));
    os << man.dump(2) << "\n";
}

}  // namespace hwlab
