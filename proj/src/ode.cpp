#include "kpe/ode.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "kpe/errors.hpp"

namespace kpe {

void RepressilatorParams::validate() const {
    if (!(alpha >= 0.0)) throw ConfigError("repressilator: alpha must be >= 0");
    if (!(alpha0 >= 0.0)) throw ConfigError("repressilator: alpha0 must be >= 0");
    if (!(beta > 0.0)) throw ConfigError("repressilator: beta must be > 0");
    if (!(n_hill > 0.0)) throw ConfigError("repressilator: n_hill must be > 0");
}

VectorField repressilator_field(const RepressilatorParams& params) {
    params.validate();
    const RepressilatorParams p = params;
    VectorField f;
    f.dim = 6;
    f.eval = [p](const Vec& x, double) {
        Vec dx(6);
        // mRNA i is repressed by protein j: (lacI,cI), (tetR,lacI), (cI,tetR)
        static constexpr int repressor[3] = {5, 3, 4};
        for (int i = 0; i < 3; ++i) {
            const double pj = x[repressor[i]];
            dx[i] = -x[i] + p.alpha / (1.0 + std::pow(pj, p.n_hill)) + p.alpha0;
            dx[3 + i] = -p.beta * (x[3 + i] - x[i]);
        }
        return dx;
    };
    return f;
}

VectorField linear_field(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionError("linear_field: matrix must be square");
    const Mat m = a;
    VectorField f;
    f.dim = static_cast<int>(a.rows());
    f.eval = [m](const Vec& x, double) -> Vec { return m * x; };
    return f;
}

double repressilator_fixed_point(const RepressilatorParams& params) {
    params.validate();
    auto g = [&](double m) { return -m + params.alpha / (1.0 + std::pow(m, params.n_hill)) + params.alpha0; };
    double lo = 0.0, hi = params.alpha + params.alpha0 + 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Vec rk4_step(const VectorField& field, const Vec& x, double t, double dt) {
    const Vec k1 = field.eval(x, t);
    const Vec k2 = field.eval(x + 0.5 * dt * k1, t + 0.5 * dt);
    const Vec k3 = field.eval(x + 0.5 * dt * k2, t + 0.5 * dt);
    const Vec k4 = field.eval(x + dt * k3, t + dt);
    return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory simulate(const VectorField& field, const Vec& x0, double t0, double tf,
                    double dt_int, double dt_sample) {
    if (x0.size() != field.dim) throw DimensionError("simulate: x0 dimension mismatch");
    if (!(t0 < tf)) throw ConfigError("simulate: need t0 < tf");
    if (!(dt_int > 0.0) || !(dt_sample > 0.0)) throw ConfigError("simulate: steps must be positive");
    if (dt_int > dt_sample * (1.0 + 1e-9)) throw ConfigError("simulate: dt_int must not exceed dt_sample");

    const double ratio = dt_sample / dt_int;
    const auto steps_per_sample = static_cast<long>(std::llround(ratio));
    if (steps_per_sample < 1 || std::abs(ratio - static_cast<double>(steps_per_sample)) > 1e-9 * ratio)
        throw ConfigError("simulate: dt_sample must be an integer multiple of dt_int");

    const auto n_samples = static_cast<long>(std::floor((tf - t0) / dt_sample + 1e-9)) + 1;

    Trajectory traj;
    traj.dt_sample = dt_sample;
    traj.times.resize(static_cast<std::size_t>(n_samples));
    traj.states.resize(field.dim, n_samples);

    Vec x = x0;
    traj.times[0] = t0;
    traj.states.col(0) = x;
    for (long k = 1; k < n_samples; ++k) {
        for (long j = 0; j < steps_per_sample; ++j) {
            const double t = t0 + ((k - 1) * steps_per_sample + j) * dt_int;
            x = rk4_step(field, x, t, dt_int);
        }
        if (!x.allFinite()) {
            std::ostringstream os;
            os << "simulate: non-finite state at t=" << t0 + k * dt_sample;
            throw NonFiniteStateError(os.str());
        }
        traj.times[static_cast<std::size_t>(k)] = t0 + k * dt_sample;
        traj.states.col(k) = x;
    }
    return traj;
}

void write_trajectory_csv(const std::string& path, const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "t";
    for (int i = 1; i <= traj.dim(); ++i) out << ",x" << i;
    out << "\n";
    for (int k = 0; k < traj.samples(); ++k) {
        out << format_full(traj.times[static_cast<std::size_t>(k)]);
        for (int i = 0; i < traj.dim(); ++i) out << "," << format_full(traj.states(i, k));
        out << "\n";
    }
}

Trajectory read_trajectory_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(in, line)) throw Error("empty trajectory file: " + path);

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw Error("trajectory file has no samples: " + path);
    const std::size_t ncol = rows[0].size();
    if (ncol < 2) throw Error("trajectory file needs t plus at least one state column");
    for (const auto& r : rows)
        if (r.size() != ncol) throw Error("ragged trajectory file: " + path);

    Trajectory traj;
    traj.times.resize(rows.size());
    traj.states.resize(static_cast<int>(ncol - 1), static_cast<int>(rows.size()));
    for (std::size_t k = 0; k < rows.size(); ++k) {
        traj.times[k] = rows[k][0];
        for (std::size_t i = 1; i < ncol; ++i) traj.states(static_cast<int>(i - 1), static_cast<int>(k)) = rows[k][i];
    }
    traj.dt_sample = rows.size() > 1 ? traj.times[1] - traj.times[0] : 0.0;
    return traj;
}

} // namespace kpe
