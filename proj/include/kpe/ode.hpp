#ifndef KPE_ODE_HPP
#define KPE_ODE_HPP

#include <functional>
#include <string>
#include <vector>

#include "kpe/common.hpp"

namespace kpe {

/// Continuous-time vector field dx/dt = eval(x, t).
struct VectorField {
    int dim = 0;
    std::function<Vec(const Vec&, double)> eval;
};

struct RepressilatorParams {
    double alpha = 100.0;  // promoter strength
    double alpha0 = 0.0;   // leakage
    double beta = 1.0;     // protein/mRNA rate ratio
    double n_hill = 2.0;   // Hill coefficient

    void validate() const;
};

/// Uniformly sampled state sequence. `states` holds one column per sample.
struct Trajectory {
    std::vector<double> times;
    Mat states;  // dim x n_samples
    double dt_sample = 0.0;

    int dim() const { return static_cast<int>(states.rows()); }
    int samples() const { return static_cast<int>(states.cols()); }
    std::string digest() const { return digest_matrix(states); }
};

/// Six-state repressilator, state order [m_lacI, m_tetR, m_cI, p_lacI, p_tetR, p_cI].
/// Repression pairings: m_lacI <- p_cI, m_tetR <- p_lacI, m_cI <- p_tetR.
VectorField repressilator_field(const RepressilatorParams& params);

/// Linear field dx/dt = A x.
VectorField linear_field(const Mat& a);

/// Symmetric fixed point m of the repressilator: m = alpha/(1+m^n) + alpha0,
/// solved by bisection on [0, alpha + alpha0 + 1].
double repressilator_fixed_point(const RepressilatorParams& params);

/// Classical fixed-step 4th order Runge-Kutta update.
Vec rk4_step(const VectorField& field, const Vec& x, double t, double dt);

/// Integrate with fixed step dt_int, record every dt_sample (which must be an
/// integer multiple of dt_int within 1e-9 relative). The first stored state is
/// x0 exactly. Throws NonFiniteStateError if any step produces NaN/Inf.
Trajectory simulate(const VectorField& field, const Vec& x0, double t0, double tf,
                    double dt_int = 0.01, double dt_sample = 0.1);

/// CSV export/import, header `t,x1,...,xn`, 17 significant digits.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);
Trajectory read_trajectory_csv(const std::string& path);

} // namespace kpe

#endif
