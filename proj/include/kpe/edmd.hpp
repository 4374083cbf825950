#ifndef KPE_EDMD_HPP
#define KPE_EDMD_HPP

#include <complex>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kpe/common.hpp"
#include "kpe/dictionary.hpp"
#include "kpe/ode.hpp"

namespace kpe {

/// Aligned lifted snapshot pairs (columns of psi_x at t, psi_y at t+1).
/// No pair straddles two trajectories.
struct SnapshotPair {
    Mat psi_x;
    Mat psi_y;
    double dt_sample = 0.0;
    std::vector<std::string> trajectory_digests;

    int pairs() const { return static_cast<int>(psi_x.cols()); }
};

struct EdmdOptions {
    double svd_tol = 1e-10;  // relative to the largest singular value
    double ridge = 0.0;      // optional Tikhonov weight, off by default
};

/// Fitted Koopman matrix with its dictionary and output projection.
/// Convention: psi(x_{t+1}) = K psi(x_t), so K = Psi_Y pinv(Psi_X).
struct KoopmanModel {
    Mat k;
    Dictionary dict;
    std::vector<int> output_rows;  // W_h selects these rows (default 0..n-1)
    double svd_tol = 1e-10;
    double training_residual = 0.0;  // |K Psi_X - Psi_Y|_F / |Psi_Y|_F
    double dt_sample = 0.0;
    std::vector<std::string> trajectory_digests;

    Mat output_matrix() const;  // dense W_h
    Vec project(const Vec& psi) const;
    std::string digest() const { return digest_matrix(k); }
};

SnapshotPair build_snapshots(const Dictionary& dict, const std::vector<Trajectory>& trajectories);

KoopmanModel fit_edmd(const SnapshotPair& snapshots, const Dictionary& dict,
                      const EdmdOptions& options = {});

enum class RolloutMode {
    linear,  // lift once, iterate psi <- K psi
    relift   // re-lift the projected state every step
};

/// Roll the model forward `steps` steps from x0. Divergence shows up as
/// non-finite states in the returned trajectory (no throw).
Trajectory predict(const KoopmanModel& model, const Vec& x0, int steps,
                   RolloutMode mode = RolloutMode::linear);

/// Partition of K columns/rows into state-only and input-dependent blocks.
struct InputKoopmanSplit {
    Mat k_x;  // state rows x state cols
    Mat k_u;  // state rows x input cols
    std::vector<int> state_indices;
    std::vector<int> input_indices;
};

InputKoopmanSplit split_dictionary_by_input(const Mat& k, const std::vector<bool>& input_mask,
                                            int n_state);
InputKoopmanSplit split_dictionary_by_input(const KoopmanModel& model,
                                            const std::vector<bool>& input_mask);

/// G_K(z) = W_h (zI - K_x)^{-1} K_u, evaluated by linear solve.
/// Throws PoleError when z is (numerically) an eigenvalue of K_x.
CMat transfer_function(const InputKoopmanSplit& split, const Mat& w_h, std::complex<double> z);

/// Eigenvalues of K_x sorted by modulus descending, then phase ascending.
std::vector<std::complex<double>> koopman_poles(const InputKoopmanSplit& split);

nlohmann::json model_to_json(const KoopmanModel& model);
KoopmanModel model_from_json(const nlohmann::json& j);
void save_model(const std::string& path, const KoopmanModel& model);
KoopmanModel load_model(const std::string& path);

} // namespace kpe

#endif
