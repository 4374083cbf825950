#ifndef KPE_DICTIONARY_HPP
#define KPE_DICTIONARY_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kpe/common.hpp"
#include "kpe/ode.hpp"

namespace kpe {

enum class BasisKind { state, hermite, monomial, rbf };

std::string to_string(BasisKind kind);
BasisKind basis_kind_from_string(const std::string& s);

/// Probabilists' Hermite polynomial He_k(x).
double hermite_he(int k, double x);

/// State-inclusive observable dictionary psi: R^n -> R^{n_L}. The first
/// n_state outputs are always the raw state coordinates, so the state is
/// recoverable by row selection.
///
/// Polynomial kinds (hermite, monomial) enumerate all multi-indices of total
/// degree <= max_degree in graded order (degree, then x1-major lexicographic),
/// then move the n pure degree-1 entries to the front and the constant right
/// after them.
class Dictionary {
public:
    BasisKind kind() const { return kind_; }
    int n_state() const { return n_state_; }
    int n_lifted() const { return n_lifted_; }
    int max_degree() const { return max_degree_; }
    const std::vector<std::vector<int>>& exponents() const { return exponents_; }

    Vec lift(const Vec& x) const;
    Mat lift_states(const Mat& states) const;           // column-wise
    Mat lift_trajectory(const Trajectory& traj) const;  // n_lifted x samples

    nlohmann::json descriptor() const;
    static Dictionary from_descriptor(const nlohmann::json& j);

    friend Dictionary state_dictionary(int n_state);
    friend Dictionary hermite_dictionary(int n_state, int max_degree, int size_cap);
    friend Dictionary monomial_dictionary(int n_state, int max_degree, int size_cap);
    friend Dictionary rbf_dictionary(const Mat& centers, double bandwidth);

private:
    Dictionary() = default;

    BasisKind kind_ = BasisKind::state;
    int n_state_ = 0;
    int n_lifted_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<int>> exponents_;  // per lifted entry, polynomial kinds
    Mat rbf_centers_;                          // n_state x m
    double rbf_bandwidth_ = 1.0;
};

/// Identity lifting psi(x) = x.
Dictionary state_dictionary(int n_state);

/// Products He_{a1}(x1)...He_{an}(xn) over total degree <= max_degree;
/// n_lifted = C(n_state + max_degree, max_degree). Throws SizeError above cap.
Dictionary hermite_dictionary(int n_state, int max_degree, int size_cap = 10000);

/// Plain monomials x^a over the same index set and ordering.
Dictionary monomial_dictionary(int n_state, int max_degree, int size_cap = 10000);

/// [x; exp(-|x - c_j|^2 / (2 bw^2))] with user-supplied centers (one per column).
Dictionary rbf_dictionary(const Mat& centers, double bandwidth);

} // namespace kpe

#endif
