#include "kpe/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

#include "kpe/errors.hpp"

namespace kpe {
namespace {

using json = nlohmann::json;

// C(n+d, d) without overflow for the sizes we allow.
long long multiset_count(int n, int d) {
    long long c = 1;
    for (int i = 1; i <= d; ++i) c = c * (n + i) / i;
    return c;
}

void enumerate_degree(int n, int degree, std::vector<int>& prefix, int pos, int remaining,
                      std::vector<std::vector<int>>& out) {
    if (pos == n - 1) {
        prefix[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(prefix);
        return;
    }
    for (int a = remaining; a >= 0; --a) {
        prefix[static_cast<std::size_t>(pos)] = a;
        enumerate_degree(n, degree, prefix, pos + 1, remaining - a, out);
    }
}

// Graded order, x1-major lexicographic within each degree; then reorder so the
// pure degree-1 indices occupy positions 0..n-1 and the constant follows.
std::vector<std::vector<int>> ordered_multi_indices(int n, int max_degree) {
    std::vector<std::vector<int>> graded;
    std::vector<int> prefix(static_cast<std::size_t>(n), 0);
    for (int degree = 0; degree <= max_degree; ++degree)
        enumerate_degree(n, degree, prefix, 0, degree, graded);

    std::vector<std::vector<int>> out;
    out.reserve(graded.size());
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        out.push_back(std::move(e));
    }
    out.emplace_back(static_cast<std::size_t>(n), 0);  // constant
    for (auto& a : graded) {
        const int degree = std::accumulate(a.begin(), a.end(), 0);
        if (degree <= 1) continue;
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace

std::string to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::state: return "state";
        case BasisKind::hermite: return "hermite";
        case BasisKind::monomial: return "monomial";
        case BasisKind::rbf: return "rbf";
    }
    return "unknown";
}

BasisKind basis_kind_from_string(const std::string& s) {
    if (s == "state") return BasisKind::state;
    if (s == "hermite") return BasisKind::hermite;
    if (s == "monomial") return BasisKind::monomial;
    if (s == "rbf") return BasisKind::rbf;
    throw ConfigError("unknown basis kind: " + s);
}

double hermite_he(int k, double x) {
    if (k < 0) throw ConfigError("hermite_he: negative order");
    double prev = 1.0;  // He_0
    if (k == 0) return prev;
    double cur = x;  // He_1
    for (int i = 1; i < k; ++i) {
        const double next = x * cur - i * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Dictionary state_dictionary(int n_state) {
    if (n_state < 1) throw ConfigError("state_dictionary: n_state must be >= 1");
    Dictionary d;
    d.kind_ = BasisKind::state;
    d.n_state_ = n_state;
    d.n_lifted_ = n_state;
    d.max_degree_ = 1;
    return d;
}

Dictionary hermite_dictionary(int n_state, int max_degree, int size_cap) {
    if (n_state < 1 || max_degree < 1) throw ConfigError("hermite_dictionary: need n_state >= 1, max_degree >= 1");
    const long long count = multiset_count(n_state, max_degree);
    if (count > size_cap) throw SizeError("hermite_dictionary: size " + std::to_string(count) +
                                          " exceeds cap " + std::to_string(size_cap));
    Dictionary d;
    d.kind_ = BasisKind::hermite;
    d.n_state_ = n_state;
    d.max_degree_ = max_degree;
    d.exponents_ = ordered_multi_indices(n_state, max_degree);
    d.n_lifted_ = static_cast<int>(d.exponents_.size());
    return d;
}

Dictionary monomial_dictionary(int n_state, int max_degree, int size_cap) {
    Dictionary d = hermite_dictionary(n_state, max_degree, size_cap);
    d.kind_ = BasisKind::monomial;
    return d;
}

Dictionary rbf_dictionary(const Mat& centers, double bandwidth) {
    if (centers.cols() < 1) throw ConfigError("rbf_dictionary: need at least one center");
    if (!(bandwidth > 0.0)) throw ConfigError("rbf_dictionary: bandwidth must be > 0");
    Dictionary d;
    d.kind_ = BasisKind::rbf;
    d.n_state_ = static_cast<int>(centers.rows());
    d.n_lifted_ = d.n_state_ + static_cast<int>(centers.cols());
    d.rbf_centers_ = centers;
    d.rbf_bandwidth_ = bandwidth;
    return d;
}

Vec Dictionary::lift(const Vec& x) const {
    if (x.size() != n_state_) throw DimensionError("lift: state dimension mismatch");
    Vec out(n_lifted_);
    out.head(n_state_) = x;  // state inclusivity, bitwise

    switch (kind_) {
        case BasisKind::state:
            break;
        case BasisKind::hermite:
        case BasisKind::monomial: {
            // per-variable value tables up to max_degree
            Mat table(n_state_, max_degree_ + 1);
            for (int i = 0; i < n_state_; ++i) {
                table(i, 0) = 1.0;
                if (max_degree_ >= 1) table(i, 1) = x[i];
                for (int k = 1; k < max_degree_; ++k)
                    table(i, k + 1) = kind_ == BasisKind::hermite
                                          ? x[i] * table(i, k) - k * table(i, k - 1)
                                          : x[i] * table(i, k);
            }
            for (int j = n_state_; j < n_lifted_; ++j) {
                const auto& a = exponents_[static_cast<std::size_t>(j)];
                double v = 1.0;
                for (int i = 0; i < n_state_; ++i)
                    if (a[static_cast<std::size_t>(i)] > 0) v *= table(i, a[static_cast<std::size_t>(i)]);
                out[j] = v;
            }
            break;
        }
        case BasisKind::rbf: {
            const double denom = 2.0 * rbf_bandwidth_ * rbf_bandwidth_;
            for (int j = 0; j < rbf_centers_.cols(); ++j)
                out[n_state_ + j] = std::exp(-(x - rbf_centers_.col(j)).squaredNorm() / denom);
            break;
        }
    }
    return out;
}

Mat Dictionary::lift_states(const Mat& states) const {
    if (states.rows() != n_state_) throw DimensionError("lift_states: state dimension mismatch");
    Mat out(n_lifted_, states.cols());
    for (int k = 0; k < states.cols(); ++k) out.col(k) = lift(states.col(k));
    return out;
}

Mat Dictionary::lift_trajectory(const Trajectory& traj) const {
    return lift_states(traj.states);
}

nlohmann::json Dictionary::descriptor() const {
    json j;
    j["basis"] = to_string(kind_);
    j["n_state"] = n_state_;
    switch (kind_) {
        case BasisKind::state:
            break;
        case BasisKind::hermite:
        case BasisKind::monomial:
            j["max_degree"] = max_degree_;
            break;
        case BasisKind::rbf: {
            j["bandwidth"] = rbf_bandwidth_;
            std::vector<std::vector<double>> centers;
            for (int c = 0; c < rbf_centers_.cols(); ++c) {
                std::vector<double> col(static_cast<std::size_t>(rbf_centers_.rows()));
                for (int r = 0; r < rbf_centers_.rows(); ++r) col[static_cast<std::size_t>(r)] = rbf_centers_(r, c);
                centers.push_back(std::move(col));
            }
            j["centers"] = centers;
            break;
        }
    }
    return j;
}

Dictionary Dictionary::from_descriptor(const nlohmann::json& j) {
    const auto kind = basis_kind_from_string(j.at("basis").get<std::string>());
    const int n = j.at("n_state").get<int>();
    switch (kind) {
        case BasisKind::state:
            return state_dictionary(n);
        case BasisKind::hermite:
            return hermite_dictionary(n, j.at("max_degree").get<int>());
        case BasisKind::monomial:
            return monomial_dictionary(n, j.at("max_degree").get<int>());
        case BasisKind::rbf: {
            const auto centers = j.at("centers").get<std::vector<std::vector<double>>>();
            if (centers.empty()) throw ConfigError("rbf descriptor: empty centers");
            Mat m(n, static_cast<int>(centers.size()));
            for (std::size_t c = 0; c < centers.size(); ++c) {
                if (static_cast<int>(centers[c].size()) != n) throw ConfigError("rbf descriptor: center dimension mismatch");
                for (int r = 0; r < n; ++r) m(r, static_cast<int>(c)) = centers[c][static_cast<std::size_t>(r)];
            }
            return rbf_dictionary(m, j.at("bandwidth").get<double>());
        }
    }
    throw ConfigError("unreachable basis kind");
}

} // namespace kpe
