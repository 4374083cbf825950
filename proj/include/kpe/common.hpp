#ifndef KPE_COMMON_HPP
#define KPE_COMMON_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kpe {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

/// Deterministic RNG used throughout; draws are reproducible across
/// platforms (mt19937_64 sequence is pinned by the standard and the
/// double conversion below avoids std::uniform_real_distribution).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // rejection to avoid modulo bias
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

private:
    std::mt19937_64 engine_;
};

/// FNV-1a over raw bytes; used for provenance digests in reports and
/// model files (not a cryptographic hash).
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);
std::string digest_hex(std::uint64_t h);
std::string digest_matrix(const Mat& m);
std::string digest_file(const std::string& path);

/// Format a double with 17 significant digits (lossless round trip).
std::string format_full(double v);

} // namespace kpe

#endif
