#include "kpe/common.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kpe/errors.hpp"

namespace kpe {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string digest_matrix(const Mat& m) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const std::int64_t rows = m.rows(), cols = m.cols();
    h = fnv1a64(&rows, sizeof(rows), h);
    h = fnv1a64(&cols, sizeof(cols), h);
    for (std::int64_t c = 0; c < cols; ++c)
        for (std::int64_t r = 0; r < rows; ++r) {
            const double v = m(r, c);
            h = fnv1a64(&v, sizeof(v), h);
        }
    return digest_hex(h);
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in) {
        in.read(buf, sizeof(buf));
        h = fnv1a64(buf, static_cast<std::size_t>(in.gcount()), h);
    }
    return digest_hex(h);
}

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

} // namespace kpe
