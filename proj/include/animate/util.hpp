#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace animate {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// FNV-1a over raw bytes; used for config/schedule fingerprints and golden checksums.
inline std::uint64_t fnv1a(const void* data, std::size_t size,
                           std::uint64_t seed = 0xcbf29ce484222325ULL) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a(std::string_view text, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    return fnv1a(text.data(), text.size(), seed);
}

inline std::uint64_t fnv1a(const Mat& m, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    const auto rows = static_cast<std::int64_t>(m.rows());
    const auto cols = static_cast<std::int64_t>(m.cols());
    h = fnv1a(&rows, sizeof rows, h);
    h = fnv1a(&cols, sizeof cols, h);
    return fnv1a(m.data(), sizeof(double) * static_cast<std::size_t>(m.size()), h);
}

/// Deterministic gaussian stream. std::normal_distribution is implementation-defined,
/// so Box-Muller over mt19937_64 keeps golden files stable across standard libraries.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 1e-300) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    double uniform01() {
        // 53-bit mantissa uniform in [0,1)
        return static_cast<double>(engine_() >> 11) * (1.0 / 9007199254740992.0);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    Mat matrix(Eigen::Index rows, Eigen::Index cols, double stddev) {
        Mat m(rows, cols);
        for (Eigen::Index c = 0; c < cols; ++c)
            for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = stddev * next();
        return m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline bool all_finite(const Mat& m) { return m.allFinite(); }

}  // namespace animate
