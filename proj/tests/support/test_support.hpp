#pragma once

#include <cstdint>

#include "svtail/matrix.hpp"
#include "svtail/rng.hpp"
#include "svtail/spectra.hpp"

namespace svtail::testing {

inline DenseMatrix random_dense(int m, int n, std::uint64_t seed) {
    Rng rng(seed);
    DenseMatrix b(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = rng.gaussian();
    return b;
}

inline SymmetricMatrix random_symmetric(int n, std::uint64_t seed) {
    Rng rng(seed);
    SymmetricMatrix h(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) h.set(i, j, rng.gaussian());
    return h;
}

/// Random symmetric matrix rescaled so its operator norm is <= cap.
inline SymmetricMatrix random_symmetric_capped(int n, std::uint64_t seed, double cap) {
    SymmetricMatrix h = random_symmetric(n, seed);
    const double norm = std::max(std::abs(lambda_max(h)), std::abs(lambda_min(h)));
    if (norm > cap) {
        const double scale = cap / (norm * (1.0 + 1e-12));
        h = scale * h;
    }
    return h;
}

}  // namespace svtail::testing
