#pragma once

#include <algorithm>
#include <stdexcept>

#include "skewgenus/sequences.hpp"

namespace skewgenus {

/// Brill-Noether number g - (r+1)(g-d+r).
inline long long rho(long long g, long long r, long long d) {
    return g - (r + 1) * (g - d + r);
}

/// Two-pointed variant: g - sum_i max{0, g-d+r + alpha_{r-i} + beta_i}.
inline long long rho_hat(long long g, long long r, long long d,
                         const RamSeq& alpha, const RamSeq& beta) {
    if (alpha.rank() != r || beta.rank() != r)
        throw std::invalid_argument("rho_hat: ramification sequences must have rank r");
    long long total = 0;
    const auto n = alpha.size();
    for (std::size_t i = 0; i < n; ++i) {
        const long long term = g - d + r + alpha[n - 1 - i] + beta[i];
        total += std::max(0LL, term);
    }
    return g - total;
}

}  // namespace skewgenus
