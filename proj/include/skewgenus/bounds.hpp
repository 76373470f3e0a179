#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "skewgenus/certificates.hpp"

namespace skewgenus {

/// tg(a x b) >= a + b - 1.
long long tg_lower(long long a, long long b);

/// Smallest integer k with k >= 1/2 + sqrt(2b + 1/4), by exact integer
/// arithmetic. The square-root term of the a = 3 base case.
long long sqrt_ceil_term(long long b);

/// Exact comparison f(d) >= num/den, where
///   f(d) = ((32d-215)^(3/2) - 541*(32d-215)^(1/2)) / 1536 + 23d/16 - 397/128.
/// Decided by sign analysis and squaring in big integers; no floating point.
bool pareschi_f_at_least(long long d, long long num, long long den = 1);

/// min { d >= 20 : f(d) - d + 3 >= b }. Monotone upward search from d = 20.
long long pareschi_threshold(long long b);
/// pareschi_threshold(b) - 3.
long long pareschi_h(long long b);

/// Closed-form upper bound for a in {1,2,3,4}: exact values b and b+1 for
/// a = 1, 2; the square-root formula for a = 3 (b >= 3); the Pareschi
/// threshold formula for a = 4. Small-b cases for a = 3 fall back to the
/// symmetric exact values.
long long base_tg_upper(long long a, long long b);

struct Rational {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// ((-a) mod 4) / ceil(a/4), reduced.
Rational epsilon(long long a);

/// ceil(a/4)*b + floor(a/4)*h(b) + a parity correction: 1 when a = 2 mod 4,
/// the a = 3 square-root term when a = 3 mod 4, 0 otherwise.
long long asy_upper(long long a, long long b);

/// Certified tg(a x b) <= floor(ab/2 + 2) for a, b >= 2: the four-stage
/// decomposition when a, b >= 4, a base case when min(a,b) is 2 or 3.
BoundCertificate main2_upper(long long a, long long b,
                             std::size_t state_budget = kDefaultStateBudget);

/// Memoized minimizer over base cases (symmetry-normalized), the four-stage
/// bound, the stacked-rectangle bound, and all row/column splits. Safe for
/// concurrent use; values depend only on (a, b).
class BoundEngine {
public:
    explicit BoundEngine(std::size_t state_budget = kDefaultStateBudget)
        : budget_(state_budget) {}

    long long upper_value(long long a, long long b);
    BoundCertificate upper_certificate(long long a, long long b);

private:
    long long value_locked(long long a, long long b);
    BoundCertificate build_certificate(long long a, long long b);

    std::size_t budget_;
    std::mutex mutex_;
    std::map<std::pair<long long, long long>, long long> memo_;
};

/// One-shot helper around BoundEngine.
BoundCertificate tg_upper(long long a, long long b,
                          std::size_t state_budget = kDefaultStateBudget);
long long tg_upper_value(long long a, long long b,
                         std::size_t state_budget = kDefaultStateBudget);

enum class ExistenceVerdict { ClassicalYes, ProvenYes, OutOfScope, Unknown };

struct ExistenceResult {
    ExistenceVerdict verdict = ExistenceVerdict::Unknown;
    long long a = 0;  // r + 1
    long long b = 0;  // g - d + r
    std::optional<BoundCertificate> certificate;  // present for ProvenYes
};

/// Existence of dimensionally proper series for (g, r, d). Never a negative
/// claim: the fourth verdict is Unknown.
ExistenceResult exists_dimensionally_proper(long long g, long long r, long long d,
                                            std::size_t state_budget = kDefaultStateBudget);

std::string to_string(ExistenceVerdict v);

}  // namespace skewgenus
