#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewgenus/bounds.hpp"

namespace skewgenus {

using boost::multiprecision::cpp_int;

long long sqrt_ceil_term(long long b) {
    if (b < 0) throw std::invalid_argument("sqrt_ceil_term requires b >= 0");
    // k >= 1/2 + sqrt(2b + 1/4)  <=>  (2k-1)^2 >= 8b+1  (2k-1 > 0)
    const cpp_int radicand = cpp_int(8) * b + 1;
    const cpp_int root = boost::multiprecision::sqrt(radicand);  // floor sqrt
    long long k = std::max(1LL, static_cast<long long>((root - 1) / 2));
    while (cpp_int(2 * k - 1) * (2 * k - 1) < radicand) ++k;
    return k;
}

bool pareschi_f_at_least(long long d, long long num, long long den) {
    if (d < 20) throw std::invalid_argument("the threshold function is used for d >= 20");
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    // 1536 f(d) = u(u^2 - 541) + 2208 d - 4764 with u = sqrt(32d - 215), so
    // f(d) >= num/den  <=>  den * u * (v - 541) >= W,
    // where v = 32d - 215 and W = 1536 num - den (2208 d - 4764).
    const cpp_int v = cpp_int(32) * d - 215;
    const cpp_int lhs_rational = cpp_int(den) * (v - 541);  // times u, u = sqrt(v) > 0
    const cpp_int w = cpp_int(1536) * num - cpp_int(den) * (cpp_int(2208) * d - 4764);

    if (lhs_rational >= 0) {
        if (w <= 0) return true;
        return lhs_rational * lhs_rational * v >= w * w;
    }
    if (w >= 0) return false;
    return lhs_rational * lhs_rational * v <= w * w;
}

long long pareschi_threshold(long long b) {
    if (b < 1) throw std::invalid_argument("pareschi_threshold requires b >= 1");
    // f(d) - d is increasing for d >= 20, so the first hit is the minimum.
    for (long long d = 20;; ++d)
        if (pareschi_f_at_least(d, b + d - 3)) return d;
}

long long pareschi_h(long long b) { return pareschi_threshold(b) - 3; }

}  // namespace skewgenus
