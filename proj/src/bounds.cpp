#include "skewgenus/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace skewgenus {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require_rect(long long a, long long b) {
    if (a < 1 || b < 1) bad("rectangle dimensions must be >= 1");
}

}  // namespace

long long tg_lower(long long a, long long b) {
    require_rect(a, b);
    return a + b - 1;
}

long long base_tg_upper(long long a, long long b) {
    require_rect(a, b);
    switch (a) {
        case 1: return b;
        case 2: return b + 1;
        case 3:
            if (b >= 3) return b + sqrt_ceil_term(b);
            // symmetric exact values cover b = 1, 2
            return std::min(base_tg_upper(b, a), a * b);
        case 4: return b - 3 + pareschi_threshold(b);
        default: bad("base_tg_upper requires a in {1,2,3,4}");
    }
}

Rational epsilon(long long a) {
    if (a < 1) bad("epsilon requires a >= 1");
    const long long num = ((-(a % 4)) % 4 + 4) % 4;
    const long long den = (a + 3) / 4;
    const long long g = std::gcd(num == 0 ? den : num, den);
    return Rational{num / g, den / g};
}

long long asy_upper(long long a, long long b) {
    require_rect(a, b);
    long long out = ((a + 3) / 4) * b + (a / 4) * pareschi_h(b);
    if (a % 4 == 2) out += 1;
    if (a % 4 == 3) out += sqrt_ceil_term(b);
    return out;
}

BoundCertificate main2_upper(long long a, long long b, std::size_t state_budget) {
    if (a < 2 || b < 2) bad("main2_upper requires a, b >= 2");
    BoundCertificate cert;
    if (a >= 4 && b >= 4) {
        cert = main2_decomposition(a, b, 1, state_budget);
    } else {
        const long long mn = std::min(a, b);
        const long long mx = std::max(a, b);
        cert.target = BoundCertificate::RectTarget{a, b};
        cert.lower = tg_lower(a, b);
        cert.upper = base_tg_upper(mn, mx);
        cert.node = BoundCertificate::BaseNode{mn == 2 ? "a2" : "a3", mn == 2};
    }
    if (cert.upper > (a * b + 4) / 2)
        throw std::logic_error("main2_upper exceeded floor(ab/2 + 2)");
    return cert;
}

long long BoundEngine::upper_value(long long a, long long b) {
    require_rect(a, b);
    std::scoped_lock lock(mutex_);
    return value_locked(a, b);
}

long long BoundEngine::value_locked(long long a, long long b) {
    const auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const long long mn = std::min(a, b);
    const long long mx = std::max(a, b);
    long long best = a * b;  // Brill-Noether regime bound, always valid
    if (mn <= 4) best = std::min(best, base_tg_upper(mn, mx));
    if (a >= 4 && b >= 4) best = std::min(best, a * b / 2 + 2);
    best = std::min({best, asy_upper(a, b), asy_upper(b, a)});
    for (long long a1 = 1; a1 <= a / 2; ++a1)
        best = std::min(best, value_locked(a1, b) + value_locked(a - a1, b));
    for (long long b1 = 1; b1 <= b / 2; ++b1)
        best = std::min(best, value_locked(a, b1) + value_locked(a, b - b1));

    if (best < tg_lower(a, b))
        throw std::logic_error("bound engine produced a value below the a+b-1 floor");
    memo_.emplace(key, best);
    return best;
}

BoundCertificate BoundEngine::upper_certificate(long long a, long long b) {
    require_rect(a, b);
    BoundCertificate cert = build_certificate(a, b);
    replay_certificate(cert);
    return cert;
}

BoundCertificate BoundEngine::build_certificate(long long a, long long b) {
    const long long best = upper_value(a, b);
    const long long mn = std::min(a, b);
    const long long mx = std::max(a, b);

    BoundCertificate cert;
    cert.target = BoundCertificate::RectTarget{a, b};
    cert.lower = tg_lower(a, b);
    cert.upper = best;

    if (mn <= 4 && base_tg_upper(mn, mx) == best) {
        static const char* ids[] = {"a1", "a2", "a3", "tg4b"};
        cert.node = BoundCertificate::BaseNode{ids[mn - 1], mn <= 2};
        return cert;
    }
    if (a >= 4 && b >= 4 && a * b / 2 + 2 == best)
        return main2_decomposition(a, b, 1, budget_);
    if (std::min(asy_upper(a, b), asy_upper(b, a)) == best) {
        cert.node = BoundCertificate::FormulaNode{"asy"};
        return cert;
    }
    for (long long a1 = 1; a1 <= a / 2; ++a1) {
        if (upper_value(a1, b) + upper_value(a - a1, b) != best) continue;
        BoundCertificate::SplitNode split{"row", {}};
        split.children.push_back(build_certificate(a1, b));
        split.children.push_back(build_certificate(a - a1, b));
        cert.node = std::move(split);
        return cert;
    }
    for (long long b1 = 1; b1 <= b / 2; ++b1) {
        if (upper_value(a, b1) + upper_value(a, b - b1) != best) continue;
        BoundCertificate::SplitNode split{"column", {}};
        split.children.push_back(build_certificate(a, b1));
        split.children.push_back(build_certificate(a, b - b1));
        cert.node = std::move(split);
        return cert;
    }
    cert.node = BoundCertificate::FormulaNode{"bn-trivial"};
    if (a * b != best)
        throw std::logic_error("bound engine certificate does not match its value");
    return cert;
}

BoundCertificate tg_upper(long long a, long long b, std::size_t state_budget) {
    BoundEngine engine(state_budget);
    return engine.upper_certificate(a, b);
}

long long tg_upper_value(long long a, long long b, std::size_t state_budget) {
    BoundEngine engine(state_budget);
    return engine.upper_value(a, b);
}

ExistenceResult exists_dimensionally_proper(long long g, long long r, long long d,
                                            std::size_t state_budget) {
    if (g < 0 || r < 0 || d < 0) bad("exists_dimensionally_proper requires g, r, d >= 0");
    ExistenceResult result;
    result.a = r + 1;
    result.b = g - d + r;
    if (result.b < 0) {
        result.verdict = ExistenceVerdict::OutOfScope;
        return result;
    }
    if (g >= result.a * result.b) {
        result.verdict = ExistenceVerdict::ClassicalYes;
        return result;
    }
    // here b >= 1: b = 0 would put us in the classical branch
    BoundEngine engine(state_budget);
    if (engine.upper_value(result.a, result.b) <= g) {
        result.verdict = ExistenceVerdict::ProvenYes;
        result.certificate = engine.upper_certificate(result.a, result.b);
        return result;
    }
    result.verdict = ExistenceVerdict::Unknown;
    return result;
}

std::string to_string(ExistenceVerdict v) {
    switch (v) {
        case ExistenceVerdict::ClassicalYes: return "classical-yes";
        case ExistenceVerdict::ProvenYes: return "proven-yes";
        case ExistenceVerdict::OutOfScope: return "out-of-scope";
        case ExistenceVerdict::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace skewgenus
