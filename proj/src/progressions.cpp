#include "skewgenus/progressions.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace skewgenus {

namespace {

long long mod_floor(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

long long parse_ll(std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("invalid integer '" + std::string(tok) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

Progression Progression::residue(long long offset, long long modulus) {
    if (modulus < 2)
        throw std::invalid_argument("progression modulus must be >= 2, got " +
                                    std::to_string(modulus));
    return Progression(Kind::Residue, mod_floor(offset, modulus), modulus);
}

bool Progression::contains(long long n) const {
    switch (kind_) {
        case Kind::Empty: return false;
        case Kind::Singleton: return n == a_;
        case Kind::Residue: return mod_floor(n, m_) == a_;
    }
    return false;
}

Progression Progression::shifted(long long n) const {
    switch (kind_) {
        case Kind::Empty: return *this;
        case Kind::Singleton: return singleton(a_ + n);
        case Kind::Residue: return residue(a_ + n, m_);
    }
    return *this;
}

Progression Progression::negated() const {
    switch (kind_) {
        case Kind::Empty: return *this;
        case Kind::Singleton: return singleton(-a_);
        case Kind::Residue: return residue(-a_, m_);
    }
    return *this;
}

std::optional<Progression> minimal_progression(const std::vector<long long>& values) {
    if (values.empty()) return Progression::empty();
    if (values.size() == 1) return Progression::singleton(values[0]);
    long long g = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        g = std::gcd(g, std::llabs(values[i] - values[0]));
    if (g == 1) return std::nullopt;
    return Progression::residue(values[0], g);
}

std::string to_string(const Progression& p) {
    switch (p.kind()) {
        case Progression::Kind::Empty: return "empty";
        case Progression::Kind::Singleton: return "{" + std::to_string(p.value()) + "}";
        case Progression::Kind::Residue:
            return std::to_string(p.offset()) + "+" + std::to_string(p.modulus()) + "Z";
    }
    return "empty";
}

Progression parse_progression(std::string_view text) {
    std::string_view body = trim(text);
    if (body == "empty") return Progression::empty();
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}')
        return Progression::singleton(parse_ll(trim(body.substr(1, body.size() - 2))));
    if (!body.empty() && (body.back() == 'Z' || body.back() == 'z')) {
        std::string_view head = trim(body.substr(0, body.size() - 1));
        // "o+mZ" or bare "mZ"
        const auto plus = head.rfind('+');
        if (plus == std::string_view::npos)
            return Progression::residue(0, parse_ll(head));
        const long long offset = parse_ll(trim(head.substr(0, plus)));
        const long long modulus = parse_ll(trim(head.substr(plus + 1)));
        return Progression::residue(offset, modulus);
    }
    throw std::invalid_argument("invalid progression literal '" + std::string(text) +
                                "' (expected \"empty\", \"{n}\", or \"o+mZ\")");
}

}  // namespace skewgenus
