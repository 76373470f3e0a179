#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skewgenus {

/// A proper arithmetic subset of the integers: empty, a single integer, or a
/// residue class offset + modulus*Z with modulus >= 2. Modulus 1 (all of Z)
/// is not representable.
class Progression {
public:
    enum class Kind { Empty, Singleton, Residue };

    static Progression empty() { return Progression(Kind::Empty, 0, 0); }
    static Progression singleton(long long n) { return Progression(Kind::Singleton, n, 0); }
    static Progression residue(long long offset, long long modulus);

    Kind kind() const { return kind_; }
    /// Singleton value; only meaningful for Kind::Singleton.
    long long value() const { return a_; }
    /// Canonical offset in [0, modulus); only meaningful for Kind::Residue.
    long long offset() const { return a_; }
    /// Residue modulus, or 0 for empty/singleton.
    long long modulus() const { return m_; }

    bool contains(long long n) const;

    Progression shifted(long long n) const;
    Progression negated() const;

    friend bool operator==(const Progression&, const Progression&) = default;

private:
    Progression(Kind kind, long long a, long long m) : kind_(kind), a_(a), m_(m) {}
    Kind kind_;
    long long a_;
    long long m_;
};

/// Smallest progression containing all of `values`: empty set -> Empty, one
/// element -> Singleton, otherwise the residue class modulo the gcd of the
/// pairwise differences. Returns nullopt when that gcd is 1.
std::optional<Progression> minimal_progression(const std::vector<long long>& values);

std::string to_string(const Progression& p);
/// Accepts "empty", "{n}", "o+mZ" (m >= 2), and "mZ" for offset 0.
Progression parse_progression(std::string_view text);

}  // namespace skewgenus
