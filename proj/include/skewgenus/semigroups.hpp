#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewgenus/sequences.hpp"

namespace skewgenus {

/// Cofinite additive submonoid of the nonnegative integers, stored by its
/// gap set t_1 < ... < t_g. Genus is the gap count; weight is sum(t_i - i).
class NumericalSemigroup {
public:
    /// Validates that the gaps are strictly increasing positive integers and
    /// that the complement is closed under addition (checked up to twice the
    /// largest gap, which suffices).
    static NumericalSemigroup from_gaps(std::vector<int> gaps);
    static NumericalSemigroup trivial() { return NumericalSemigroup({}); }

    const std::vector<int>& gaps() const { return gaps_; }
    int genus() const { return static_cast<int>(gaps_.size()); }
    long long weight() const;
    /// Largest gap, or 0 for the genus-0 semigroup.
    int largest_gap() const { return gaps_.empty() ? 0 : gaps_.back(); }
    /// Smallest positive element.
    long long first_positive() const;
    bool contains(long long n) const;
    /// Twice the smallest positive element exceeds the largest gap.
    bool is_primitive() const;

    friend bool operator==(const NumericalSemigroup&, const NumericalSemigroup&) = default;

private:
    explicit NumericalSemigroup(std::vector<int> gaps) : gaps_(std::move(gaps)) {}
    std::vector<int> gaps_;
};

/// Gaps {1..k+1} u {k+4..2k+3}: the complement of {0, k+2, k+3} below 2k+4.
/// Genus 2k+1, weight 2k, primitive. Requires k >= 1.
NumericalSemigroup stage_one_semigroup(int k);

/// Rank-r shape beta / 0^(r+1) with beta = (0,...,0, t_1, t_2-1, ..., t_g-(g-1)),
/// padded with r+1-g leading zeros. Requires r >= genus-1.
SkewShape komeda_shape(const NumericalSemigroup& s, int r);

/// A certified threshold-genus value sourced from the dimensionally-proper
/// Weierstrass-point existence theorem; the one geometric axiom in bound trees.
struct KomedaCertificate {
    NumericalSemigroup semigroup;
    int rank;
    SkewShape shape;
    long long tg_value;  // equals the semigroup genus
};

/// Requires a primitive semigroup with weight <= genus-1 and r >= genus-1;
/// throws when the hypotheses fail (the axiom then does not apply).
KomedaCertificate komeda_tg(const NumericalSemigroup& s, int r);

/// Moves the largest gap whose predecessor is a non-gap down by one; weight
/// drops by exactly 1 and primitivity is preserved for primitive inputs.
/// Requires weight > 0.
NumericalSemigroup gap_shift(const NumericalSemigroup& s);

std::string to_string(const NumericalSemigroup& s);  // "gaps:{1,2,5}"
NumericalSemigroup parse_semigroup(std::string_view text);

}  // namespace skewgenus
