#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace skewgenus {

/// A nondecreasing integer tuple (alpha_0, ..., alpha_r). Rank r is implicit
/// in the length; entries may be negative. Immutable after construction.
class RamSeq {
public:
    static RamSeq make(std::vector<int> entries);
    static RamSeq constant(int value, int count);
    static RamSeq from_vanishing(const std::vector<int>& vanishing);

    int rank() const { return static_cast<int>(entries_.size()) - 1; }
    std::size_t size() const { return entries_.size(); }
    int operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Strictly increasing a_i = alpha_i + i.
    std::vector<int> vanishing() const;
    long long sum() const;

    /// Entry i can move up/down by one with the tuple staying nondecreasing.
    /// The last entry is always increasable, the first always decreasable.
    bool increasable(std::size_t i) const;
    bool decreasable(std::size_t i) const;

    RamSeq translated(int n) const;  // n + alpha
    RamSeq reflected(int n) const;   // n - alpha, i.e. (n-alpha_r, ..., n-alpha_0)

    friend bool operator==(const RamSeq&, const RamSeq&) = default;
    friend std::strong_ordering operator<=>(const RamSeq& x, const RamSeq& y) {
        return x.entries_ <=> y.entries_;
    }

private:
    explicit RamSeq(std::vector<int> entries) : entries_(std::move(entries)) {}
    std::vector<int> entries_;
};

/// Entrywise partial order; requires equal ranks.
bool entrywise_leq(const RamSeq& a, const RamSeq& b);

/// Ordered pair lower <= upper of equal rank.
struct SkewShape {
    RamSeq lower;
    RamSeq upper;

    static SkewShape make(RamSeq lower, RamSeq upper);

    int rank() const { return lower.rank(); }
    long long size() const { return upper.sum() - lower.sum(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

SkewShape translated(const SkewShape& s, int n);
SkewShape reflected(const SkewShape& s, int n);

/// ASCII Young diagram: one row per index, top row = index r, boxes in
/// columns lower_i+1 .. upper_i. Zero-width rows draw a left-boundary guide.
std::string render_diagram(const SkewShape& s);

std::string to_string(const RamSeq& seq);
std::string to_string(const SkewShape& s);

/// Accepts "(0,0,2,2,4)", "0,0,2,2,4", or exponent form "0^2 2^2 4".
RamSeq parse_ram_seq(std::string_view text);
/// "upper / lower", each side in sequence-literal form.
SkewShape parse_shape(std::string_view text);

}  // namespace skewgenus
