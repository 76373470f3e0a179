#include "skewgenus/semigroups.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace skewgenus {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (gaps[i] <= 0) bad("gaps must be positive");
        if (i > 0 && gaps[i] <= gaps[i - 1]) bad("gaps must be strictly increasing");
    }
    NumericalSemigroup s(std::move(gaps));
    // Closure under addition: beyond the largest gap everything is in S, so
    // sums up to 2*t_g decide it.
    const int top = s.largest_gap();
    for (int x = 1; x <= top; ++x) {
        if (!s.contains(x)) continue;
        for (int y = x; x + y <= 2 * top; ++y) {
            if (!s.contains(y)) continue;
            if (!s.contains(x + y))
                bad("complement of the gap set is not closed under addition: " +
                    std::to_string(x) + " + " + std::to_string(y) + " = " +
                    std::to_string(x + y) + " is a gap");
        }
    }
    return s;
}

long long NumericalSemigroup::weight() const {
    long long w = 0;
    for (std::size_t i = 0; i < gaps_.size(); ++i)
        w += gaps_[i] - static_cast<long long>(i) - 1;
    return w;
}

long long NumericalSemigroup::first_positive() const {
    long long n = 1;
    while (!contains(n)) ++n;
    return n;
}

bool NumericalSemigroup::contains(long long n) const {
    if (n < 0) return false;
    if (gaps_.empty() || n > gaps_.back()) return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(n));
}

bool NumericalSemigroup::is_primitive() const {
    return 2 * first_positive() > largest_gap();
}

NumericalSemigroup stage_one_semigroup(int k) {
    if (k < 1) throw std::invalid_argument("stage_one_semigroup requires k >= 1");
    std::vector<int> gaps;
    for (int t = 1; t <= k + 1; ++t) gaps.push_back(t);
    for (int t = k + 4; t <= 2 * k + 3; ++t) gaps.push_back(t);
    return NumericalSemigroup::from_gaps(std::move(gaps));
}

SkewShape komeda_shape(const NumericalSemigroup& s, int r) {
    const int g = s.genus();
    if (r < g - 1)
        throw std::invalid_argument("komeda_shape requires rank >= genus - 1");
    std::vector<int> entries(static_cast<std::size_t>(r + 1 - g), 0);
    for (int i = 0; i < g; ++i)
        entries.push_back(s.gaps()[static_cast<std::size_t>(i)] - i);
    RamSeq upper = RamSeq::make(std::move(entries));
    return SkewShape::make(RamSeq::constant(0, r + 1), std::move(upper));
}

KomedaCertificate komeda_tg(const NumericalSemigroup& s, int r) {
    if (!s.is_primitive())
        throw std::invalid_argument("komeda_tg requires a primitive semigroup");
    if (s.weight() > s.genus() - 1 && s.genus() > 0)
        throw std::invalid_argument("komeda_tg requires weight <= genus - 1");
    SkewShape shape = komeda_shape(s, r);
    return KomedaCertificate{s, r, std::move(shape), s.genus()};
}

NumericalSemigroup gap_shift(const NumericalSemigroup& s) {
    if (s.weight() <= 0)
        throw std::invalid_argument("gap_shift requires positive weight");
    const auto& gaps = s.gaps();
    for (auto it = gaps.rbegin(); it != gaps.rend(); ++it) {
        if (s.contains(*it - 1)) {
            std::vector<int> shifted(gaps);
            shifted[static_cast<std::size_t>(gaps.rend() - it - 1)] = *it - 1;
            return NumericalSemigroup::from_gaps(std::move(shifted));
        }
    }
    throw std::logic_error("gap_shift: positive weight implies a movable gap");
}

std::string to_string(const NumericalSemigroup& s) {
    std::string out = "gaps:{";
    for (std::size_t i = 0; i < s.gaps().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.gaps()[i]);
    }
    out += '}';
    return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
    if (body.substr(0, 5) == "gaps:") body.remove_prefix(5);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        bad("semigroup literal must look like gaps:{1,2,5}");
    body = body.substr(1, body.size() - 2);
    std::vector<int> gaps;
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view piece = body.substr(pos, comma - pos);
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        if (!piece.empty()) {
            int value = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
            if (ec != std::errc() || ptr != piece.data() + piece.size())
                bad("invalid gap '" + std::string(piece) + "'");
            gaps.push_back(value);
        }
        pos = comma + 1;
    }
    return NumericalSemigroup::from_gaps(std::move(gaps));
}

}  // namespace skewgenus
