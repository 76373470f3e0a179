#include "skewgenus/sequences.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewgenus {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

int parse_int(std::string_view tok) {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        bad("invalid integer '" + std::string(tok) + "'");
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

RamSeq RamSeq::make(std::vector<int> entries) {
    if (entries.empty()) bad("ramification sequence must be nonempty");
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] > entries[i + 1])
            bad("ramification sequence must be nondecreasing: " + std::to_string(entries[i]) +
                " > " + std::to_string(entries[i + 1]) + " at index " + std::to_string(i));
    return RamSeq(std::move(entries));
}

RamSeq RamSeq::constant(int value, int count) {
    if (count <= 0) bad("constant sequence needs a positive length");
    return RamSeq(std::vector<int>(static_cast<std::size_t>(count), value));
}

RamSeq RamSeq::from_vanishing(const std::vector<int>& vanishing) {
    if (vanishing.empty()) bad("vanishing sequence must be nonempty");
    std::vector<int> entries(vanishing.size());
    for (std::size_t i = 0; i < vanishing.size(); ++i) {
        if (i > 0 && vanishing[i] <= vanishing[i - 1])
            bad("vanishing sequence must be strictly increasing");
        entries[i] = vanishing[i] - static_cast<int>(i);
    }
    return RamSeq(std::move(entries));
}

std::vector<int> RamSeq::vanishing() const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out[i] = entries_[i] + static_cast<int>(i);
    return out;
}

long long RamSeq::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

bool RamSeq::increasable(std::size_t i) const {
    return i + 1 == entries_.size() || entries_[i] + 1 <= entries_[i + 1];
}

bool RamSeq::decreasable(std::size_t i) const {
    return i == 0 || entries_[i] - 1 >= entries_[i - 1];
}

RamSeq RamSeq::translated(int n) const {
    std::vector<int> out(entries_);
    for (int& e : out) e += n;
    return RamSeq(std::move(out));
}

RamSeq RamSeq::reflected(int n) const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out[i] = n - entries_[entries_.size() - 1 - i];
    return RamSeq(std::move(out));
}

bool entrywise_leq(const RamSeq& a, const RamSeq& b) {
    if (a.size() != b.size()) bad("rank mismatch when comparing sequences");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

SkewShape SkewShape::make(RamSeq lower, RamSeq upper) {
    if (lower.size() != upper.size()) bad("skew shape requires equal ranks");
    if (!entrywise_leq(lower, upper)) bad("skew shape requires lower <= upper entrywise");
    return SkewShape{std::move(lower), std::move(upper)};
}

SkewShape translated(const SkewShape& s, int n) {
    return SkewShape{s.lower.translated(n), s.upper.translated(n)};
}

SkewShape reflected(const SkewShape& s, int n) {
    return SkewShape{s.upper.reflected(n), s.lower.reflected(n)};
}

std::string render_diagram(const SkewShape& s) {
    const int base = std::min(0, s.lower[0]);
    std::string out;
    for (int i = s.rank(); i >= 0; --i) {
        const auto idx = static_cast<std::size_t>(i);
        const int offset = s.lower[idx] - base;
        const int width = s.upper[idx] - s.lower[idx];
        for (int c = 0; c < offset; ++c) out += "  ";
        if (width == 0)
            out += '|';
        else
            for (int c = 0; c < width; ++c) out += "[]";
        out += '\n';
    }
    return out;
}

std::string to_string(const RamSeq& seq) {
    std::string out = "(";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(seq[i]);
    }
    out += ')';
    return out;
}

std::string to_string(const SkewShape& s) {
    return to_string(s.upper) + "/" + to_string(s.lower);
}

RamSeq parse_ram_seq(std::string_view text) {
    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) bad("empty sequence literal");

    std::vector<int> entries;
    if (body.find('^') != std::string_view::npos ||
        (body.find(',') == std::string_view::npos && body.find(' ') != std::string_view::npos)) {
        // exponent form: whitespace-separated tokens "v" or "v^count"
        std::istringstream in{std::string(body)};
        std::string tok;
        while (in >> tok) {
            const auto caret = tok.find('^');
            int value, count = 1;
            if (caret == std::string::npos) {
                value = parse_int(tok);
            } else {
                value = parse_int(std::string_view(tok).substr(0, caret));
                count = parse_int(std::string_view(tok).substr(caret + 1));
                if (count <= 0) bad("exponent must be positive in '" + tok + "'");
            }
            entries.insert(entries.end(), static_cast<std::size_t>(count), value);
        }
    } else {
        std::size_t pos = 0;
        while (pos <= body.size()) {
            const auto comma = body.find(',', pos);
            const auto piece = trim(body.substr(pos, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - pos));
            entries.push_back(parse_int(piece));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    return RamSeq::make(std::move(entries));
}

SkewShape parse_shape(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) bad("shape literal must be 'upper / lower'");
    RamSeq upper = parse_ram_seq(text.substr(0, slash));
    RamSeq lower = parse_ram_seq(text.substr(slash + 1));
    return SkewShape::make(std::move(lower), std::move(upper));
}

}  // namespace skewgenus
