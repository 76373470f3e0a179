#include "skewgenus/displacement.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewgenus {

RamSeq disp_up(const RamSeq& alpha, const Progression& lambda) {
    std::vector<int> out(alpha.entries());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (alpha.increasable(i) && lambda.contains(alpha[i] + static_cast<long long>(i) + 1))
            ++out[i];
    return RamSeq::make(std::move(out));
}

RamSeq disp_down(const RamSeq& alpha, const Progression& lambda) {
    std::vector<int> out(alpha.entries());
    for (std::size_t i = 0; i < out.size(); ++i)
        if (alpha.decreasable(i) && lambda.contains(alpha[i] + static_cast<long long>(i)))
            --out[i];
    return RamSeq::make(std::move(out));
}

std::vector<long long> loose_set(const RamSeq& alpha) {
    std::vector<long long> out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const long long a = alpha[i] + static_cast<long long>(i);
        if (alpha.decreasable(i)) out.push_back(a);
        if (alpha.increasable(i)) out.push_back(a + 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

LinkVerdict classify_link(const SkewShape& s) {
    if (s.size() == 1) return {LinkKind::OneLink, std::nullopt};
    if (s.size() != 2) return {LinkKind::NotALink, std::nullopt};

    std::vector<long long> raised;
    for (std::size_t i = 0; i < s.lower.size(); ++i) {
        const int diff = s.upper[i] - s.lower[i];
        if (diff == 0) continue;
        if (diff != 1) return {LinkKind::NotALink, std::nullopt};
        raised.push_back(s.lower[i] + static_cast<long long>(i) + 1);
    }
    if (raised.size() != 2) return {LinkKind::NotALink, std::nullopt};

    const auto lambda = minimal_progression(raised);
    if (!lambda || lambda->kind() != Progression::Kind::Residue)
        return {LinkKind::NotALink, std::nullopt};

    for (long long v : loose_set(s.lower))
        if (lambda->contains(v) && v != raised[0] && v != raised[1])
            return {LinkKind::NotALink, std::nullopt};
    return {LinkKind::TwoLink, lambda};
}

bool is_linked_by(const RamSeq& alpha, const RamSeq& beta, const Progression& lambda) {
    if (alpha.size() != beta.size())
        throw std::invalid_argument("is_linked_by: rank mismatch");
    if (!entrywise_leq(alpha, beta))
        throw std::invalid_argument("is_linked_by: requires alpha <= beta");
    return disp_down(beta, lambda) == alpha && disp_up(alpha, lambda) == beta;
}

bool is_threshold_genus_one(const SkewShape& s) {
    return classify_link(s).kind != LinkKind::NotALink;
}

std::string to_string(const LinkVerdict& v) {
    switch (v.kind) {
        case LinkKind::NotALink: return "not-a-link";
        case LinkKind::OneLink: return "1-link";
        case LinkKind::TwoLink: return "2-link " + to_string(*v.progression);
    }
    return "not-a-link";
}

}  // namespace skewgenus
