#include "skewgenus/difficulty.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace skewgenus {

SkewShape chain_shape(const LinkChain& chain) {
    if (chain.steps.empty())
        throw std::invalid_argument("chain must contain at least one sequence");
    return SkewShape::make(chain.steps.front(), chain.steps.back());
}

std::vector<LinkVerdict> replay_chain(const LinkChain& chain) {
    if (chain.steps.empty())
        throw std::invalid_argument("chain must contain at least one sequence");
    std::vector<LinkVerdict> verdicts;
    for (std::size_t i = 0; i + 1 < chain.steps.size(); ++i) {
        const auto& from = chain.steps[i];
        const auto& to = chain.steps[i + 1];
        if (!entrywise_leq(from, to) || from == to)
            throw std::invalid_argument("chain is not strictly increasing at step " +
                                        std::to_string(i));
        LinkVerdict v = classify_link(SkewShape::make(from, to));
        if (v.kind == LinkKind::NotALink)
            throw std::invalid_argument("chain step " + std::to_string(i) + " from " +
                                        to_string(from) + " to " + to_string(to) +
                                        " is not a link");
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

std::size_t one_link_count(const LinkChain& chain) {
    std::size_t count = 0;
    for (const auto& v : replay_chain(chain))
        if (v.kind == LinkKind::OneLink) ++count;
    return count;
}

namespace {

// All states one link above `cur` that stay inside the box below `upper`,
// in lexicographic order.
std::vector<RamSeq> link_successors(const RamSeq& cur, const RamSeq& upper) {
    std::vector<RamSeq> out;
    const std::size_t n = cur.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (cur[i] >= upper[i] || !cur.increasable(i)) continue;
        std::vector<int> next(cur.entries());
        ++next[i];
        out.push_back(RamSeq::make(std::move(next)));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (cur[j] >= upper[j]) continue;
        for (std::size_t k = j + 1; k < n; ++k) {
            if (cur[k] >= upper[k]) continue;
            std::vector<int> next(cur.entries());
            ++next[j];
            ++next[k];
            if (next[j] > next[j + 1]) continue;
            if (k + 1 < n && next[k] > next[k + 1]) continue;
            RamSeq cand = RamSeq::make(std::move(next));
            if (classify_link(SkewShape{cur, cand}).kind == LinkKind::TwoLink)
                out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

DifficultyResult chain_threshold(const SkewShape& s, std::size_t state_budget) {
    if (s.lower == s.upper)
        return DifficultyResult{0, 0, LinkChain{{s.lower}}};

    // Every edge costs one step, so breadth-first order is uniform-cost order.
    std::map<RamSeq, RamSeq> parent;  // first-discovery tree
    std::deque<RamSeq> frontier;
    parent.emplace(s.lower, s.lower);
    frontier.push_back(s.lower);
    std::size_t visited = 1;

    bool found = false;
    while (!frontier.empty() && !found) {
        const RamSeq cur = frontier.front();
        frontier.pop_front();
        for (RamSeq& next : link_successors(cur, s.upper)) {
            if (parent.contains(next)) continue;
            if (++visited > state_budget)
                throw BudgetExceeded("chain_threshold: state budget of " +
                                     std::to_string(state_budget) + " exceeded");
            const bool is_goal = next == s.upper;
            parent.emplace(next, cur);
            frontier.push_back(std::move(next));
            if (is_goal) {
                found = true;
                break;
            }
        }
    }
    if (!found)  // cannot happen: the all-1-links chain reaches the upper sequence
        throw std::logic_error("chain_threshold: search exhausted without reaching target");

    LinkChain witness;
    for (RamSeq at = s.upper;; at = parent.at(at)) {
        witness.steps.push_back(at);
        if (at == s.lower) break;
    }
    std::reverse(witness.steps.begin(), witness.steps.end());

    const auto ct = static_cast<long long>(witness.link_count());
    return DifficultyResult{ct, 2 * ct - s.size(), std::move(witness)};
}

long long displacement_difficulty(const SkewShape& s, std::size_t state_budget) {
    return chain_threshold(s, state_budget).c_delta;
}

RamSeq tau(int n, int a, int b, int c) {
    if (!(n >= a && a >= b && b >= c && c >= 0))
        throw std::invalid_argument("tau requires n >= a >= b >= c >= 0");
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    entries.insert(entries.end(), static_cast<std::size_t>(n - a), 0);
    entries.insert(entries.end(), static_cast<std::size_t>(a - b), 1);
    entries.insert(entries.end(), static_cast<std::size_t>(b - c), 2);
    entries.insert(entries.end(), static_cast<std::size_t>(c), 3);
    return RamSeq::make(std::move(entries));
}

namespace {

void append_step(std::vector<RamSeq>& steps, RamSeq next) {
    if (!steps.empty() && !(entrywise_leq(steps.back(), next) && steps.back() != next))
        throw std::logic_error("scripted chain is not strictly increasing");
    steps.push_back(std::move(next));
}

// tau(n,a0+i,b0,c0+i) for i = 1..count, appended to `steps`.
void append_ac_ladder(std::vector<RamSeq>& steps, int n, int a0, int b0, int c0, int count) {
    for (int i = 1; i <= count; ++i)
        append_step(steps, tau(n, a0 + i, b0, c0 + i));
}

// From tau(n,m0,fl,0) up to 1 + tau(n,m1,fl,0), fl = floor(n/2): fl two-box
// steps raising the first and third columns, plus one final step raising the
// first and second columns when n is odd and we started at the floor variant.
void append_floor_ceil(std::vector<RamSeq>& steps, int n, bool from_ceil) {
    const int fl = n / 2;
    const int m0 = from_ceil ? (n + 1) / 2 : fl;
    append_ac_ladder(steps, n, m0, fl, 0, fl);
    if (n % 2 == 1 && !from_ceil)
        append_step(steps, tau(n, n, (n + 1) / 2, fl));
}

LinkChain verified_or_searched(std::vector<RamSeq> steps, std::size_t state_budget) {
    LinkChain chain{std::move(steps)};
    try {
        replay_chain(chain);
        return chain;
    } catch (const std::exception&) {
        // Scripted step failed verification; fall back to search in the box.
        DifficultyResult fixed = chain_threshold(chain_shape(chain), state_budget);
        return std::move(fixed.witness);
    }
}

}  // namespace

LinkChain build_corollary_chain(CorollaryChain kind, const CorollaryParams& p,
                                std::size_t state_budget) {
    std::vector<RamSeq> steps;
    switch (kind) {
        case CorollaryChain::IncreaseAC: {
            const int fl = p.n / 2;
            if (!(p.n > p.a && p.a >= p.b && p.b > p.c && p.a - p.c >= fl && fl >= p.c))
                throw std::invalid_argument(
                    "increase-ac requires n > a >= b > c and a-c >= floor(n/2) >= c");
            steps.push_back(tau(p.n, p.a, p.b, p.c));
            append_step(steps, tau(p.n, p.a + 1, p.b, p.c + 1));
            break;
        }
        case CorollaryChain::IncreaseAB: {
            if (p.n < 5 || p.n % 2 == 0)
                throw std::invalid_argument("increase-ab requires an odd n >= 5");
            const int fl = p.n / 2;
            steps.push_back(tau(p.n, p.n - 1, fl, fl));
            append_step(steps, tau(p.n, p.n, fl + 1, fl));
            break;
        }
        case CorollaryChain::FloorCeil: {
            if (p.n < 4) throw std::invalid_argument("floor-ceil requires n >= 4");
            const int fl = p.n / 2;
            const int m0 = p.from_ceil ? (p.n + 1) / 2 : fl;
            steps.push_back(tau(p.n, m0, fl, 0));
            append_floor_ceil(steps, p.n, p.from_ceil);
            const int m1 = p.from_ceil ? fl : (p.n + 1) / 2;
            if (steps.back() != tau(p.n, m1, fl, 0).translated(1))
                throw std::logic_error("floor-ceil chain missed its endpoint");
            break;
        }
    }
    return verified_or_searched(std::move(steps), state_budget);
}

LinkChain ladder_chain(int a, int ell, std::size_t state_budget) {
    if (a < 4) throw std::invalid_argument("ladder_chain requires a >= 4");
    if (ell < 1) throw std::invalid_argument("ladder_chain requires ell >= 1");
    const int k = (a - 1) / 2;
    const int fl = a / 2;
    const int ce = (a + 1) / 2;

    std::vector<RamSeq> steps;
    steps.push_back(tau(a, 2 * k + 1, k, k));
    if (a % 2 == 0) {
        append_step(steps, tau(a, 2 * k + 1, k + 1, k));
        append_step(steps, tau(a, 2 * k + 2, k + 1, k + 1));  // equals 1 + tau(a,fl,fl,0)
    }
    // Here steps.back() == tau(a,fl,fl,0).translated(1) in every case.
    for (int j = 1; j < ell; ++j) {
        const bool from_ceil = (a % 2 == 1) && (j % 2 == 0);
        std::vector<RamSeq> segment;
        segment.push_back(steps.back().translated(-j));
        append_floor_ceil(segment, a, from_ceil);
        for (std::size_t i = 1; i < segment.size(); ++i)
            append_step(steps, segment[i].translated(j));
    }
    const RamSeq target = tau(a, ce, fl, 0).translated(ell);
    if (steps.back() != target) append_step(steps, target);  // 1-link for odd a, odd ell
    return verified_or_searched(std::move(steps), state_budget);
}

}  // namespace skewgenus
