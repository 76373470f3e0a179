#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "skewgenus/displacement.hpp"

namespace skewgenus {

inline constexpr std::size_t kDefaultStateBudget = 5'000'000;

/// Thrown when a search would visit more states than its budget allows.
/// Never a silent approximation: exceeding the budget is an error.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A strictly increasing sequence of ramification sequences in which every
/// consecutive pair is a 1-link or a 2-link.
struct LinkChain {
    std::vector<RamSeq> steps;  // gamma^0 < gamma^1 < ... < gamma^n

    std::size_t link_count() const { return steps.empty() ? 0 : steps.size() - 1; }
};

SkewShape chain_shape(const LinkChain& chain);

/// Re-derives each step's verdict; throws if any step is not a link or the
/// chain is not strictly increasing.
std::vector<LinkVerdict> replay_chain(const LinkChain& chain);

/// Number of 1-links in a verified chain.
std::size_t one_link_count(const LinkChain& chain);

struct DifficultyResult {
    long long ct;       // minimum number of link steps
    long long c_delta;  // 2*ct - |shape|, the minimum number of 1-links
    LinkChain witness;
};

/// Exact chain threshold by breadth-first search over the box [lower, upper].
/// Minimizing step count also minimizes 1-link count. Deterministic witness.
DifficultyResult chain_threshold(const SkewShape& s,
                                 std::size_t state_budget = kDefaultStateBudget);

long long displacement_difficulty(const SkewShape& s,
                                  std::size_t state_budget = kDefaultStateBudget);

/// Three-column ramification sequence of rank n-1 with column heights a, b, c:
/// 0^(n-a) 1^(a-b) 2^(b-c) 3^c. Requires n >= a >= b >= c >= 0.
RamSeq tau(int n, int a, int b, int c);

enum class CorollaryChain { IncreaseAC, IncreaseAB, FloorCeil };

struct CorollaryParams {
    int n = 0;
    int a = 0;
    int b = 0;
    int c = 0;
    /// FloorCeil only: start from the taller-first-column variant.
    bool from_ceil = false;
};

/// Scripted chains behind the three stock constructions, each step re-checked
/// by classify_link. If a scripted step ever fails verification the chain is
/// rebuilt by bounded search inside the endpoint box.
///   IncreaseAC: single 2-link tau(n,a+1,b,c+1) / tau(n,a,b,c);
///               requires n > a >= b > c and a-c >= floor(n/2) >= c.
///   IncreaseAB: single 2-link tau(n,n,ceil(n/2),floor(n/2)) /
///               tau(n,n-1,floor(n/2),floor(n/2)); requires odd n >= 5.
///   FloorCeil:  from tau(n,m,floor(n/2),0) up to 1 + tau(n,m',floor(n/2),0)
///               with {m,m'} = {floor(n/2),ceil(n/2)}; requires n >= 4.
LinkChain build_corollary_chain(CorollaryChain kind, const CorollaryParams& params,
                                std::size_t state_budget = kDefaultStateBudget);

/// Chain of 2-links (plus at most one 1-link) from the three-column sequence
/// tau(a,2k+1,k,k), k = floor((a-1)/2), to ell + tau(a,ceil(a/2),floor(a/2),0).
/// Requires a >= 4 and ell >= 1.
LinkChain ladder_chain(int a, int ell, std::size_t state_budget = kDefaultStateBudget);

}  // namespace skewgenus
