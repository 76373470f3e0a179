#pragma once

#include <string>
#include <variant>
#include <vector>

#include "skewgenus/difficulty.hpp"
#include "skewgenus/semigroups.hpp"

#include <json.hpp>

namespace skewgenus {

/// Replayable decomposition tree bounding a threshold genus. Leaves are
/// closed-form base cases, verified link chains, or Komeda-axiom instances;
/// internal nodes compose children by subadditivity.
struct BoundCertificate {
    struct RectTarget {
        long long a;
        long long b;
        friend bool operator==(const RectTarget&, const RectTarget&) = default;
    };

    struct BaseNode {
        std::string id;  // "a1", "a2", "a3", "tg4b"
        bool exact;
    };
    struct FormulaNode {
        std::string id;  // "asy", "bn-trivial"
    };
    struct ChainNode {
        LinkChain chain;
    };
    struct KomedaNode {
        NumericalSemigroup semigroup;
        int rank;
        long long genus;
        bool reflected;  // target is the reflection of the axiom shape
    };
    struct SplitNode {
        std::string rule;  // "row", "column", "skew"
        std::vector<BoundCertificate> children;
    };

    std::variant<RectTarget, SkewShape> target;
    long long upper = 0;
    long long lower = 0;
    std::variant<BaseNode, FormulaNode, ChainNode, KomedaNode, SplitNode> node;
};

nlohmann::json certificate_to_json(const BoundCertificate& cert);
/// Sorted keys, no insignificant whitespace: byte-stable golden form.
std::string certificate_to_canonical_json(const BoundCertificate& cert);
BoundCertificate certificate_from_json(const nlohmann::json& j);

/// Recomputes every leaf and recombination from scratch; throws with a
/// description of the first failure. Chains are re-verified link by link and
/// Komeda nodes re-check the axiom's hypotheses.
void replay_certificate(const BoundCertificate& cert);

/// Four-piece certificate for tg(a x b): two Komeda-axiom pieces of cost
/// 2k+1 each (k = floor((a-1)/2)) sandwiching two verified link chains, with
/// total cost exactly floor(ab/2 + 2). Requires a, b >= 4 and 1 <= ell <= b-3.
BoundCertificate main2_decomposition(long long a, long long b, long long ell = 1,
                                     std::size_t state_budget = kDefaultStateBudget);

}  // namespace skewgenus
