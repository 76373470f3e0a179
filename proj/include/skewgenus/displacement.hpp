#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewgenus/progressions.hpp"
#include "skewgenus/sequences.hpp"

namespace skewgenus {

/// Slides loose entries toward the progression: entry i gains one exactly
/// when it is increasable and alpha_i + i + 1 lies in lambda.
RamSeq disp_up(const RamSeq& alpha, const Progression& lambda);

/// Slides loose entries away: entry i drops one exactly when it is
/// decreasable and alpha_i + i lies in lambda.
RamSeq disp_down(const RamSeq& alpha, const Progression& lambda);

/// { a_i : entry i decreasable } union { a_i + 1 : entry i increasable },
/// where a is the vanishing sequence. Sorted, deduplicated.
std::vector<long long> loose_set(const RamSeq& alpha);

enum class LinkKind { NotALink, OneLink, TwoLink };

struct LinkVerdict {
    LinkKind kind = LinkKind::NotALink;
    /// Minimal linking progression; present only for TwoLink.
    std::optional<Progression> progression;
};

/// OneLink iff the shape has exactly one box. TwoLink iff exactly two entries
/// each gain one box and the minimal progression through the two raised
/// vanishing values exists (modulus >= 2) and meets the loose set of the
/// lower sequence in those two values only.
LinkVerdict classify_link(const SkewShape& s);

/// True iff disp_down(beta) == alpha and disp_up(alpha) == beta.
bool is_linked_by(const RamSeq& alpha, const RamSeq& beta, const Progression& lambda);

bool is_threshold_genus_one(const SkewShape& s);

std::string to_string(const LinkVerdict& v);

}  // namespace skewgenus
