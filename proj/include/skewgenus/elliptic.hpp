#pragma once

#include <string>

#include "skewgenus/displacement.hpp"

namespace skewgenus {

enum class EllipticStatus { Empty, UniquePoint, OneDimensional };

/// Ramification of the unique rank-r subspace with symmetric boundary data
/// gamma at the two marked points of a genus-1 curve, for a line bundle whose
/// translation class is lambda: -disp_down(gamma) at p, disp_up(gamma) at q.
struct EllipticMarkings {
    RamSeq at_p;
    RamSeq at_q;
};

EllipticMarkings elliptic_markings(const RamSeq& gamma, const Progression& lambda);

/// Status of the exact-ramification locus over a genus-1 curve whose marked
/// points differ by torsion of order m (m = 0 meaning nontorsion).
/// OneDimensional iff lower == upper; UniquePoint iff the endpoints are
/// linked by a progression of modulus m; Empty otherwise. m == 1 is rejected.
EllipticStatus elliptic_status(const SkewShape& s, long long torsion_order);

std::string to_string(EllipticStatus status);

}  // namespace skewgenus
