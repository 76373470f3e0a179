#include "skewgenus/elliptic.hpp"

#include <stdexcept>

namespace skewgenus {

EllipticMarkings elliptic_markings(const RamSeq& gamma, const Progression& lambda) {
    return EllipticMarkings{disp_down(gamma, lambda).reflected(0), disp_up(gamma, lambda)};
}

EllipticStatus elliptic_status(const SkewShape& s, long long torsion_order) {
    if (torsion_order < 0 || torsion_order == 1)
        throw std::invalid_argument("torsion order must be 0 or >= 2");
    if (s.lower == s.upper) return EllipticStatus::OneDimensional;

    // Any linking progression must contain every raised vanishing value, so
    // a single raised value pins the one candidate of the given modulus.
    long long candidate_value = 0;
    for (std::size_t i = 0; i < s.lower.size(); ++i) {
        if (s.upper[i] > s.lower[i]) {
            candidate_value = s.lower[i] + static_cast<long long>(i) + 1;
            break;
        }
    }
    const Progression candidate = torsion_order == 0
                                      ? Progression::singleton(candidate_value)
                                      : Progression::residue(candidate_value, torsion_order);
    return is_linked_by(s.lower, s.upper, candidate) ? EllipticStatus::UniquePoint
                                                     : EllipticStatus::Empty;
}

std::string to_string(EllipticStatus status) {
    switch (status) {
        case EllipticStatus::Empty: return "empty";
        case EllipticStatus::UniquePoint: return "unique-point";
        case EllipticStatus::OneDimensional: return "one-dimensional";
    }
    return "empty";
}

}  // namespace skewgenus
