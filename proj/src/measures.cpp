#include "pcx/measures.hpp"

namespace pcx {

std::string to_string(Measure m) {
    switch (m) {
        case Measure::Semigroup: return "semigroup";
        case Measure::Reverse: return "reverse";
        case Measure::AtomsCount: return "atoms-count";
        case Measure::AtomOfS: return "atom";
        case Measure::Star: return "star";
        case Measure::ProductR: return "product-r";
        case Measure::ProductU: return "product-u";
        case Measure::UnionR: return "union-r";
        case Measure::UnionU: return "union-u";
        case Measure::XorR: return "xor-r";
        case Measure::XorU: return "xor-u";
        case Measure::DiffR: return "diff-r";
        case Measure::DiffU: return "diff-u";
        case Measure::IntersectR: return "intersect-r";
        case Measure::IntersectU: return "intersect-u";
    }
    return "?";
}

std::optional<Measure> measure_from_string(const std::string& name) {
    for (int i = (int)Measure::Semigroup; i <= (int)Measure::IntersectU; ++i)
        if (to_string((Measure)i) == name) return (Measure)i;
    return std::nullopt;
}

}  // namespace pcx
