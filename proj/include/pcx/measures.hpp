#pragma once

#include <optional>
#include <string>

namespace pcx {

/// Complexity measures tracked for each language class. Binary measures
/// come in restricted (equal alphabets) and unrestricted flavours; for
/// classes whose witnesses share one alphabet the two coincide.
enum class Measure {
    Semigroup,
    Reverse,
    AtomsCount,
    AtomOfS,
    Star,
    ProductR,
    ProductU,
    UnionR,
    UnionU,
    XorR,
    XorU,
    DiffR,
    DiffU,
    IntersectR,
    IntersectU,
};

std::string to_string(Measure m);
std::optional<Measure> measure_from_string(const std::string& name);

inline bool is_binary(Measure m) {
    return m >= Measure::ProductR && m <= Measure::IntersectU;
}

inline bool is_boolean(Measure m) {
    return m >= Measure::UnionR && m <= Measure::IntersectU;
}

}  // namespace pcx
