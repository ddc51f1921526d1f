#pragma once

#include <string>

#include "pcx/dfa.hpp"

namespace pcx {

/// Fixed-field-order JSON form, e.g.
/// {"states":3,"alphabet":["a","b","c"],"initial":0,"finals":[2],
///  "transitions":{"a":[1,2,0],"b":[1,0,2],"c":[0,0,2]}}
std::string serialize_dfa(const Dfa& d);

/// Parses and validates; malformed documents raise std::invalid_argument
/// with a message naming the offending field.
Dfa parse_dfa(const std::string& text);

}  // namespace pcx
