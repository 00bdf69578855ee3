#pragma once

#include <string>
#include <string_view>

#include "ppt/graph.hpp"

namespace ppt {

// graph6 text codec for n <= 64. Decoding tolerates an optional
// ">>graph6<<" prefix; encoding never emits one.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

}  // namespace ppt
