#pragma once

#include <string>
#include <string_view>

#include "bicon/graph.hpp"

namespace bicon {

// graph6 without the optional ">>graph6<<" header. Only the one-byte size
// prefix is supported, which covers every order the library allows.

std::string to_graph6(const Graph& g);

/// Throws InvalidArgument on malformed input.
Graph from_graph6(std::string_view text);

}  // namespace bicon
