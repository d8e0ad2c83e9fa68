#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bicon/graph.hpp"

namespace bicon {

/// graph6 string of the canonical relabeling. Equal keys mean isomorphic
/// graphs, and the key decodes back to the canonical representative.
using CanonicalKey = std::string;

struct CanonicalForm {
  CanonicalKey key;
  std::uint64_t aut_order = 1;
  /// perm[v] is the canonical label of input vertex v.
  std::vector<Vertex> labeling;
};

/// Individualization-refinement search over equitable ordered partitions.
/// The canonical labeling is the leaf with the lexicographically smallest
/// upper-triangle adjacency string; leaves that tie with it are in
/// bijection with Aut(g), which gives the automorphism count for free.
CanonicalForm canonical_form(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

struct GraphClass {
  CanonicalKey key;
  Graph representative;
  std::uint64_t aut_order = 1;
  std::uint64_t labeling_count = 1;
};

/// Builds a class for g, with the canonical relabeling as representative.
GraphClass make_class(const Graph& g);

/// n! / aut_order; throws InvariantViolation if the division is not exact.
std::uint64_t labeling_count(int n, std::uint64_t aut_order);
std::uint64_t labeling_count(const GraphClass& cls);

std::uint64_t factorial(int n);

}  // namespace bicon
