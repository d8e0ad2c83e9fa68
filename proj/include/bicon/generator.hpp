#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicon/canon.hpp"
#include "bicon/graph.hpp"

namespace bicon {

inline constexpr int kMaxCatalogOrder = 10;

/// Known numbers of unlabeled 2-connected graphs, indexed by order
/// (entries 0 and 1 are zero).
inline constexpr std::uint64_t kBiconnectedCounts[] = {0, 0, 1, 1, 3, 10, 56, 468, 7123, 194066, 9743542};

/// Known numbers of unlabeled connected graphs, indexed by order.
inline constexpr std::uint64_t kConnectedCounts[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};

enum class OperationKind { AddVertex, SubdivideEdge };

/// One growth step applied to a parent representative.
struct Operation {
  OperationKind kind = OperationKind::AddVertex;
  VertexMask neighbors = 0;  // AddVertex
  Edge edge;                 // SubdivideEdge

  std::string describe() const;
  friend bool operator==(const Operation&, const Operation&) = default;
};

Graph apply(const Graph& parent, const Operation& op);

struct Provenance {
  CanonicalKey parent;
  Operation operation;
};

/// Every 2-connected class on n vertices, sorted by canonical key.
struct Catalog {
  int n = 0;
  std::vector<GraphClass> classes;
  /// Parallel to `classes`; empty at n = 2.
  std::vector<Provenance> provenance;
  /// Graphs emitted while building this level, duplicates included.
  std::uint64_t raw_emitted = 0;

  std::size_t size() const { return classes.size(); }
  /// Index of the class with this key, if present.
  std::optional<std::size_t> find(const CanonicalKey& key) const;
  bool contains(const CanonicalKey& key) const { return find(key).has_value(); }
};

/// The catalog at n = 2: K2 alone.
Catalog base_catalog();

/// Calls visit(graph, operation) for every vertex addition (neighbour masks
/// ascending) followed by every edge subdivision (edges ascending; none for
/// K2).
template <typename Visitor>
void for_each_expansion(const Graph& rep, Visitor&& visit);

std::vector<Graph> expand_class(const GraphClass& cls);

/// Builds the catalog at cat.n + 1. `jobs` only sets the worker count; the
/// result, provenance included, is the same for every value.
Catalog next_level(const Catalog& cat, int jobs = 1);

/// Iterates next_level from base_catalog. Requires 2 <= n <= 10.
Catalog generate(int n, int jobs = 1);

struct ReachabilityFailure {
  CanonicalKey key;
  std::string reason;
};

struct ReachabilityReport {
  std::size_t checked = 0;
  std::vector<ReachabilityFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Reduces every class at n by one vertex and checks the result lies in the
/// catalog at n - 1.
ReachabilityReport verify_reachability(const Catalog& cat, const Catalog& previous);

template <typename Visitor>
void for_each_expansion(const Graph& rep, Visitor&& visit) {
  const int m = rep.order();
  const VertexMask limit = VertexMask{1} << m;
  for (VertexMask s = 0; s < limit; ++s) {
    if (popcount(s) < 2) continue;
    Operation op{OperationKind::AddVertex, s, {}};
    visit(apply(rep, op), op);
  }
  if (m < 3) return;
  for (const Edge& e : rep.edges()) {
    Operation op{OperationKind::SubdivideEdge, 0, e};
    visit(apply(rep, op), op);
  }
}

}  // namespace bicon
