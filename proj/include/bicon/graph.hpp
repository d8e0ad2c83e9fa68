#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace bicon {

using Vertex = int;

/// Bit set of vertex ids; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 62;

/// Undirected edge with endpoints normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept as one bit row per vertex, so neighbourhoods are
/// VertexMask values and most set operations are a single word op.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  int edge_count() const;

  bool has_edge(Vertex a, Vertex b) const {
    return (rows_[static_cast<std::size_t>(a)] >> b) & 1U;
  }
  VertexMask neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  VertexMask all_vertices() const {
    return order() == 64 ? ~VertexMask{0} : (VertexMask{1} << order()) - 1;
  }

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Induced subgraph on `keep`, vertices renumbered in increasing order.
  Graph induced(VertexMask keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexMask> rows_;
};

/// Vertices whose deletion disconnects the graph (or leaves one vertex).
struct VertexCut {
  std::vector<Vertex> vertices;
};

int degree(const Graph& g, Vertex v);

/// Vertices of degree exactly two, ascending.
std::vector<Vertex> degree_two_vertices(const Graph& g);

bool is_connected(const Graph& g);

/// Connectivity of the subgraph induced by `within`. An empty set counts
/// as connected.
bool is_connected(const Graph& g, VertexMask within);

/// Articulation vertices, ascending (lowpoint DFS).
std::vector<Vertex> articulation_vertices(const Graph& g);

/// 2-connectivity: K2 by convention, otherwise n >= 3, connected, and no
/// articulation vertex.
bool is_biconnected(const Graph& g);

/// Same predicate computed by deleting each vertex in turn. Slow; kept as
/// a reference for cross-checking.
bool is_biconnected_naive(const Graph& g);

/// A single-vertex cut if one exists, an empty cut if the graph is
/// already disconnected, std::nullopt if the graph is 2-connected or has
/// fewer than three vertices and no cut applies.
std::optional<VertexCut> find_small_cut(const Graph& g);

/// Maximum number of internally vertex-disjoint u-v paths.
int count_vertex_disjoint_paths(const Graph& g, Vertex u, Vertex v);

inline int popcount(VertexMask m) { return std::popcount(m); }

template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
  while (m != 0) {
    f(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
}

}  // namespace bicon
