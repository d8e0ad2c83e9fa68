#include "bicon/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "bicon/error.hpp"

namespace bicon {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("graph order must be in [1, 62], got " + std::to_string(n));
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(order()));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : rows_) twice += popcount(row);
  return twice / 2;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw InvalidArgument("self-loops are not allowed");
  rows_[static_cast<std::size_t>(a)] |= VertexMask{1} << b;
  rows_[static_cast<std::size_t>(b)] |= VertexMask{1} << a;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  rows_[static_cast<std::size_t>(a)] &= ~(VertexMask{1} << b);
  rows_[static_cast<std::size_t>(b)] &= ~(VertexMask{1} << a);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < order(); ++a) {
    VertexMask higher = neighbors(a) & ~((VertexMask{2} << a) - 1);
    for_each_vertex(higher, [&](Vertex b) { out.emplace_back(a, b); });
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw InvalidArgument("permutation size does not match graph order");
  }
  Graph out(order());
  for (Vertex a = 0; a < order(); ++a) {
    VertexMask row = 0;
    for_each_vertex(neighbors(a), [&](Vertex b) { row |= VertexMask{1} << perm[static_cast<std::size_t>(b)]; });
    out.rows_[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = row;
  }
  return out;
}

Graph Graph::induced(VertexMask keep) const {
  keep &= all_vertices();
  std::vector<int> new_id(rows_.size(), -1);
  int next = 0;
  for_each_vertex(keep, [&](Vertex v) { new_id[static_cast<std::size_t>(v)] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](Vertex a) {
    VertexMask row = 0;
    for_each_vertex(neighbors(a) & keep,
                    [&](Vertex b) { row |= VertexMask{1} << new_id[static_cast<std::size_t>(b)]; });
    out.rows_[static_cast<std::size_t>(new_id[static_cast<std::size_t>(a)])] = row;
  });
  return out;
}

int degree(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
  return popcount(g.neighbors(v));
}

std::vector<Vertex> degree_two_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (popcount(g.neighbors(v)) == 2) out.push_back(v);
  return out;
}

bool is_connected(const Graph& g, VertexMask within) {
  within &= g.all_vertices();
  if (within == 0) return true;
  VertexMask seen = within & (~within + 1);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for_each_vertex(frontier, [&](Vertex v) { next |= g.neighbors(v); });
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

std::vector<Vertex> articulation_vertices(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);

  // Iterative DFS; each frame remembers which neighbours are still unvisited.
  struct Frame {
    Vertex v;
    Vertex parent;
    VertexMask pending;
    int children;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, g.neighbors(root), 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pending != 0) {
        Vertex w = std::countr_zero(top.pending);
        top.pending &= top.pending - 1;
        auto wi = static_cast<std::size_t>(w);
        auto vi = static_cast<std::size_t>(top.v);
        if (disc[wi] < 0) {
          ++top.children;
          disc[wi] = low[wi] = timer++;
          stack.push_back({w, top.v, g.neighbors(w), 0});
        } else if (w != top.parent) {
          low[vi] = std::min(low[vi], disc[wi]);
        }
        continue;
      }
      Frame done = top;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[static_cast<std::size_t>(done.v)] = true;
        break;
      }
      auto pi = static_cast<std::size_t>(done.parent);
      auto di = static_cast<std::size_t>(done.v);
      low[pi] = std::min(low[pi], low[di]);
      if (stack.back().parent != -1 && low[di] >= disc[pi]) is_cut[pi] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

namespace {

bool is_k2(const Graph& g) { return g.order() == 2 && g.has_edge(0, 1); }

}  // namespace

bool is_biconnected(const Graph& g) {
  if (g.order() == 2) return is_k2(g);
  if (g.order() < 3) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (popcount(g.neighbors(v)) < 2) return false;
  return is_connected(g) && articulation_vertices(g).empty();
}

bool is_biconnected_naive(const Graph& g) {
  if (g.order() == 2) return is_k2(g);
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!is_connected(g, g.all_vertices() & ~(VertexMask{1} << v))) return false;
  }
  return true;
}

std::optional<VertexCut> find_small_cut(const Graph& g) {
  if (!is_connected(g)) return VertexCut{};
  if (g.order() < 3) return std::nullopt;
  auto cuts = articulation_vertices(g);
  if (cuts.empty()) return std::nullopt;
  return VertexCut{{cuts.front()}};
}

int count_vertex_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  if (u < 0 || u >= n || v < 0 || v >= n) throw InvalidArgument("vertex out of range");
  if (u == v) throw InvalidArgument("disjoint paths need two distinct vertices");

  // Vertex splitting: node 2x is x_in, 2x+1 is x_out. Interior vertices
  // carry capacity one; u and v are uncapacitated.
  const int nodes = 2 * n;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<int> cap(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return cap[static_cast<std::size_t>(a * nodes + b)]; };
  for (Vertex x = 0; x < n; ++x) at(2 * x, 2 * x + 1) = (x == u || x == v) ? kInf : 1;
  for (const Edge& e : g.edges()) {
    at(2 * e.u + 1, 2 * e.v) = 1;
    at(2 * e.v + 1, 2 * e.u) = 1;
  }
  const int source = 2 * u + 1;
  const int sink = 2 * v;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[static_cast<std::size_t>(source)] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[static_cast<std::size_t>(sink)] < 0) {
      int a = q.front();
      q.pop();
      for (int b = 0; b < nodes; ++b) {
        if (parent[static_cast<std::size_t>(b)] < 0 && at(a, b) > 0) {
          parent[static_cast<std::size_t>(b)] = a;
          q.push(b);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink)] < 0) break;
    for (int b = sink; b != source; b = parent[static_cast<std::size_t>(b)]) {
      int a = parent[static_cast<std::size_t>(b)];
      at(a, b) -= 1;
      at(b, a) += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace bicon
