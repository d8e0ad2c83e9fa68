#include "bicon/ops.hpp"

#include <string>

#include "bicon/error.hpp"

namespace bicon {

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

void require_edge(const Graph& g, Edge e) {
  require_vertex(g, e.u);
  require_vertex(g, e.v);
  if (e.u == e.v || !g.has_edge(e.u, e.v)) {
    throw InvalidArgument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") is not in the graph");
  }
}

void require_biconnected(const Graph& g) {
  if (!is_biconnected(g)) throw InvalidArgument("graph is not 2-connected");
}

}  // namespace

Graph add_vertex(const Graph& g, VertexMask neighbors) {
  if ((neighbors & ~g.all_vertices()) != 0) throw InvalidArgument("neighbour out of range");
  if (popcount(neighbors) < 2) throw InvalidArgument("added vertex needs at least two neighbours");
  Graph grown(g.order() + 1, g.edges());
  const Vertex fresh = g.order();
  for_each_vertex(neighbors, [&](Vertex b) { grown.add_edge(fresh, b); });
  return grown;
}

Graph add_vertex(const Graph& g, std::span<const Vertex> neighbors) {
  VertexMask mask = 0;
  for (Vertex v : neighbors) {
    require_vertex(g, v);
    mask |= VertexMask{1} << v;
  }
  return add_vertex(g, mask);
}

Graph subdivide_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  if (g.order() < 3) throw InvalidArgument("subdividing K2 does not give a 2-connected graph");
  Graph grown(g.order() + 1, g.edges());
  const Vertex fresh = g.order();
  grown.remove_edge(e.u, e.v);
  grown.add_edge(e.u, fresh);
  grown.add_edge(fresh, e.v);
  return grown;
}

Graph subtract_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  if (g.order() < 2) throw InvalidArgument("cannot subtract from a single-vertex graph");
  return g.induced(g.all_vertices() & ~(VertexMask{1} << v));
}

Graph remove_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  VertexMask nb = g.neighbors(v);
  if (popcount(nb) != 2) throw InvalidArgument("only degree-2 vertices can be removed");
  const Vertex a = std::countr_zero(nb);
  const Vertex b = 63 - std::countl_zero(nb);
  if (g.has_edge(a, b)) throw InvalidArgument("neighbours already adjacent; smoothing would double an edge");
  Graph out = subtract_vertex(g, v);
  out.add_edge(a > v ? a - 1 : a, b > v ? b - 1 : b);
  return out;
}

EdgeRemoval remove_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  Graph out = g;
  out.remove_edge(e.u, e.v);
  if (is_biconnected(out)) return {std::move(out), EdgeRemovalKind::StillBiconnected};
  return {std::move(out), EdgeRemovalKind::ConnectedOnly};
}

ReductionWitness find_reduction(const Graph& g) {
  if (g.order() < 3) throw InvalidArgument("reduction needs at least three vertices");
  require_biconnected(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    VertexMask nb = g.neighbors(v);
    if (popcount(nb) == 2) {
      const Vertex a = std::countr_zero(nb);
      const Vertex b = 63 - std::countl_zero(nb);
      if (!g.has_edge(a, b) && is_biconnected(remove_vertex(g, v))) {
        return {v, ReductionKind::Removal};
      }
    }
    if (is_biconnected(subtract_vertex(g, v))) return {v, ReductionKind::Subtraction};
  }
  throw InvariantViolation("2-connected graph with no reducible vertex");
}

Graph apply_reduction(const Graph& g, const ReductionWitness& w) {
  return w.kind == ReductionKind::Removal ? remove_vertex(g, w.vertex) : subtract_vertex(g, w.vertex);
}

SubtractionOutcome check_subtraction_or_four_degree_two(const Graph& g) {
  if (g.order() < 4) throw InvalidArgument("check requires at least four vertices");
  require_biconnected(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_biconnected(subtract_vertex(g, v))) return Reducible{v};
  }
  const int count = static_cast<int>(degree_two_vertices(g).size());
  if (count >= 4) return FourDegreeTwo{count};
  throw InvariantViolation("no 2-connected subtraction and fewer than four degree-2 vertices");
}

}  // namespace bicon
