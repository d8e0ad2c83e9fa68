#pragma once

#include <span>
#include <variant>

#include "bicon/graph.hpp"

namespace bicon {

/// New vertex (id g.order()) joined to every vertex in `neighbors`.
/// Requires at least two neighbours.
Graph add_vertex(const Graph& g, VertexMask neighbors);
Graph add_vertex(const Graph& g, std::span<const Vertex> neighbors);

/// Replaces edge e by a path through a new vertex (id g.order()).
/// K2 is rejected: subdividing it gives P3.
Graph subdivide_edge(const Graph& g, Edge e);

/// Deletes v with its edges; remaining ids keep their relative order.
Graph subtract_vertex(const Graph& g, Vertex v);

/// Smooths a degree-2 vertex whose neighbours are not already adjacent.
Graph remove_vertex(const Graph& g, Vertex v);

enum class EdgeRemovalKind { StillBiconnected, ConnectedOnly };

struct EdgeRemoval {
  Graph graph;
  EdgeRemovalKind kind;
};

/// Deletes an edge of a 2-connected graph and classifies the remainder.
EdgeRemoval remove_edge(const Graph& g, Edge e);

enum class ReductionKind { Removal, Subtraction };

struct ReductionWitness {
  Vertex vertex = 0;
  ReductionKind kind = ReductionKind::Subtraction;

  friend bool operator==(const ReductionWitness&, const ReductionWitness&) = default;
};

/// Lowest vertex whose removal (preferred) or subtraction leaves a
/// 2-connected graph on one vertex fewer. Throws InvariantViolation if no
/// such vertex exists in a 2-connected input.
ReductionWitness find_reduction(const Graph& g);

/// Applies the inverse operation named by the witness.
Graph apply_reduction(const Graph& g, const ReductionWitness& w);

struct Reducible {
  Vertex vertex;
};
struct FourDegreeTwo {
  int degree_two_count;
};
using SubtractionOutcome = std::variant<Reducible, FourDegreeTwo>;

/// Either some vertex subtraction keeps the graph 2-connected, or the graph
/// has at least four degree-2 vertices. Requires n >= 4.
SubtractionOutcome check_subtraction_or_four_degree_two(const Graph& g);

}  // namespace bicon
