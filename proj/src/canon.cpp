#include "bicon/canon.hpp"

#include <algorithm>
#include <array>

#include "bicon/error.hpp"
#include "bicon/graph6.hpp"

namespace bicon {

namespace {

// Ordered partition of the vertex set; each cell is a bit mask.
using Partition = std::vector<VertexMask>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), words_((static_cast<std::size_t>(n_) * (n_ - 1) / 2 + 63) / 64) {}

  CanonicalForm run() {
    visit(Partition{g_.all_vertices()});
    CanonicalForm out;
    out.labeling = best_labeling_;
    out.aut_order = ties_;
    out.key = to_graph6(g_.relabeled(best_labeling_));
    return out;
  }

 private:
  // Splits cells by neighbour counts into each cell until the partition is
  // equitable. Sub-cells are ordered by ascending count.
  void refine(Partition& cells) const {
    Partition next;
    next.reserve(static_cast<std::size_t>(n_));
    bool changed = true;
    while (changed && static_cast<int>(cells.size()) < n_) {
      changed = false;
      for (std::size_t s = 0; s < cells.size(); ++s) {
        const VertexMask splitter = cells[s];
        next.clear();
        bool split = false;
        for (VertexMask cell : cells) {
          if (popcount(cell) == 1) {
            next.push_back(cell);
            continue;
          }
          std::array<VertexMask, kMaxVertices + 1> by_count{};
          for_each_vertex(cell, [&](Vertex v) {
            by_count[static_cast<std::size_t>(popcount(g_.neighbors(v) & splitter))] |= VertexMask{1} << v;
          });
          int parts = 0;
          for (int c = 0; c < n_; ++c) {
            if (by_count[static_cast<std::size_t>(c)] != 0) {
              next.push_back(by_count[static_cast<std::size_t>(c)]);
              ++parts;
            }
          }
          split = split || parts > 1;
        }
        if (split) {
          cells.swap(next);
          changed = true;
        }
      }
    }
  }

  void visit(Partition cells) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    auto target = static_cast<std::size_t>(
        std::find_if(cells.begin(), cells.end(), [](VertexMask c) { return popcount(c) > 1; }) -
        cells.begin());
    for_each_vertex(cells[target], [&](Vertex v) {
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(target));
      child.push_back(VertexMask{1} << v);
      child.push_back(cells[target] & ~(VertexMask{1} << v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(target) + 1, cells.end());
      visit(std::move(child));
    });
  }

  void leaf(const Partition& cells) {
    std::array<Vertex, kMaxVertices> at_position{};
    std::vector<Vertex> labeling(static_cast<std::size_t>(n_));
    for (std::size_t p = 0; p < cells.size(); ++p) {
      const Vertex v = std::countr_zero(cells[p]);
      at_position[p] = v;
      labeling[static_cast<std::size_t>(v)] = static_cast<Vertex>(p);
    }
    // Bits in graph6 order, most significant first, so word-wise
    // comparison is lexicographic comparison of the bit strings.
    std::vector<std::uint64_t> bits(words_, 0);
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j) {
      const VertexMask row = g_.neighbors(at_position[static_cast<std::size_t>(j)]);
      for (int i = 0; i < j; ++i, ++k) {
        if ((row >> at_position[static_cast<std::size_t>(i)]) & 1U) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    if (ties_ == 0 || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_labeling_ = std::move(labeling);
      ties_ = 1;
    } else if (bits == best_bits_) {
      ++ties_;
    }
  }

  const Graph& g_;
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> best_bits_;
  std::vector<Vertex> best_labeling_;
  std::uint64_t ties_ = 0;
};

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = popcount(g.neighbors(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() < 1) throw InvalidArgument("canonical form of an empty graph");
  return CanonicalSearch(g).run();
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw InvalidArgument("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t labeling_count(int n, std::uint64_t aut_order) {
  const std::uint64_t total = factorial(n);
  if (aut_order == 0 || total % aut_order != 0) {
    throw InvariantViolation("automorphism group order does not divide n!");
  }
  return total / aut_order;
}

std::uint64_t labeling_count(const GraphClass& cls) {
  return labeling_count(cls.representative.order(), cls.aut_order);
}

GraphClass make_class(const Graph& g) {
  CanonicalForm form = canonical_form(g);
  GraphClass cls;
  cls.representative = from_graph6(form.key);
  cls.key = std::move(form.key);
  cls.aut_order = form.aut_order;
  cls.labeling_count = labeling_count(g.order(), form.aut_order);
  return cls;
}

}  // namespace bicon
