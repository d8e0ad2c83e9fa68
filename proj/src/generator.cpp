#include "bicon/generator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "bicon/error.hpp"
#include "bicon/graph6.hpp"
#include "bicon/ops.hpp"

namespace bicon {

std::string Operation::describe() const {
  if (kind == OperationKind::SubdivideEdge) {
    return "subdivide(" + std::to_string(edge.u) + "," + std::to_string(edge.v) + ")";
  }
  std::string out = "add_vertex{";
  bool first = true;
  for_each_vertex(neighbors, [&](Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  });
  return out + "}";
}

Graph apply(const Graph& parent, const Operation& op) {
  return op.kind == OperationKind::AddVertex ? add_vertex(parent, op.neighbors)
                                             : subdivide_edge(parent, op.edge);
}

std::optional<std::size_t> Catalog::find(const CanonicalKey& key) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), key,
                             [](const GraphClass& c, const CanonicalKey& k) { return c.key < k; });
  if (it == classes.end() || it->key != key) return std::nullopt;
  return static_cast<std::size_t>(it - classes.begin());
}

Catalog base_catalog() {
  Catalog cat;
  cat.n = 2;
  cat.classes.push_back(make_class(Graph::complete(2)));
  return cat;
}

std::vector<Graph> expand_class(const GraphClass& cls) {
  std::vector<Graph> out;
  for_each_expansion(cls.representative, [&](Graph g, const Operation&) { out.push_back(std::move(g)); });
  return out;
}

namespace {

struct Candidate {
  GraphClass cls;
  Operation operation;
  std::size_t parent_index = 0;
  std::size_t emission_index = 0;

  bool derived_before(const Candidate& other) const {
    return std::tie(parent_index, emission_index) < std::tie(other.parent_index, other.emission_index);
  }
};

using CandidateMap = std::unordered_map<CanonicalKey, Candidate>;

void offer(CandidateMap& map, Candidate&& c) {
  CanonicalKey key = c.cls.key;
  auto [it, inserted] = map.try_emplace(std::move(key), std::move(c));
  if (!inserted && c.derived_before(it->second)) it->second = std::move(c);
}

}  // namespace

Catalog next_level(const Catalog& cat, int jobs) {
  if (cat.n + 1 > kMaxCatalogOrder) throw InvalidArgument("catalog order above supported ceiling");
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<CandidateMap> local(workers);
  std::vector<std::uint64_t> emitted(workers, 0);
  std::atomic<std::size_t> next_parent{0};

  auto work = [&](std::size_t w) {
    CandidateMap& map = local[w];
    for (std::size_t p = next_parent++; p < cat.classes.size(); p = next_parent++) {
      const GraphClass& parent = cat.classes[p];
      std::size_t emission = 0;
      for_each_expansion(parent.representative, [&](const Graph& child, const Operation& op) {
        ++emitted[w];
        CanonicalForm form = canonical_form(child);
        auto it = map.find(form.key);
        if (it != map.end()) {
          // Only the derivation order matters for an existing entry.
          if (std::tie(p, emission) < std::tie(it->second.parent_index, it->second.emission_index)) {
            it->second.operation = op;
            it->second.parent_index = p;
            it->second.emission_index = emission;
          }
        } else {
          Candidate c;
          c.cls.representative = from_graph6(form.key);
          c.cls.key = std::move(form.key);
          c.cls.aut_order = form.aut_order;
          c.cls.labeling_count = labeling_count(child.order(), form.aut_order);
          c.operation = op;
          c.parent_index = p;
          c.emission_index = emission;
          CanonicalKey key = c.cls.key;
          map.emplace(std::move(key), std::move(c));
        }
        ++emission;
      });
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  CandidateMap merged = std::move(local[0]);
  for (std::size_t w = 1; w < workers; ++w) {
    for (auto& [key, c] : local[w]) offer(merged, std::move(c));
    local[w].clear();
  }

  std::vector<Candidate*> ordered;
  ordered.reserve(merged.size());
  for (auto& [key, c] : merged) ordered.push_back(&c);
  std::sort(ordered.begin(), ordered.end(), [](const Candidate* a, const Candidate* b) { return a->cls.key < b->cls.key; });

  Catalog out;
  out.n = cat.n + 1;
  out.classes.reserve(ordered.size());
  out.provenance.reserve(ordered.size());
  for (Candidate* c : ordered) {
    out.provenance.push_back({cat.classes[c->parent_index].key, c->operation});
    out.classes.push_back(std::move(c->cls));
  }
  for (std::uint64_t e : emitted) out.raw_emitted += e;
  return out;
}

Catalog generate(int n, int jobs) {
  if (n < 2 || n > kMaxCatalogOrder) {
    throw InvalidArgument("catalog order must be in [2, " + std::to_string(kMaxCatalogOrder) + "], got " +
                          std::to_string(n));
  }
  Catalog cat = base_catalog();
  while (cat.n < n) cat = next_level(cat, jobs);
  return cat;
}

ReachabilityReport verify_reachability(const Catalog& cat, const Catalog& previous) {
  ReachabilityReport report;
  for (const GraphClass& cls : cat.classes) {
    ++report.checked;
    try {
      const ReductionWitness w = find_reduction(cls.representative);
      const CanonicalKey reduced = canonical_key(apply_reduction(cls.representative, w));
      if (!previous.contains(reduced)) {
        report.failures.push_back({cls.key, "reduced graph " + reduced + " missing from previous catalog"});
      }
    } catch (const std::exception& e) {
      report.failures.push_back({cls.key, e.what()});
    }
  }
  return report;
}

}  // namespace bicon
