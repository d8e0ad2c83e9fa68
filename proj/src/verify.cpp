#include "bicon/verify.hpp"

#include <string>

#include "bicon/canon.hpp"
#include "bicon/error.hpp"
#include "bicon/generator.hpp"
#include "bicon/ops.hpp"
#include "bicon/oracle.hpp"

namespace bicon {

namespace {

std::string first_failure(const std::vector<std::string>& failures) {
  if (failures.empty()) return "";
  return std::to_string(failures.size()) + " failure(s), first: " + failures.front();
}

CheckResult from_failures(std::string name, std::size_t checked, const std::vector<std::string>& failures) {
  if (failures.empty()) return {std::move(name), true, std::to_string(checked) + " checked"};
  return {std::move(name), false, first_failure(failures)};
}

CheckResult check_count(const Catalog& cat) {
  const auto expected = kBiconnectedCounts[cat.n];
  return {"class count", cat.size() == expected,
          std::to_string(cat.size()) + " classes, expected " + std::to_string(expected)};
}

CheckResult check_oracle(const Catalog& cat, int jobs) {
  OracleOptions options;
  options.jobs = jobs;
  const LabeledEnumeration oracle = enumerate_biconnected(cat.n, options);
  const CrossValidationReport report = cross_validate(oracle, cat);
  std::string detail = std::to_string(oracle.labeled_count) + " labeled graphs in " +
                       std::to_string(report.oracle_classes) + " classes; multiplicities";
  if (cat.size() <= 10) {
    char sep = ' ';
    for (const GraphClass& cls : cat.classes) {
      detail += sep + std::to_string(cls.labeling_count);
      sep = '/';
    }
  } else {
    detail += " omitted";
  }
  if (!report.ok()) {
    detail += "; missing " + std::to_string(report.missing_from_catalog.size()) + ", extra " +
              std::to_string(report.extra_in_catalog.size()) + ", multiplicity mismatches " +
              std::to_string(report.multiplicity_mismatches.size());
  }
  return {"oracle equivalence", report.ok(), detail};
}

CheckResult check_connected(int n, std::size_t biconnected, int jobs) {
  OracleOptions options;
  options.jobs = jobs;
  const std::uint64_t connected = count_connected(n, options);
  const bool ok = connected == kConnectedCounts[n] && (n < 3 || biconnected < connected);
  return {"connected count", ok,
          std::to_string(connected) + " connected classes, expected " + std::to_string(kConnectedCounts[n])};
}

CheckResult check_reachability(const Catalog& cat, const Catalog& previous) {
  const ReachabilityReport report = verify_reachability(cat, previous);
  std::vector<std::string> failures;
  for (const auto& f : report.failures) failures.push_back(f.key + ": " + f.reason);
  return from_failures("reduction reachability", report.checked, failures);
}

CheckResult check_round_trip(const Catalog& cat) {
  std::vector<std::string> failures;
  for (const GraphClass& cls : cat.classes) {
    const Graph& g = cls.representative;
    const ReductionWitness w = find_reduction(g);
    const VertexMask nb = g.neighbors(w.vertex);
    const Graph reduced = apply_reduction(g, w);
    auto shift = [&](Vertex x) { return x > w.vertex ? x - 1 : x; };
    Graph rebuilt;
    if (w.kind == ReductionKind::Removal) {
      const Vertex a = std::countr_zero(nb);
      const Vertex b = 63 - std::countl_zero(nb);
      rebuilt = subdivide_edge(reduced, Edge(shift(a), shift(b)));
    } else {
      VertexMask mapped = 0;
      for_each_vertex(nb, [&](Vertex x) { mapped |= VertexMask{1} << shift(x); });
      rebuilt = add_vertex(reduced, mapped);
    }
    if (!are_isomorphic(rebuilt, g)) failures.push_back(cls.key);
  }
  return from_failures("reduction round trip", cat.size(), failures);
}

CheckResult check_closure(const Catalog& cat) {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  for (const GraphClass& cls : cat.classes) {
    for_each_expansion(cls.representative, [&](const Graph& child, const Operation& op) {
      ++checked;
      if (!is_biconnected(child)) failures.push_back(cls.key + " " + op.describe());
    });
  }
  return from_failures("growth closure", checked, failures);
}

CheckResult check_edge_removal(const Catalog& cat) {
  std::vector<std::string> failures;
  std::size_t checked = 0;
  for (const GraphClass& cls : cat.classes) {
    const Graph& g = cls.representative;
    // Deleting the only edge of K2 disconnects it; the property starts at n = 3.
    if (g.order() < 3) continue;
    bool any_still_biconnected = false;
    for (const Edge& e : g.edges()) {
      ++checked;
      const EdgeRemoval r = remove_edge(g, e);
      const bool still = r.kind == EdgeRemovalKind::StillBiconnected;
      any_still_biconnected = any_still_biconnected || still;
      if (!is_connected(r.graph) || (still && !is_biconnected(r.graph))) {
        failures.push_back(cls.key + " edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      }
    }
    // Without degree-2 vertices some single edge must be removable.
    if (degree_two_vertices(g).empty() && !any_still_biconnected) {
      failures.push_back(cls.key + " has no degree-2 vertex and no removable edge");
    }
  }
  return from_failures("edge removal", checked, failures);
}

CheckResult check_subtraction_dichotomy(const Catalog& cat) {
  std::vector<std::string> failures;
  for (const GraphClass& cls : cat.classes) {
    try {
      (void)check_subtraction_or_four_degree_two(cls.representative);
    } catch (const InvariantViolation& e) {
      failures.push_back(cls.key + ": " + e.what());
    }
  }
  return from_failures("subtraction or four degree-2 vertices", cat.size(), failures);
}

CheckResult check_biconnectivity_routes(const Catalog& cat) {
  std::vector<std::string> failures;
  for (const GraphClass& cls : cat.classes) {
    const Graph& g = cls.representative;
    bool menger = g.order() >= 3;
    for (Vertex u = 0; u < g.order() && menger; ++u)
      for (Vertex v = u + 1; v < g.order() && menger; ++v) menger = count_vertex_disjoint_paths(g, u, v) >= 2;
    if (g.order() == 2) menger = g.has_edge(0, 1);
    if (!is_biconnected(g) || !is_biconnected_naive(g) || !menger) failures.push_back(cls.key);
  }
  return from_failures("biconnectivity cross-check", cat.size(), failures);
}

}  // namespace

std::vector<CheckResult> run_verification(int n, int jobs) {
  if (n < 2 || n > 8) throw InvalidArgument("verification supports 2 <= n <= 8");
  Catalog previous = generate(std::max(2, n - 1), jobs);
  Catalog cat = n == 2 ? previous : next_level(previous, jobs);

  std::vector<CheckResult> out;
  out.push_back(check_count(cat));
  if (n <= 7) {
    out.push_back(check_oracle(cat, jobs));
    out.push_back(check_connected(n, cat.size(), jobs));
    out.push_back(check_biconnectivity_routes(cat));
  }
  if (n >= 3) {
    out.push_back(check_reachability(cat, previous));
    out.push_back(check_round_trip(cat));
  }
  out.push_back(check_closure(cat));
  out.push_back(check_edge_removal(cat));
  if (n >= 4) out.push_back(check_subtraction_dichotomy(cat));
  return out;
}

}  // namespace bicon
