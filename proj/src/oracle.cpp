#include "bicon/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <thread>

#include "bicon/error.hpp"

namespace bicon {

namespace {

struct MaskSpace {
  int n;
  std::vector<Edge> pairs;

  explicit MaskSpace(int order) : n(order) {
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  std::uint64_t size() const { return std::uint64_t{1} << pairs.size(); }

  Graph graph(std::uint64_t mask) const {
    Graph g(n);
    for (std::size_t k = 0; mask != 0; ++k, mask >>= 1)
      if (mask & 1U) g.add_edge(pairs[k].u, pairs[k].v);
    return g;
  }

  bool min_degree_at_least(std::uint64_t mask, int d) const {
    std::array<int, kMaxVertices> deg{};
    for (std::size_t k = 0; mask != 0; ++k, mask >>= 1) {
      if (mask & 1U) {
        ++deg[static_cast<std::size_t>(pairs[k].u)];
        ++deg[static_cast<std::size_t>(pairs[k].v)];
      }
    }
    return std::all_of(deg.begin(), deg.begin() + n, [d](int x) { return x >= d; });
  }
};

void check_order(int n, const OracleOptions& options) {
  const int ceiling = options.allow_long ? 8 : 7;
  if (n < 2 || n > ceiling) {
    throw InvalidArgument("oracle order must be in [2, " + std::to_string(ceiling) + "], got " + std::to_string(n));
  }
}

// Runs body(lo, hi, worker) over contiguous mask ranges; worker 0 is the
// calling thread.
template <typename Body>
void split_masks(std::uint64_t total, int jobs, Body&& body) {
  const auto workers = static_cast<std::uint64_t>(std::max(1, jobs));
  std::vector<std::thread> threads;
  for (std::uint64_t w = 1; w < workers; ++w) {
    threads.emplace_back([&, w] { body(total * w / workers, total * (w + 1) / workers, static_cast<std::size_t>(w)); });
  }
  body(0, total / workers, std::size_t{0});
  for (auto& t : threads) t.join();
}

void report_done(const OracleOptions& options) {
  if (options.progress) options.progress(1.0);
}

void report_progress(const OracleOptions& options, std::uint64_t done, std::uint64_t total) {
  if (options.progress && (done & 0xFFFFF) == 0) options.progress(static_cast<double>(done) / static_cast<double>(total));
}

}  // namespace

LabeledEnumeration enumerate_biconnected(int n, const OracleOptions& options) {
  check_order(n, options);
  const MaskSpace space(n);
  const auto workers = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<std::map<CanonicalKey, std::uint64_t>> local(workers);
  std::vector<std::uint64_t> counts(workers, 0);

  split_masks(space.size(), options.jobs, [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
    const bool is_main = w == 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (is_main) report_progress(options, mask - lo, hi - lo);
      // K2 is the only 2-connected graph with a degree-1 vertex.
      if (n >= 3 && !space.min_degree_at_least(mask, 2)) continue;
      const Graph g = space.graph(mask);
      if (!is_biconnected(g)) continue;
      ++counts[w];
      ++local[w][canonical_key(g)];
    }
  });

  report_done(options);

  LabeledEnumeration out;
  out.n = n;
  for (std::size_t w = 0; w < workers; ++w) {
    out.labeled_count += counts[w];
    for (const auto& [key, size] : local[w]) out.class_sizes[key] += size;
  }
  return out;
}

std::uint64_t count_connected(int n, const OracleOptions& options) {
  check_order(n, options);
  const MaskSpace space(n);
  const auto workers = static_cast<std::size_t>(std::max(1, options.jobs));
  std::vector<std::set<CanonicalKey>> local(workers);

  split_masks(space.size(), options.jobs, [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
    const bool is_main = w == 0;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      if (is_main) report_progress(options, mask - lo, hi - lo);
      if (std::popcount(mask) < n - 1 || !space.min_degree_at_least(mask, 1)) continue;
      const Graph g = space.graph(mask);
      if (is_connected(g)) local[w].insert(canonical_key(g));
    }
  });

  report_done(options);

  std::set<CanonicalKey> all;
  for (auto& s : local) all.merge(s);
  return all.size();
}

CrossValidationReport cross_validate(const LabeledEnumeration& oracle, const Catalog& cat) {
  CrossValidationReport report;
  report.oracle_classes = oracle.class_sizes.size();
  report.catalog_classes = cat.size();
  if (oracle.n != cat.n) throw InvalidArgument("oracle and catalog have different orders");
  for (const auto& [key, size] : oracle.class_sizes) {
    auto idx = cat.find(key);
    if (!idx) {
      report.missing_from_catalog.push_back(key);
      continue;
    }
    const GraphClass& cls = cat.classes[*idx];
    if (cls.labeling_count != size) report.multiplicity_mismatches.push_back({key, size, cls.labeling_count});
  }
  for (const GraphClass& cls : cat.classes) {
    if (!oracle.class_sizes.contains(cls.key)) report.extra_in_catalog.push_back(cls.key);
  }
  return report;
}

CrossValidationReport cross_validate(int n, const Catalog& cat, const OracleOptions& options) {
  return cross_validate(enumerate_biconnected(n, options), cat);
}

}  // namespace bicon
