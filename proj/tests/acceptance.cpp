// End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails. Usage: acceptance <path-to-bicon-cli>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>

#include "bicon/canon.hpp"
#include "bicon/generator.hpp"
#include "bicon/graph6.hpp"
#include "bicon/ops.hpp"
#include "bicon/oracle.hpp"
#include "bicon/virial.hpp"
#include "support/hard_sphere_oracles.hpp"

namespace fs = std::filesystem;
using namespace bicon;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::vector<Catalog> catalogs(int up_to) {
  std::vector<Catalog> out{base_catalog()};
  while (out.back().n < up_to) out.push_back(next_level(out.back()));
  return out;
}

const std::vector<Catalog>& catalogs_to_seven() {
  static const std::vector<Catalog> cats = catalogs(7);
  return cats;
}

const Catalog& catalog_at(int n) { return catalogs_to_seven()[static_cast<std::size_t>(n - 2)]; }

Outcome counts() {
  std::ostringstream d;
  bool ok = true;
  Catalog cat = base_catalog();
  d << cat.size();
  while (cat.n < 8) {
    cat = next_level(cat);
    d << ' ' << cat.size();
    ok = ok && cat.size() == kBiconnectedCounts[cat.n];
  }
  ok = ok && catalog_at(2).size() == 1;
  return {ok, "n=2..8: " + d.str()};
}

Outcome oracle_equivalence() {
  std::ostringstream d;
  bool ok = true;
  for (int n = 4; n <= 7; ++n) {
    const CrossValidationReport r = cross_validate(n, catalog_at(n));
    ok = ok && r.ok();
    d << "n=" << n << ":" << r.oracle_classes << "/" << r.catalog_classes << (r.ok() ? " " : "(mismatch) ");
  }
  return {ok, d.str() + "oracle/catalog classes"};
}

Outcome four_vertex_weights() {
  std::ostringstream d;
  std::vector<std::uint64_t> w;
  std::uint64_t sum = 0;
  for (const WeightedClass& wc : s_prime_expansion(4, catalog_at(4))) {
    d << wc.cls->key << "=" << wc.weight << ' ';
    w.push_back(wc.weight);
    sum += wc.weight;
  }
  std::vector<std::uint64_t> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  const bool ok = sorted == std::vector<std::uint64_t>{1, 3, 6} && sum == 10;
  d << "sum=" << sum;
  return {ok, d.str()};
}

Outcome reachability() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (int n = 3; n <= 7; ++n) {
    const ReachabilityReport r = verify_reachability(catalog_at(n), catalog_at(n - 1));
    checked += r.checked;
    failures += r.failures.size();
  }
  return {failures == 0, std::to_string(checked) + " classes n=3..7, " + std::to_string(failures) + " failures"};
}

Outcome subtraction_dichotomy() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const GraphClass& cls : catalog_at(n).classes) {
      ++checked;
      try {
        (void)check_subtraction_or_four_degree_two(cls.representative);
      } catch (const std::exception&) {
        ++failures;
      }
    }
  }
  int cycles = 0;
  for (int k = 4; k <= 12; ++k) {
    if (std::holds_alternative<FourDegreeTwo>(check_subtraction_or_four_degree_two(Graph::cycle(k)))) ++cycles;
  }
  return {failures == 0 && cycles == 9, std::to_string(checked) + " classes n=4..7, " + std::to_string(failures) +
                                            " failures; C4..C12 four-degree-2: " + std::to_string(cycles) + "/9"};
}

Outcome closure() {
  std::size_t grown = 0;
  std::size_t removed = 0;
  std::size_t failures = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const GraphClass& cls : catalog_at(n).classes) {
      for_each_expansion(cls.representative, [&](const Graph& child, const Operation&) {
        ++grown;
        if (!is_biconnected(child)) ++failures;
      });
      if (n < 3) continue;
      for (const Edge& e : cls.representative.edges()) {
        ++removed;
        if (!is_connected(remove_edge(cls.representative, e).graph)) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(grown) + " expansions, " + std::to_string(removed) + " edge removals, " +
                             std::to_string(failures) + " failures"};
}

Outcome hard_sphere_numerics() {
  const PotentialSpec hs = PotentialSpec::hard_sphere();
  const double b2 = hard_sphere_b2();
  std::ostringstream d;
  d.precision(6);

  const VirialResult r2 = virial_coefficient(2, hs, 1'000'000, 7, catalog_at(2));
  // The single-bond estimator has zero variance, so allow rounding error.
  const bool ok2 = std::abs(r2.value - 2.0 * std::numbers::pi / 3.0) <= std::max(3.0 * r2.uncertainty, 1e-12);
  d << "B2=" << r2.value << "+-" << r2.uncertainty;

  const VirialResult r3 = virial_coefficient(3, hs, 1'000'000, 7, catalog_at(3));
  const double ratio3 = r3.value / (b2 * b2);
  const double err3 = r3.uncertainty / (b2 * b2);
  const bool ok3 = std::abs(ratio3 - 0.625) <= 3.0 * err3;
  d << "; B3/B2^2=" << ratio3 << "+-" << err3;

  const double oracle = testing::four_body_by_chain_sampling(10'000'000).b4 / std::pow(b2, 3);
  const VirialResult r4 = virial_coefficient(4, hs, 10'000'000, 7, catalog_at(4));
  const double ratio4 = r4.value / std::pow(b2, 3);
  const bool ok4 = std::abs(ratio4 - 0.287) <= 0.01 && std::abs(oracle - 0.287) <= 0.01;
  d << "; B4/B2^3=" << ratio4 << "+-" << r4.uncertainty / std::pow(b2, 3) << " (chain oracle " << oracle << ")";
  return {ok2 && ok3 && ok4, d.str()};
}

std::string read_file(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int run(const std::string& command) { return std::system((command + " >/dev/null 2>&1").c_str()); }

Outcome determinism(const std::string& cli) {
  const fs::path dir = fs::temp_directory_path() / "bicon_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string q = "'" + cli + "'";

  bool ok = true;
  const std::string g = q + " generate --n 7 --out '" + (dir / "g").string();
  ok = ok && run(g + "1.g6' --jobs 1") == 0;
  ok = ok && run(g + "2.g6' --jobs 1") == 0;
  ok = ok && run(g + "3.g6' --jobs 3") == 0;
  const std::string g1 = read_file(dir / "g1.g6") + read_file(dir / "g1.g6.meta.jsonl");
  const bool gen_same = !g1.empty() && g1 == read_file(dir / "g2.g6") + read_file(dir / "g2.g6.meta.jsonl") &&
                        g1 == read_file(dir / "g3.g6") + read_file(dir / "g3.g6.meta.jsonl");

  const std::string v = q + " virial --order 5 --potential hs --samples 2e5 --seed 11 --out '" + (dir / "v").string();
  ok = ok && run(v + "1.jsonl' --jobs 1") == 0;
  ok = ok && run(v + "2.jsonl' --jobs 1") == 0;
  ok = ok && run(v + "3.jsonl' --jobs 3") == 0;
  const std::string lj = q + " virial --order 3 --potential lj --tstar 1.5 --samples 1e5 --seed 3 --out '" +
                         (dir / "l").string();
  ok = ok && run(lj + "1.jsonl' --jobs 1") == 0;
  ok = ok && run(lj + "2.jsonl' --jobs 2") == 0;
  const std::string v1 = read_file(dir / "v1.jsonl");
  const bool vir_same = !v1.empty() && v1 == read_file(dir / "v2.jsonl") && v1 == read_file(dir / "v3.jsonl") &&
                        read_file(dir / "l1.jsonl") == read_file(dir / "l2.jsonl");
  fs::remove_all(dir);
  return {ok && gen_same && vir_same, std::string("generate --n 7 x3 (jobs 1,1,3): ") +
                                          (gen_same ? "identical" : "DIFFER") +
                                          "; virial hs/lj across runs and jobs: " + (vir_same ? "identical" : "DIFFER")};
}

Outcome graph6_round_trip() {
  std::size_t checked = 0;
  std::size_t failures = 0;
  for (const Catalog& cat : catalogs_to_seven()) {
    for (const GraphClass& cls : cat.classes) {
      ++checked;
      const std::string encoded = to_graph6(cls.representative);
      if (from_graph6(encoded) != cls.representative || encoded != cls.key) ++failures;
    }
  }
  return {failures == 0, std::to_string(checked) + " catalog graphs n=2..7, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-bicon-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 catalog counts", counts},
      {"AC2 oracle equivalence", oracle_equivalence},
      {"AC3 four-vertex weights", four_vertex_weights},
      {"AC4 reduction reachability", reachability},
      {"AC5 subtraction or four degree-2", subtraction_dichotomy},
      {"AC6 closure", closure},
      {"AC7 hard-sphere virial", hard_sphere_numerics},
      {"AC8 determinism", [&] { return determinism(cli); }},
      {"AC9 graph6 round trip", graph6_round_trip},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.passed ? "PASS " : "FAIL ") << name << ": " << o.detail << " [" << std::fixed
              << std::setprecision(1) << secs << "s]" << std::defaultfloat << std::endl;
    if (!o.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
