#include "bicon/generator.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "bicon/catalog_io.hpp"
#include "bicon/error.hpp"
#include "bicon/graph6.hpp"

namespace bicon {
namespace {

std::string serialized(const Catalog& cat) {
  std::ostringstream out;
  write_graph6(cat, out);
  write_metadata(cat, out);
  return out.str();
}

TEST(Generator, BaseCatalog) {
  const Catalog cat = base_catalog();
  EXPECT_EQ(cat.n, 2);
  ASSERT_EQ(cat.size(), 1U);
  EXPECT_EQ(cat.classes[0].key, "A_");
  EXPECT_EQ(cat.classes[0].aut_order, 2U);
  EXPECT_TRUE(cat.provenance.empty());
}

TEST(Generator, ExpansionCount) {
  // 2^m - m - 1 neighbour sets of size >= 2, plus |E| subdivisions (none for K2).
  EXPECT_EQ(expand_class(make_class(Graph::complete(2))).size(), 1U);
  EXPECT_EQ(expand_class(make_class(Graph::cycle(3))).size(), 4U + 3U);
  EXPECT_EQ(expand_class(make_class(Graph::complete(4))).size(), 11U + 6U);
  EXPECT_EQ(expand_class(make_class(Graph::cycle(6))).size(), 57U + 6U);
}

TEST(Generator, ExpansionOrder) {
  std::vector<Operation> ops;
  for_each_expansion(Graph::cycle(3), [&](const Graph&, const Operation& op) { ops.push_back(op); });
  ASSERT_EQ(ops.size(), 7U);
  EXPECT_EQ(ops[0].describe(), "add_vertex{0,1}");
  EXPECT_EQ(ops[1].describe(), "add_vertex{0,2}");
  EXPECT_EQ(ops[2].describe(), "add_vertex{1,2}");
  EXPECT_EQ(ops[3].describe(), "add_vertex{0,1,2}");
  EXPECT_EQ(ops[4].describe(), "subdivide(0,1)");
  EXPECT_EQ(ops[6].describe(), "subdivide(1,2)");
}

TEST(Generator, SmallLevels) {
  const Catalog three = generate(3);
  ASSERT_EQ(three.size(), 1U);
  EXPECT_EQ(three.classes[0].key, "Bw");
  EXPECT_EQ(three.provenance[0].parent, "A_");
  EXPECT_EQ(three.provenance[0].operation.describe(), "add_vertex{0,1}");

  const Catalog four = generate(4);
  ASSERT_EQ(four.size(), 3U);
  EXPECT_EQ(four.classes[0].key, "C]");
  EXPECT_EQ(four.classes[1].key, "C^");
  EXPECT_EQ(four.classes[2].key, "C~");
}

TEST(Generator, CountsMatchPublishedSequence) {
  Catalog cat = base_catalog();
  EXPECT_EQ(cat.size(), kBiconnectedCounts[2]);
  while (cat.n < 8) {
    cat = next_level(cat);
    EXPECT_EQ(cat.size(), kBiconnectedCounts[cat.n]) << "n=" << cat.n;
  }
}

TEST(Generator, RawEmissionsExceedClassesFromFive) {
  Catalog cat = generate(4);
  while (cat.n < 7) {
    cat = next_level(cat);
    EXPECT_GT(cat.raw_emitted, cat.size());
  }
}

TEST(Generator, CatalogIsSortedAndCanonical) {
  const Catalog cat = generate(6);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const GraphClass& cls = cat.classes[i];
    if (i > 0) EXPECT_LT(cat.classes[i - 1].key, cls.key);
    EXPECT_EQ(to_graph6(cls.representative), cls.key);
    EXPECT_EQ(canonical_key(cls.representative), cls.key);
    EXPECT_TRUE(is_biconnected(cls.representative));
    EXPECT_EQ(cls.labeling_count * cls.aut_order, factorial(6));
    EXPECT_EQ(cat.find(cls.key), std::optional<std::size_t>{i});
  }
  EXPECT_FALSE(cat.contains("E???"));
}

TEST(Generator, ProvenanceReproducesEveryClass) {
  Catalog prev = generate(3);
  while (prev.n < 7) {
    const Catalog cat = next_level(prev);
    ASSERT_EQ(cat.provenance.size(), cat.size());
    for (std::size_t i = 0; i < cat.size(); ++i) {
      const Provenance& pv = cat.provenance[i];
      const auto parent = prev.find(pv.parent);
      ASSERT_TRUE(parent.has_value()) << cat.classes[i].key;
      const Graph child = apply(prev.classes[*parent].representative, pv.operation);
      EXPECT_EQ(canonical_key(child), cat.classes[i].key);
    }
    prev = cat;
  }
}

// Provenance is the first derivation in (parent position, emission
// position) order; verify against a direct scan.
TEST(Generator, ProvenanceIsFirstDerivation) {
  const Catalog prev = generate(5);
  const Catalog cat = next_level(prev);
  std::map<CanonicalKey, std::pair<CanonicalKey, Operation>> first;
  for (const GraphClass& parent : prev.classes) {
    for_each_expansion(parent.representative, [&](const Graph& child, const Operation& op) {
      first.try_emplace(canonical_key(child), parent.key, op);
    });
  }
  ASSERT_EQ(first.size(), cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const auto& [parent, op] = first.at(cat.classes[i].key);
    EXPECT_EQ(cat.provenance[i].parent, parent);
    EXPECT_EQ(cat.provenance[i].operation, op);
  }
}

TEST(Generator, IndependentOfWorkerCount) {
  const std::string one = serialized(generate(7, 1));
  EXPECT_EQ(serialized(generate(7, 3)), one);
  EXPECT_EQ(serialized(generate(7, 1)), one);
}

TEST(Generator, Reachability) {
  Catalog prev = generate(2);
  while (prev.n < 7) {
    const Catalog cat = next_level(prev);
    const ReachabilityReport r = verify_reachability(cat, prev);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failures.front().key + ": " + r.failures.front().reason);
    EXPECT_EQ(r.checked, cat.size());
    prev = cat;
  }
}

TEST(Generator, ReachabilityReportsMissingParent) {
  const Catalog five = generate(5);
  Catalog four = generate(4);
  four.classes.pop_back();  // drop K4
  const ReachabilityReport r = verify_reachability(five, four);
  EXPECT_FALSE(r.ok());
}

TEST(Generator, RejectsOrdersOutsideRange) {
  EXPECT_THROW(generate(1), InvalidArgument);
  EXPECT_THROW(generate(11), InvalidArgument);
  Catalog ten;
  ten.n = 10;
  EXPECT_THROW(next_level(ten), InvalidArgument);
}

}  // namespace
}  // namespace bicon
