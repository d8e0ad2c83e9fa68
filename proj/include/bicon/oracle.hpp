#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bicon/canon.hpp"
#include "bicon/generator.hpp"

namespace bicon {

/// Brute-force ground truth: every labeled graph on n vertices is visited
/// through its edge mask.
struct LabeledEnumeration {
  int n = 0;
  std::uint64_t labeled_count = 0;
  /// Canonical key -> number of labeled graphs in that class.
  std::map<CanonicalKey, std::uint64_t> class_sizes;
};

struct OracleOptions {
  int jobs = 1;
  /// n = 8 means 2^28 masks and is refused unless this is set.
  bool allow_long = false;
  /// Called with the fraction of masks done, from the calling thread.
  std::function<void(double)> progress;
};

LabeledEnumeration enumerate_biconnected(int n, const OracleOptions& options = {});

/// Unlabeled connected graphs on n vertices.
std::uint64_t count_connected(int n, const OracleOptions& options = {});

struct MultiplicityMismatch {
  CanonicalKey key;
  std::uint64_t oracle_size = 0;
  std::uint64_t labeling_count = 0;
};

struct CrossValidationReport {
  std::size_t oracle_classes = 0;
  std::size_t catalog_classes = 0;
  std::vector<CanonicalKey> missing_from_catalog;
  std::vector<CanonicalKey> extra_in_catalog;
  std::vector<MultiplicityMismatch> multiplicity_mismatches;

  bool ok() const {
    return missing_from_catalog.empty() && extra_in_catalog.empty() && multiplicity_mismatches.empty();
  }
};

CrossValidationReport cross_validate(const LabeledEnumeration& oracle, const Catalog& cat);
CrossValidationReport cross_validate(int n, const Catalog& cat, const OracleOptions& options = {});

}  // namespace bicon
