#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "bicon/generator.hpp"
#include "bicon/oracle.hpp"

namespace bicon {

// On-disk catalog: one graph6 line per class, sorted by canonical key, and
// a JSON-lines sidecar with one object per class in the same order:
//   {"key":"Bw","n":3,"aut_order":6,"labeling_count":1,"parent":"A_","operation":"add_vertex","args":[0,1]}
// "parent", "operation" and "args" are null when no derivation is recorded.

enum class CatalogFormat { Graph6, JsonLines };

void write_graph6(const Catalog& cat, std::ostream& out);
void write_metadata(const Catalog& cat, std::ostream& out);

/// Graph6 writes `path` plus `path` + ".meta.jsonl"; JsonLines writes only
/// the metadata records to `path`. Returns the files written.
std::vector<std::filesystem::path> write_catalog(const Catalog& cat, const std::filesystem::path& path,
                                                 CatalogFormat format);

std::vector<Graph> read_graph6_lines(std::istream& in);

/// Rebuilds a catalog from its metadata sidecar.
Catalog read_metadata(std::istream& in);

/// Oracle buckets in catalog form (no provenance), for diffing.
Catalog to_catalog(const LabeledEnumeration& oracle);

}  // namespace bicon
