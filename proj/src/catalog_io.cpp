#include "bicon/catalog_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "bicon/error.hpp"
#include "bicon/graph6.hpp"
#include "json.hpp"

namespace bicon {

namespace {

using Json = nlohmann::ordered_json;

Json operation_args(const Operation& op) {
  Json args = Json::array();
  if (op.kind == OperationKind::SubdivideEdge) {
    args.push_back(op.edge.u);
    args.push_back(op.edge.v);
  } else {
    for_each_vertex(op.neighbors, [&](Vertex v) { args.push_back(v); });
  }
  return args;
}

Operation parse_operation(const std::string& name, const Json& args) {
  Operation op;
  if (name == "subdivide_edge") {
    if (args.size() != 2) throw InvalidArgument("subdivide_edge expects two endpoints");
    op.kind = OperationKind::SubdivideEdge;
    op.edge = Edge(args[0].get<int>(), args[1].get<int>());
  } else if (name == "add_vertex") {
    op.kind = OperationKind::AddVertex;
    for (const auto& v : args) op.neighbors |= VertexMask{1} << v.get<int>();
  } else {
    throw InvalidArgument("unknown operation '" + name + "'");
  }
  return op;
}

void read_record(Catalog& cat, const std::string& line, bool& any_provenance) {
  const Json rec = Json::parse(line);
  GraphClass cls;
  cls.key = rec.at("key").get<std::string>();
  cls.representative = from_graph6(cls.key);
  cls.aut_order = rec.at("aut_order").get<std::uint64_t>();
  cls.labeling_count = rec.at("labeling_count").get<std::uint64_t>();
  cat.n = rec.at("n").get<int>();
  if (rec.contains("parent") && !rec["parent"].is_null()) {
    any_provenance = true;
    cat.provenance.push_back({rec["parent"].get<std::string>(),
                              parse_operation(rec.at("operation").get<std::string>(), rec.at("args"))});
  }
  cat.classes.push_back(std::move(cls));
}

}  // namespace

void write_graph6(const Catalog& cat, std::ostream& out) {
  for (const GraphClass& cls : cat.classes) out << cls.key << '\n';
}

void write_metadata(const Catalog& cat, std::ostream& out) {
  for (std::size_t i = 0; i < cat.classes.size(); ++i) {
    const GraphClass& cls = cat.classes[i];
    Json rec;
    rec["key"] = cls.key;
    rec["n"] = cat.n;
    rec["aut_order"] = cls.aut_order;
    rec["labeling_count"] = cls.labeling_count;
    if (i < cat.provenance.size()) {
      const Provenance& p = cat.provenance[i];
      rec["parent"] = p.parent;
      rec["operation"] = p.operation.kind == OperationKind::AddVertex ? "add_vertex" : "subdivide_edge";
      rec["args"] = operation_args(p.operation);
    } else {
      rec["parent"] = nullptr;
      rec["operation"] = nullptr;
      rec["args"] = nullptr;
    }
    out << rec.dump() << '\n';
  }
}

std::vector<std::filesystem::path> write_catalog(const Catalog& cat, const std::filesystem::path& path,
                                                 CatalogFormat format) {
  auto open = [](const std::filesystem::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw IoError("cannot open " + p.string() + " for writing");
    return f;
  };
  std::vector<std::filesystem::path> written;
  if (format == CatalogFormat::Graph6) {
    {
      auto f = open(path);
      write_graph6(cat, f);
      if (!f) throw IoError("write failed: " + path.string());
    }
    written.push_back(path);
    auto meta = path;
    meta += ".meta.jsonl";
    auto f = open(meta);
    write_metadata(cat, f);
    if (!f) throw IoError("write failed: " + meta.string());
    written.push_back(meta);
  } else {
    auto f = open(path);
    write_metadata(cat, f);
    if (!f) throw IoError("write failed: " + path.string());
    written.push_back(path);
  }
  return written;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

Catalog read_metadata(std::istream& in) {
  Catalog cat;
  std::string line;
  bool any_provenance = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      read_record(cat, line, any_provenance);
    } catch (const Json::exception& e) {
      throw IoError(std::string("malformed metadata record: ") + e.what());
    }
  }
  if (any_provenance && cat.provenance.size() != cat.classes.size()) {
    throw InvalidArgument("metadata has provenance for only some classes");
  }
  return cat;
}

Catalog to_catalog(const LabeledEnumeration& oracle) {
  Catalog cat;
  cat.n = oracle.n;
  for (const auto& [key, size] : oracle.class_sizes) {
    GraphClass cls;
    cls.key = key;
    cls.representative = from_graph6(key);
    cls.labeling_count = size;
    const std::uint64_t total = factorial(oracle.n);
    if (total % size != 0) throw InvariantViolation("class size does not divide n!");
    cls.aut_order = total / size;
    cat.classes.push_back(std::move(cls));
  }
  return cat;
}

}  // namespace bicon
