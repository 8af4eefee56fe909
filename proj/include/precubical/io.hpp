#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "flow.hpp"
#include "globular.hpp"
#include "homology.hpp"
#include "precubical_set.hpp"

namespace precubical {

using json = nlohmann::json;

inline constexpr std::string_view format_version = "1";

// Malformed document: bad JSON, wrong schema or unsupported version.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Canonical document: sorted keys, labels in sorted order, face records
// ordered by (dim, cell, index, sign).
inline json to_document(const PrecubicalSet& k) {
  json doc;
  doc["format_version"] = std::string(format_version);
  doc["top_dim"] = k.top_dim();
  json cells = json::object();
  json faces = json::array();
  for (int n = 0; n <= k.top_dim(); ++n) {
    const auto dim = static_cast<std::size_t>(n);
    cells[std::to_string(n)] = k.labels(dim);
    for (const CellId c : k.cells(dim)) {
      for (std::size_t i = 1; i <= dim; ++i) {
        for (int alpha = 0; alpha < 2; ++alpha) {
          faces.push_back(json{{"dim", dim},
                               {"index", i},
                               {"sign", alpha},
                               {"cell", k.label(c)},
                               {"value", k.label(k.face(c, i, alpha))}});
        }
      }
    }
  }
  doc["cells"] = std::move(cells);
  doc["faces"] = std::move(faces);
  return doc;
}

// UTF-8 JSON, two-space indent, newline terminated.
inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline std::string serialize(const PrecubicalSet& k) { return dump(to_document(k)); }

namespace detail {

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DocumentError(where + ": missing field \"" + key + "\"");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw DocumentError(where + ": field \"" + key + "\" has the wrong type");
  }
}

}  // namespace detail

// Reads a document without rejecting invalid face data; the assembly report
// carries dangling, missing and relation issues.
inline Assembly read_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw DocumentError("document: expected a JSON object");
  }
  const auto version = detail::field<std::string>(doc, "format_version", "document");
  if (version != format_version) {
    throw DocumentError("unknown format version \"" + version + "\" (expected \"" +
                        std::string(format_version) + "\")");
  }
  const auto top_dim = detail::field<long long>(doc, "top_dim", "document");
  if (top_dim < -1) {
    throw DocumentError("document: top_dim must be at least -1");
  }
  const json cells = detail::field<json>(doc, "cells", "document");
  const json faces = detail::field<json>(doc, "faces", "document");
  if (!cells.is_object()) {
    throw DocumentError("document: \"cells\" must be an object keyed by dimension");
  }
  if (!faces.is_array()) {
    throw DocumentError("document: \"faces\" must be an array");
  }

  Builder b;
  for (const auto& [key, labels] : cells.items()) {
    std::size_t used = 0;
    long long dim = -1;
    try {
      dim = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || dim < 0) {
      throw DocumentError("cells: key \"" + key + "\" is not a dimension");
    }
    if (dim > top_dim) {
      throw DocumentError("cells: dimension " + key + " exceeds top_dim " + std::to_string(top_dim));
    }
    if (!labels.is_array()) {
      throw DocumentError("cells[" + key + "]: expected an array of labels");
    }
    for (const json& l : labels) {
      if (!l.is_string()) {
        throw DocumentError("cells[" + key + "]: labels must be strings");
      }
      b.add_cell(static_cast<std::size_t>(dim), l.get<std::string>());
    }
  }
  for (std::size_t pos = 0; pos < faces.size(); ++pos) {
    const json& r = faces[pos];
    const std::string where = "faces[" + std::to_string(pos) + "]";
    if (!r.is_object()) {
      throw DocumentError(where + ": expected an object");
    }
    const auto dim = detail::field<long long>(r, "dim", where);
    const auto index = detail::field<long long>(r, "index", where);
    const auto sign = detail::field<long long>(r, "sign", where);
    if (dim < 0 || index < 0 || sign < 0 || sign > 1) {
      throw DocumentError(where + ": dim, index and sign must be non-negative, sign 0 or 1");
    }
    b.add_face(FaceRecord{static_cast<std::size_t>(dim), static_cast<std::size_t>(index),
                          static_cast<int>(sign), detail::field<std::string>(r, "cell", where),
                          detail::field<std::string>(r, "value", where)});
  }
  return b.assemble();
}

// Throws DocumentError or ValidationError.
inline PrecubicalSet parse(std::string_view text) {
  Assembly a = read_document(text);
  if (!a.report.ok()) {
    throw ValidationError(std::move(a.report));
  }
  return std::move(*a.set);
}

// ----------------------------------------------------------------------------
// Reports
// ----------------------------------------------------------------------------

inline json to_json(const Issue& issue) {
  json j{{"kind", issue.kind_name()}, {"dim", issue.dim}, {"cell", issue.cell}, {"message", issue.message()}};
  switch (issue.kind) {
    case Issue::Kind::relation:
      j["i"] = issue.i;
      j["j"] = issue.j;
      j["alpha"] = issue.alpha;
      j["beta"] = issue.beta;
      j["lhs"] = issue.value;
      j["rhs"] = issue.other;
      break;
    case Issue::Kind::dangling:
      j["index"] = issue.i;
      j["sign"] = issue.alpha;
      j["value"] = issue.value;
      break;
    case Issue::Kind::missing_face:
    case Issue::Kind::duplicate_face:
    case Issue::Kind::unknown_cell:
    case Issue::Kind::bad_index:
      j["index"] = issue.i;
      j["sign"] = issue.alpha;
      break;
    case Issue::Kind::duplicate_cell:
      break;
  }
  return j;
}

inline json to_json(const ValidationReport& r) {
  json issues = json::array();
  for (const Issue& i : r.issues) issues.push_back(to_json(i));
  return json{{"valid", r.ok()}, {"issues", std::move(issues)}};
}

inline json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return json(x.convert_to<std::int64_t>());
  }
  return json(x.str());
}

inline json to_json(const HomologyResult& h) {
  json arr = json::array();
  for (const HomologyGroup& g : h.groups) {
    json torsion = json::array();
    for (const Integer& t : g.torsion) torsion.push_back(integer_json(t));
    arr.push_back(json{{"dim", g.dim}, {"betti", g.betti}, {"torsion", std::move(torsion)}});
  }
  return arr;
}

inline json labels_json(const PrecubicalSet& k, const std::vector<CellId>& cells) {
  json arr = json::array();
  for (const CellId c : cells) arr.push_back(k.label(c));
  return arr;
}

inline json to_json(const PrecubicalSet& k, const EdgePath& p) { return json(path_labels(k, p)); }

inline json to_json(const PrecubicalSet& k, const std::vector<PathClass>& classes) {
  json arr = json::array();
  for (const PathClass& c : classes) {
    json members = json::array();
    for (const EdgePath& m : c.members) members.push_back(to_json(k, m));
    arr.push_back(json{{"representative", to_json(k, c.representative)},
                       {"length", c.representative.length()},
                       {"members", std::move(members)}});
  }
  return arr;
}

inline json to_json(const PrecubicalSet& k, const StateOrder& order) {
  if (const auto* loop = std::get_if<LoopReport>(&order)) {
    return json{{"loopless", false}, {"cycle", to_json(k, loop->cycle)}};
  }
  const auto& poset = std::get<StatePoset>(order);
  json rel = json::array();
  for (const auto& [a, b] : poset.relations()) rel.push_back(json::array({k.label(a), k.label(b)}));
  return json{{"loopless", true}, {"states", labels_json(k, poset.states)}, {"less", std::move(rel)}};
}

inline json to_json(const PrecubicalSet& k, const GlobularDecomposition& d) {
  json cells = json::array();
  for (const GlobularCell& c : d.cells()) {
    cells.push_back(json{{"cube", k.label(c.cube)},
                         {"dim", c.cube.dim},
                         {"globe_dim", c.globe_dim},
                         {"source", k.label(c.source)},
                         {"target", k.label(c.target)}});
  }
  return json{{"vertices", labels_json(k, d.vertices)}, {"cells", std::move(cells)}};
}

inline json to_json(const DecompositionReport& r) {
  return json{{"vertices", r.vertices},
              {"cells", r.cells},
              {"stage_counts", r.stage_counts},
              {"max_globe_dim", r.max_globe_dim}};
}

}  // namespace precubical
