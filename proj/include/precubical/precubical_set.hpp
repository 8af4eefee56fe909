#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace precubical {

// Position of a cell inside a PrecubicalSet: its dimension and its rank in
// the lexicographically sorted label list of that dimension.
struct CellId {
  std::size_t dim = 0;
  std::size_t index = 0;

  friend auto operator<=>(const CellId&, const CellId&) = default;
};

// One entry of a validation report.
struct Issue {
  enum class Kind {
    relation,        // d_i^a d_j^b c != d_{j-1}^b d_i^a c
    dangling,        // face value names an undeclared cell
    missing_face,    // no record for (dim, i, alpha, cell)
    duplicate_face,  // two records for the same (dim, i, alpha, cell)
    duplicate_cell,  // label declared twice in one dimension
    unknown_cell,    // face record for an undeclared cell
    bad_index,       // i outside 1..dim, alpha outside {0,1} or dim 0
  };

  Kind kind = Kind::relation;
  std::size_t dim = 0;
  std::string cell;
  std::size_t i = 0;
  std::size_t j = 0;
  int alpha = 0;
  int beta = 0;
  std::string value;  // offending face value (dangling) or lhs (relation)
  std::string other;  // rhs (relation)

  std::string kind_name() const {
    switch (kind) {
      case Kind::relation: return "relation";
      case Kind::dangling: return "dangling";
      case Kind::missing_face: return "missing_face";
      case Kind::duplicate_face: return "duplicate_face";
      case Kind::duplicate_cell: return "duplicate_cell";
      case Kind::unknown_cell: return "unknown_cell";
      case Kind::bad_index: return "bad_index";
    }
    return "unknown";
  }

  std::string message() const {
    const std::string where = "cell \"" + cell + "\" (dim " + std::to_string(dim) + ")";
    switch (kind) {
      case Kind::relation:
        return "cubical relation fails at " + where + ": d_" + std::to_string(i) + "^" +
               std::to_string(alpha) + " d_" + std::to_string(j) + "^" + std::to_string(beta) +
               " = \"" + value + "\" but d_" + std::to_string(j - 1) + "^" + std::to_string(beta) +
               " d_" + std::to_string(i) + "^" + std::to_string(alpha) + " = \"" + other + "\"";
      case Kind::dangling:
        return "face d_" + std::to_string(i) + "^" + std::to_string(alpha) + " of " + where +
               " points to undeclared cell \"" + value + "\"";
      case Kind::missing_face:
        return "missing face d_" + std::to_string(i) + "^" + std::to_string(alpha) + " of " + where;
      case Kind::duplicate_face:
        return "face d_" + std::to_string(i) + "^" + std::to_string(alpha) + " of " + where +
               " is given twice";
      case Kind::duplicate_cell:
        return where + " is declared twice";
      case Kind::unknown_cell:
        return "face record for undeclared " + where;
      case Kind::bad_index:
        return "face record d_" + std::to_string(i) + "^" + std::to_string(alpha) + " of " + where +
               " is out of range";
    }
    return "unknown issue";
  }
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const noexcept { return issues.empty(); }
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport report)
      : std::runtime_error(summary(report)), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

private:
  static std::string summary(const ValidationReport& r) {
    std::string s = "invalid precubical set (" + std::to_string(r.issues.size()) + " issue" +
                    (r.issues.size() == 1 ? "" : "s") + ")";
    if (!r.issues.empty()) {
      s += ": " + r.issues.front().message();
    }
    return s;
  }

  ValidationReport report_;
};

class Builder;

// A finite precubical set: per-dimension sorted label lists and a total face
// map d_i^alpha : K_n -> K_{n-1} stored by index. The face map always points
// at existing cells; the cubical relations are checked by validate().
class PrecubicalSet {
public:
  PrecubicalSet() = default;

  // Highest non-empty dimension, -1 for the empty set.
  int top_dim() const noexcept { return static_cast<int>(labels_.size()) - 1; }

  bool empty() const noexcept { return labels_.empty(); }

  std::size_t size(std::size_t dim) const noexcept {
    return dim < labels_.size() ? labels_[dim].size() : 0;
  }

  std::vector<std::size_t> cell_counts() const {
    std::vector<std::size_t> out;
    out.reserve(labels_.size());
    for (const auto& l : labels_) {
      out.push_back(l.size());
    }
    return out;
  }

  std::size_t total_cells() const noexcept {
    std::size_t n = 0;
    for (const auto& l : labels_) {
      n += l.size();
    }
    return n;
  }

  const std::vector<std::string>& labels(std::size_t dim) const {
    static const std::vector<std::string> none;
    return dim < labels_.size() ? labels_[dim] : none;
  }

  const std::string& label(CellId c) const { return labels_.at(c.dim).at(c.index); }

  std::optional<CellId> find(std::size_t dim, std::string_view label) const {
    if (dim >= labels_.size()) {
      return std::nullopt;
    }
    const auto& l = labels_[dim];
    auto it = std::lower_bound(l.begin(), l.end(), label);
    if (it == l.end() || *it != label) {
      return std::nullopt;
    }
    return CellId{dim, static_cast<std::size_t>(it - l.begin())};
  }

  CellId at(std::size_t dim, std::string_view label) const {
    if (auto c = find(dim, label)) {
      return *c;
    }
    throw std::out_of_range("no cell \"" + std::string(label) + "\" in dimension " +
                            std::to_string(dim));
  }

  // d_i^alpha c with 1 <= i <= dim(c).
  CellId face(CellId c, std::size_t i, int alpha) const {
    if (c.dim == 0 || i == 0 || i > c.dim || (alpha != 0 && alpha != 1)) {
      throw std::out_of_range("face d_" + std::to_string(i) + "^" + std::to_string(alpha) +
                              " undefined on a cell of dimension " + std::to_string(c.dim));
    }
    return CellId{c.dim - 1, faces_[c.dim][slot(c, i, alpha)]};
  }

  std::vector<CellId> cells(std::size_t dim) const {
    std::vector<CellId> out(size(dim));
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = CellId{dim, k};
    }
    return out;
  }

  // Copy with a single face entry replaced. Relations are not re-checked.
  PrecubicalSet with_face(CellId c, std::size_t i, int alpha, CellId value) const {
    if (value.dim + 1 != c.dim || value.index >= size(value.dim)) {
      throw std::invalid_argument("with_face: replacement is not a cell of dimension dim-1");
    }
    face(c, i, alpha);  // range check
    PrecubicalSet out = *this;
    out.faces_[c.dim][slot(c, i, alpha)] = value.index;
    return out;
  }

  friend bool operator==(const PrecubicalSet&, const PrecubicalSet&) = default;

private:
  friend class Builder;

  static std::size_t slot(CellId c, std::size_t i, int alpha) noexcept {
    return c.index * 2 * c.dim + (i - 1) * 2 + static_cast<std::size_t>(alpha);
  }

  std::vector<std::vector<std::string>> labels_;
  // faces_[n][cell * 2n + (i-1) * 2 + alpha]; faces_[0] is empty.
  std::vector<std::vector<std::size_t>> faces_;
};

// Every violated instance of d_i^a d_j^b = d_{j-1}^b d_i^a (i < j).
inline ValidationReport validate(const PrecubicalSet& k) {
  ValidationReport report;
  for (int n = 2; n <= k.top_dim(); ++n) {
    const auto dim = static_cast<std::size_t>(n);
    for (const CellId c : k.cells(dim)) {
      for (std::size_t j = 2; j <= dim; ++j) {
        for (std::size_t i = 1; i < j; ++i) {
          for (int alpha = 0; alpha < 2; ++alpha) {
            for (int beta = 0; beta < 2; ++beta) {
              const CellId lhs = k.face(k.face(c, j, beta), i, alpha);
              const CellId rhs = k.face(k.face(c, i, alpha), j - 1, beta);
              if (lhs != rhs) {
                Issue issue;
                issue.kind = Issue::Kind::relation;
                issue.dim = dim;
                issue.cell = k.label(c);
                issue.i = i;
                issue.j = j;
                issue.alpha = alpha;
                issue.beta = beta;
                issue.value = k.label(lhs);
                issue.other = k.label(rhs);
                report.issues.push_back(std::move(issue));
              }
            }
          }
        }
      }
    }
  }
  return report;
}

struct FaceRecord {
  std::size_t dim = 0;
  std::size_t index = 0;
  int sign = 0;
  std::string cell;
  std::string value;
};

// Outcome of assembling labelled cell and face data. `set` is present when
// the face map is total and well-typed; `report` additionally lists relation
// violations of that set.
struct Assembly {
  std::optional<PrecubicalSet> set;
  ValidationReport report;
};

// Collects labelled cells and face records; assemble() checks them.
class Builder {
public:
  Builder& add_cell(std::size_t dim, std::string label) {
    cells_.emplace_back(dim, std::move(label));
    return *this;
  }

  Builder& set_face(std::size_t dim, std::string cell, std::size_t i, int alpha, std::string value) {
    faces_.push_back(FaceRecord{dim, i, alpha, std::move(cell), std::move(value)});
    return *this;
  }

  Builder& add_face(FaceRecord record) {
    faces_.push_back(std::move(record));
    return *this;
  }

  Assembly assemble() const {
    Assembly out;
    ValidationReport& report = out.report;

    std::size_t dims = 0;
    for (const auto& [dim, label] : cells_) {
      dims = std::max(dims, dim + 1);
    }
    std::vector<std::vector<std::string>> labels(dims);
    for (const auto& [dim, label] : cells_) {
      labels[dim].push_back(label);
    }
    for (std::size_t d = 0; d < dims; ++d) {
      auto& l = labels[d];
      std::sort(l.begin(), l.end());
      for (std::size_t k = 1; k < l.size(); ++k) {
        if (l[k] == l[k - 1] && (k < 2 || l[k - 2] != l[k])) {
          Issue issue;
          issue.kind = Issue::Kind::duplicate_cell;
          issue.dim = d;
          issue.cell = l[k];
          report.issues.push_back(std::move(issue));
        }
      }
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    while (!labels.empty() && labels.back().empty()) {
      labels.pop_back();
    }

    PrecubicalSet k;
    k.labels_ = std::move(labels);
    k.faces_.resize(k.labels_.size());
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    constexpr std::size_t broken = unset - 1;  // slot already reported as dangling
    for (std::size_t d = 1; d < k.labels_.size(); ++d) {
      k.faces_[d].assign(k.labels_[d].size() * 2 * d, unset);
    }

    for (const FaceRecord& r : faces_) {
      auto issue_for = [&](Issue::Kind kind) {
        Issue issue;
        issue.kind = kind;
        issue.dim = r.dim;
        issue.cell = r.cell;
        issue.i = r.index;
        issue.alpha = r.sign;
        issue.value = r.value;
        return issue;
      };
      if (r.dim == 0 || r.index == 0 || r.index > r.dim || (r.sign != 0 && r.sign != 1)) {
        report.issues.push_back(issue_for(Issue::Kind::bad_index));
        continue;
      }
      auto c = k.find(r.dim, r.cell);
      if (!c) {
        report.issues.push_back(issue_for(Issue::Kind::unknown_cell));
        continue;
      }
      std::size_t& entry = k.faces_[r.dim][PrecubicalSet::slot(*c, r.index, r.sign)];
      if (entry != unset) {
        report.issues.push_back(issue_for(Issue::Kind::duplicate_face));
        continue;
      }
      auto v = k.find(r.dim - 1, r.value);
      if (!v) {
        report.issues.push_back(issue_for(Issue::Kind::dangling));
        entry = broken;
        continue;
      }
      entry = v->index;
    }

    for (std::size_t d = 1; d < k.labels_.size(); ++d) {
      for (const CellId c : k.cells(d)) {
        for (std::size_t i = 1; i <= d; ++i) {
          for (int alpha = 0; alpha < 2; ++alpha) {
            if (k.faces_[d][PrecubicalSet::slot(c, i, alpha)] == unset) {
              Issue issue;
              issue.kind = Issue::Kind::missing_face;
              issue.dim = d;
              issue.cell = k.label(c);
              issue.i = i;
              issue.alpha = alpha;
              report.issues.push_back(std::move(issue));
            }
          }
        }
      }
    }

    if (!report.ok()) {
      return out;
    }
    ValidationReport relations = validate(k);
    report.issues = std::move(relations.issues);
    out.set = std::move(k);
    return out;
  }

  // Throws ValidationError unless the data describes a precubical set.
  PrecubicalSet build() const {
    Assembly a = assemble();
    if (!a.report.ok()) {
      throw ValidationError(std::move(a.report));
    }
    return std::move(*a.set);
  }

private:
  std::vector<std::pair<std::size_t, std::string>> cells_;
  std::vector<FaceRecord> faces_;
};

}  // namespace precubical
