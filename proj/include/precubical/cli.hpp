#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "constructions.hpp"
#include "flow.hpp"
#include "generators.hpp"
#include "globular.hpp"
#include "homology.hpp"
#include "io.hpp"

namespace precubical::cli {

enum ExitCode : int { success = 0, invalid_input = 1, usage_error = 2 };

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    throw UsageError("cannot open \"" + path + "\"");
  }
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

inline CellId state(const PrecubicalSet& k, const std::string& label, const char* flag) {
  if (auto c = k.find(0, label)) {
    return *c;
  }
  throw UsageError(std::string(flag) + ": no state \"" + label + "\"");
}

}  // namespace detail

// Runs one command line (args excludes the program name). Reports go to
// `out` (or the -o file), diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Precubical sets: validation, flow realization, globular cells, cubical homology", "precubical"};
  app.require_subcommand(1);

  std::string file;
  std::string output;
  std::size_t dim = 0;
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::size_t> max_len;
  bool summary = false;
  std::string family;
  std::vector<long long> params;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("file", file, "Document path, or - for standard input")->required();
    sub->add_option("-o", output, "Write the report to this path");
    return sub;
  };

  auto* validate_cmd = with_input(app.add_subcommand("validate", "Check the cubical relations"));
  auto* info_cmd = with_input(app.add_subcommand("info", "Cell counts and basic invariants"));
  auto* skeleton_cmd = with_input(app.add_subcommand("skeleton", "Cells of dimension <= --dim"));
  skeleton_cmd->add_option("--dim", dim, "Skeleton dimension")->required();
  auto* homology_cmd = with_input(app.add_subcommand("homology", "Integer homology of the realization"));
  auto* euler_cmd = with_input(app.add_subcommand("euler", "Euler characteristic"));
  auto* states_cmd = with_input(app.add_subcommand("states", "States of the realized flow"));
  auto* paths_cmd = with_input(app.add_subcommand("paths", "Execution path classes"));
  paths_cmd->add_option("--from", from, "Source state");
  paths_cmd->add_option("--to", to, "Target state");
  paths_cmd->add_option("--max-len", max_len, "Longest path considered (default: number of edges)")
      ->check(CLI::PositiveNumber);
  auto* order_cmd = with_input(app.add_subcommand("order", "Reachability order on states, or a loop"));
  auto* globular_cmd = with_input(app.add_subcommand("globular", "Globular cell decomposition"));
  globular_cmd->add_flag("--summary", summary, "Per-stage census only");
  auto* generate_cmd = app.add_subcommand("generate", "Emit a named family as a document");
  generate_cmd->add_option("family", family, "cube | boundary | circle | torus | cylinder | interval")
      ->required();
  generate_cmd->add_option("params", params, "Family parameters");
  generate_cmd->add_option("-o", output, "Write the document to this path");

  std::vector<const char*> argv{"precubical"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::ParseError& e) {
    err << "precubical: " << e.what() << "\n";
    return usage_error;
  }

  auto emit = [&](const json& report) -> int {
    if (output.empty()) {
      out << dump(report);
      return success;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      throw detail::UsageError("cannot write \"" + output + "\"");
    }
    f << dump(report);
    return success;
  };

  try {
    if (generate_cmd->parsed()) {
      return emit(to_document(generate(family, params)));
    }

    Assembly assembly = read_document(detail::slurp(file, in));
    if (validate_cmd->parsed()) {
      emit(to_json(assembly.report));
      return assembly.report.ok() ? success : invalid_input;
    }
    if (!assembly.report.ok()) {
      err << "precubical: " << ValidationError(assembly.report).what() << "\n";
      return invalid_input;
    }
    const PrecubicalSet& k = *assembly.set;

    if (info_cmd->parsed()) {
      return emit(json{{"top_dim", k.top_dim()},
                       {"cell_counts", k.cell_counts()},
                       {"total_cells", k.total_cells()},
                       {"euler_characteristic", euler_characteristic(k)},
                       {"loopless", std::holds_alternative<StatePoset>(state_order(k))}});
    }
    if (skeleton_cmd->parsed()) {
      return emit(to_document(skeleton(k, dim)));
    }
    if (homology_cmd->parsed()) {
      return emit(to_json(homology(k)));
    }
    if (euler_cmd->parsed()) {
      return emit(json{{"euler_characteristic", euler_characteristic(k)}});
    }
    if (states_cmd->parsed()) {
      return emit(json{{"states", labels_json(k, realize_states(k))}});
    }
    if (paths_cmd->parsed()) {
      const std::size_t bound = max_len.value_or(std::max<std::size_t>(1, k.size(1)));
      if (from.has_value() != to.has_value()) {
        throw detail::UsageError("paths: give both --from and --to, or neither");
      }
      if (!from) {
        return emit(json{{"max_len", bound}, {"morphisms", count_flow_morphisms(k, bound)}});
      }
      const CellId a = detail::state(k, *from, "--from");
      const CellId b = detail::state(k, *to, "--to");
      const auto classes = enumerate_path_classes(k, a, b, bound);
      return emit(json{{"from", *from},
                       {"to", *to},
                       {"max_len", bound},
                       {"count", classes.size()},
                       {"classes", to_json(k, classes)}});
    }
    if (order_cmd->parsed()) {
      return emit(to_json(k, state_order(k)));
    }
    if (globular_cmd->parsed()) {
      if (summary) {
        return emit(to_json(decomposition_report(k)));
      }
      return emit(to_json(k, globular_decomposition(k)));
    }
  } catch (const detail::UsageError& e) {
    err << "precubical: " << e.what() << "\n";
    return usage_error;
  } catch (const DocumentError& e) {
    err << "precubical: " << e.what() << "\n";
    return invalid_input;
  } catch (const ValidationError& e) {
    err << "precubical: " << e.what() << "\n";
    return invalid_input;
  } catch (const std::invalid_argument& e) {
    err << "precubical: " << e.what() << "\n";
    return usage_error;
  }
  err << "precubical: no subcommand\n";
  return usage_error;
}

}  // namespace precubical::cli
