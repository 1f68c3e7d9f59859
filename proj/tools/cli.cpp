#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "latpoly/codec.hpp"
#include "latpoly/errors.hpp"
#include "latpoly/eventree.hpp"
#include "latpoly/lattice.hpp"
#include "latpoly/matching.hpp"
#include "latpoly/verify.hpp"

namespace latpoly::cli {

namespace {

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

// Usage errors discovered after argument parsing (bad bounds, missing flags).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---------------------------------------------------------------- table

void emit_table(int max_i, Format format, std::ostream& out) {
  const LatticeTable table(max_i);
  switch (format) {
    case Format::Json: {
      Json rows = Json::array();
      for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; 2 * j <= i; ++j) rows.push_back(Json::array({i, j, to_json(table.at({i, j}))}));
      }
      out << rows.dump() << "\n";
      return;
    }
    case Format::Csv:
      out << "i,j,polynomial\n";
      for (int i = 0; i <= max_i; ++i) {
        for (int j = 0; 2 * j <= i; ++j) out << i << "," << j << "," << table.at({i, j}).to_text() << "\n";
      }
      return;
    case Format::Text: {
      std::size_t width = 0;
      for (int i = 0; i <= max_i; ++i) {
        width = std::max(width, ("i=" + std::to_string(i)).size());
        for (int j = 0; 2 * j <= i; ++j) width = std::max(width, table.at({i, j}).to_text().size());
      }
      auto pad = [width](const std::string& s) { return s + std::string(width - s.size(), ' '); };
      const std::string label_blank(4, ' ');
      for (int j = max_i / 2; j >= 0; --j) {
        std::string line = "j=" + std::to_string(j);
        line.resize(std::max<std::size_t>(line.size(), 4), ' ');
        for (int i = 0; i <= max_i; ++i) {
          line += " | " + pad(2 * j <= i ? table.at({i, j}).to_text() : "");
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
      }
      std::string footer = label_blank;
      for (int i = 0; i <= max_i; ++i) footer += " | " + pad("i=" + std::to_string(i));
      while (!footer.empty() && footer.back() == ' ') footer.pop_back();
      out << footer << "\n";
      return;
    }
  }
}

// ---------------------------------------------------------------- map

std::string render(const LatticePath& p, Format f) {
  return f == Format::Json ? to_json(p).dump() : p.to_string();
}
std::string render(const PartialMatching& m, Format f) {
  return f == Format::Json ? to_json(m).dump() : format_sequence(canonical_sequence(m));
}
std::string render(const EvenTree& t, Format f) {
  return f == Format::Json ? to_json(t).dump() : t.to_parens();
}

LatticePath tree_path(const EvenTree& t, std::optional<int> i, std::optional<int> j) {
  if (i.has_value() != j.has_value()) throw UsageError("--i and --j must be given together");
  if (i) return tree_to_path(t, {*i, *j});
  if (t.dotted()) throw DomainError("the position of a dotted tree cannot be inferred; pass --i and --j");
  return tree_to_path(t, {t.edge_count(), t.edge_count() / 2});
}

std::string run_map(const std::string& kind, const std::string& input, Format f, std::optional<int> i,
                    std::optional<int> j) {
  if (kind == "path-to-matching") return render(path_to_matching(read_path(input)), f);
  if (kind == "matching-to-path") return render(matching_to_path(read_matching(input)), f);
  if (kind == "path-to-tree") return render(path_to_tree(read_path(input)), f);
  if (kind == "tree-to-path") return render(tree_path(read_tree(input), i, j), f);
  if (kind == "matching-to-tree") return render(path_to_tree(matching_to_path(read_matching(input))), f);
  if (kind == "tree-to-matching") return render(path_to_matching(tree_path(read_tree(input), i, j)), f);
  throw UsageError("unknown map kind '" + kind + "'");
}

// ---------------------------------------------------------------- enum

template <typename T, typename Encode, typename Stat>
void emit_stream(const std::vector<T>& items, Format f, const char* stat_name, Encode encode, Stat stat,
                 std::ostream& out) {
  if (f == Format::Csv) out << "index,object," << stat_name << "\n";
  std::size_t index = 0;
  for (const T& item : items) {
    switch (f) {
      case Format::Json:
        out << to_json(item).dump() << "\n";
        break;
      case Format::Text:
        out << encode(item) << "\n";
        break;
      case Format::Csv:
        out << index << "," << csv_quote(encode(item)) << "," << stat(item) << "\n";
        break;
    }
    ++index;
  }
  if (f == Format::Text) out << "count: " << items.size() << "\n";
}

void run_enum(const std::string& family, std::optional<int> i, std::optional<int> j, std::optional<int> edges,
              Format f, std::ostream& out) {
  if (family == "paths" || family == "matchings") {
    if (!i || !j) throw UsageError(family + " requires --i and --j");
    if (*j < 0 || 2 * *j > *i) throw UsageError(family + " requires 0 <= 2j <= i");
    if (family == "paths") {
      emit_stream(enumerate_paths({*i, *j}), f, "weight", [](const LatticePath& p) { return p.to_string(); },
                  weight_exponent, out);
    } else {
      emit_stream(enumerate_q(*i, *j), f, "crossings",
                  [](const PartialMatching& m) { return format_sequence(canonical_sequence(m)); }, crossings, out);
    }
    return;
  }
  if (family == "trees") {
    if (!edges) throw UsageError("trees requires --edges");
    if (*edges < 0 || *edges % 2 != 0) throw UsageError("--edges must be a nonnegative even number");
    emit_stream(enumerate_even_trees(*edges), f, "r_index", [](const EvenTree& t) { return t.to_parens(); },
                r_index, out);
    return;
  }
  throw UsageError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------- verify

int run_verify(int max_n, std::uint64_t seed, Format f, const Hooks& hooks, std::ostream& out) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  VerifyOptions options;
  options.max_n = max_n;
  options.seed = seed;
  options.t_coeff = hooks.t_coeff;
  const VerifyReport report = run_verification(options);
  if (f == Format::Json) {
    Json checks = Json::array();
    for (const VerifyCheck& c : report.checks) {
      Json entry = Json::object();
      entry["name"] = c.name;
      entry["range"] = c.range;
      entry["passed"] = c.passed;
      entry["detail"] = c.detail;
      checks.push_back(std::move(entry));
    }
    Json doc = Json::object();
    doc["overall"] = report.overall();
    doc["checks"] = std::move(checks);
    out << doc.dump() << "\n";
  } else {
    for (const VerifyCheck& c : report.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.range << "]";
      if (!c.passed) out << ": " << c.detail;
      out << "\n";
    }
    out << "overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
  }
  return report.overall() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Lattice polynomials, 12312-avoiding partial matchings and even trees", "latpoly"};
  app.require_subcommand(1);

  Format table_format = Format::Text;
  Format map_format = Format::Json;
  Format enum_format = Format::Json;
  Format verify_format = Format::Text;
  std::optional<int> opt_i, opt_j, opt_edges;
  int max_i = 8;
  int max_n = 4;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::string kind, input, family;

  auto* table = app.add_subcommand("table", "Print L_{i,j}(x) for 0 <= i <= max-i");
  table->add_option("--max-i,--i", max_i, "Largest x-coordinate")->check(CLI::NonNegativeNumber);
  table->add_option("--format", table_format, "text, json or csv")->transform(CLI::CheckedTransformer(kFormats));

  auto* map = app.add_subcommand("map", "Apply a bijection to one encoded object");
  map->add_option("kind", kind,
                  "path-to-matching, matching-to-path, path-to-tree, tree-to-path, matching-to-tree, "
                  "tree-to-matching")
      ->required();
  map->add_option("input", input, "Encoded object, or - to read standard input")->required();
  map->add_option("--format", map_format, "json or text")->transform(CLI::CheckedTransformer(kFormats));
  map->add_option("--i", opt_i, "Tree position x-coordinate (tree inputs)");
  map->add_option("--j", opt_j, "Tree position y-coordinate (tree inputs)");

  auto* enumerate = app.add_subcommand("enum", "Stream every object of a family");
  enumerate->add_option("family", family, "paths, matchings or trees")->required();
  enumerate->add_option("--i", opt_i, "Points (matchings) or x-coordinate (paths)");
  enumerate->add_option("--j", opt_j, "Edges (matchings) or y-coordinate (paths)");
  enumerate->add_option("--edges", opt_edges, "Edge count (trees)");
  enumerate->add_option("--format", enum_format, "json, text or csv")->transform(CLI::CheckedTransformer(kFormats));

  auto* verify = app.add_subcommand("verify", "Cross-check every identity by brute force");
  verify->add_option("--max-n", max_n, "Largest n for the identity ranges");
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--format", verify_format, "text or json")->transform(CLI::CheckedTransformer(kFormats));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*table) {
      emit_table(max_i, table_format, out);
    } else if (*map) {
      out << run_map(kind, read_input(input, in), map_format, opt_i, opt_j) << "\n";
    } else if (*enumerate) {
      run_enum(family, opt_i, opt_j, opt_edges, enum_format, out);
    } else if (*verify) {
      return run_verify(max_n, seed, verify_format, hooks, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ArithmeticOverflow& e) {
    err << "overflow: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace latpoly::cli
