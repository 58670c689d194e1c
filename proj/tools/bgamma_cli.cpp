// bgamma: command-line front end for the binary gammoid toolkit.
//
// Exit codes: 0 ok/found, 1 absent or failed check, 2 usage, 3 malformed
// input, 4 unknown label or name, 5 budget exceeded, 6 I/O, 7 precondition.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bgamma/catalog.hpp"
#include "bgamma/census.hpp"
#include "bgamma/error.hpp"
#include "bgamma/lifts.hpp"
#include "bgamma/minor.hpp"
#include "bgamma/verifier.hpp"

namespace {

using namespace bgamma;

enum Exit : int {
  kOk = 0,
  kNegative = 1,
  kUsage = 2,
  kMalformed = 3,
  kUnknownLabel = 4,
  kBudget = 5,
  kIo = 6,
  kPrecondition = 7,
};

class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

bool looks_like_graph(const std::string& text) {
  std::istringstream s(text);
  std::string first;
  s >> first;
  return first == "graph";
}

BinaryMatroid graph_file_matroid(const std::string& path) {
  auto m = cycle_matroid(graph_from_text(read_file(path)));
  std::cerr << "note: " << path << " read as a graph and converted to its cycle matroid\n";
  return m;
}

// Matroid or graph file, told apart by the header word.
BinaryMatroid load_any(const std::string& path) {
  const auto text = read_file(path);
  if (looks_like_graph(text)) return graph_file_matroid(path);
  return matroid_from_text(text);
}

LabelSet parse_set_option(const std::string& text) {
  std::size_t dups = 0;
  auto s = parse_label_set(text, &dups);
  if (dups > 0) std::cerr << "warning: " << dups << " duplicate label(s) in --set ignored\n";
  return s;
}

Pattern load_pattern(const std::string& spec) {
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return resolve_pattern(spec);
  if (std::filesystem::exists(spec)) return load_any(spec);
  throw LabelError("pattern '" + spec + "' is neither a catalog name nor a file");
}

std::string show_entry(const CatalogEntry& e) {
  std::string out = "name: " + e.name + "\nproperty: " + e.property + "\n";
  if (e.graph) out += to_text(*e.graph);
  if (e.matroid) {
    out += to_text(*e.matroid);
  } else {
    out += "rank oracle: U24 (rank 2 on u1..u4, not binary)\n";
  }
  const auto check = check_entry(e.name);
  out += std::string("verdict: ") + (check.passed ? "pass" : "FAIL") + " (" + check.detail + ")\n";
  for (const auto& c : check.corrections) out += "correction candidate: " + c + "\n";
  return out;
}

std::string census_text(const std::vector<std::string>& encodings) {
  std::string out;
  for (const auto& e : encodings) out += e + "\n";
  out += "count: " + std::to_string(encodings.size()) + "\n";
  return out;
}

std::vector<std::string> census_encodings(std::size_t max_edges, bool connected, std::size_t jobs,
                                          const std::string& cache_path) {
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    auto cache = census_cache_from_text(read_file(cache_path));
    if (cache.max_edges == max_edges && cache.connected == connected) return cache.encodings;
    std::cerr << "note: cache parameters differ; regenerating\n";
  }
  CensusCache fresh{max_edges, connected, {}};
  for (const auto& g : enumerate_multigraphs(max_edges, connected, jobs)) {
    fresh.encodings.push_back(canonical_encoding(g));
  }
  if (!cache_path.empty()) write_output(cache_path, to_text(fresh));
  return fresh.encodings;
}

int run(int argc, char** argv) {
  CLI::App app{"Binary matroid splitting and gammoid toolkit"};
  app.require_subcommand(1);

  // op
  auto* op = app.add_subcommand("op", "apply split, esplit or essplit");
  std::string op_kind, op_matroid, op_graph, op_set, op_pivot, op_out;
  op->add_option("kind", op_kind, "split | esplit | essplit")->required()->check(
      CLI::IsMember({"split", "esplit", "essplit"}));
  auto* op_m = op->add_option("--matroid", op_matroid, "matroid file");
  auto* op_g = op->add_option("--graph", op_graph, "graph file");
  op_m->excludes(op_g);
  op->add_option("--set", op_set, "comma-separated labels of H")->required();
  op->add_option("--pivot", op_pivot, "element e in H (essplit)");
  op->add_option("--out", op_out, "output file");

  // minor
  auto* minor = app.add_subcommand("minor", "search for a minor with certificate");
  std::string host_path, pattern_spec;
  minor->add_option("--host", host_path, "host matroid or graph file")->required();
  minor->add_option("--pattern", pattern_spec, "catalog name or file")->required();

  // gammoid
  auto* gam = app.add_subcommand("gammoid", "binary gammoid test");
  std::string gam_path;
  gam->add_option("file", gam_path, "matroid or graph file")->required();

  // catalog
  auto* cat = app.add_subcommand("catalog", "named objects");
  cat->require_subcommand(1);
  auto* cat_show = cat->add_subcommand("show", "print an entry");
  std::string cat_name;
  cat_show->add_option("name", cat_name)->required();
  auto* cat_check = cat->add_subcommand("check", "run every defining property");

  // census
  auto* cen = app.add_subcommand("census", "enumerate multigraphs or binary gammoids");
  std::size_t cen_edges = 0, cen_jobs = 0;
  bool cen_gammoids = false, cen_all = false;
  std::string cen_cache;
  cen->add_option("--max-edges", cen_edges)->required();
  cen->add_flag("--gammoids", cen_gammoids, "cycle matroids without an M(K4) minor, up to isomorphism");
  cen->add_flag("--disconnected", cen_all, "admit disconnected graphs without isolated vertices");
  cen->add_option("--cache", cen_cache, "census cache file");
  cen->add_option("--jobs", cen_jobs);

  // verify
  auto* ver = app.add_subcommand("verify", "run a theorem sweep");
  std::string ver_id, ver_out;
  std::optional<std::size_t> ver_edges, ver_h;
  std::size_t ver_jobs = 0;
  ver->add_option("theorem", ver_id)->required()->check(CLI::IsMember(theorem_ids()));
  ver->add_option("--max-edges", ver_edges);
  ver->add_option("--max-h", ver_h);
  ver->add_option("--jobs", ver_jobs);
  ver->add_option("--out", ver_out);

  // reverify
  auto* rev = app.add_subcommand("reverify", "re-check the counterexamples of a report file");
  std::string rev_path;
  rev->add_option("report", rev_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (op->parsed()) {
    if (op_matroid.empty() == op_graph.empty()) {
      std::cerr << "error: give exactly one of --matroid or --graph\n";
      return kUsage;
    }
    const auto m = op_graph.empty() ? matroid_from_text(read_file(op_matroid)) : graph_file_matroid(op_graph);
    const auto h = parse_set_option(op_set);
    BinaryMatroid result;
    if (op_kind == "essplit") {
      if (op_pivot.empty()) {
        std::cerr << "error: essplit needs --pivot\n";
        return kUsage;
      }
      result = es_splitting(m, h, op_pivot);
    } else {
      SplitSpec{h, std::nullopt}.validate(m);
      result = op_kind == "split" ? splitting(m, h) : element_splitting(m, h);
    }
    write_output(op_out, to_text(result));
    return kOk;
  }
  if (minor->parsed()) {
    const auto host = load_any(host_path);
    const auto pattern = load_pattern(pattern_spec);
    auto cert = has_minor(host, pattern);
    std::cout << (cert ? to_text(*cert) : "absent") << "\n";
    return cert ? kOk : kNegative;
  }
  if (gam->parsed()) {
    const auto m = load_any(gam_path);
    auto cert = k4_minor(m);
    if (!cert) {
      std::cout << "yes\n";
    } else {
      std::cout << "no\n" << to_text(*cert) << "\n";
    }
    return kOk;
  }
  if (cat_show->parsed()) {
    std::cout << show_entry(catalog_get(cat_name));
    return kOk;
  }
  if (cat_check->parsed()) {
    bool all = true;
    for (const auto& c : check_all()) {
      all = all && c.passed;
      std::cout << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
      for (const auto& corr : c.corrections) std::cout << "  correction candidate: " << corr << "\n";
    }
    return all ? kOk : kNegative;
  }
  if (cen->parsed()) {
    if (cen_gammoids) {
      std::vector<std::string> encodings;
      for (const auto& g : enumerate_binary_gammoids(cen_edges, cen_jobs)) encodings.push_back(canonical_encoding(g.graph));
      std::cout << census_text(encodings);
    } else {
      std::cout << census_text(census_encodings(cen_edges, !cen_all, cen_jobs, cen_cache));
    }
    return kOk;
  }
  if (ver->parsed()) {
    auto o = default_options(ver_id);
    if (ver_edges) o.max_edges = *ver_edges;
    if (ver_h) o.max_h = *ver_h;
    o.jobs = ver_jobs;
    const auto report = run_verification(ver_id, o);
    write_output(ver_out, to_text(report));
    return kOk;
  }
  if (rev->parsed()) {
    const auto result = reverify_report(read_file(rev_path));
    for (const auto& p : result.problems) std::cout << p << "\n";
    std::cout << "reverified " << result.confirmed << " of " << result.checked << "\n";
    return result.problems.empty() ? kOk : kNegative;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  } catch (const LabelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownLabel;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMalformed;
  }
}
