#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsc/canonical.hpp"
#include "gsc/enumerate.hpp"
#include "gsc/families.hpp"
#include "gsc/graph.hpp"
#include "gsc/graph6.hpp"
#include "gsc/indices.hpp"
#include "gsc/numerics.hpp"
#include "gsc/transforms.hpp"
#include "gsc/verify.hpp"
#include "json.hpp"

namespace gsc::cli {
namespace {

/// Bad user input; reported on stderr with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

double parse_real(const std::string& token) {
  if (token == "alpha1") return numerics::alpha1_value();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
    throw UsageError("not a finite real number: '" + token + "'");
  }
  return value;
}

// Value rounded to 15 significant digits, independent of the C locale.
double rounded(double x) {
  const std::string text = format_number(x);
  double value = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

int parse_int(const std::string& token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) throw UsageError("not an integer: '" + token + "'");
  return value;
}

std::vector<double> parse_alpha_list(const std::vector<std::string>& raw) {
  std::vector<double> out;
  for (const auto& item : raw) {
    for (const auto& tok : split(item, ',')) {
      if (!tok.empty()) out.push_back(parse_real(tok));
    }
  }
  if (out.empty()) throw UsageError("empty alpha list");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text);
    return {v, v};
  }
  int lo = parse_int(text.substr(0, dots));
  int hi = parse_int(text.substr(dots + 2));
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

/// Either the requested file or the fallback stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// ---- index -----------------------------------------------------------------

struct IndexOptions {
  std::string input = "-";
  std::vector<std::string> graph6;
  std::vector<std::string> alphas{"-1,-0.5"};
  bool edge_list = false;
  std::string format = "table";
  std::string out;
};

struct NamedGraph {
  std::string label;
  Graph graph;
};

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    std::string rest;
    return static_cast<bool>(fields >> n) && !(fields >> rest);
  }
  return false;
}

std::vector<NamedGraph> read_index_input(const IndexOptions& opt, std::istream& in) {
  std::vector<NamedGraph> graphs;
  for (std::size_t i = 0; i < opt.graph6.size(); ++i) {
    try {
      graphs.push_back({opt.graph6[i], parse_graph6(opt.graph6[i])});
    } catch (const std::exception& e) {
      throw UsageError("--graph6 argument " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (!opt.graph6.empty() && opt.input == "-") return graphs;

  std::string text;
  if (opt.input == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) throw UsageError("cannot open input file '" + opt.input + "'");
    text.assign(std::istreambuf_iterator<char>(file), {});
  }

  if (opt.edge_list || looks_like_edge_list(text)) {
    std::istringstream stream(text);
    try {
      graphs.push_back({opt.input, read_edge_list(stream)});
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    return graphs;
  }

  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back({line, parse_graph6(line)});
    } catch (const std::exception& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

int cmd_index(const IndexOptions& opt, std::istream& in, std::ostream& out_default) {
  const auto alphas = parse_alpha_list(opt.alphas);
  const auto graphs = read_index_input(opt, in);
  OutputTarget target(opt.out, out_default);
  std::ostream& out = target.get();

  if (opt.format == "json") {
    for (const auto& [label, g] : graphs) {
      nlohmann::ordered_json j;
      j["graph"] = write_graph6(g);
      j["n"] = g.order();
      j["m"] = g.edge_count();
      j["max_degree"] = g.max_degree();
      nlohmann::ordered_json chi = nlohmann::ordered_json::array();
      nlohmann::ordered_json randic = nlohmann::ordered_json::array();
      for (double a : alphas) {
        chi.push_back({{"alpha", rounded(a)}, {"value", rounded(chi_alpha(g, a))}});
        randic.push_back(
            {{"alpha", rounded(a)}, {"value", rounded(randic_alpha(g, a))}});
      }
      j["chi"] = chi;
      j["sum_connectivity"] = rounded(sum_connectivity(g));
      j["randic"] = randic;
      out << j.dump() << '\n';
    }
    return kExitOk;
  }

  const char sep = opt.format == "csv" ? ',' : '\t';
  out << "graph" << sep << "n" << sep << "m" << sep << "max_degree";
  for (double a : alphas) out << sep << "chi(" << format_number(a) << ")";
  out << sep << "sum_connectivity";
  for (double a : alphas) out << sep << "R(" << format_number(a) << ")";
  out << '\n';
  for (const auto& [label, g] : graphs) {
    out << write_graph6(g) << sep << g.order() << sep << g.edge_count() << sep << g.max_degree();
    for (double a : alphas) out << sep << format_number(chi_alpha(g, a));
    out << sep << format_number(sum_connectivity(g));
    for (double a : alphas) out << sep << format_number(randic_alpha(g, a));
    out << '\n';
  }
  return kExitOk;
}

// ---- construct -------------------------------------------------------------

struct ConstructOptions {
  std::string family;
  std::vector<std::string> params;
  bool describe = false;
};

Graph build_family(const ConstructOptions& opt) {
  std::vector<int> p;
  for (const auto& s : opt.params) p.push_back(parse_int(s));
  auto need = [&](std::size_t count, const char* usage) {
    if (p.size() != count) throw UsageError(std::string("usage: construct ") + usage);
  };
  const std::string& f = opt.family;
  if (f == "P" || f == "path") {
    need(1, "P <n>");
    return path_graph(p[0]);
  }
  if (f == "C" || f == "cycle") {
    need(1, "C <n>");
    return cycle_graph(p[0]);
  }
  if (f == "T") {
    need(2, "T <n> <delta>");
    return tree_T(p[0], p[1]);
  }
  if (f == "U") {
    need(2, "U <n> <delta>");
    return unicyclic_U(p[0], p[1]);
  }
  if (f == "spider") {
    return spider_tree(p);
  }
  if (f == "cycle-paths") {
    if (p.size() < 2) throw UsageError("usage: construct cycle-paths <cycle_len> <leg>...");
    return cycle_with_paths(p[0], std::vector<int>(p.begin() + 1, p.end()));
  }
  throw UsageError("unknown family '" + f + "' (expected P, C, T, U, spider, cycle-paths)");
}

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  Graph g = [&] {
    try {
      return build_family(opt);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  out << write_graph6(g) << '\n';
  if (opt.describe) {
    auto degrees = g.degrees();
    out << "n: " << g.order() << '\n' << "m: " << g.edge_count() << '\n';
    out << "class: " << to_string(classify(g).tag) << '\n';
    out << "max_degree: " << g.max_degree() << '\n';
    out << "degrees:";
    for (int d : degrees) out << ' ' << d;
    out << "\nprofile:";
    for (int s : edge_weight_profile(g).entries) out << ' ' << s;
    out << '\n';
  }
  return kExitOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateOptions {
  std::string cls;
  int n = 0;
  std::optional<int> max_degree;
  std::optional<int> ceiling;
  std::string out;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out_default, std::ostream& err) {
  GraphClass cls;
  if (opt.cls == "trees" || opt.cls == "tree") {
    cls = GraphClass::kTree;
  } else if (opt.cls == "unicyclic") {
    cls = GraphClass::kUnicyclic;
  } else {
    throw UsageError("unknown class '" + opt.cls + "' (expected trees or unicyclic)");
  }
  EnumerationLimits limits;
  if (opt.ceiling) {
    limits.tree_ceiling = *opt.ceiling;
    limits.unicyclic_ceiling = *opt.ceiling;
  }
  std::vector<Graph> graphs;
  try {
    graphs = enumerate_class(cls, opt.n, limits);
  } catch (const CeilingError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (opt.max_degree) graphs = filter_max_degree(graphs, *opt.max_degree);
  OutputTarget target(opt.out, out_default);
  write_graph6_lines(target.get(), graphs);
  err << graphs.size() << " graphs\n";
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  int theorem = 0;
  std::string n_range;
  std::optional<int> delta;
  std::vector<std::string> alphas;
  std::string format = "table";
  std::string out;
  std::optional<int> ceiling;
  int workers = 1;
  bool timing = false;
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out_default, std::ostream& err) {
  GridRequest req;
  req.theorem = opt.theorem;
  auto [lo, hi] = parse_range(opt.n_range.empty() ? (opt.theorem == 1 ? "4..11" : "4..10") : opt.n_range);
  req.n_min = lo;
  req.n_max = hi;
  req.delta = opt.delta;
  req.alphas = opt.alphas.empty() ? default_alphas(opt.theorem) : parse_alpha_list(opt.alphas);
  req.workers = opt.workers;
  if (opt.ceiling) {
    req.limits.tree_ceiling = *opt.ceiling;
    req.limits.unicyclic_ceiling = *opt.ceiling;
  }
  const int ceiling = opt.theorem == 1 ? req.limits.tree_ceiling : req.limits.unicyclic_ceiling;
  if (req.n_max > ceiling) {
    throw UsageError("n = " + std::to_string(req.n_max) + " exceeds the enumeration ceiling " + std::to_string(ceiling));
  }

  auto reports = verify_grid(req);
  OutputTarget target(opt.out, out_default);
  if (opt.format == "json") {
    write_jsonl(target.get(), reports, opt.timing);
  } else if (opt.format == "csv") {
    write_csv(target.get(), reports);
  } else {
    write_table(target.get(), reports);
  }
  const auto s = summarize(reports);
  err << s.passed << " passed / " << s.failed << " failed / " << s.refused << " refused\n";
  return s.failed == 0 ? kExitOk : kExitVerificationFailed;
}

// ---- alpha1 ----------------------------------------------------------------

int cmd_alpha1(double tolerance, std::ostream& out) {
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be positive");
  auto r = numerics::alpha1(tolerance);
  out << std::setprecision(17);
  out << "value: " << r.value << '\n';
  out << "bracket: [" << r.bracket.first << ", " << r.bracket.second << "]\n";
  out << "residual: " << r.residual << '\n';
  out << "iterations: " << r.iterations << '\n';
  return kExitOk;
}

// ---- lemmas ----------------------------------------------------------------

int cmd_lemmas(int count, std::uint64_t seed, std::ostream& out) {
  if (count < 1) throw UsageError("count must be positive");
  std::mt19937_64 rng(seed);
  const std::vector<double> merge_alphas{numerics::alpha1_value() + 1e-6, -1.5, -1.0, -0.5, -0.1};
  const std::vector<double> reroute_alphas{-1.0, -0.75, -0.5, -0.25, -0.1};
  int merge_bad = 0;
  int reroute_bad = 0;
  double merge_min = INFINITY;
  double reroute_min = INFINITY;
  for (int i = 0; i < count; ++i) {
    auto inst = random_path_merge_instance(rng);
    auto pair = lemma1_setup(inst.q, inst.u, inst.a, inst.b);
    for (double a : merge_alphas) {
      double d = index_delta(pair.split, pair.merged, a);
      merge_min = std::min(merge_min, d);
      if (!(d > 0.0)) ++merge_bad;
    }
  }
  for (int i = 0; i < count; ++i) {
    auto inst = random_reroute_instance(rng);
    Graph after = lemma2_reroute(inst.h, inst.u, inst.u2, inst.u_prime);
    for (double a : reroute_alphas) {
      double d = index_delta(inst.h, after, a);
      reroute_min = std::min(reroute_min, d);
      if (!(d > 0.0)) ++reroute_bad;
    }
  }
  out << "seed: " << seed << '\n';
  out << "path-merge: " << count * merge_alphas.size() - merge_bad << '/' << count * merge_alphas.size()
      << " positive, min delta " << format_number(merge_min) << '\n';
  out << "reroute: " << count * reroute_alphas.size() - reroute_bad << '/' << count * reroute_alphas.size()
      << " positive, min delta " << format_number(reroute_min) << '\n';
  return merge_bad + reroute_bad == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"General sum-connectivity index toolkit: indices, extremal families, enumeration, certification"};
  app.require_subcommand(1);

  IndexOptions index_opt;
  auto* index = app.add_subcommand("index", "Compute chi_alpha, sum-connectivity and R_alpha for input graphs");
  index->add_option("input", index_opt.input, "graph6 lines or edge-list file ('-' for stdin)");
  index->add_option("--graph6", index_opt.graph6, "inline graph6 string (repeatable)");
  index->add_option("--alpha", index_opt.alphas, "comma-separated exponents");
  index->add_flag("--edge-list", index_opt.edge_list, "treat input as an edge list");
  index->add_option("--format", index_opt.format)->check(CLI::IsMember({"table", "json", "csv"}));
  index->add_option("--out", index_opt.out, "output path");

  ConstructOptions construct_opt;
  auto* construct = app.add_subcommand("construct", "Print the graph6 of a named family member");
  construct->add_option("family", construct_opt.family, "P, C, T, U, spider, cycle-paths")->required();
  construct->add_option("params", construct_opt.params, "family parameters");
  construct->add_flag("--describe", construct_opt.describe, "also print degrees and edge-weight profile");

  EnumerateOptions enum_opt;
  auto* enumerate = app.add_subcommand("enumerate", "List non-isomorphic trees or unicyclic graphs as graph6");
  enumerate->add_option("class", enum_opt.cls, "trees or unicyclic")->required();
  enumerate->add_option("n", enum_opt.n, "order")->required();
  enumerate->add_option("--max-degree,--delta", enum_opt.max_degree, "keep graphs with this maximum degree");
  enumerate->add_option("--ceiling", enum_opt.ceiling, "enumeration ceiling override");
  enumerate->add_option("--out", enum_opt.out, "output path");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Certify an extremal theorem over a (n, delta, alpha) grid");
  verify->add_option("theorem", verify_opt.theorem, "1 (trees), 2 (unicyclic, fixed delta), 3 (unicyclic ranking)")
      ->required()
      ->check(CLI::Range(1, 3));
  verify->add_option("--n", verify_opt.n_range, "order or range lo..hi");
  verify->add_option("--delta", verify_opt.delta, "single maximum degree (default: all)");
  verify->add_option("--alpha", verify_opt.alphas, "comma-separated exponents; 'alpha1' allowed");
  verify->add_option("--format", verify_opt.format)->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--out", verify_opt.out, "output path");
  verify->add_option("--ceiling", verify_opt.ceiling, "enumeration ceiling override");
  verify->add_option("--workers", verify_opt.workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--timing", verify_opt.timing, "include runtime_ms in JSON output");

  double tolerance = 1e-10;
  auto* alpha1 = app.add_subcommand("alpha1", "Bisection for the lower exponent limit of the path-merge rewrite");
  alpha1->add_option("--tolerance", tolerance, "bracket width and residual tolerance");

  int lemma_count = 500;
  std::uint64_t seed = 20240501;
  auto* lemmas = app.add_subcommand("lemmas", "Randomized checks of the path-merge and reroute rewrites");
  lemmas->add_option("--count", lemma_count, "instances per rewrite");
  lemmas->add_option("--seed", seed, "PRNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*index) return cmd_index(index_opt, in, out);
    if (*construct) return cmd_construct(construct_opt, out);
    if (*enumerate) return cmd_enumerate(enum_opt, out, err);
    if (*verify) return cmd_verify(verify_opt, out, err);
    if (*alpha1) return cmd_alpha1(tolerance, out);
    if (*lemmas) return cmd_lemmas(lemma_count, seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gsc::cli
