#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycsort/combinatorics.hpp"
#include "cycsort/cosets.hpp"
#include "cycsort/extremal.hpp"
#include "cycsort/permutation.hpp"
#include "cycsort/rational.hpp"
#include "cycsort/schreier.hpp"
#include "cycsort/verify.hpp"

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "cycsort/1";

// Exit codes: 0 success (and verified suites with zero failures),
// 1 suite failures, 2 usage or parse problems, 3 resource refusals.
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct RunConfig {
  int n = 0;
  std::string range;  // "a..b", overrides n where both make sense
  std::string mode = "sort";
  std::string generators = "adjacent";
  int workers = 1;
  std::uint64_t memory_cap = std::uint64_t(2) << 30;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  bool allow_large = false;
};

std::string format_double(double v, int precision = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  int a = 0, b = 0;
  try {
    if (sep == std::string::npos) {
      a = b = std::stoi(text);
    } else {
      a = std::stoi(text.substr(0, sep));
      b = std::stoi(text.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected a..b");
  }
  if (b < a) throw std::invalid_argument("empty range '" + text + "'");
  return {a, b};
}

cycsort::GeneratorSet generator_set(const RunConfig& cfg, int n) {
  const auto kind = cfg.generators == "cyclic" ? cycsort::GeneratorKind::cyclic
                                               : cycsort::GeneratorKind::adjacent;
  return cycsort::GeneratorSet{kind, n};
}

// Accepts one-line words ("3,1,2" or "312") and cycle notation ("(3,1,2)").
cycsort::Permutation parse_word_or_cycle(const std::string& text) {
  std::string_view sv(text);
  while (!sv.empty() && sv.front() == ' ') sv.remove_prefix(1);
  if (!sv.empty() && sv.front() == '(')
    return cycsort::parse_cycle(sv).to_word();
  return cycsort::parse_permutation(sv);
}

json rational_json(const cycsort::Rational& r) {
  return json{{"num", r.num}, {"den", r.den}, {"decimal", r.to_double()}};
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

template <class T>
std::string join_ints(const std::vector<T>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

// Chooses stdout or --out; the bfs dump is handled separately (binary).
struct OutputTarget {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    os = &file;
  }
  std::ostream& stream() { return *os; }
};

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string msg = "format '" + cfg.format + "' not supported here; use";
  for (const char* f : allowed) msg += std::string(" ") + f;
  throw std::invalid_argument(msg);
}

int cmd_stats(const std::string& word_text, const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const cycsort::Permutation p = parse_word_or_cycle(word_text);
  const int n = p.size();
  const cycsort::StatTriple t = cycsort::stat_triple(p);
  const std::int64_t m = cycsort::minv(p);
  const bool tailed = cycsort::is_heavy_tailed(p);
  const cycsort::Rational mean = cycsort::coset_mean_inv(p);
  const bool has_angle = n >= 2;
  const double angle = has_angle ? cycsort::cos_angle(p) : 0.0;

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (cfg.format == "json") {
    json j{{"schema", kSchemaVersion},
           {"command", "stats"},
           {"n", n},
           {"word", p.word()},
           {"inv", t.inv},
           {"winv", t.winv},
           {"cwinv", t.cwinv},
           {"minv", m},
           {"heavy_tailed", tailed},
           {"coset_mean_inv", rational_json(mean)}};
    j["cos_angle"] = has_angle ? json(angle) : json(nullptr);
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "n,word,inv,winv,cwinv,minv,heavy_tailed,coset_mean_inv,cos_angle\n"
       << n << "," << csv_quote(cycsort::to_string(p)) << "," << t.inv << ","
       << t.winv << "," << t.cwinv << "," << m << ","
       << (tailed ? "true" : "false") << "," << mean.to_string() << ","
       << (has_angle ? format_double(angle, 12) : std::string("nan")) << "\n";
  } else {
    os << "n: " << n << "\n"
       << "word: " << cycsort::to_string(p) << "\n"
       << "inv: " << t.inv << "\n"
       << "winv: " << t.winv << "\n"
       << "cwinv: " << t.cwinv << "\n"
       << "minv: " << m << "\n"
       << "heavy_tailed: " << (tailed ? "true" : "false") << "\n"
       << "coset_mean_inv: " << mean.to_string() << "\n"
       << "cos_angle: " << (has_angle ? format_double(angle, 12) : std::string("undefined"))
       << "\n";
  }
  return 0;
}

int cmd_dist(const std::string& c1, const std::string& c2, const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const cycsort::Cycle g1 = cycsort::Cycle::from_word(parse_word_or_cycle(c1));
  const cycsort::Cycle g2 = cycsort::Cycle::from_word(parse_word_or_cycle(c2));
  const cycsort::DistanceWitness w = cycsort::distance_witness(g1, g2);

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (cfg.format == "json") {
    json j{{"schema", kSchemaVersion},
           {"command", "dist"},
           {"n", g1.size()},
           {"distance", w.distance},
           {"witness", w.witness.word()},
           {"shifts", w.shifts}};
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "n,distance,witness,shifts\n"
       << g1.size() << "," << w.distance << ","
       << csv_quote(cycsort::to_string(w.witness)) << ","
       << csv_quote(join_ints(w.shifts)) << "\n";
  } else {
    os << "n: " << g1.size() << "\n"
       << "distance: " << w.distance << "\n"
       << "witness: " << cycsort::to_string(w.witness) << "\n"
       << "shifts: " << join_ints(w.shifts) << "\n";
  }
  return 0;
}

int cmd_pi0(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  const cycsort::KtSequence kt = cycsort::kt_sequence(cfg.n);
  const cycsort::Permutation p = cycsort::build_pi0(cfg.n);
  const std::int64_t ip = cycsort::inv_pi0(cfg.n);

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (cfg.format == "json") {
    json j{{"schema", kSchemaVersion}, {"command", "pi0"},   {"n", kt.n},
           {"m", kt.m},                {"kt", kt.values},    {"pi0", p.word()},
           {"inv_pi0", ip}};
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "n,m,kt,pi0,inv_pi0\n"
       << kt.n << "," << kt.m << "," << csv_quote(join_ints(kt.values)) << ","
       << csv_quote(join_ints(p.word())) << "," << ip << "\n";
  } else {
    os << "n: " << kt.n << "\n"
       << "m: " << kt.m << "\n"
       << "kt: " << join_ints(kt.values) << "\n"
       << "pi0: " << join_ints(p.word()) << "\n"
       << "inv_pi0: " << ip << "\n";
  }
  return 0;
}

int cmd_bounds(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  std::pair<int, int> r{cfg.n, cfg.n};
  if (!cfg.range.empty()) r = parse_range(cfg.range);
  if (r.first < 1) throw std::invalid_argument("bounds: need --n or --range with n >= 1");

  std::vector<cycsort::BoundsReport> rows;
  for (int n = r.first; n <= r.second; ++n) rows.push_back(cycsort::bounds(n));

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(cycsort::to_json(row));
    os << json{{"schema", kSchemaVersion}, {"command", "bounds"}, {"rows", arr}}.dump(2)
       << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "n,lower,inv_pi0,sort_upper,diam_upper,minv_w0\n";
    for (const auto& row : rows)
      os << row.n << "," << format_double(row.lower) << "," << row.inv_pi0 << ","
         << row.sort_upper.to_string() << "," << row.diam_upper.to_string() << ","
         << row.minv_w0 << "\n";
  } else {
    for (const auto& row : rows) {
      os << "n: " << row.n << "\n"
         << "lower: " << format_double(row.lower) << "\n"
         << "inv_pi0: " << row.inv_pi0 << "\n"
         << "sort_upper: " << row.sort_upper.to_string() << "\n"
         << "diam_upper: " << row.diam_upper.to_string() << "\n"
         << "minv_w0: " << row.minv_w0 << "\n";
      if (row.n != rows.back().n) os << "\n";
    }
  }
  return 0;
}

void check_bfs_budget(const RunConfig& cfg) {
  int soft_cap, hard_cap;
  std::uint64_t estimate;
  const std::uint64_t classes = cycsort::factorial(std::min(cfg.n - 1, 20));
  if (cfg.mode == "diameter") {
    soft_cap = 9;
    hard_cap = 10;
    // per worker: one distance array plus two uint32 frontiers
    estimate = classes * 9 * static_cast<std::uint64_t>(cfg.workers);
  } else if (cfg.mode == "distribution") {
    soft_cap = 11;
    hard_cap = 12;
    estimate = classes + 16;
  } else {
    soft_cap = 11;
    hard_cap = 14;
    estimate = classes + 16;
  }
  const int cap = cfg.allow_large ? hard_cap : soft_cap;
  if (cfg.n > cap) {
    std::string msg = "bfs: n=" + std::to_string(cfg.n) + " over the " +
                      (cfg.allow_large ? "hard" : "default") + " cap " +
                      std::to_string(cap) + " for mode " + cfg.mode +
                      " (estimated " + std::to_string(estimate) + " bytes)";
    if (!cfg.allow_large) msg += "; pass --allow-large to raise the cap to " +
                                 std::to_string(hard_cap);
    throw cycsort::resource_error(msg);
  }
  if (estimate > cfg.memory_cap)
    throw cycsort::resource_error(
        "bfs: estimated " + std::to_string(estimate) +
        " bytes exceeds the memory cap " + std::to_string(cfg.memory_cap) +
        "; raise --memory-cap");
}

int cmd_bfs(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  if (cfg.n < 1) throw std::invalid_argument("bfs: need --n >= 1");
  check_bfs_budget(cfg);
  const cycsort::GeneratorSet gens = generator_set(cfg, cfg.n);

  OutputTarget target("");  // results go to stdout; --out is the binary dump
  std::ostream& os = target.stream();

  if (cfg.mode == "diameter") {
    if (!cfg.out.empty())
      throw std::invalid_argument(
          "bfs: --out dumps a single-source field; diameter mode has none");
    const int d = cycsort::diameter_exact(cfg.n, gens, cfg.workers);
    if (cfg.format == "json") {
      os << json{{"schema", kSchemaVersion}, {"command", "bfs"},
                 {"mode", "diameter"},       {"n", cfg.n},
                 {"generators", cfg.generators}, {"value", d}}
                .dump(2)
         << "\n";
    } else if (cfg.format == "csv") {
      os << "# " << kSchemaVersion << "\n"
         << "n,mode,generators,value\n"
         << cfg.n << ",diameter," << cfg.generators << "," << d << "\n";
    } else {
      os << "n: " << cfg.n << "\n"
         << "generators: " << cfg.generators << "\n"
         << "diameter: " << d << "\n";
    }
    return 0;
  }

  const cycsort::DistanceField field =
      cycsort::bfs(cycsort::CosetIndex{0}, cfg.n, gens, cfg.workers);
  if (!cfg.out.empty()) {
    std::ofstream dump(cfg.out, std::ios::binary);
    if (!dump) throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
    field.dump(dump);
  }

  if (cfg.mode == "sort") {
    const int value = field.eccentricity();
    if (cfg.format == "json") {
      os << json{{"schema", kSchemaVersion}, {"command", "bfs"},
                 {"mode", "sort"},           {"n", cfg.n},
                 {"generators", cfg.generators}, {"value", value}}
                .dump(2)
         << "\n";
    } else if (cfg.format == "csv") {
      os << "# " << kSchemaVersion << "\n"
         << "n,mode,generators,value\n"
         << cfg.n << ",sort," << cfg.generators << "," << value << "\n";
    } else {
      os << "n: " << cfg.n << "\n"
         << "generators: " << cfg.generators << "\n"
         << "sort: " << value << "\n";
    }
    return 0;
  }

  // distribution
  cycsort::MinvHistogram h;
  h.n = cfg.n;
  h.counts.assign(static_cast<std::size_t>(field.eccentricity()) + 1, 0);
  for (std::uint8_t d : field.dist) ++h.counts[d];
  const bool unimodal = cycsort::is_unimodal(h);
  std::uint64_t classes = 0;
  for (std::uint64_t c : h.counts) classes += c;

  if (cfg.format == "json") {
    os << json{{"schema", kSchemaVersion}, {"command", "bfs"},
               {"mode", "distribution"},   {"n", cfg.n},
               {"generators", cfg.generators}, {"counts", h.counts},
               {"classes", classes},       {"unimodal", unimodal}}
              .dump(2)
       << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "d,count\n";
    for (std::size_t d = 0; d < h.counts.size(); ++d)
      os << d << "," << h.counts[d] << "\n";
    os << "# unimodal=" << (unimodal ? "true" : "false") << "\n";
  } else {
    os << "n: " << cfg.n << "\n"
       << "generators: " << cfg.generators << "\n"
       << "classes: " << classes << "\n"
       << "histogram:\n";
    for (std::size_t d = 0; d < h.counts.size(); ++d)
      os << "  " << d << " " << h.counts[d] << "\n";
    os << "unimodal: " << (unimodal ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "csv"});
  cycsort::SuiteOptions opts;
  if (!cfg.range.empty()) {
    const auto r = parse_range(cfg.range);
    opts.n_min = r.first;
    opts.n_max = r.second;
  }
  opts.seed = cfg.seed;
  opts.workers = cfg.workers;
  const cycsort::SuiteResult res = cycsort::run_suite(suite, opts);

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (cfg.format == "json") {
    json failures = json::array();
    for (const auto& f : res.failures)
      failures.push_back(json{{"input", f.input}, {"detail", f.detail}});
    os << json{{"schema", kSchemaVersion}, {"command", "verify"},
               {"suite", res.name},        {"n_min", res.n_min},
               {"n_max", res.n_max},       {"cases", res.cases},
               {"failure_count", res.failure_count}, {"failures", failures},
               {"seconds", res.seconds},   {"passed", res.passed()}}
              .dump(2)
       << "\n";
  } else if (cfg.format == "csv") {
    os << "# " << kSchemaVersion << "\n"
       << "suite,n_min,n_max,cases,failures,seconds,passed\n"
       << res.name << "," << res.n_min << "," << res.n_max << "," << res.cases
       << "," << res.failure_count << "," << format_double(res.seconds) << ","
       << (res.passed() ? "true" : "false") << "\n";
  } else {
    os << "suite: " << res.name << "\n"
       << "n: " << res.n_min << ".." << res.n_max << "\n"
       << "cases: " << res.cases << "\n"
       << "failures: " << res.failure_count << "\n";
    for (const auto& f : res.failures)
      os << "failure: " << f.input << " :: " << f.detail << "\n";
    if (res.failure_count > res.failures.size())
      os << "(+ " << res.failure_count - res.failures.size() << " more)\n";
    os << "time: " << format_double(res.seconds, 3) << "s\n"
       << "result: " << (res.passed() ? "PASS" : "FAIL") << "\n";
  }
  return res.passed() ? 0 : 1;
}

int cmd_export_graph(const RunConfig& cfg) {
  std::string format = cfg.format;
  if (format == "text") format = "dot";
  if (format != "dot" && format != "csv")
    throw std::invalid_argument("export-graph: format must be dot or csv");
  if (cfg.n < 1) throw std::invalid_argument("export-graph: need --n >= 1");

  const cycsort::GeneratorSet gens = generator_set(cfg, cfg.n);
  const auto edges = cycsort::schreier_edges(cfg.n, gens);
  const std::uint64_t nv = cycsort::factorial(cfg.n - 1);
  std::vector<std::string> labels;
  labels.reserve(nv);
  for (std::uint64_t i = 0; i < nv; ++i)
    labels.push_back(cycsort::to_string(cycsort::Cycle::from_word(
        cycsort::unrank(cycsort::CosetIndex{i}, cfg.n).perm())));

  OutputTarget target(cfg.out);
  std::ostream& os = target.stream();
  if (format == "dot") {
    os << "graph schreier_n" << cfg.n << "_" << cfg.generators << " {\n"
       << "  node [shape=ellipse];\n";
    for (std::uint64_t i = 0; i < nv; ++i)
      os << "  v" << i << " [label=\"" << labels[i] << "\"];\n";
    for (const auto& [a, b] : edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
  } else {
    os << "# " << kSchemaVersion << "\n"
       << "a,b,label_a,label_b\n";
    for (const auto& [a, b] : edges)
      os << a << "," << b << "," << csv_quote(labels[a]) << ","
         << csv_quote(labels[b]) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact sorting times, distances and diameters for cyclic "
               "permutations conjugated by adjacent switches"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string word, cycle1, cycle2, suite;

  const std::vector<std::string> formats{"text", "json", "csv", "dot"};
  auto add_common = [&](CLI::App* sub, bool with_out = true) {
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember(formats));
    if (with_out) sub->add_option("--out", cfg.out, "write output to this file");
  };

  CLI::App* stats = app.add_subcommand("stats", "statistics of one word");
  stats->add_option("word", word, "one-line word or cycle")->required();
  add_common(stats);

  CLI::App* dist = app.add_subcommand("dist", "distance between two cycles");
  dist->add_option("cycle1", cycle1, "first cycle")->required();
  dist->add_option("cycle2", cycle2, "second cycle")->required();
  add_common(dist);

  CLI::App* pi0 = app.add_subcommand("pi0", "extremal word construction");
  pi0->add_option("--n", cfg.n, "word size, n >= 2")->required();
  add_common(pi0);

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound table");
  bounds->add_option("--n", cfg.n, "single size");
  bounds->add_option("--range", cfg.range, "size range a..b");
  add_common(bounds);

  CLI::App* bfs = app.add_subcommand("bfs", "exact search over rotation classes");
  bfs->add_option("--n", cfg.n, "size")->required();
  bfs->add_option("--mode", cfg.mode, "sort | diameter | distribution")
      ->check(CLI::IsMember({"sort", "diameter", "distribution"}));
  bfs->add_option("--generators", cfg.generators, "adjacent | cyclic")
      ->check(CLI::IsMember({"adjacent", "cyclic"}));
  bfs->add_option("--workers", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  bfs->add_option("--memory-cap", cfg.memory_cap, "memory budget in bytes");
  bfs->add_flag("--allow-large", cfg.allow_large, "raise the default size caps");
  bfs->add_option("--out", cfg.out, "dump the distance field (binary) here");
  bfs->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember(formats));

  CLI::App* verify = app.add_subcommand("verify", "run one property suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--range", cfg.range, "override the suite's n range");
  verify->add_option("--seed", cfg.seed, "seed for randomized cases");
  verify->add_option("--workers", cfg.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  add_common(verify);

  CLI::App* export_graph =
      app.add_subcommand("export-graph", "explicit vertex/edge list, small n");
  export_graph->add_option("--n", cfg.n, "size, n <= 7")->required();
  export_graph->add_option("--generators", cfg.generators, "adjacent | cyclic")
      ->check(CLI::IsMember({"adjacent", "cyclic"}));
  add_common(export_graph);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (stats->parsed()) return cmd_stats(word, cfg);
    if (dist->parsed()) return cmd_dist(cycle1, cycle2, cfg);
    if (pi0->parsed()) return cmd_pi0(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (bfs->parsed()) return cmd_bfs(cfg);
    if (verify->parsed()) return cmd_verify(suite, cfg);
    if (export_graph->parsed()) return cmd_export_graph(cfg);
  } catch (const cycsort::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
