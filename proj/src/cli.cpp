#include "polyprod/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

#include "polyprod/complex.hpp"
#include "polyprod/decomp.hpp"
#include "polyprod/homology.hpp"
#include "polyprod/json_io.hpp"
#include "polyprod/series.hpp"
#include "polyprod/spacealg.hpp"

namespace polyprod::cli {

namespace {

namespace fs = std::filesystem;

class ParamError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string command;
  std::string mode;
  std::string family;
  std::vector<std::string> params;
  int degree = 16;
  int max_dim = 16;
  unsigned jobs = 1;
  std::string format = "json";
  std::string cache_dir;
  std::string out_path;
};

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size() && v >= INT32_MIN && v <= INT32_MAX) return static_cast<int>(v);
  } catch (const std::logic_error&) {
  }
  throw ParamError("parameter " + what + " is not an integer: '" + s + "'");
}

void arity(const Config& cfg, std::size_t n, const std::string& usage) {
  if (cfg.params.size() != n) throw ParamError("family '" + cfg.family + "' takes " + usage);
}

int param(const Config& cfg, std::size_t i, const char* name) { return to_int(cfg.params.at(i), name); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParamError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParamError("'" + path + "' is not valid JSON: " + e.what());
  }
}

SimplicialComplex build_family(const Config& cfg) {
  const std::string& f = cfg.family;
  if (f == "path") {
    arity(cfg, 1, "one parameter: l");
    return path_graph(param(cfg, 0, "l"));
  }
  if (f == "cycle") {
    arity(cfg, 1, "one parameter: l");
    return cycle_graph(param(cfg, 0, "l"));
  }
  if (f == "points") {
    arity(cfg, 1, "one parameter: n");
    return disjoint_points(param(cfg, 0, "n"));
  }
  if (f == "simplex") {
    arity(cfg, 1, "one parameter: dimension");
    return simplex(param(cfg, 0, "dimension"));
  }
  if (f == "book") {
    arity(cfg, 3, "three parameters: n l p");
    return book_graph(param(cfg, 0, "n"), param(cfg, 1, "l"), param(cfg, 2, "p"));
  }
  if (f == "planar-book") {
    arity(cfg, 2, "two parameters: l p");
    return planar_book(param(cfg, 0, "l"), param(cfg, 1, "p"));
  }
  if (f == "glue-spec-file") {
    arity(cfg, 1, "one parameter: a gluing JSON file");
    return glue(gluing_from_json(read_json_file(cfg.params[0])));
  }
  if (f == "file") {
    arity(cfg, 1, "one parameter: a complex JSON file");
    return complex_from_json(read_json_file(cfg.params[0]));
  }
  throw ParamError("unknown family '" + f + "'");
}

DecompResult decompose_family(const Config& cfg) {
  const std::string& f = cfg.family;
  if (f == "path") {
    arity(cfg, 1, "one parameter: l");
    return dj_path_decompose(param(cfg, 0, "l"), cfg.degree, cfg.max_dim);
  }
  if (f == "points") {
    arity(cfg, 1, "one parameter: n");
    return dj_points_decompose(param(cfg, 0, "n"), cfg.degree, cfg.max_dim);
  }
  if (f == "simplex") {
    arity(cfg, 1, "one parameter: dimension");
    return dj_simplex_decompose(param(cfg, 0, "dimension"), cfg.degree);
  }
  if (f == "planar-book") {
    arity(cfg, 2, "two parameters: l p");
    return dj_book_decompose(param(cfg, 0, "l"), param(cfg, 1, "p"), cfg.degree, cfg.max_dim);
  }
  if (f == "book") {
    arity(cfg, 3, "three parameters: n l p");
    const int n = param(cfg, 0, "n"), l = param(cfg, 1, "l"), p = param(cfg, 2, "p");
    DecompResult r = poly_fold_decompose(book_gluing(n, l, p), generic_x(), atom("G"));
    r.family = "B(n,l,p)";
    r.params = {{"n", n}, {"l", l}, {"p", p}};
    return r;
  }
  if (f == "glue-spec-file") {
    arity(cfg, 1, "one parameter: a gluing JSON file");
    return poly_fold_decompose(gluing_from_json(read_json_file(cfg.params[0])), generic_x(), atom("G"));
  }
  throw ParamError("no loop space decomposition is available for family '" + f + "'");
}

HochsterOptions hochster_options(const Config& cfg) {
  HochsterOptions opts;
  opts.workers = cfg.jobs;
  return opts;
}

// ------------------------------------------------------------------ cache

std::string fnv1a_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string temp_suffix() {
  std::random_device rd;
  std::ostringstream os;
  os << ".tmp." << std::hex << rd() << rd();
  return os.str();
}

void write_atomically(const fs::path& target, const std::string& content) {
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + temp_suffix();
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw ParamError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw ParamError("write to '" + tmp.string() + "' failed");
  }
  fs::rename(tmp, target);
}

Json cached(const Config& cfg, const std::string& key, const std::function<Json()>& compute) {
  if (cfg.cache_dir.empty()) return compute();
  const fs::path file = fs::path(cfg.cache_dir) / (fnv1a_hex(key) + ".json");
  if (fs::exists(file)) {
    try {
      Json entry = Json::parse(read_file(file.string()));
      if (entry.value("key", "") == key) return entry.at("value");
    } catch (const std::exception&) {
      // unreadable entry: recompute and replace
    }
  }
  Json value = compute();
  write_atomically(file, Json{{"key", key}, {"value", value}}.dump() + "\n");
  return value;
}

// --------------------------------------------------------------- commands

Json cmd_build(const Config& cfg) { return to_json(build_family(cfg)); }

Json cmd_decompose(const Config& cfg) {
  const DecompResult r = decompose_family(cfg);
  Json out = to_json(r);
  if (!r.spheres.empty() &&
      std::all_of(r.spheres.begin(), r.spheres.end(), [](const auto& kv) { return kv.second.empty(); }))
    out["trivial_fibre"] = true;
  if (r.fibre_summands > 0) out["fibre_summands"] = r.fibre_summands;
  return out;
}

Json cmd_hochster(const Config& cfg) {
  const SimplicialComplex K = build_family(cfg);
  return cached(cfg, "hochster|" + canonical_key(K),
                [&] { return to_json(hochster_zk_betti(K, hochster_options(cfg))); });
}

Json cmd_series(const Config& cfg) {
  const SimplicialComplex K = build_family(cfg);
  return cached(cfg, "series|" + std::to_string(cfg.degree) + "|" + canonical_key(K), [&] {
    Json out{{"hilbert", to_json(hilbert_sr(K, cfg.degree))}, {"hilbert_closed_form", hilbert_closed_form(K)}};
    const bool flag = is_flag(K);
    out["flag"] = flag;
    if (flag) {
      out["loop"] = to_json(koszul_loop_series(K, cfg.degree));
      out["loop_closed_form"] = koszul_closed_form(K);
    }
    return out;
  });
}

struct Check {
  Json report;
  int code = kOk;
};

Check verify_porter_hochster(const Config& cfg) {
  if (cfg.family != "path" && cfg.family != "points")
    throw ParamError("porter-hochster verification covers the path and points families");
  arity(cfg, 1, "one parameter");
  const int l = param(cfg, 0, "l");
  const SimplicialComplex K = build_family(cfg);
  if (l < 2) throw ParamError("porter-hochster verification needs at least 2 points");
  const SphereMultiset engine = sphere_multiset_of(path_fibre_reduce(l, true), cfg.max_dim);
  SphereMultiset oracle = zk_sphere_multiset(K, hochster_options(cfg));
  oracle.cap(cfg.max_dim);
  Check c;
  c.report = {{"mode", "porter-hochster"}, {"engine", to_json(engine)}, {"oracle", to_json(oracle)}};
  const int top = std::max(engine.counts.empty() ? 0 : engine.counts.rbegin()->first,
                           oracle.counts.empty() ? 0 : oracle.counts.rbegin()->first);
  for (int d = 0; d <= top; ++d) {
    if (engine[d] != oracle[d]) {
      c.report["status"] = "FAIL";
      c.report["first_discrepancy"] = {{"dimension", d}, {"expected", oracle[d]}, {"got", engine[d]}};
      c.code = kMismatch;
      return c;
    }
  }
  c.report["status"] = "PASS";
  return c;
}

Check verify_koszul(const Config& cfg) {
  const SimplicialComplex K = build_family(cfg);
  if (!is_flag(K)) throw OraclePreconditionError("not flag: the Koszul oracle needs a flag complex");
  const Series oracle = koszul_loop_series(K, cfg.degree);
  const DecompResult r = decompose_family(cfg);
  if (!r.series) throw ParamError("decomposition of family '" + cfg.family + "' has no computable series");
  Check c;
  c.report = {{"mode", "koszul"}, {"coefficients", cfg.degree + 1}};
  for (int d = 0; d <= cfg.degree; ++d) {
    if ((*r.series)[d] != oracle[d]) {
      c.report["status"] = "FAIL";
      c.report["first_discrepancy"] = {{"degree", d}, {"expected", oracle[d]}, {"got", (*r.series)[d]}};
      c.code = kMismatch;
      return c;
    }
  }
  c.report["status"] = "PASS";
  return c;
}

Check cmd_verify(const Config& cfg) {
  if (cfg.mode == "porter-hochster") return verify_porter_hochster(cfg);
  if (cfg.mode == "koszul") return verify_koszul(cfg);
  Check all;
  all.report = {{"mode", "all"}, {"checks", Json::array()}};
  std::vector<Check> parts;
  if (cfg.family == "path" || cfg.family == "points") parts.push_back(verify_porter_hochster(cfg));
  parts.push_back(verify_koszul(cfg));
  for (auto& p : parts) {
    all.report["checks"].push_back(p.report);
    if (all.code == kOk) all.code = p.code;
  }
  all.report["status"] = all.code == kOk ? "PASS" : "FAIL";
  return all;
}

// ----------------------------------------------------------------- output

void render_text(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (key == "term") continue;
    if (value.is_object()) {
      os << pad << key << ":\n";
      render_text(os, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        os << pad << "  -\n";
        render_text(os, item, indent + 4);
      }
    } else if (value.is_string()) {
      os << pad << key << ": " << value.get<std::string>() << '\n';
    } else {
      os << pad << key << ": " << value.dump() << '\n';
    }
  }
}

std::string render(const Config& cfg, const Json& j) {
  if (cfg.format == "text") {
    std::ostringstream os;
    render_text(os, j, 0);
    return os.str();
  }
  return j.dump(2) + "\n";
}

int dispatch(const Config& cfg, std::ostream& out) {
  Json result;
  int code = kOk;
  if (cfg.command == "build") {
    result = cmd_build(cfg);
  } else if (cfg.command == "decompose") {
    result = cmd_decompose(cfg);
  } else if (cfg.command == "hochster") {
    result = cmd_hochster(cfg);
  } else if (cfg.command == "series") {
    result = cmd_series(cfg);
  } else {
    Check c = cmd_verify(cfg);
    result = std::move(c.report);
    code = c.code;
  }
  const std::string text = render(cfg, result);
  if (cfg.out_path.empty()) out << text;
  else write_atomically(cfg.out_path, text);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"Loop space decompositions of polyhedral products over graph families", "polyprod"};
  app.require_subcommand(1, 1);
  app.add_option("--N", cfg.degree, "series truncation degree")->check(CLI::Range(1, 4096));
  app.add_option("--max-dim", cfg.max_dim, "sphere dimension ceiling")->check(CLI::Range(2, 4096));
  app.add_option("--jobs", cfg.jobs, "worker threads for subset enumeration")->check(CLI::Range(1u, 1024u));
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--cache-dir", cfg.cache_dir, "content-addressed result cache");
  app.add_option("--out", cfg.out_path, "write the result to this file instead of standard output");

  const std::string families = "path, cycle, points, simplex, book, planar-book, glue-spec-file, file";
  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  CLI::App* verify = add("verify", "compare a decomposition against an independent oracle");
  verify->add_option("mode", cfg.mode, "porter-hochster | koszul | all")
      ->required()
      ->check(CLI::IsMember({"porter-hochster", "koszul", "all"}));
  for (CLI::App* sub : {add("build", "emit a complex"), add("decompose", "loop space decomposition"),
                        add("hochster", "Betti numbers of the moment-angle complex"),
                        add("series", "Hilbert and loop homology series"), verify}) {
    sub->add_option("family", cfg.family, families)->required();
    sub->add_option("params", cfg.params, "family parameters");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out);
  } catch (const OraclePreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kOraclePrecondition;
  } catch (const HochsterError& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == HochsterError::Kind::TooLarge ? kHochsterCeiling : kInvalidParams;
  } catch (const ReductionError& e) {
    err << "error: " << e.what() << '\n';
    return kReductionFailed;
  } catch (const SeriesError& e) {
    err << "error: " << e.what() << '\n';
    return kReductionFailed;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kReductionFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParams;
  }
}

}  // namespace polyprod::cli
