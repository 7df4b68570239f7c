// z4kit command-line front end. JSON reports go to stdout (or --out); timing
// goes to stderr so reports stay byte-identical across runs and worker counts.
#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "z4kit/codes_db.hpp"
#include "z4kit/designs.hpp"
#include "z4kit/doubling.hpp"
#include "z4kit/error.hpp"
#include "z4kit/extremal.hpp"
#include "z4kit/filter.hpp"
#include "z4kit/gf2.hpp"
#include "z4kit/report_json.hpp"
#include "z4kit/workers.hpp"

using namespace z4kit;

namespace {

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2 };

struct Options {
  std::string code;
  std::string set;
  std::string which = "residue";
  std::string weight = "min";
  std::string sizes;
  std::string dist;
  std::string sink;
  std::string out;
  std::string format = "json";
  std::string name;
  std::vector<std::string> inject;
  std::uint64_t seed = 0;
  std::uint64_t attempts = 1000;
  unsigned workers = 0;
  int max_dimension = 16;
  bool generalized = false;
  bool count_only = false;
  bool no_prefilter = false;
};

Runner runner_for(const Options& o) {
  const unsigned w = o.workers ? o.workers : default_worker_count();
  return thread_runner(w);
}

// "builtin:<name>", a file path, or a bare builtin name when no such file exists.
Z4Code resolve_code(const std::string& where) {
  if (where.empty()) throw PreconditionError("--code is required");
  if (where.rfind("builtin:", 0) != 0 && !std::filesystem::exists(where)) {
    for (const auto& n : builtin_names()) {
      if (n == where) return builtin_code(n).code;
    }
  }
  return load_code(where);
}

FilterParams params_for(const Z4Code& c, bool generalized) {
  const int n = c.length();
  if (!generalized && (n == 48 || n == 56 || n == 64)) return FilterParams::production(n);
  return FilterParams::generalized(n);
}

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Options& o, const Json& j) {
  std::ostringstream s;
  if (o.format == "text") {
    flatten(j, "", s);
  } else {
    s << j.dump() << "\n";
  }
  if (o.out.empty()) {
    std::cout << s.str();
  } else {
    std::ofstream f(o.out);
    if (!f) throw PreconditionError("cannot write " + o.out);
    f << s.str();
  }
}

void emit_text(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw PreconditionError("cannot write " + o.out);
    f << text;
  }
}

BinaryCode which_code(const Z4Code& c, const std::string& which) {
  if (which == "residue") return residue_code(c);
  if (which == "torsion") return torsion_code(c);
  throw PreconditionError("--which must be residue or torsion, got " + which);
}

Json binary_code_json(const BinaryCode& b) {
  Json j;
  j["n"] = b.length();
  j["k"] = b.dimension();
  Json rows = Json::array();
  for (Word r : b.generators()) {
    std::string s(b.length(), '0');
    for (int i = 0; i < b.length(); ++i) {
      if ((r >> i) & 1) s[i] = '1';
    }
    rows.push_back(s);
  }
  j["rows"] = rows;
  return j;
}

ExtremalityReport extremality(const Z4Code& c, bool generalized, const Runner& runner) {
  const int n = c.length();
  if (!generalized && (n == 48 || n == 56 || n == 64)) return verify_extremal(c, runner);
  return verify_extremal_generalized(c, runner);
}

int cmd_info(const Options& o) {
  const auto c = resolve_code(o.code);
  Json j = code_summary(c);
  j["log2_size"] = c.log2_size();
  j["residue_dimension"] = residue_code(c).dimension();
  j["torsion_dimension"] = torsion_code(c).dimension();
  j["leading_identity"] = has_leading_identity(c);
  emit(o, j);
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto c = resolve_code(o.code);
  Json j = code_summary(c);
  bool ok = j["self_dual"].get<bool>() && j["type_ii"].get<bool>();
  if (j["type_ii"].get<bool>()) {
    const auto r = extremality(c, o.generalized, runner_for(o));
    j["extremality"] = to_json(r);
    j["extremal"] = r.extremal;
    ok = ok && r.extremal;
  } else {
    j["extremal"] = nullptr;
  }
  emit(o, j);
  return ok ? kOk : kNegative;
}

int cmd_wdist(const Options& o) {
  const auto c = resolve_code(o.code);
  const auto b = which_code(c, o.which);
  const auto w = weight_distribution(b, std::nullopt, runner_for(o)).distribution;
  emit(o, Json::parse(weight_distribution_json(w, b.dimension())));
  return kOk;
}

int cmd_macwilliams(const Options& o) {
  WeightDistribution w;
  int k = 0;
  if (!o.dist.empty()) {
    std::ifstream in(o.dist);
    if (!in) throw PreconditionError("cannot open " + o.dist);
    std::stringstream s;
    s << in.rdbuf();
    std::tie(w, k) = parse_weight_distribution_json(s.str());
  } else {
    const auto b = which_code(resolve_code(o.code), o.which);
    w = weight_distribution(b, std::nullopt, runner_for(o)).distribution;
    k = b.dimension();
  }
  const auto dual = macwilliams_transform(w, k);
  emit(o, Json::parse(weight_distribution_json(dual, w.n - k)));
  return kOk;
}

int cmd_binary(const Options& o, const std::string& which) {
  const auto b = which_code(resolve_code(o.code), which);
  if (o.format == "text") {
    emit_text(o, format_gf2mat(b.matrix()));
  } else {
    emit(o, binary_code_json(b));
  }
  return kOk;
}

int cmd_double(const Options& o) {
  const auto c = resolve_code(o.code);
  const Word u = parse_positions(o.set, c.length());
  const auto d = double_code(c, u);
  if (o.format == "text") {
    emit_text(o, format_z4code(d, "doubled at " + format_positions(u)));
  } else {
    Json j = code_summary(d);
    j["two_u_support"] = format_positions(u);
    Json rows = Json::array();
    for (const auto& g : d.generators()) rows.push_back(g.digits());
    j["generators"] = rows;
    emit(o, j);
  }
  return kOk;
}

int cmd_filter_check(const Options& o) {
  const auto c = resolve_code(o.code);
  const CandidateFilter f(c, params_for(c, o.generalized), runner_for(o));
  const Word b = parse_positions(o.set, c.length());
  const auto v = f.check(b);
  Json j = to_json(v);
  j["set"] = format_positions(b);
  emit(o, j);
  return v.suitable ? kOk : kNegative;
}

std::pair<int, int> parse_sizes(const std::string& s) {
  const auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("--sizes expects <min>:<max>, got " + s);
  }
}

int cmd_filter_search(const Options& o) {
  const auto c = resolve_code(o.code);
  const auto runner = runner_for(o);
  const CandidateFilter f(c, params_for(c, o.generalized), runner);
  SearchOptions s;
  s.seed = o.seed;
  s.attempts = o.attempts;
  s.prefilter = !o.no_prefilter;
  if (!o.sizes.empty()) {
    std::tie(s.min_size, s.max_size) = parse_sizes(o.sizes);
  } else {
    s.min_size = f.params().min_size();
    s.max_size = weight(f.tail_mask());
    s.max_size -= s.max_size % 2;
  }
  for (const auto& i : o.inject) s.injected.push_back(parse_positions(i, c.length()));
  const auto r = random_candidate_search(f, s, runner);
  Json j = to_json(r);
  j["seed"] = o.seed;
  j["sizes"] = std::to_string(s.min_size) + ":" + std::to_string(s.max_size);
  emit(o, j);
  return r.suitable.empty() ? kNegative : kOk;
}

int cmd_filter_algb(const Options& o) {
  if (o.sink.empty() == !o.count_only) throw PreconditionError("give exactly one of --sink <path> and --count-only");
  const auto c = resolve_code(o.code);
  const CandidateFilter f(c, params_for(c, o.generalized), runner_for(o));
  AlgBOptions opt;
  opt.max_dimension = o.max_dimension;
  CountingSink counts;
  std::size_t admissible = 0;
  if (o.count_only) {
    algorithm_b(f, [&](Word b, AlgBStep s) {
      counts(b, s);
      admissible += f.admissible(b);
    }, opt);
  } else {
    std::ofstream sink(o.sink);
    if (!sink) throw PreconditionError("cannot write " + o.sink);
    algorithm_b(f, [&](Word b, AlgBStep s) {
      counts(b, s);
      admissible += f.admissible(b);
      sink << step_label(s) << '\t' << format_positions(b) << '\n';
    }, opt);
  }
  Json j = to_json(counts.counts());
  j["admissible_emissions"] = admissible;
  emit(o, j);
  return kOk;
}

int cmd_extremal_verify(const Options& o) {
  const auto c = resolve_code(o.code);
  const auto r = extremality(c, o.generalized, runner_for(o));
  emit(o, to_json(r));
  return r.extremal ? kOk : kNegative;
}

int cmd_extremal_brute(const Options& o) {
  const auto c = resolve_code(o.code);
  const auto d = min_euclidean_weight_bruteforce(c);
  Json j;
  j["n"] = c.length();
  j["min_euclidean_weight"] = d ? Json(*d) : Json(nullptr);
  j["bound"] = extremal_bound(c.length());
  const bool extremal = is_type_ii(c) && d && *d >= extremal_bound(c.length());
  j["extremal"] = extremal;
  if (c.length() <= kMaxLatticeLength) {
    if (auto s = lattice_stats_bruteforce(c)) j["lattice"] = to_json(*s);
  }
  emit(o, j);
  return extremal ? kOk : kNegative;
}

int cmd_designs(const Options& o) {
  const auto c = resolve_code(o.code);
  const auto b = which_code(c, o.which);
  const auto runner = runner_for(o);
  int w = 0;
  if (o.weight == "min") {
    w = min_weight(b, runner);
  } else {
    try {
      w = std::stoi(o.weight);
    } catch (const std::exception&) {
      throw PreconditionError("--weight must be min or an integer, got " + o.weight);
    }
  }
  auto d = analyze_design(supports_of_weight(b, w, runner), c.length(), runner);
  Json j = to_json(d);
  j["weight"] = w;
  emit(o, j);
  return kOk;
}

int cmd_builtin_list(const Options& o) {
  Json j = Json::array();
  for (const auto& n : builtin_names()) {
    const auto c = builtin_code(n);
    Json e;
    e["name"] = c.name;
    e["source"] = c.source;
    e["description"] = c.description;
    e["n"] = c.code.length();
    e["k1"] = c.code.k1();
    e["k2"] = c.code.k2();
    if (c.two_u_support) e["two_u_support"] = format_positions(*c.two_u_support);
    j.push_back(e);
  }
  if (o.format == "text") {
    std::string text;
    for (const auto& e : j) text += e["name"].get<std::string>() + "\t" + e["description"].get<std::string>() + "\n";
    emit_text(o, text);
  } else {
    emit(o, j);
  }
  return kOk;
}

int cmd_builtin_export(const Options& o) {
  emit_text(o, std::string(builtin_text(o.name)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type II Z4-code toolkit: verification, doubling and candidate filtering"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* cmd, bool needs_code = true) {
    if (needs_code) cmd->add_option("--code", o.code, "builtin:<name>, a Z4CODE file, or a builtin name")->required();
    cmd->add_option("--workers", o.workers, "worker threads (default: Z4KIT_WORKERS or 1)");
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto with_which = [&](CLI::App* cmd) {
    cmd->add_option("--which", o.which, "residue or torsion")->check(CLI::IsMember({"residue", "torsion"}));
  };

  std::function<int()> run;
  auto bind = [&](CLI::App* cmd, std::function<int()> f) { cmd->callback([&run, f] { run = f; }); };

  auto* info = app.add_subcommand("info", "type, self-duality and Type II status");
  common(info);
  bind(info, [&] { return cmd_info(o); });

  auto* verify = app.add_subcommand("verify", "self-dual, Type II and extremal");
  common(verify);
  verify->add_flag("--generalized", o.generalized, "use the generalized bound even at n = 48, 56, 64");
  bind(verify, [&] { return cmd_verify(o); });

  auto* wdist = app.add_subcommand("wdist", "weight distribution of the residue or torsion code");
  common(wdist);
  with_which(wdist);
  bind(wdist, [&] { return cmd_wdist(o); });

  auto* mw = app.add_subcommand("macwilliams", "dual weight distribution");
  common(mw, false);
  mw->add_option("--code", o.code, "code whose residue or torsion distribution is transformed");
  mw->add_option("--dist", o.dist, "weight distribution JSON file");
  with_which(mw);
  bind(mw, [&] {
    if (o.dist.empty() == o.code.empty()) throw PreconditionError("give exactly one of --code and --dist");
    return cmd_macwilliams(o);
  });

  auto* residue = app.add_subcommand("residue", "generator matrix of the residue code");
  common(residue);
  bind(residue, [&] { return cmd_binary(o, "residue"); });

  auto* torsion = app.add_subcommand("torsion", "generator matrix of the torsion code");
  common(torsion);
  bind(torsion, [&] { return cmd_binary(o, "torsion"); });

  auto* dbl = app.add_subcommand("double", "doubled code for a 2-support");
  common(dbl);
  dbl->add_option("--set", o.set, "support of u, 1-based, e.g. 33-61,63")->required();
  bind(dbl, [&] { return cmd_double(o); });

  auto* filter = app.add_subcommand("filter", "candidate filtering for the doubling method");
  filter->require_subcommand(1);
  auto* check = filter->add_subcommand("check", "verdict for one candidate");
  common(check);
  check->add_option("--set", o.set, "candidate support")->required();
  check->add_flag("--generalized", o.generalized, "use the generalized bound");
  bind(check, [&] { return cmd_filter_check(o); });

  auto* search = filter->add_subcommand("search", "seeded random candidate search");
  common(search);
  search->add_option("--seed", o.seed, "random seed");
  search->add_option("--attempts", o.attempts, "number of random draws");
  search->add_option("--sizes", o.sizes, "even candidate sizes <min>:<max>");
  search->add_option("--inject", o.inject, "candidate supports checked before the random draws");
  search->add_flag("--no-prefilter", o.no_prefilter, "skip the even-codeword prefilter");
  search->add_flag("--generalized", o.generalized, "use the generalized bound");
  bind(search, [&] { return cmd_filter_search(o); });

  auto* algb = filter->add_subcommand("algb", "enumerate the excluded candidates");
  common(algb);
  algb->add_option("--sink", o.sink, "write '<step>\\t<set>' lines here");
  algb->add_flag("--count-only", o.count_only, "report counts only");
  algb->add_option("--max-dimension", o.max_dimension, "refuse bases with k above this");
  algb->add_flag("--generalized", o.generalized, "use the generalized bound");
  bind(algb, [&] { return cmd_filter_algb(o); });

  auto* extremal = app.add_subcommand("extremal", "extremality checks");
  extremal->require_subcommand(1);
  auto* ev = extremal->add_subcommand("verify", "lift-based extremality verification");
  common(ev);
  ev->add_flag("--generalized", o.generalized, "use the generalized bound");
  bind(ev, [&] { return cmd_extremal_verify(o); });
  auto* eb = extremal->add_subcommand("brute", "full enumeration, small codes only");
  common(eb);
  bind(eb, [&] { return cmd_extremal_brute(o); });

  auto* designs = app.add_subcommand("designs", "designs held by codeword supports");
  designs->require_subcommand(1);
  auto* fc = designs->add_subcommand("from-code", "supports of one weight as a design");
  common(fc);
  with_which(fc);
  fc->add_option("--weight", o.weight, "min or a weight");
  bind(fc, [&] { return cmd_designs(o); });

  auto* builtin = app.add_subcommand("builtin", "embedded codes");
  builtin->require_subcommand(1);
  auto* list = builtin->add_subcommand("list", "names and descriptions");
  common(list, false);
  bind(list, [&] { return cmd_builtin_list(o); });
  auto* exp = builtin->add_subcommand("export", "print an embedded Z4CODE file");
  common(exp, false);
  exp->add_option("name", o.name, "builtin name")->required();
  bind(exp, [&] { return cmd_builtin_export(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = kUsage;
  try {
    code = run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << o.code << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::fprintf(stderr, "elapsed %.3f s\n", dt);
  return code;
}
