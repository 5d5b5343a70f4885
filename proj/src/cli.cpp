#include "dynwg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "dynwg/dynweyl.hpp"
#include "dynwg/json_io.hpp"
#include "dynwg/verify.hpp"

namespace dynwg {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string algebra = "A1";
  std::string hw;
  std::vector<std::string> hws;  // cache warm
  std::string mu;
  std::string word;
  bool word_given = false;
  int lambda_max = 8;
  long dim_cap = kDefaultDimCap;
  int word_cap = 32;
  std::string format = "text";
  std::string cache_dir;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string suite;
  std::string action;
  std::string output;
};

// Explicit flag first, then DYNWG_CACHE, then the per-user cache directory.
// DYNWG_CACHE overrides everything, including --cache-dir.
fs::path resolve_cache_dir(const Options& o) {
  if (const char* env = std::getenv("DYNWG_CACHE"); env && *env) return env;
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "dynwg";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "dynwg";
  return fs::temp_directory_path() / "dynwg-cache";
}

void add_algebra(CLI::App* c, Options& o) {
  c->add_option("--algebra", o.algebra, "Cartan type, e.g. A2, B2, G2")->capture_default_str();
}
void add_common(CLI::App* c, Options& o) {
  c->add_option("--dim-cap", o.dim_cap, "Largest irrep dimension to build")->capture_default_str()->check(
      CLI::PositiveNumber);
  c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  c->add_option("--cache-dir", o.cache_dir, "Irrep cache directory (DYNWG_CACHE takes precedence; default ~/.cache/dynwg)");
}

void emit(std::ostream& out, const Options& o, const json& j, const std::string& text) {
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << text;
}

int cmd_op(const Options& o, std::ostream& out) {
  const LieType t = LieType::parse(o.algebra);
  IrrepCache cache(resolve_cache_dir(o));
  auto v = cache.get(t, Weight::parse(o.hw), o.dim_cap);
  const Weight mu = Weight::parse(o.mu);
  if (mu.rank() != t.rank) throw InvalidArgument("mu has rank " + std::to_string(mu.rank()) + ", expected " +
                                                 std::to_string(t.rank));
  const OperatorBlock b = word_operator_block(*v, WeylWord::parse(o.word), mu);
  const json j = block_to_json(b);
  if (!o.output.empty()) {
    std::ofstream f(o.output);
    if (!f) throw Error("cannot write " + o.output);
    f << j.dump(2) << "\n";
  }
  emit(out, o, j, b.render());
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyConfig cfg;
  cfg.algebra = LieType::parse(o.algebra);
  if (!o.hw.empty()) cfg.hw = Weight::parse(o.hw);
  if (o.word_given) cfg.word = WeylWord::parse(o.word);
  cfg.lambda_max = o.lambda_max;
  cfg.dim_cap = o.dim_cap;
  cfg.word_cap = o.word_cap;
  cfg.seed = o.seed;
  cfg.jobs = o.jobs;
  IrrepCache cache(resolve_cache_dir(o));
  cfg.cache = &cache;
  const SuiteReport r = run_suite(o.suite, cfg);
  emit(out, o, r.to_json(), r.to_text());
  return r.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_cache(const Options& o, std::ostream& out) {
  const fs::path dir = resolve_cache_dir(o);
  IrrepCache cache(dir);
  json j = {{"action", o.action}, {"cache_dir", dir.string()}};
  std::string text;
  if (o.action == "list") {
    const auto keys = cache.list();
    j["entries"] = keys;
    for (const auto& k : keys) text += k + "\n";
  } else if (o.action == "clear") {
    const int n = cache.clear();
    j["removed"] = n;
    text = "removed " + std::to_string(n) + " entries from " + dir.string() + "\n";
  } else {
    if (o.hws.empty()) throw InvalidArgument("cache warm needs at least one --hw");
    const LieType t = LieType::parse(o.algebra);
    json built = json::array();
    for (const auto& h : o.hws) {
      auto v = cache.get(t, Weight::parse(h), o.dim_cap);
      built.push_back(IrrepCache::key(t, v->highest_weight()));
      text += IrrepCache::key(t, v->highest_weight()) + " dim " + std::to_string(v->dim()) + "\n";
    }
    j["entries"] = built;
  }
  emit(out, o, j, text);
  return kExitOk;
}

int cmd_rep_info(const Options& o, std::ostream& out) {
  const LieType t = LieType::parse(o.algebra);
  IrrepCache cache(resolve_cache_dir(o));
  auto v = cache.get(t, Weight::parse(o.hw), o.dim_cap);
  json ws = json::array();
  std::string text = "V(" + v->highest_weight().str() + ") of " + t.name() + ", dimension " + std::to_string(v->dim()) +
                     "\n";
  for (const auto& s : v->spaces()) {
    const auto labels = v->labels(s.weight);
    ws.push_back({{"weight", weight_to_json(s.weight)}, {"multiplicity", s.dim}, {"basis_labels", labels}});
    text += "  (" + s.weight.str() + ") x" + std::to_string(s.dim) + ":";
    for (const auto& l : labels) text += "  " + l;
    text += "\n";
  }
  const json j = {{"algebra", t.name()}, {"hw", weight_to_json(v->highest_weight())}, {"dim", v->dim()}, {"weights", ws}};
  emit(out, o, j, text);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dynamical Weyl group operators and rank-1 geometric Satake checks"};
  app.require_subcommand(1);

  auto* op = app.add_subcommand("op", "Compute the operator block of a reduced word on a dominant weight space");
  add_algebra(op, o);
  op->add_option("--hw", o.hw, "Highest weight, e.g. 1,1")->required();
  op->add_option("--mu", o.mu, "Dominant source weight")->required();
  op->add_option("--word", o.word, "Reduced word, rightmost letter acts first; \"\" for the identity")->required();
  op->add_option("--output", o.output, "Also write the JSON block to this file");
  add_common(op, o);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(kSuiteNames));
  add_algebra(verify, o);
  verify->add_option("--hw", o.hw, "Highest weight (cocycle and levi; rep defaults to all up to --dim-cap)");
  verify->add_option("--word", o.word, "Weyl element for the cocycle suite (default: longest element)");
  verify->add_option("--lambda-max", o.lambda_max, "Largest lambda for satake-rank1")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--word-cap", o.word_cap, "Maximum number of reduced words")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed, "Seed for randomized evaluation points")->capture_default_str();
  verify->add_option("--jobs", o.jobs, "Worker threads (0: all processors)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  add_common(verify, o);

  auto* cache = app.add_subcommand("cache", "Manage the irrep cache");
  cache->add_option("action", o.action, "list, clear or warm")->required()->check(
      CLI::IsMember({"list", "clear", "warm"}));
  add_algebra(cache, o);
  cache->add_option("--hw", o.hws, "Highest weight to build (repeatable)");
  add_common(cache, o);

  auto* info = app.add_subcommand("rep-info", "Describe an irreducible representation");
  add_algebra(info, o);
  info->add_option("--hw", o.hw, "Highest weight")->required();
  add_common(info, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.word_given = verify->count("--word") > 0;

  try {
    if (op->parsed()) return cmd_op(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (cache->parsed()) return cmd_cache(o, out);
    return cmd_rep_info(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace dynwg
