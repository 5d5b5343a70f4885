#include "dynwg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dynwg/dynweyl.hpp"
#include "dynwg/geomsatake.hpp"

namespace dynwg {

const std::vector<std::string> kSuiteNames = {"satake-rank1", "cocycle", "levi", "rep"};

bool SuiteReport::all_pass() const {
  return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

json SuiteReport::to_json() const {
  json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["passed"] = std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
  j["total"] = cases.size();
  j["ok"] = all_pass();
  json cs = json::array();
  for (const auto& c : cases) cs.push_back({{"key", c.key}, {"pass", c.pass}, {"detail", c.detail}});
  j["cases"] = cs;
  return j;
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  int passed = 0;
  for (const auto& c : cases) {
    os << (c.pass ? "PASS " : "FAIL ") << c.key;
    if (!c.pass && c.detail.contains("error")) os << ": " << c.detail["error"].get<std::string>();
    os << "\n";
    passed += c.pass;
  }
  os << suite << ": " << passed << "/" << cases.size() << " passed (seed " << seed << ")\n";
  return os.str();
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, std::max(n, 1));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int k; (k = next++) < n;) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t case_seed(std::uint64_t seed, const std::string& key) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;  // FNV-1a
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

std::string weight_key(const Weight& w) { return "(" + w.str() + ")"; }

std::vector<Weight> dominant_weights_of(const Irrep& v) {
  std::vector<Weight> out;
  for (const auto& s : v.spaces())
    if (is_dominant(s.weight)) out.push_back(s.weight);
  std::sort(out.begin(), out.end());
  return out;
}

void finish(SuiteReport& r) {
  std::sort(r.cases.begin(), r.cases.end(), [](const CaseResult& a, const CaseResult& b) { return a.key < b.key; });
}

SuiteReport run_rank1(const VerifyConfig& cfg) {
  SuiteReport r{"satake-rank1", cfg.seed, {}};
  std::vector<std::pair<int, int>> grid;
  for (int l = 0; l <= cfg.lambda_max; ++l)
    for (int m = l % 2; m <= l; m += 2) grid.emplace_back(l, m);
  r.cases.resize(grid.size());
  parallel_for(static_cast<int>(grid.size()), cfg.jobs, [&](int k) {
    const auto [l, m] = grid[k];
    CaseResult& c = r.cases[k];
    c.key = "lambda=" + std::to_string(l) + ",mu=" + std::to_string(m);
    const Rank1Report rep = verify_main_theorem_rank1(l, m);
    std::mt19937_64 rng(case_seed(cfg.seed, c.key));
    const bool by_eval = equal_by_evaluation(rep.geometric, rep.dynamical_shifted, 1, rng);
    c.detail = rank1_report_to_json(rep);
    c.detail["equal_by_evaluation"] = by_eval;
    c.pass = rep.equal && by_eval;
  });
  finish(r);
  return r;
}

SuiteReport run_cocycle(const VerifyConfig& cfg, IrrepCache& cache) {
  if (!cfg.hw) throw InvalidArgument("the cocycle suite needs a highest weight");
  SuiteReport r{"cocycle", cfg.seed, {}};
  auto v = cache.get(cfg.algebra, *cfg.hw, cfg.dim_cap);
  const RootSystem& rs = v->roots();
  const WeylWord w = cfg.word ? *cfg.word : rs.longest_element();
  const auto words = rs.all_reduced_words(w, cfg.word_cap);
  const auto mus = dominant_weights_of(*v);

  // One task per (mu, word); comparison happens after all blocks are built.
  std::vector<std::vector<OperatorBlock>> blocks(mus.size(), std::vector<OperatorBlock>(words.size()));
  parallel_for(static_cast<int>(mus.size() * words.size()), cfg.jobs, [&](int k) {
    const std::size_t a = static_cast<std::size_t>(k) / words.size(), b = static_cast<std::size_t>(k) % words.size();
    blocks[a][b] = word_operator_block(*v, words[b], mus[a]);
  });
  for (std::size_t a = 0; a < mus.size(); ++a) {
    CaseResult c;
    c.key = "mu=" + weight_key(mus[a]);
    std::vector<std::string> bad;
    const Weight expected_target = rs.act(w, mus[a]);
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (blocks[a][b].target != expected_target) bad.push_back("[" + words[b].str() + "] wrong target");
      if (!blocks[a][b].same_operator(blocks[a][0]))
        bad.push_back("[" + words[b].str() + "] differs from [" + words[0].str() + "]");
    }
    std::mt19937_64 rng(case_seed(cfg.seed, c.key));
    try {
      classical_limit(blocks[a][0], rng);
    } catch (const Error& e) {
      bad.push_back(std::string("classical limit: ") + e.what());
    }
    c.pass = bad.empty();
    c.detail = {{"algebra", cfg.algebra.name()},
                {"hw", weight_to_json(*cfg.hw)},
                {"element", w.letters},
                {"words", words.size()},
                {"block", block_to_json(blocks[a][0])}};
    if (!bad.empty()) {
      c.detail["failures"] = bad;
      c.detail["error"] = bad.front();
    }
    r.cases.push_back(std::move(c));
  }
  finish(r);
  return r;
}

SuiteReport run_levi(const VerifyConfig& cfg, IrrepCache& cache) {
  if (!cfg.hw) throw InvalidArgument("the levi suite needs a highest weight");
  SuiteReport r{"levi", cfg.seed, {}};
  auto v = cache.get(cfg.algebra, *cfg.hw, cfg.dim_cap);
  std::vector<std::pair<int, Weight>> grid;
  for (const auto& mu : dominant_weights_of(*v))
    for (int i = 1; i <= v->rank(); ++i) grid.emplace_back(i, mu);
  r.cases.resize(grid.size());
  parallel_for(static_cast<int>(grid.size()), cfg.jobs, [&](int k) {
    const auto& [i, mu] = grid[k];
    CaseResult& c = r.cases[k];
    c.key = "i=" + std::to_string(i) + ",mu=" + weight_key(mu);
    const LeviReport rep = levi_restriction_check(*v, i, mu);
    c.pass = rep.equal;
    c.detail = levi_report_to_json(rep);
    if (!c.pass) c.detail["error"] = "geometric and shifted dynamical blocks differ";
  });
  finish(r);
  return r;
}

SuiteReport run_rep(const VerifyConfig& cfg, IrrepCache& cache) {
  SuiteReport r{"rep", cfg.seed, {}};
  std::vector<Weight> hws;
  if (cfg.hw) hws.push_back(*cfg.hw);
  else hws = dominant_weights_up_to_dim(cfg.algebra, cfg.dim_cap);
  r.cases.resize(hws.size());
  parallel_for(static_cast<int>(hws.size()), cfg.jobs, [&](int k) {
    CaseResult& c = r.cases[k];
    c.key = "hw=" + weight_key(hws[k]);
    auto v = cache.get(cfg.algebra, hws[k], cfg.dim_cap);
    std::vector<std::string> bad;
    const long wd = weyl_dimension(cfg.algebra, hws[k]);
    if (v->dim() != wd) bad.push_back("dimension " + std::to_string(v->dim()) + " != " + std::to_string(wd));
    const auto ch = freudenthal_character(cfg.algebra, hws[k]);
    if (ch.size() != v->spaces().size()) bad.push_back("weight count differs from the Freudenthal character");
    for (const auto& [mu, m] : ch)
      if (v->multiplicity(mu) != m) bad.push_back("multiplicity of (" + mu.str() + ") differs");
    for (auto& f : check_chevalley_serre(*v)) bad.push_back(std::move(f));
    c.pass = bad.empty();
    c.detail = {{"algebra", cfg.algebra.name()}, {"dim", v->dim()}, {"weyl_dimension", wd}};
    if (!bad.empty()) {
      c.detail["failures"] = bad;
      c.detail["error"] = bad.front();
    }
  });
  finish(r);
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
  IrrepCache local;
  IrrepCache& cache = cfg.cache ? *cfg.cache : local;
  if (suite == "satake-rank1") return run_rank1(cfg);
  if (suite == "cocycle") return run_cocycle(cfg, cache);
  if (suite == "levi") return run_levi(cfg, cache);
  if (suite == "rep") return run_rep(cfg, cache);
  throw InvalidArgument("unknown suite '" + suite + "'");
}

}  // namespace dynwg
