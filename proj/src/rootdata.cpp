#include "dynwg/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dynwg/linalg.hpp"

namespace dynwg {

namespace {

std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidArgument("malformed " + std::string(what) + " '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

void link(CartanMatrix& a, int i, int j) {
  a[i][j] = -1;
  a[j][i] = -1;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
  LieType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto rest = text.substr(1);
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t.rank);
  if (ec != std::errc() || ptr != rest.data() + rest.size())
    throw InvalidArgument("malformed Lie type '" + std::string(text) + "'");
  validate(t);
  return t;
}

std::string LieType::name() const { return std::string(1, series) + std::to_string(rank); }

void validate(const LieType& t) {
  bool ok = false;
  switch (t.series) {
    case 'A': ok = t.rank >= 1; break;
    case 'B': ok = t.rank >= 2; break;
    case 'C': ok = t.rank >= 2; break;
    case 'D': ok = t.rank >= 3; break;
    case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
    case 'F': ok = t.rank == 4; break;
    case 'G': ok = t.rank == 2; break;
    default: break;
  }
  if (!ok) throw InvalidArgument("invalid Lie type " + t.name());
}

CartanMatrix cartan_matrix(const LieType& t) {
  validate(t);
  const int n = t.rank;
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E': {
      const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto& e : edges)
        if (e[0] < n && e[1] < n) link(a, e[0], e[1]);
      break;
    }
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2);
      link(a, 2, 3);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

Weight Weight::parse(std::string_view text) {
  auto v = parse_int_list(text, "weight");
  if (v.empty()) throw InvalidArgument("empty weight");
  return Weight(std::move(v));
}

std::string Weight::str() const { return join(coords); }

bool CorootVector::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

bool CorootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

int CorootVector::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

std::string CorootVector::str() const { return join(coords); }

WeylWord WeylWord::parse(std::string_view text) {
  auto v = parse_int_list(text, "word");
  return WeylWord(std::move(v));
}

std::string WeylWord::str() const { return join(letters); }

int pairing(const Weight& mu, const CorootVector& gamma) {
  if (mu.coords.size() != gamma.coords.size()) throw InvalidArgument("rank mismatch in pairing");
  int s = 0;
  for (std::size_t k = 0; k < mu.coords.size(); ++k) s += mu.coords[k] * gamma.coords[k];
  return s;
}

bool is_dominant(const Weight& mu) {
  return std::all_of(mu.coords.begin(), mu.coords.end(), [](int c) { return c >= 0; });
}

WeylElement WeylElement::from_word(const RootSystem& rs, const WeylWord& w) {
  return WeylElement{rs.act(w, rs.rho())};
}

RootSystem::RootSystem(LieType t) : type_(t), cartan_(cartan_matrix(t)) {
  const int n = rank();

  // Positive coroots by reflection closure.
  {
    std::set<CorootVector> seen;
    std::deque<CorootVector> queue;
    for (int i = 1; i <= n; ++i) {
      seen.insert(simple_coroot(i));
      queue.push_back(simple_coroot(i));
    }
    while (!queue.empty()) {
      CorootVector g = queue.front();
      queue.pop_front();
      for (int i = 1; i <= n; ++i) {
        CorootVector r = reflect_coroot(i, g);
        if (r.is_positive() && seen.insert(r).second) queue.push_back(r);
      }
    }
    positive_coroots_.assign(seen.begin(), seen.end());
    std::stable_sort(positive_coroots_.begin(), positive_coroots_.end(),
                     [](const auto& a, const auto& b) { return a.height() < b.height(); });
  }

  // Positive roots in simple-root coordinates: <beta, coroot_i> = sum_j b_j A[i][j].
  {
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      auto b = queue.front();
      queue.pop_front();
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (int j = 0; j < n; ++j) p += b[j] * cartan_[i][j];
        auto r = b;
        r[i] -= p;
        if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) && seen.insert(r).second)
          queue.push_back(r);
      }
    }
    positive_roots_.assign(seen.begin(), seen.end());
  }

  // Symmetrizer d_i = (alpha_i, alpha_i)/2 with d_i A[i][j] = d_j A[j][i].
  std::vector<mpq_class> d(n, 0);
  d[0] = 1;
  std::deque<int> queue{0};
  std::vector<bool> done(n, false);
  done[0] = true;
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      if (done[j] || cartan_[i][j] == 0) continue;
      d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
      done[j] = true;
      queue.push_back(j);
    }
  }
  mpq_class dmin = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= dmin;

  QMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cartan_[i][j];
  QMatrix ainv = a.inverse();
  form_.assign(n, std::vector<mpq_class>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) form_[i][k] = ainv(i, k) * d[i];
}

void RootSystem::check_index(int i) const {
  if (i < 1 || i > rank())
    throw InvalidArgument("simple index " + std::to_string(i) + " out of range 1.." + std::to_string(rank()));
}

void RootSystem::check_weight(const Weight& mu) const {
  if (mu.rank() != rank())
    throw InvalidArgument("weight (" + mu.str() + ") has wrong rank for " + type_.name());
}

int RootSystem::cartan(int i, int j) const {
  check_index(i);
  check_index(j);
  return cartan_[i - 1][j - 1];
}

Weight RootSystem::simple_root(int i) const {
  check_index(i);
  Weight a;
  a.coords.resize(rank());
  for (int k = 0; k < rank(); ++k) a.coords[k] = cartan_[k][i - 1];
  return a;
}

Weight RootSystem::rho() const { return Weight(std::vector<int>(rank(), 1)); }

CorootVector RootSystem::simple_coroot(int i) const {
  check_index(i);
  CorootVector g(std::vector<int>(rank(), 0));
  g.coords[i - 1] = 1;
  return g;
}

Weight RootSystem::simple_reflection(int i, const Weight& mu) const {
  check_index(i);
  check_weight(mu);
  Weight out = mu;
  const int p = mu[i - 1];
  for (int k = 0; k < rank(); ++k) out.coords[k] -= p * cartan_[k][i - 1];
  return out;
}

Weight RootSystem::act(const WeylWord& w, const Weight& mu) const {
  Weight out = mu;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = simple_reflection(*it, out);
  return out;
}

CorootVector RootSystem::reflect_coroot(int i, const CorootVector& gamma) const {
  check_index(i);
  int p = 0;  // <alpha_i, gamma>
  for (int j = 0; j < rank(); ++j) p += gamma.coords[j] * cartan_[j][i - 1];
  CorootVector out = gamma;
  out.coords[i - 1] -= p;
  return out;
}

namespace {

// Crossing coroots of an arbitrary word, in application order.
std::vector<CorootVector> crossing_unchecked(const RootSystem& rs, const WeylWord& w) {
  std::vector<CorootVector> out;
  out.reserve(w.length());
  const auto& l = w.letters;
  for (std::size_t t = 0; t < l.size(); ++t) {
    // application index t corresponds to letter l[size-1-t]
    CorootVector g = rs.simple_coroot(l[l.size() - 1 - t]);
    // apply s_{i_{t-1}} first, ..., s_{i_1} last
    for (std::size_t u = t; u-- > 0;) g = rs.reflect_coroot(l[l.size() - 1 - u], g);
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

bool RootSystem::is_reduced(const WeylWord& w) const {
  for (int i : w.letters) check_index(i);
  auto gammas = crossing_unchecked(*this, w);
  std::set<CorootVector> seen;
  for (const auto& g : gammas) {
    if (!g.is_positive() || !seen.insert(g).second) return false;
  }
  return true;
}

std::vector<CorootVector> RootSystem::crossing_coroots(const WeylWord& w) const {
  if (!is_reduced(w)) throw NotReduced("word [" + w.str() + "] is not reduced");
  return crossing_unchecked(*this, w);
}

int RootSystem::braid_order(int i, int j) const {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw InvalidArgument("not a finite-type Cartan matrix");
}

std::vector<WeylWord> RootSystem::all_reduced_words(const WeylWord& w, int cap) const {
  if (cap < 1) throw InvalidArgument("word cap must be positive");
  if (!is_reduced(w)) throw NotReduced("word [" + w.str() + "] is not reduced");
  // Enumerate the full braid-move closure when it is moderate, so the
  // truncated output is the lexicographic prefix.
  const std::size_t hard_limit = std::max<std::size_t>(static_cast<std::size_t>(cap), 20000);
  std::set<std::vector<int>> seen{w.letters};
  std::deque<std::vector<int>> queue{w.letters};
  while (!queue.empty() && seen.size() < hard_limit) {
    auto cur = queue.front();
    queue.pop_front();
    const int len = static_cast<int>(cur.size());
    for (int p = 0; p + 1 < len; ++p) {
      const int i = cur[p], j = cur[p + 1];
      if (i == j) continue;
      const int m = braid_order(i, j);
      if (p + m > len) continue;
      bool alternating = true;
      for (int q = 0; q < m && alternating; ++q) alternating = cur[p + q] == (q % 2 == 0 ? i : j);
      if (!alternating) continue;
      auto next = cur;
      for (int q = 0; q < m; ++q) next[p + q] = (q % 2 == 0 ? j : i);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<WeylWord> out;
  for (const auto& v : seen) {
    if (static_cast<int>(out.size()) >= cap) break;
    out.emplace_back(v);
  }
  return out;
}

WeylWord RootSystem::canonical_word(const WeylElement& w) const {
  check_weight(w.rho_image);
  Weight nu = w.rho_image;
  WeylWord out;
  while (true) {
    int descent = 0;
    for (int i = 1; i <= rank(); ++i) {
      if (nu[i - 1] < 0) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    out.letters.push_back(descent);
    nu = simple_reflection(descent, nu);
  }
  if (nu != rho()) throw InvalidArgument("weight is not in the W-orbit of rho");
  return out;
}

WeylWord RootSystem::canonical_word(const WeylWord& w) const {
  return canonical_word(WeylElement::from_word(*this, w));
}

WeylWord RootSystem::longest_element() const {
  Weight neg = rho();
  for (auto& c : neg.coords) c = -c;
  return canonical_word(WeylElement{neg});
}

CorootVector RootSystem::two_rho_check() const {
  CorootVector s(std::vector<int>(rank(), 0));
  for (const auto& g : positive_coroots_)
    for (int k = 0; k < rank(); ++k) s.coords[k] += g.coords[k];
  return s;
}

mpq_class RootSystem::inner_product(const Weight& a, const Weight& b) const {
  check_weight(a);
  check_weight(b);
  mpq_class s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) s += form_[i][k] * a[i] * b[k];
  return s;
}

Weight RootSystem::root_to_weight(const std::vector<int>& root_coords) const {
  Weight w(std::vector<int>(rank(), 0));
  for (int j = 0; j < rank(); ++j)
    for (int k = 0; k < rank(); ++k) w.coords[k] += root_coords[j] * cartan_[k][j];
  return w;
}

std::vector<Weight> RootSystem::orbit(const Weight& mu) const {
  check_weight(mu);
  std::set<Weight> seen{mu};
  std::deque<Weight> queue{mu};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank(); ++i) {
      Weight r = simple_reflection(i, cur);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace dynwg
