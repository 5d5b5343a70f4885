// Weyl dimension formula and Freudenthal's multiplicity recursion. These are
// oracles for build_irrep and share nothing with it beyond the root data.

#include <algorithm>
#include <deque>
#include <set>

#include "dynwg/rep.hpp"

namespace dynwg {

long weyl_dimension(const LieType& t, const Weight& hw) {
  RootSystem rs(t);
  if (hw.rank() != rs.rank()) throw InvalidArgument("weight has wrong rank for " + t.name());
  if (!is_dominant(hw)) throw NotDominant("weight (" + hw.str() + ") is not dominant");
  Weight shifted = hw;
  for (auto& c : shifted.coords) c += 1;
  mpq_class d = 1;
  for (const auto& g : rs.positive_coroots()) d *= mpq_class(pairing(shifted, g), g.height());
  d.canonicalize();
  if (d.get_den() != 1 || !d.get_num().fits_slong_p()) throw Error("Weyl dimension is not a machine integer");
  return d.get_num().get_si();
}

std::map<Weight, long> freudenthal_character(const LieType& t, const Weight& hw) {
  RootSystem rs(t);
  if (!is_dominant(hw)) throw NotDominant("weight (" + hw.str() + ") is not dominant");
  const int r = rs.rank();
  const auto& roots = rs.positive_roots();
  std::vector<Weight> root_weights;
  for (const auto& a : roots) root_weights.push_back(rs.root_to_weight(a));

  // Weights are indexed by depth n: mu = hw - sum n_j alpha_j.
  auto weight_of = [&](const std::vector<int>& n) {
    Weight mu = hw;
    Weight d = rs.root_to_weight(n);
    for (int c = 0; c < r; ++c) mu.coords[c] -= d[c];
    return mu;
  };
  Weight hw_rho = hw;
  for (auto& c : hw_rho.coords) c += 1;
  const mpq_class top = rs.inner_product(hw_rho, hw_rho);

  std::map<std::vector<int>, long> mult;
  mult[std::vector<int>(r, 0)] = 1;
  std::deque<std::vector<int>> frontier{std::vector<int>(r, 0)};
  std::set<std::vector<int>> queued{std::vector<int>(r, 0)};
  // Breadth-first by height guarantees every mu + k alpha is final before mu.
  while (!frontier.empty()) {
    auto n = frontier.front();
    frontier.pop_front();
    if (mult[n] == 0) continue;
    for (int j = 0; j < r; ++j) {
      auto child = n;
      child[j] += 1;
      if (!queued.insert(child).second) continue;
      const Weight mu = weight_of(child);
      Weight mu_rho = mu;
      for (auto& c : mu_rho.coords) c += 1;
      const mpq_class denom = top - rs.inner_product(mu_rho, mu_rho);
      mpq_class sum = 0;
      for (std::size_t a = 0; a < roots.size(); ++a) {
        for (int k = 1;; ++k) {
          std::vector<int> up = child;
          bool valid = true;
          for (int c = 0; c < r; ++c) {
            up[c] -= k * roots[a][c];
            valid = valid && up[c] >= 0;
          }
          if (!valid) break;
          auto it = mult.find(up);
          if (it == mult.end() || it->second == 0) continue;
          Weight shifted = mu;
          for (int c = 0; c < r; ++c) shifted.coords[c] += k * root_weights[a][c];
          sum += it->second * rs.inner_product(shifted, root_weights[a]);
        }
      }
      long m = 0;
      if (sgn(denom) != 0) {
        mpq_class q = 2 * sum / denom;
        q.canonicalize();
        if (q.get_den() != 1) throw Error("internal: non-integral Freudenthal multiplicity");
        m = q.get_num().get_si();
      } else if (sgn(sum) != 0) {
        throw Error("internal: inconsistent Freudenthal recursion");
      }
      mult[child] = m;
      if (m > 0) frontier.push_back(child);
    }
  }
  std::map<Weight, long> out;
  for (const auto& [n, m] : mult)
    if (m > 0) out[weight_of(n)] = m;
  return out;
}

long freudenthal_multiplicity(const LieType& t, const Weight& hw, const Weight& mu) {
  auto ch = freudenthal_character(t, hw);
  auto it = ch.find(mu);
  return it == ch.end() ? 0 : it->second;
}

std::vector<Weight> dominant_weights_up_to_dim(const LieType& t, long cap) {
  validate(t);
  std::set<Weight> found;
  std::deque<Weight> queue{Weight(std::vector<int>(t.rank, 0))};
  found.insert(queue.front());
  while (!queue.empty()) {
    Weight w = queue.front();
    queue.pop_front();
    for (int i = 0; i < t.rank; ++i) {
      Weight next = w;
      next.coords[i] += 1;
      if (found.count(next) || weyl_dimension(t, next) > cap) continue;
      found.insert(next);
      queue.push_back(std::move(next));
    }
  }
  std::vector<Weight> out(found.begin(), found.end());
  std::erase_if(out, [&](const Weight& w) { return weyl_dimension(t, w) > cap; });
  return out;
}

}  // namespace dynwg
