#include "dynwg/geomsatake.hpp"

#include "dynwg/dynweyl.hpp"

namespace dynwg {

RatFun TorusWeightMultiset::product() const {
  return generic_transition({}, *this);
}

TorusWeightMultiset costalk_weights(int lambda, int mu, Chamber chamber) {
  if (mu < 0 || mu > lambda || (lambda - mu) % 2 != 0)
    throw InvalidArgument("costalk weights need 0 <= mu <= lambda with equal parity (got lambda=" +
                          std::to_string(lambda) + ", mu=" + std::to_string(mu) + ")");
  const int n = (lambda - mu) / 2;
  const int half_sum = (lambda + mu) / 2;
  TorusWeightMultiset out;
  for (int j = 1; j <= n; ++j) {
    if (chamber == Chamber::E)
      out.weights.push_back(-LinearForm::x(1) + LinearForm::hbar(j - 1 - half_sum));
    else
      out.weights.push_back(LinearForm::x(1) - LinearForm::hbar(j));
  }
  return out;
}

RatFun generic_transition(const TorusWeightMultiset& a, const TorusWeightMultiset& b) {
  Polynomial num(Scalar(1));
  for (const auto& f : b.weights) {
    if (f.is_zero()) throw InvalidArgument("torus weight multiset contains a zero form");
    num = num * f;
  }
  for (const auto& f : a.weights)
    if (f.is_zero()) throw InvalidArgument("torus weight multiset contains a zero form");
  return RatFun::quotient(std::move(num), a.weights);
}

TransitionScalar hyperbolic_transition(int lambda, int mu) {
  TransitionScalar out;
  out.lambda = lambda;
  out.mu = mu;
  out.value = generic_transition(costalk_weights(lambda, mu, Chamber::E), costalk_weights(lambda, mu, Chamber::S));
  return out;
}

Rank1Report verify_main_theorem_rank1(int lambda, int mu) {
  Rank1Report r;
  r.lambda = lambda;
  r.mu = mu;
  r.geometric = hyperbolic_transition(lambda, mu).value;
  const RatFun dyn = rank1_coefficient(lambda, (lambda - mu) / 2, LinearForm::x(1));
  r.dynamical_shifted = dyn.substitute(rho_shift_substitution(1));
  r.equal = r.geometric == r.dynamical_shifted;
  return r;
}

LeviReport levi_restriction_check(const Irrep& v, int i, const Weight& mu) {
  const RootSystem& rs = v.roots();
  if (i < 1 || i > rs.rank()) throw InvalidArgument("simple index out of range");
  if (mu[i - 1] < 0)
    throw InvalidArgument("Levi restriction check needs <mu, coroot_" + std::to_string(i) + "> >= 0 at (" +
                          mu.str() + ")");
  LeviReport rep;
  rep.type = v.type();
  rep.hw = v.highest_weight();
  rep.mu = mu;
  rep.index = i;

  const OperatorBlock shifted = rho_shift(simple_reflection_block(v, i, mu, LinearForm::x(i)));

  // String-adapted bases on both sides: S on V_mu, T on V_{s_i mu}.
  const StringDecomposition dec = sl2_strings(v, i, mu);
  const QMatrix s = dec.change_of_basis();
  const Weight alpha = rs.simple_root(i);
  std::vector<QVector> t_cols;
  std::vector<int> comp_of;
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    Weight top = mu;
    for (int a = 0; a < rs.rank(); ++a) top.coords[a] += comp.k * alpha[a];
    for (const auto& u : comp.primitive) {
      t_cols.push_back(divided_power_f(v, i, top, u, comp.m - comp.k));
      comp_of.push_back(static_cast<int>(c));
    }
  }
  const int d = static_cast<int>(t_cols.size());
  const QMatrix t = QMatrix::from_columns(t_cols, d);
  const QMatrix t_inv = t.inverse();

  Substitution to_xi;
  to_xi.x_images.push_back(LinearForm::x(i));
  std::vector<RatFun> geo;
  for (const auto& comp : dec.components)
    geo.push_back(hyperbolic_transition(comp.m, comp.m - 2 * comp.k).value.substitute(to_xi));

  // Dynamical block in the string-adapted bases: T^{-1} B S.
  const RatMatrix in_strings = rat_multiply(rat_multiply(rat_from(t_inv), shifted.matrix), rat_from(s));
  bool diagonal = true;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (a != b && !in_strings[a][b].is_zero()) diagonal = false;

  int q = 0;
  rep.equal = diagonal;
  for (std::size_t c = 0; c < dec.components.size(); ++c) {
    const auto& comp = dec.components[c];
    LeviString ls;
    ls.m = comp.m;
    ls.k = comp.k;
    ls.geometric = geo[c];
    ls.dynamical_shifted = in_strings[q][q];
    ls.equal = true;
    for (std::size_t p = 0; p < comp.primitive.size(); ++p, ++q)
      ls.equal = ls.equal && in_strings[q][q] == geo[c];
    rep.equal = rep.equal && ls.equal;
    rep.strings.push_back(std::move(ls));
  }

  // Geometric side reassembled in the standard bases: T diag(g) S^{-1}.
  RatMatrix diag(d, std::vector<RatFun>(d));
  for (int a = 0; a < d; ++a) diag[a][a] = geo[comp_of[a]];
  const RatMatrix assembled = rat_multiply(rat_multiply(rat_from(t), diag), rat_from(s.inverse()));
  rep.block_equal = assembled == shifted.matrix;
  rep.equal = rep.equal && rep.block_equal;
  return rep;
}

}  // namespace dynwg
