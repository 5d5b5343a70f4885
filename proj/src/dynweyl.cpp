#include "dynwg/dynweyl.hpp"

#include <sstream>

namespace dynwg {

bool OperatorBlock::same_operator(const OperatorBlock& o) const {
  return type == o.type && hw == o.hw && source == o.source && target == o.target && matrix == o.matrix;
}

std::string OperatorBlock::render() const {
  std::ostringstream os;
  os << "A_{w,V}(x) on V(" << hw.str() << ") of " << type.name() << ", w = [" << word.str() << "]\n";
  os << "  V_(" << source.str() << ") -> V_(" << target.str() << "), " << rows() << "x" << cols() << "\n";
  for (int r = 0; r < rows(); ++r) {
    os << "  [";
    for (int c = 0; c < cols(); ++c) os << (c ? ", " : "") << matrix[r][c].str();
    os << "]\n";
  }
  return os.str();
}

RatFun rank1_coefficient(int m, int k, const LinearForm& xi) {
  if (k < 0 || m - 2 * k < 0)
    throw InvalidArgument("rank-1 coefficient needs k >= 0 and m - 2k >= 0 (got m=" + std::to_string(m) +
                          ", k=" + std::to_string(k) + ")");
  Polynomial num(Scalar(k % 2 == 0 ? 1 : -1));
  std::vector<LinearForm> den;
  for (int j = 1; j <= k; ++j) {
    num = num * (xi + LinearForm::hbar(j + 1));
    den.push_back(xi + LinearForm::hbar(j - m + k));
  }
  return RatFun::quotient(std::move(num), den);
}

LinearForm step_variable(const CorootVector& gamma, Twist twist) {
  LinearForm xi;
  for (int c = 0; c < static_cast<int>(gamma.coords.size()); ++c)
    if (gamma.coords[c]) xi = xi + LinearForm::x(c + 1, gamma.coords[c]);
  if (twist == Twist::Shifted) xi = xi + LinearForm::hbar(gamma.height() - 1);
  return xi;
}

OperatorBlock simple_reflection_block(const Irrep& v, int i, const Weight& nu, const LinearForm& xi) {
  const RootSystem& rs = v.roots();
  if (i < 1 || i > rs.rank()) throw InvalidArgument("simple index out of range");
  const int n = nu[i - 1];
  if (n < 0)
    throw InvalidArgument("simple reflection block needs <nu, coroot_" + std::to_string(i) + "> >= 0 at (" +
                          nu.str() + ")");
  const Weight target = rs.simple_reflection(i, nu);
  const StringDecomposition dec = sl2_strings(v, i, nu);
  const QMatrix s_inv = dec.change_of_basis().inverse();
  const int d_src = v.space(nu).dim;
  const int d_tgt = v.space(target).dim;

  OperatorBlock out;
  out.type = v.type();
  out.hw = v.highest_weight();
  out.source = nu;
  out.target = target;
  out.word = WeylWord{i};
  out.source_labels = v.labels(nu);
  out.target_labels = v.labels(target);
  out.matrix.assign(d_tgt, std::vector<RatFun>(d_src));

  const Weight alpha = rs.simple_root(i);
  int q = 0;  // running column of the string-adapted basis
  for (const auto& comp : dec.components) {
    const RatFun c = rank1_coefficient(comp.m, comp.k, xi);
    Weight top = nu;
    for (int a = 0; a < rs.rank(); ++a) top.coords[a] += comp.k * alpha[a];
    // F^{(k)} u  ->  c F^{(m-k)} u
    QMatrix coef(d_tgt, d_src);
    for (const auto& u : comp.primitive) {
      QVector image = divided_power_f(v, i, top, u, comp.m - comp.k);
      for (int r = 0; r < d_tgt; ++r) {
        if (sgn(image[r]) == 0) continue;
        for (int col = 0; col < d_src; ++col) coef(r, col) += image[r] * s_inv(q, col);
      }
      ++q;
    }
    for (int r = 0; r < d_tgt; ++r)
      for (int col = 0; col < d_src; ++col)
        if (sgn(coef(r, col)) != 0) out.matrix[r][col] += c * RatFun(coef(r, col));
  }
  return out;
}

OperatorBlock word_operator_block(const Irrep& v, const WeylWord& w, const Weight& mu, Twist twist) {
  const RootSystem& rs = v.roots();
  if (!is_dominant(mu)) throw NotDominant("source weight (" + mu.str() + ") is not dominant");
  const auto gammas = rs.crossing_coroots(w);
  const int d = v.space(mu).dim;

  OperatorBlock out;
  out.type = v.type();
  out.hw = v.highest_weight();
  out.source = mu;
  out.word = w;
  out.source_labels = v.labels(mu);
  out.matrix = rat_identity(d);

  Weight nu = mu;
  for (std::size_t t = 0; t < gammas.size(); ++t) {
    const int i = w.letters[w.letters.size() - 1 - t];
    const int p = nu[i - 1];
    if (p < 0 || p != pairing(mu, gammas[t]))
      throw Error("internal: negative or inconsistent string weight at step " + std::to_string(t + 1));
    OperatorBlock step = simple_reflection_block(v, i, nu, step_variable(gammas[t], twist));
    out.matrix = rat_multiply(step.matrix, out.matrix);
    nu = step.target;
  }
  out.target = nu;
  out.target_labels = v.labels(nu);
  return out;
}

OperatorBlock dynamical_operator(const Irrep& v, const WeylElement& w, const Weight& mu) {
  return word_operator_block(v, v.roots().canonical_word(w), mu);
}

Substitution rho_shift_substitution(int rank) {
  Substitution s;
  for (int i = 1; i <= rank; ++i) s.x_images.push_back(-LinearForm::x(i) - LinearForm::hbar());
  return s;
}

OperatorBlock rho_shift(const OperatorBlock& b) {
  OperatorBlock out = b;
  out.matrix = rat_substitute(b.matrix, rho_shift_substitution(b.type.rank));
  return out;
}

QMatrix classical_limit(const OperatorBlock& b, std::mt19937_64& rng) {
  const int r = b.type.rank;
  QMatrix out(b.rows(), b.cols());
  for (int row = 0; row < b.rows(); ++row)
    for (int col = 0; col < b.cols(); ++col) {
      const RatFun& e = b.matrix[row][col];
      for (const auto& [f, m] : e.denominator())
        if (f.form().x_extent() == 0)
          throw PoleError("entry (" + std::to_string(row) + "," + std::to_string(col) + ") has a pole at h=0");
      std::vector<Scalar> values;
      int attempts = 0;
      while (values.size() < 2) {
        if (++attempts > 200) throw Error("could not find non-pole points for the classical limit");
        std::vector<Scalar> xs(static_cast<std::size_t>(r));
        for (auto& x : xs) x = random_scalar(rng);
        try {
          values.push_back(e.evaluate(xs, Scalar(0)));
        } catch (const PoleError&) {
        }
      }
      if (values[0] != values[1])
        throw Error("classical limit of entry (" + std::to_string(row) + "," + std::to_string(col) +
                    ") depends on x");
      out(row, col) = values[0];
    }
  return out;
}

std::vector<std::string> denominator_locality_violations(const OperatorBlock& b, const RootSystem& rs,
                                                         Locality mode) {
  std::vector<std::string> bad;
  for (int row = 0; row < b.rows(); ++row)
    for (int col = 0; col < b.cols(); ++col)
      for (const auto& [f, mult] : b.matrix[row][col].denominator()) {
        bool ok = false;
        for (const auto& g : rs.positive_coroots()) {
          // f must be proportional to <x, g> + c h
          int first = 0;
          while (g.coords[first] == 0) ++first;
          const Scalar scale = g.coords[first];
          bool match = f.form().x_extent() <= rs.rank();
          for (int a = 0; a < rs.rank() && match; ++a) match = f.form().x_coeff(a + 1) * scale == g.coords[a];
          if (!match) continue;
          const Scalar c = f.form().h_coeff() * scale;
          if (c.get_den() != 1) break;
          if (mode == Locality::Plain) ok = c <= 0;
          else ok = c <= g.height() - 1;
          break;
        }
        if (!ok)
          bad.push_back("entry (" + std::to_string(row) + "," + std::to_string(col) + ") factor (" + f.str() + ")");
      }
  return bad;
}

}  // namespace dynwg
