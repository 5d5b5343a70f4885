#include "dynwg/rep.hpp"

#include <algorithm>
#include <set>

namespace dynwg {

std::string monomial_label(const std::vector<int>& letters) {
  std::string s;
  for (std::size_t a = 0; a < letters.size();) {
    std::size_t b = a;
    while (b < letters.size() && letters[b] == letters[a]) ++b;
    s += "f" + std::to_string(letters[a]);
    if (b - a > 1) s += "^(" + std::to_string(b - a) + ")";
    s += " ";
    a = b;
  }
  return s + "v";
}

Irrep::Irrep(LieType type, Weight hw, std::vector<WeightSpace> spaces, std::vector<SparseMatrix> e,
             std::vector<SparseMatrix> f)
    : type_(type), roots_(type), hw_(std::move(hw)), spaces_(std::move(spaces)), e_(std::move(e)), f_(std::move(f)) {
  for (std::size_t k = 0; k < spaces_.size(); ++k) {
    index_.emplace(spaces_[k].weight, static_cast<int>(k));
    dim_ = std::max(dim_, spaces_[k].offset + spaces_[k].dim);
  }
  if (static_cast<int>(e_.size()) != rank() || static_cast<int>(f_.size()) != rank())
    throw InvalidArgument("generator count does not match rank");
  for (int i = 0; i < rank(); ++i) {
    SparseMatrix h(dim_, dim_);
    for (const auto& s : spaces_)
      for (int a = 0; a < s.dim; ++a) h.add(s.offset + a, s.offset + a, s.weight[i]);
    h_.push_back(std::move(h));
  }
}

const WeightSpace* Irrep::find(const Weight& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? nullptr : &spaces_[static_cast<std::size_t>(it->second)];
}

const WeightSpace& Irrep::space(const Weight& mu) const {
  const WeightSpace* s = find(mu);
  if (!s) throw InvalidArgument("(" + mu.str() + ") is not a weight of V(" + hw_.str() + ")");
  return *s;
}

int Irrep::multiplicity(const Weight& mu) const {
  const WeightSpace* s = find(mu);
  return s ? s->dim : 0;
}

QMatrix Irrep::block(const SparseMatrix& gen, const Weight& from, const Weight& to) const {
  const WeightSpace* a = find(from);
  const WeightSpace* b = find(to);
  if (!a || !b) return QMatrix(b ? b->dim : 0, a ? a->dim : 0);
  return gen.block(b->offset, b->dim, a->offset, a->dim);
}

std::vector<std::string> Irrep::labels(const Weight& mu) const {
  std::vector<std::string> out;
  for (const auto& m : space(mu).monomials) out.push_back(monomial_label(m));
  return out;
}

namespace {

Weight shift(const Weight& mu, const Weight& alpha, int k) {
  Weight out = mu;
  for (int c = 0; c < mu.rank(); ++c) out.coords[c] += k * alpha[c];
  return out;
}

struct Stage {
  std::vector<std::vector<int>> monomials;
  QMatrix gram;                       // Shapovalov form on the basis
  std::map<int, QMatrix> e_up;        // i -> V_mu -> V_{mu+alpha_i}
  std::map<int, QMatrix> f_down;      // i -> V_{mu+alpha_i} -> V_mu
  int dim() const { return static_cast<int>(monomials.size()); }
};

}  // namespace

Irrep build_irrep(const LieType& t, const Weight& hw, long dim_cap) {
  RootSystem rs(t);
  if (hw.rank() != rs.rank()) throw InvalidArgument("highest weight has wrong rank for " + t.name());
  if (!is_dominant(hw)) throw NotDominant("highest weight (" + hw.str() + ") is not dominant");
  const long predicted = weyl_dimension(t, hw);
  if (predicted > dim_cap)
    throw DimensionCapExceeded("V(" + hw.str() + ") of " + t.name() + " has dimension " + std::to_string(predicted) +
                               " > cap " + std::to_string(dim_cap));
  const int r = rs.rank();
  std::vector<Weight> alpha;
  for (int i = 1; i <= r; ++i) alpha.push_back(rs.simple_root(i));

  std::map<Weight, Stage> done;
  std::vector<std::vector<Weight>> levels;
  {
    Stage top;
    top.monomials = {{}};
    top.gram = QMatrix::identity(1);
    done.emplace(hw, std::move(top));
    levels.push_back({hw});
  }

  while (true) {
    std::set<Weight, std::greater<>> next;
    for (const auto& w : levels.back())
      for (int i = 0; i < r; ++i) next.insert(shift(w, alpha[i], -1));
    std::vector<Weight> level;
    for (const Weight& mu : next) {
      // Spanning set: f_i applied to the basis of V_{mu + alpha_i}.
      std::vector<int> ups;
      for (int i = 0; i < r; ++i)
        if (done.count(shift(mu, alpha[i], 1))) ups.push_back(i);
      // Candidate (i, b) is the divided power f_i^{(a)} applied to the rest of
      // b's monomial, i.e. f_i b / a with a the resulting run length of i.
      struct Cand {
        int i;
        int b;
        std::vector<int> label;
        Scalar scale;
      };
      std::vector<Cand> cands;
      for (int i : ups) {
        const Stage& up = done.at(shift(mu, alpha[i], 1));
        for (int b = 0; b < up.dim(); ++b) {
          std::vector<int> label{i + 1};
          label.insert(label.end(), up.monomials[b].begin(), up.monomials[b].end());
          int run = 0;
          while (run < static_cast<int>(label.size()) && label[run] == i + 1) ++run;
          cands.push_back({i, b, std::move(label), Scalar(1, run)});
        }
      }
      std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.label < b.label; });

      // y_{ij} = e_i f_j restricted to V_{mu+alpha_j} -> V_{mu+alpha_i}.
      std::map<std::pair<int, int>, QMatrix> y;
      for (int i : ups)
        for (int j : ups) {
          const Weight wi = shift(mu, alpha[i], 1), wj = shift(mu, alpha[j], 1);
          const Stage& si = done.at(wi);
          const Stage& sj = done.at(wj);
          QMatrix m(si.dim(), sj.dim());
          const Weight wij = shift(wi, alpha[j], 1);
          if (done.count(wij)) {
            // e_i f_j b = f_j e_i b + delta_ij h_i b
            const QMatrix& ei = sj.e_up.at(i);    // V_{wj} -> V_{wij}
            const QMatrix& fj = si.f_down.at(j);  // V_{wij} -> V_{wi}
            m = fj * ei;
          }
          if (i == j) {
            const int n = wi[i];
            for (int a = 0; a < si.dim(); ++a) m(a, a) += n;
          }
          y.emplace(std::make_pair(i, j), std::move(m));
        }

      const int nc = static_cast<int>(cands.size());
      QMatrix gram(nc, nc);
      for (int p = 0; p < nc; ++p)
        for (int q = 0; q < nc; ++q) {
          const Cand& cp = cands[p];
          const Cand& cq = cands[q];
          const Stage& sp = done.at(shift(mu, alpha[cp.i], 1));
          const QMatrix& yij = y.at({cp.i, cq.i});
          Scalar s = 0;
          for (int a = 0; a < sp.dim(); ++a) s += sp.gram(cp.b, a) * yij(a, cq.b);
          gram(p, q) = s * cp.scale * cq.scale;
        }

      std::vector<int> pivots = gram.pivot_columns();
      if (pivots.empty()) continue;
      const int d = static_cast<int>(pivots.size());

      Stage st;
      st.gram = QMatrix(d, d);
      for (int a = 0; a < d; ++a) {
        st.monomials.push_back(cands[pivots[a]].label);
        for (int b = 0; b < d; ++b) st.gram(a, b) = gram(pivots[a], pivots[b]);
      }
      // e_i on basis vectors f_j b' is column b' of y_{ij}.
      for (int i : ups) {
        const Stage& si = done.at(shift(mu, alpha[i], 1));
        QMatrix e(si.dim(), d);
        for (int a = 0; a < d; ++a) {
          const Cand& c = cands[pivots[a]];
          const QMatrix& yij = y.at({i, c.i});
          for (int row = 0; row < si.dim(); ++row) e(row, a) = yij(row, c.b) * c.scale;
        }
        st.e_up.emplace(i, std::move(e));
      }
      // f_i b expressed in the basis through the nondegenerate Gram matrix.
      for (int i : ups) {
        const Stage& si = done.at(shift(mu, alpha[i], 1));
        QMatrix f(d, si.dim());
        for (int p = 0; p < nc; ++p) {
          if (cands[p].i != i) continue;
          QVector rhs(d);
          for (int a = 0; a < d; ++a) rhs[a] = gram(pivots[a], p);
          QVector coords = st.gram.solve(rhs);
          for (int a = 0; a < d; ++a) f(a, cands[p].b) = coords[a] / cands[p].scale;
        }
        st.f_down.emplace(i, std::move(f));
      }
      done.emplace(mu, std::move(st));
      level.push_back(mu);
    }
    if (level.empty()) break;
    levels.push_back(std::move(level));
  }

  std::vector<WeightSpace> spaces;
  int offset = 0;
  for (const auto& level : levels)
    for (const auto& mu : level) {
      const Stage& st = done.at(mu);
      spaces.push_back(WeightSpace{mu, offset, st.dim(), st.monomials});
      offset += st.dim();
    }
  const int dim = offset;
  if (dim != predicted)
    throw Error("internal: constructed dimension " + std::to_string(dim) + " differs from Weyl dimension " +
                std::to_string(predicted));
  std::map<Weight, int> off;
  for (const auto& s : spaces) off.emplace(s.weight, s.offset);

  std::vector<SparseMatrix> e(r, SparseMatrix(dim, dim)), f(r, SparseMatrix(dim, dim));
  for (const auto& [mu, st] : done) {
    const int col0 = off.at(mu);
    for (const auto& [i, blk] : st.e_up) {
      const int row0 = off.at(shift(mu, alpha[i], 1));
      for (int a = 0; a < blk.rows(); ++a)
        for (int b = 0; b < blk.cols(); ++b) e[i].add(row0 + a, col0 + b, blk(a, b));
    }
    for (const auto& [i, blk] : st.f_down) {
      const int src0 = off.at(shift(mu, alpha[i], 1));
      for (int a = 0; a < blk.rows(); ++a)
        for (int b = 0; b < blk.cols(); ++b) f[i].add(col0 + a, src0 + b, blk(a, b));
    }
  }
  return Irrep(t, hw, std::move(spaces), std::move(e), std::move(f));
}

QVector apply_generator(const Irrep& v, Generator kind, int i, const QVector& x) {
  if (i < 1 || i > v.rank()) throw InvalidArgument("simple index out of range");
  if (static_cast<int>(x.size()) != v.dim())
    throw InvalidArgument("vector has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(v.dim()));
  switch (kind) {
    case Generator::E: return v.e(i).apply(x);
    case Generator::F: return v.f(i).apply(x);
    case Generator::H: return v.h(i).apply(x);
  }
  return {};
}

QVector divided_power_f(const Irrep& v, int i, const Weight& from, const QVector& local, int n) {
  const Weight alpha = v.roots().simple_root(i);
  QVector cur = local;
  Weight w = from;
  for (int step = 1; step <= n; ++step) {
    Weight next = shift(w, alpha, -1);
    QMatrix blk = v.block(v.f(i), w, next);
    if (blk.rows() == 0) return {};
    cur = blk * cur;
    for (auto& c : cur) c /= step;
    w = std::move(next);
  }
  return cur;
}

StringDecomposition sl2_strings(const Irrep& v, int i, const Weight& nu) {
  const WeightSpace& target = v.space(nu);
  const Weight alpha = v.roots().simple_root(i);
  StringDecomposition out;
  out.index = i;
  out.weight = nu;
  const int n = nu[i - 1];
  int total = 0;
  for (int k = 0;; ++k) {
    const Weight w = shift(nu, alpha, k);
    const WeightSpace* ws = v.find(w);
    if (!ws) break;
    const int m = n + 2 * k;
    if (m < 0 || k > m) continue;
    std::vector<QVector> prim;
    const Weight above = shift(w, alpha, 1);
    if (v.find(above)) {
      prim = v.block(v.e(i), w, above).nullspace();
    } else {
      for (int a = 0; a < ws->dim; ++a) {
        QVector u(ws->dim);
        u[a] = 1;
        prim.push_back(std::move(u));
      }
    }
    if (prim.empty()) continue;
    std::vector<QVector> cols;
    for (const auto& u : prim) cols.push_back(divided_power_f(v, i, w, u, k));
    StringComponent comp;
    comp.m = m;
    comp.k = k;
    comp.injection = QMatrix::from_columns(cols, target.dim);
    comp.primitive = std::move(prim);
    total += static_cast<int>(comp.primitive.size());
    out.components.push_back(std::move(comp));
  }
  if (total != target.dim)
    throw Error("internal: sl2 strings through (" + nu.str() + ") have total dimension " + std::to_string(total));
  return out;
}

QMatrix StringDecomposition::change_of_basis() const {
  std::vector<QVector> cols;
  int rows = 0;
  for (const auto& c : components) {
    rows = c.injection.rows();
    for (int j = 0; j < c.injection.cols(); ++j) cols.push_back(c.injection.column(j));
  }
  return QMatrix::from_columns(cols, rows);
}

std::vector<std::string> check_chevalley_serre(const Irrep& v) {
  std::vector<std::string> failures;
  const int r = v.rank();
  auto comm = [](const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= r; ++j) {
      const std::string tag = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      SparseMatrix ef = comm(v.e(i), v.f(j));
      if (!(i == j ? ef == v.h(i) : ef.is_zero())) failures.push_back("[E,F] relation fails at " + tag);
      const int a = v.roots().cartan(i, j);
      if (!(comm(v.h(i), v.e(j)) == v.e(j).scaled(a))) failures.push_back("[H,E] relation fails at " + tag);
      if (!(comm(v.h(i), v.f(j)) == v.f(j).scaled(-a))) failures.push_back("[H,F] relation fails at " + tag);
      if (!comm(v.h(i), v.h(j)).is_zero()) failures.push_back("[H,H] relation fails at " + tag);
      if (i == j) continue;
      SparseMatrix se = v.e(j), sf = v.f(j);
      for (int p = 0; p < 1 - a; ++p) {
        se = comm(v.e(i), se);
        sf = comm(v.f(i), sf);
      }
      if (!se.is_zero()) failures.push_back("Serre relation for E fails at " + tag);
      if (!sf.is_zero()) failures.push_back("Serre relation for F fails at " + tag);
    }
  return failures;
}

}  // namespace dynwg
