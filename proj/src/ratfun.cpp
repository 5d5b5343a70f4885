#include "dynwg/ratfun.hpp"

#include <algorithm>
#include <map>

namespace dynwg {

std::string variable_name(int slot) {
  if (slot == kHbar) return "h";
  return "x" + std::to_string(slot + 1);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.exp[v] = static_cast<std::uint16_t>(exp[v] + o.exp[v]);
  return m;
}

// ---------------------------------------------------------------- LinearForm

void LinearForm::add_term(int slot, const Scalar& c) {
  if (slot < 0 || slot >= kNumVars) throw InvalidArgument("variable slot out of range");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), slot, [](const Term& t, int s) { return t.first < s; });
  if (it != terms_.end() && it->first == slot) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  } else if (sgn(c) != 0) {
    Scalar q = c;
    q.canonicalize();
    terms_.insert(it, Term{slot, std::move(q)});
  }
}

LinearForm LinearForm::x(int i, const Scalar& c) {
  if (i < 1 || i > kMaxXVars) throw InvalidArgument("x index out of range: " + std::to_string(i));
  LinearForm f;
  f.add_term(i - 1, c);
  return f;
}

LinearForm LinearForm::hbar(const Scalar& c) {
  LinearForm f;
  f.add_term(kHbar, c);
  return f;
}

LinearForm LinearForm::from_coeffs(std::span<const Scalar> xs, const Scalar& h) {
  if (xs.size() > static_cast<std::size_t>(kMaxXVars)) throw InvalidArgument("too many x variables");
  LinearForm f;
  for (std::size_t k = 0; k < xs.size(); ++k) f.add_term(static_cast<int>(k), xs[k]);
  f.add_term(kHbar, h);
  return f;
}

Scalar LinearForm::coeff(int slot) const {
  for (const auto& [s, c] : terms_)
    if (s == slot) return c;
  return 0;
}

int LinearForm::x_extent() const {
  int e = 0;
  for (const auto& [s, c] : terms_)
    if (s != kHbar) e = std::max(e, s + 1);
  return e;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  LinearForm out = *this;
  for (const auto& [s, c] : o.terms_) out.add_term(s, c);
  return out;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator-() const { return *this * Scalar(-1); }

LinearForm LinearForm::operator*(const Scalar& s) const {
  LinearForm out;
  if (sgn(s) == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= s;
  return out;
}

Scalar LinearForm::evaluate(std::span<const Scalar> xs, const Scalar& h) const {
  Scalar v = 0;
  for (const auto& [s, c] : terms_) {
    if (s == kHbar) {
      v += c * h;
    } else {
      if (static_cast<std::size_t>(s) >= xs.size()) throw InvalidArgument("evaluation point too short for " + variable_name(s));
      v += c * xs[s];
    }
  }
  return v;
}

namespace {

void append_term(std::string& out, const Scalar& c, const std::string& mono, bool first) {
  // mono empty means a constant term
  Scalar a = abs(c);
  if (sgn(c) < 0) out += "-";
  else if (!first) out += "+";
  if (mono.empty()) {
    out += format_scalar(a);
  } else {
    if (a != 1) out += format_scalar(a) + "*";
    out += mono;
  }
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.exp[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += variable_name(v);
    if (m.exp[v] > 1) s += "^" + std::to_string(m.exp[v]);
  }
  return s;
}

// Display order: higher degree first, then larger exponent of x1, x2, ..., h.
bool display_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exp > b.exp;
}

}  // namespace

std::string LinearForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    append_term(out, c, variable_name(s), first);
    first = false;
  }
  return out;
}

std::pair<Scalar, DegreeOneForm> DegreeOneForm::canonicalize(const LinearForm& f) {
  if (f.is_zero()) throw InvalidArgument("zero linear form");
  Scalar lead = f.terms().front().second;
  return {lead, DegreeOneForm(f * (1 / lead))};
}

Substitution Substitution::identity(int rank) {
  Substitution s;
  for (int i = 1; i <= rank; ++i) s.x_images.push_back(LinearForm::x(i));
  return s;
}

LinearForm Substitution::apply(const LinearForm& f) const {
  LinearForm out;
  for (const auto& [s, c] : f.terms()) {
    if (s != kHbar && static_cast<std::size_t>(s) < x_images.size()) {
      out = out + x_images[s] * c;
    } else {
      LinearForm t;
      t = (s == kHbar) ? LinearForm::hbar(c) : LinearForm::x(s + 1, c);
      out = out + t;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Scalar& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
  for (auto& t : terms_) t.second.canonicalize();
}

Polynomial::Polynomial(const LinearForm& f) {
  for (const auto& [s, c] : f.terms()) {
    Monomial m;
    m.exp[s] = 1;
    terms_.emplace_back(m, c);
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.emplace_back(m, c);
  for (auto& t : p.terms_) t.second.canonicalize();
  return p;
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (sgn(p.terms_.back().second) == 0) p.terms_.pop_back();
    } else if (sgn(t.second) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_[0].first == Monomial{}) return terms_[0].second;
  return 0;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.degree());
  return d;
}

std::optional<LinearForm> Polynomial::as_linear_form() const {
  if (terms_.empty()) return std::nullopt;
  LinearForm f;
  for (const auto& [m, c] : terms_) {
    if (m.degree() != 1) return std::nullopt;
    int slot = static_cast<int>(std::find(m.exp.begin(), m.exp.end(), 1) - m.exp.begin());
    f = f + (slot == kHbar ? LinearForm::hbar(c) : LinearForm::x(slot + 1, c));
  }
  return f;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      p.terms_.push_back(*b++);
    } else {
      Scalar s = a->second + b->second;
      if (sgn(s) != 0) p.terms_.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  return p;
}

Polynomial Polynomial::operator-() const { return *this * Scalar(-1); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Scalar& s) const {
  Polynomial p;
  if (sgn(s) == 0) return p;
  p.terms_ = terms_;
  for (auto& t : p.terms_) t.second *= s;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (terms_.empty() || o.terms_.empty()) return {};
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) prod.emplace_back(ma * mb, ca * cb);
  return from_unsorted(std::move(prod));
}

Polynomial Polynomial::operator*(const LinearForm& f) const { return *this * Polynomial(f); }

namespace {

// Arithmetic mod the Mersenne prime 2^61 - 1 for cheap nonvanishing tests.
constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 x = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(x & kPrime) + static_cast<std::uint64_t>(x >> 61);
  r = (r & kPrime) + (r >> 61);
  return r >= kPrime ? r - kPrime : r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mul_mod(b, b))
    if (e & 1) r = mul_mod(r, b);
  return r;
}

std::optional<std::uint64_t> reduce_mod(const Scalar& q) {
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), pow_mod(den, kPrime - 2));
}

// False only if p is certainly nonzero somewhere on f = 0 (f monic in slot main).
bool may_vanish_on(const Polynomial& p, const LinearForm& f, int main) {
  std::array<std::uint64_t, kNumVars> point;
  for (int v = 0; v < kNumVars; ++v) point[v] = 3 * static_cast<std::uint64_t>(v) + 2;
  point[main] = 0;
  for (const auto& [v, c] : f.terms()) {
    if (v == main) continue;
    auto cm = reduce_mod(-c);
    if (!cm) return true;
    point[main] = (point[main] + mul_mod(*cm, point[v])) % kPrime;
  }
  std::uint64_t total = 0;
  for (const auto& [m, c] : p.terms()) {
    auto t = reduce_mod(c);
    if (!t) return true;
    std::uint64_t term = *t;
    for (int v = 0; v < kNumVars; ++v)
      if (m.exp[v]) term = mul_mod(term, pow_mod(point[v], m.exp[v]));
    total = (total + term) % kPrime;
  }
  return total == 0;
}

}  // namespace

std::optional<Polynomial> Polynomial::divide_exact(const DegreeOneForm& form) const {
  const LinearForm& f = form.form();
  const int main = f.terms().front().first;  // coefficient 1
  // Quick rejection: a multiple of f vanishes on the hyperplane f = 0, so a
  // nonzero value there (computed mod a prime) rules division out.
  if (!may_vanish_on(*this, f, main)) return std::nullopt;
  auto cmp = [main](const Monomial& a, const Monomial& b) {
    if (a.exp[main] != b.exp[main]) return a.exp[main] > b.exp[main];
    return a < b;
  };
  std::map<Monomial, Scalar, decltype(cmp)> rem(cmp);
  for (const auto& [m, c] : terms_) rem.emplace(m, c);
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (lead->first.exp[main] == 0) return std::nullopt;
    Monomial q = lead->first;
    q.exp[main] -= 1;
    Scalar qc = lead->second;
    for (const auto& [s, c] : f.terms()) {
      Monomial m = q;
      m.exp[s] += 1;
      auto it = rem.find(m);
      Scalar delta = -qc * c;
      if (it == rem.end()) {
        rem.emplace(m, delta);
      } else {
        it->second += delta;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
    quotient.emplace_back(q, qc);
  }
  return from_unsorted(std::move(quotient));
}

Polynomial Polynomial::substitute(const Substitution& s) const {
  std::array<std::vector<Polynomial>, kNumVars> powers;  // powers[v][k] = image(v)^k
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      auto& pw = powers[v];
      if (pw.empty()) {
        LinearForm img = (v != kHbar && static_cast<std::size_t>(v) < s.x_images.size())
                             ? s.x_images[v]
                             : (v == kHbar ? LinearForm::hbar() : LinearForm::x(v + 1));
        pw.push_back(Polynomial(Scalar(1)));
        pw.push_back(Polynomial(img));
      }
      while (pw.size() <= m.exp[v]) pw.push_back(pw.back() * pw[1]);
      term = term * pw[m.exp[v]];
    }
    out = out + term;
  }
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> xs, const Scalar& h) const {
  Scalar total = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.exp[v] == 0) continue;
      Scalar base;
      if (v == kHbar) {
        base = h;
      } else {
        if (static_cast<std::size_t>(v) >= xs.size()) throw InvalidArgument("evaluation point too short for " + variable_name(v));
        base = xs[v];
      }
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), m.exp[v]);
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), m.exp[v]);
      t *= p;
    }
    total += t;
  }
  return total;
}

int Polynomial::x_extent() const {
  int e = 0;
  for (const auto& [m, c] : terms_)
    for (int v = 0; v < kMaxXVars; ++v)
      if (m.exp[v]) e = std::max(e, v + 1);
  return e;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term* a, const Term* b) { return display_before(a->first, b->first); });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    append_term(out, t->second, monomial_str(t->first), first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- RatFun

RatFun::RatFun(const Scalar& c) : num_(c) {}

RatFun::RatFun(Polynomial num) : num_(std::move(num)) {}

RatFun::RatFun(const LinearForm& f) : num_(f) {}

namespace {

using Factor = RatFun::Factor;

void insert_factor(std::vector<Factor>& den, const DegreeOneForm& f, int mult) {
  auto it = std::lower_bound(den.begin(), den.end(), f, [](const Factor& a, const DegreeOneForm& b) { return a.first < b; });
  if (it != den.end() && it->first == f) {
    it->second += mult;
  } else {
    den.insert(it, Factor{f, mult});
  }
}

// Divides num by each factor as often as possible, lowering multiplicities.
void cancel_against(Polynomial& num, std::vector<Factor>& den) {
  for (auto& [f, m] : den) {
    while (m > 0) {
      auto q = num.divide_exact(f);
      if (!q) break;
      num = std::move(*q);
      --m;
    }
  }
  std::erase_if(den, [](const Factor& fm) { return fm.second == 0; });
}

}  // namespace

RatFun RatFun::quotient(Polynomial num, std::span<const LinearForm> den_forms) {
  RatFun r;
  r.num_ = std::move(num);
  for (const auto& lf : den_forms) {
    if (lf.is_zero()) throw PoleError("zero denominator form");
    auto [scale, f] = DegreeOneForm::canonicalize(lf);
    r.num_ = r.num_ * (1 / scale);
    insert_factor(r.den_, f, 1);
  }
  r.cancel();
  return r;
}

void RatFun::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  cancel_against(num_, den_);
}

int RatFun::x_extent() const {
  int e = num_.x_extent();
  for (const auto& [f, m] : den_) e = std::max(e, f.form().x_extent());
  return e;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    RatFun r;
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.cancel();
    return r;
  }
  // lcm of the two factored denominators
  std::vector<Factor> lcm = den_;
  for (const auto& [f, m] : o.den_) {
    auto it = std::lower_bound(lcm.begin(), lcm.end(), f, [](const Factor& a, const DegreeOneForm& b) { return a.first < b; });
    if (it != lcm.end() && it->first == f) it->second = std::max(it->second, m);
    else lcm.insert(it, Factor{f, m});
  }
  auto lift = [&lcm](const Polynomial& num, const std::vector<Factor>& den) {
    Polynomial p = num;
    for (const auto& [f, m] : lcm) {
      int have = 0;
      for (const auto& [g, k] : den)
        if (g == f) have = k;
      for (int e = have; e < m; ++e) p = p * f.form();
    }
    return p;
  };
  RatFun r;
  r.num_ = lift(num_, den_) + lift(o.num_, o.den_);
  r.den_ = std::move(lcm);
  r.cancel();
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return {};
  // Forms are prime, and each side is already reduced, so cross-cancellation
  // suffices.
  Polynomial a = num_, b = o.num_;
  std::vector<Factor> da = den_, db = o.den_;
  cancel_against(b, da);
  cancel_against(a, db);
  RatFun r;
  r.num_ = a * b;
  r.den_ = std::move(da);
  for (const auto& [f, m] : db) insert_factor(r.den_, f, m);
  return r;
}

RatFun RatFun::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  RatFun result(1), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

RatFun RatFun::inverse(std::span<const DegreeOneForm> candidates) const {
  if (is_zero()) throw InvalidArgument("reciprocal of zero");
  Polynomial rest = num_;
  std::vector<Factor> num_factors;
  std::vector<DegreeOneForm> trial(candidates.begin(), candidates.end());
  for (int v = 0; v < kNumVars; ++v) {
    LinearForm f = (v == kHbar) ? LinearForm::hbar() : LinearForm::x(v + 1);
    trial.push_back(DegreeOneForm::canonicalize(f).second);
  }
  for (const auto& f : trial) {
    if (rest.degree() <= 1) break;
    while (rest.degree() > 1) {
      auto q = rest.divide_exact(f);
      if (!q) break;
      rest = std::move(*q);
      insert_factor(num_factors, f, 1);
    }
  }
  Scalar constant;
  if (rest.is_constant()) {
    constant = rest.constant_term();
  } else if (auto lf = rest.as_linear_form()) {
    auto [scale, f] = DegreeOneForm::canonicalize(*lf);
    constant = scale;
    insert_factor(num_factors, f, 1);
  } else {
    throw InvalidArgument("reciprocal needs a numerator that splits into degree-1 forms: " + num_.str());
  }
  RatFun r;
  r.num_ = Polynomial(1 / constant);
  for (const auto& [f, m] : den_)
    for (int e = 0; e < m; ++e) r.num_ = r.num_ * f.form();
  r.den_ = std::move(num_factors);
  return r;
}

RatFun RatFun::substitute(const Substitution& s) const {
  RatFun r;
  r.num_ = num_.substitute(s);
  for (const auto& [f, m] : den_) {
    LinearForm img = s.apply(f.form());
    if (img.is_zero()) throw PoleError("substitution sends denominator factor (" + f.str() + ") to zero");
    auto [scale, g] = DegreeOneForm::canonicalize(img);
    for (int e = 0; e < m; ++e) r.num_ = r.num_ * (1 / scale);
    insert_factor(r.den_, g, m);
  }
  r.cancel();
  return r;
}

Scalar RatFun::evaluate(std::span<const Scalar> xs, const Scalar& h) const {
  Scalar den = 1;
  for (const auto& [f, m] : den_) {
    Scalar v = f.form().evaluate(xs, h);
    if (sgn(v) == 0) throw PoleError("denominator factor (" + f.str() + ") vanishes at evaluation point");
    for (int e = 0; e < m; ++e) den *= v;
  }
  return num_.evaluate(xs, h) / den;
}

Scalar RatFun::evaluate(std::span<const Scalar> point) const {
  if (point.empty()) throw InvalidArgument("evaluation point must include h");
  return evaluate(point.first(point.size() - 1), point.back());
}

RatFun RatFun::normalized() const {
  RatFun r = *this;
  r.cancel();
  return r;
}

std::string RatFun::str() const {
  if (den_.empty()) return num_.str();
  std::string out;
  if (num_.terms().size() > 1) {
    // sign of the displayed leading term
    const Polynomial::Term* lead = &num_.terms().front();
    for (const auto& t : num_.terms())
      if (display_before(t.first, lead->first)) lead = &t;
    if (sgn(lead->second) < 0) out = "-(" + (-num_).str() + ")";
    else out = "(" + num_.str() + ")";
  } else {
    out = num_.str();
  }
  auto factor_str = [](const DegreeOneForm& f) {
    return f.form().terms().size() == 1 ? f.str() : "(" + f.str() + ")";
  };
  out += "/";
  if (den_.size() == 1 && den_[0].second == 1) {
    out += factor_str(den_[0].first);
  } else {
    std::string d;
    for (const auto& [f, m] : den_) {
      if (!d.empty()) d += "*";
      d += factor_str(f);
      if (m > 1) d += "^" + std::to_string(m);
    }
    out += "(" + d + ")";
  }
  return out;
}

bool equal_by_evaluation(const RatFun& a, const RatFun& b, int nx, std::mt19937_64& rng, int points) {
  int done = 0, attempts = 0;
  std::vector<Scalar> xs(static_cast<std::size_t>(nx));
  while (done < points) {
    if (++attempts > 100 * points) throw Error("could not find non-pole evaluation points");
    for (auto& x : xs) x = random_scalar(rng);
    Scalar h = random_scalar(rng);
    Scalar va, vb;
    try {
      va = a.evaluate(xs, h);
      vb = b.evaluate(xs, h);
    } catch (const PoleError&) {
      continue;
    }
    if (va != vb) return false;
    ++done;
  }
  return true;
}

Scalar random_scalar(std::mt19937_64& rng, int range, int den_range) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, den_range);
  Scalar q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

RatMatrix rat_identity(int n) {
  RatMatrix m(n, std::vector<RatFun>(n));
  for (int i = 0; i < n; ++i) m[i][i] = RatFun(1);
  return m;
}

RatMatrix rat_multiply(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t inner = b.size();
  if (!a.empty() && a[0].size() != inner) throw InvalidArgument("RatMatrix dimension mismatch");
  const std::size_t cols = inner ? b[0].size() : 0;
  RatMatrix out(a.size(), std::vector<RatFun>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

RatMatrix rat_from(const QMatrix& m) {
  RatMatrix out(m.rows(), std::vector<RatFun>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i][j] = RatFun(m(i, j));
  return out;
}

RatMatrix rat_substitute(const RatMatrix& m, const Substitution& s) {
  RatMatrix out = m;
  for (auto& row : out)
    for (auto& e : row) e = e.substitute(s);
  return out;
}

}  // namespace dynwg
