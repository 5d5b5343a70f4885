#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dynwg/error.hpp"
#include "dynwg/linalg.hpp"

// Exact rational functions in x1..xr and h (the equivariant parameter), with
// denominators kept as products of homogeneous degree-1 forms.
namespace dynwg {

inline constexpr int kMaxXVars = 15;
inline constexpr int kNumVars = kMaxXVars + 1;
/// Variable slot of h; x_i (1-based) lives in slot i-1.
inline constexpr int kHbar = kMaxXVars;

std::string variable_name(int slot);

struct Monomial {
  std::array<std::uint16_t, kNumVars> exp{};

  int degree() const;
  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;
};

/// Homogeneous linear form sum_v c_v z_v, stored sparsely by slot.
class LinearForm {
 public:
  using Term = std::pair<int, Scalar>;

  LinearForm() = default;
  static LinearForm x(int i, const Scalar& c = 1);
  static LinearForm hbar(const Scalar& c = 1);
  /// Dense constructor: xs[k] is the coefficient of x_{k+1}.
  static LinearForm from_coeffs(std::span<const Scalar> xs, const Scalar& h);

  Scalar coeff(int slot) const;
  Scalar x_coeff(int i) const { return coeff(i - 1); }
  Scalar h_coeff() const { return coeff(kHbar); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest x index with a nonzero coefficient (0 if none).
  int x_extent() const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm operator*(const Scalar& s) const;

  Scalar evaluate(std::span<const Scalar> xs, const Scalar& h) const;
  std::string str() const;

  bool operator==(const LinearForm& o) const { return terms_ == o.terms_; }
  bool operator<(const LinearForm& o) const { return terms_ < o.terms_; }

 private:
  void add_term(int slot, const Scalar& c);
  std::vector<Term> terms_;  // sorted by slot, nonzero coefficients
};

/// A nonzero linear form normalised so its first nonzero coefficient (in the
/// order x1, x2, ..., h) equals 1.
class DegreeOneForm {
 public:
  /// Splits f = scale * canonical. Throws InvalidArgument on the zero form.
  static std::pair<Scalar, DegreeOneForm> canonicalize(const LinearForm& f);

  const LinearForm& form() const { return form_; }
  std::string str() const { return form_.str(); }

  bool operator==(const DegreeOneForm& o) const { return form_ == o.form_; }
  bool operator<(const DegreeOneForm& o) const { return form_ < o.form_; }

 private:
  explicit DegreeOneForm(LinearForm f) : form_(std::move(f)) {}
  LinearForm form_;
};

/// Images of x_1..x_k under a ring homomorphism fixing h; slots beyond the
/// vector are fixed as well.
struct Substitution {
  std::vector<LinearForm> x_images;

  static Substitution identity(int rank);
  LinearForm apply(const LinearForm& f) const;
};

class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Polynomial() = default;
  explicit Polynomial(const Scalar& c);
  explicit Polynomial(const LinearForm& f);
  static Polynomial monomial(const Monomial& m, const Scalar& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  int degree() const;
  /// The polynomial as a linear form, if it is homogeneous of degree 1.
  std::optional<LinearForm> as_linear_form() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& s) const;
  Polynomial operator*(const LinearForm& f) const;

  /// Exact quotient by a degree-1 form, or nullopt if it does not divide.
  std::optional<Polynomial> divide_exact(const DegreeOneForm& f) const;
  Polynomial substitute(const Substitution& s) const;
  Scalar evaluate(std::span<const Scalar> xs, const Scalar& h) const;
  /// Highest x index occurring (0 if none).
  int x_extent() const;

  std::string str() const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

 private:
  static Polynomial from_unsorted(std::vector<Term> terms);
  std::vector<Term> terms_;  // sorted by monomial, nonzero coefficients
};

/// num / prod f^mult. Canonical: no denominator form divides num, forms sorted
/// and distinct, zero has an empty denominator. Equality is structural.
class RatFun {
 public:
  using Factor = std::pair<DegreeOneForm, int>;

  RatFun() = default;
  RatFun(const Scalar& c);  // NOLINT(google-explicit-constructor)
  RatFun(int c) : RatFun(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit RatFun(Polynomial num);
  explicit RatFun(const LinearForm& f);
  /// num / prod(forms); raw forms may carry scalars and must be nonzero.
  static RatFun quotient(Polynomial num, std::span<const LinearForm> den_forms);

  static RatFun x(int i) { return RatFun(LinearForm::x(i)); }
  static RatFun hbar() { return RatFun(LinearForm::hbar()); }

  const Polynomial& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  int x_extent() const;

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun pow(int n) const;

  /// Reciprocal; the numerator must split into a constant times degree-1
  /// forms, found by trial division against the candidates (and the bare
  /// variables). Throws InvalidArgument otherwise, or on zero.
  RatFun inverse(std::span<const DegreeOneForm> candidates = {}) const;
  RatFun operator/(const RatFun& o) const { return *this * o.inverse(); }

  /// Throws PoleError if a denominator form maps to zero.
  RatFun substitute(const Substitution& s) const;
  /// Throws PoleError if the denominator vanishes at the point.
  Scalar evaluate(std::span<const Scalar> xs, const Scalar& h) const;
  /// Point given as (x1..xr, h).
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Re-runs cancellation; canonical inputs are returned unchanged.
  RatFun normalized() const;

  std::string str() const;
  static RatFun parse(std::string_view text);

  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

 private:
  void cancel();
  Polynomial num_;
  std::vector<Factor> den_;
};

/// Equality test by evaluation at `points` random rational points in `nx`
/// x-variables and h, skipping poles. Independent of the canonical form.
bool equal_by_evaluation(const RatFun& a, const RatFun& b, int nx, std::mt19937_64& rng, int points = 3);

/// Random rational with numerator in [-range, range] and denominator in [1, den_range].
Scalar random_scalar(std::mt19937_64& rng, int range = 50, int den_range = 7);

using RatMatrix = std::vector<std::vector<RatFun>>;

RatMatrix rat_identity(int n);
RatMatrix rat_multiply(const RatMatrix& a, const RatMatrix& b);
RatMatrix rat_from(const QMatrix& m);
RatMatrix rat_substitute(const RatMatrix& m, const Substitution& s);

}  // namespace dynwg
