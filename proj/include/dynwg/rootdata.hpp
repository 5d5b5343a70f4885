#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dynwg/error.hpp"

// Root data of the group whose representations are studied (the dual group in
// the geometric picture). Simple indices are 1-based everywhere in the public
// API, matching the text formats ("1,2,1"). Numbering is Bourbaki's.
namespace dynwg {

struct LieType {
  char series = 'A';
  int rank = 1;

  /// Parses "A1".."G2"; throws InvalidArgument on an invalid series/rank pair.
  static LieType parse(std::string_view text);
  std::string name() const;

  auto operator<=>(const LieType&) const = default;
};

void validate(const LieType& t);

/// A[i][j] = <alpha_j, coroot_i>, 0-based storage.
using CartanMatrix = std::vector<std::vector<int>>;

CartanMatrix cartan_matrix(const LieType& t);

/// Integral weight in fundamental-weight coordinates: coords[i] = <mu, coroot_{i+1}>.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) : coords(c) {}

  int rank() const { return static_cast<int>(coords.size()); }
  int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

  static Weight parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const Weight&) const = default;
};

/// Coroot-lattice element in the basis of simple coroots. Elements of the
/// coroot lattice are integral combinations, so integers suffice.
struct CorootVector {
  std::vector<int> coords;

  CorootVector() = default;
  explicit CorootVector(std::vector<int> c) : coords(std::move(c)) {}
  CorootVector(std::initializer_list<int> c) : coords(c) {}

  bool is_positive() const;
  bool is_zero() const;
  /// Sum of coordinates, i.e. <rho, gamma>.
  int height() const;
  std::string str() const;

  auto operator<=>(const CorootVector&) const = default;
};

/// Word in simple reflections. The rightmost letter acts first:
/// letters = [i_l, ..., i_1] represents s_{i_l} ... s_{i_1}.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> l) : letters(std::move(l)) {}
  WeylWord(std::initializer_list<int> l) : letters(l) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  static WeylWord parse(std::string_view text);
  std::string str() const;

  auto operator<=>(const WeylWord&) const = default;
};

int pairing(const Weight& mu, const CorootVector& gamma);
bool is_dominant(const Weight& mu);

class RootSystem;

/// Weyl group element, identified by its action on the regular weight rho.
struct WeylElement {
  Weight rho_image;

  static WeylElement from_word(const RootSystem& rs, const WeylWord& w);
  auto operator<=>(const WeylElement&) const = default;
};

class RootSystem {
 public:
  explicit RootSystem(LieType t);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  /// 1-based entry A[i][j] = <alpha_j, coroot_i>.
  int cartan(int i, int j) const;

  /// Simple root alpha_i in fundamental coordinates (column i of A).
  Weight simple_root(int i) const;
  Weight rho() const;

  Weight simple_reflection(int i, const Weight& mu) const;
  Weight act(const WeylWord& w, const Weight& mu) const;
  CorootVector reflect_coroot(int i, const CorootVector& gamma) const;
  CorootVector simple_coroot(int i) const;

  bool is_reduced(const WeylWord& w) const;
  /// gamma_t = s_{i_1} ... s_{i_{t-1}} (coroot_{i_t}), t = 1..l, in
  /// application order. Throws NotReduced for a non-reduced word.
  std::vector<CorootVector> crossing_coroots(const WeylWord& w) const;
  /// All reduced words of the element of w (braid-move closure), sorted
  /// lexicographically and truncated to cap.
  std::vector<WeylWord> all_reduced_words(const WeylWord& w, int cap) const;
  /// Lexicographically smallest reduced word of the element.
  WeylWord canonical_word(const WeylElement& w) const;
  WeylWord canonical_word(const WeylWord& w) const;

  const std::vector<CorootVector>& positive_coroots() const { return positive_coroots_; }
  /// Positive roots in simple-root coordinates.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }
  WeylWord longest_element() const;
  CorootVector two_rho_check() const;

  /// Order of s_i s_j (2, 3, 4 or 6).
  int braid_order(int i, int j) const;

  /// W-invariant form on weights, normalised by (alpha, alpha) = 2 for the
  /// shortest simple root.
  mpq_class inner_product(const Weight& a, const Weight& b) const;
  /// Converts simple-root coordinates to fundamental coordinates.
  Weight root_to_weight(const std::vector<int>& root_coords) const;

  /// W-orbit of a weight, sorted.
  std::vector<Weight> orbit(const Weight& mu) const;

 private:
  void check_index(int i) const;
  void check_weight(const Weight& mu) const;

  LieType type_;
  CartanMatrix cartan_;
  std::vector<CorootVector> positive_coroots_;
  std::vector<std::vector<int>> positive_roots_;
  std::vector<std::vector<mpq_class>> form_;  // (omega_i, omega_j)
};

}  // namespace dynwg

template <>
struct std::hash<dynwg::Weight> {
  std::size_t operator()(const dynwg::Weight& w) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int c : w.coords) h ^= std::hash<int>{}(c) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
  }
};
