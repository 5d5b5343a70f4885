#pragma once

#include <random>
#include <string>
#include <vector>

#include "dynwg/ratfun.hpp"
#include "dynwg/rep.hpp"
#include "dynwg/rootdata.hpp"

// Dynamical Weyl group operators A_{w,V}(x), restricted to a dominant source
// weight space, as matrices of exact rational functions in x_i = <x, coroot_i>
// and h.
namespace dynwg {

/// How the dynamical variable is twisted between the steps of a reduced word.
///  - Shifted: step t sees <w_{t-1} . x, coroot_{i_t}> for the shifted action
///    w . x = w(x + h rho) - h rho, i.e. <x, gamma_t> + (ht(gamma_t) - 1) h.
///    This is the convention under which products along reduced words are
///    independent of the word.
///  - Linear: <x, gamma_t>, the unshifted action. Kept for comparison only;
///    it is not word-independent.
enum class Twist { Shifted, Linear };

struct OperatorBlock {
  LieType type;
  Weight hw;
  Weight source;
  Weight target;
  WeylWord word;
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  /// dim V_target x dim V_source.
  RatMatrix matrix;

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }
  /// Exact equality of shape, endpoints and entries (the word may differ).
  bool same_operator(const OperatorBlock& o) const;
  std::string render() const;
};

/// (-1)^k prod_{j=1..k} (xi + (j+1)h) / (xi + (j-m+k)h), the rank-1 operator
/// on the vector of weight m - 2k in the string of highest weight m.
/// Requires k >= 0 and m - 2k >= 0.
RatFun rank1_coefficient(int m, int k, const LinearForm& xi);

/// Dynamical variable of a step with crossing coroot gamma.
LinearForm step_variable(const CorootVector& gamma, Twist twist = Twist::Shifted);

/// A_{s_i}(xi) on V_nu -> V_{s_i nu}; requires <nu, coroot_i> >= 0.
OperatorBlock simple_reflection_block(const Irrep& v, int i, const Weight& nu, const LinearForm& xi);

/// Composite along a reduced word, rightmost letter first. Requires a
/// dominant weight mu of v.
OperatorBlock word_operator_block(const Irrep& v, const WeylWord& w, const Weight& mu, Twist twist = Twist::Shifted);

/// word_operator_block on the canonical reduced word of w.
OperatorBlock dynamical_operator(const Irrep& v, const WeylElement& w, const Weight& mu);

/// x_i -> -x_i - h for all i (valid since <rho, coroot_i> = 1).
Substitution rho_shift_substitution(int rank);
OperatorBlock rho_shift(const OperatorBlock& b);

/// Entries at h = 0, checked for x-independence at two random points. Throws
/// PoleError on a pole at h = 0 and Error on x-dependence.
QMatrix classical_limit(const OperatorBlock& b, std::mt19937_64& rng);

enum class Locality {
  /// Every factor is <x, gamma> - m h with gamma > 0 and m >= 0.
  Plain,
  /// Every factor is <x + h rho, gamma> - m h with gamma > 0 and m >= 1.
  RhoShifted,
};

/// Denominator factors of the block that are not of the required shape.
std::vector<std::string> denominator_locality_violations(const OperatorBlock& b, const RootSystem& rs,
                                                         Locality mode);

}  // namespace dynwg
