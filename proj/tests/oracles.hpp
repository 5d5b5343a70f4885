#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: Cartan matrices are literal tables, root systems and Weyl
// groups are enumerated by brute force, and the rank-1 formulas are evaluated
// factor by factor at rational points.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using IntMatrix = std::vector<std::vector<int>>;
using IntVec = std::vector<int>;

/// A[i][j] = <alpha_j, coroot_i>, Bourbaki numbering (B2: alpha_1 long, G2: alpha_1 short).
IntMatrix cartan(const std::string& type);

/// Positive roots in simple-root coordinates, by reflection closure.
std::vector<IntVec> positive_roots(const IntMatrix& a);
/// Positive coroots in simple-coroot coordinates (roots of the transpose).
std::vector<IntVec> positive_coroots(const IntMatrix& a);

struct WeylElementData {
  IntVec word;  ///< rightmost letter first applied; 1-based letters
  int sign;     ///< (-1)^length
};
/// Every element of W with one reduced word each (breadth-first by length).
std::vector<WeylElementData> weyl_group(const IntMatrix& a);

/// s_i in weight coordinates.
IntVec reflect(const IntMatrix& a, int i, const IntVec& mu);
IntVec act(const IntMatrix& a, const IntVec& word, const IntVec& mu);

/// Kostant's multiplicity formula with a memoized partition function.
long kostant_multiplicity(const IntMatrix& a, const IntVec& hw, const IntVec& mu);
/// All weights with positive multiplicity, via Kostant.
std::map<IntVec, long> kostant_character(const IntMatrix& a, const IntVec& hw);
/// prod over positive roots of (lambda + rho, beta)/(rho, beta), by the symmetrized form.
long weyl_dimension(const IntMatrix& a, const IntVec& hw);

/// sl2 in the basis v_j = f^j/j! v_hw, j = 0..n: returns (e, f, h) as dense matrices.
struct Sl2Rep {
  std::vector<std::vector<Q>> e, f, h;
};
Sl2Rep sl2_divided_power_rep(int n);

// Rank-1 formulas of the paper, evaluated factor by factor.
/// A_s(x) v_mu for V^lambda, mu >= 0.
Q dynamical_rank1(int lambda, int mu, const Q& x, const Q& h);
/// A_s(-x - h) v_mu, as printed (not derived from the previous one).
Q dynamical_rank1_shifted(int lambda, int mu, const Q& x, const Q& h);
/// Products of the torus weights of the two chambers.
Q costalk_e(int lambda, int mu, const Q& x, const Q& h);
Q costalk_s(int lambda, int mu, const Q& x, const Q& h);

}  // namespace oracle
