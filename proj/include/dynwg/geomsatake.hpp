#pragma once

#include <string>
#include <vector>

#include "dynwg/ratfun.hpp"
#include "dynwg/rep.hpp"

// Geometric side in rank 1: torus weights of the slice at the fixed point for
// the two chambers, and the transition operators they induce.
namespace dynwg {

enum class Chamber { E, S };

struct TorusWeightMultiset {
  std::vector<LinearForm> weights;
  RatFun product() const;
};

/// Torus weights of the (lambda - mu)/2-dimensional slice in variable x (the
/// single rank-1 dynamical variable):
///   E: -x + (j - 1) h - ((lambda + mu)/2) h
///   S:  x - j h                                for j = 1..(lambda - mu)/2.
/// Requires 0 <= mu <= lambda and lambda = mu mod 2.
TorusWeightMultiset costalk_weights(int lambda, int mu, Chamber chamber);

struct TransitionScalar {
  RatFun value;
  int lambda = 0;
  int mu = 0;
};

/// prod(S weights) / prod(E weights).
TransitionScalar hyperbolic_transition(int lambda, int mu);

/// prod(b) / prod(a); throws InvalidArgument on a zero form.
RatFun generic_transition(const TorusWeightMultiset& a, const TorusWeightMultiset& b);

struct Rank1Report {
  int lambda = 0;
  int mu = 0;
  RatFun geometric;
  RatFun dynamical_shifted;
  bool equal = false;
};

/// Compares the geometric transition with the rho-shifted rank-1 dynamical
/// coefficient for the same (lambda, mu).
Rank1Report verify_main_theorem_rank1(int lambda, int mu);

struct LeviString {
  int m = 0;
  int k = 0;
  RatFun geometric;          ///< transition with x -> x_i
  RatFun dynamical_shifted;  ///< string-adapted diagonal entry of the shifted block
  bool equal = false;
};

struct LeviReport {
  LieType type;
  Weight hw;
  Weight mu;
  int index = 0;
  std::vector<LeviString> strings;
  /// Geometric block assembled in the standard bases equals the shifted
  /// dynamical block exactly.
  bool block_equal = false;
  bool equal = false;
};

/// Simple-reflection block at a dominant-for-i weight mu versus the rank-1
/// geometric transitions of its sl2 strings. Requires <mu, coroot_i> >= 0.
LeviReport levi_restriction_check(const Irrep& v, int i, const Weight& mu);

}  // namespace dynwg
