#pragma once

#include <random>

#include "dynwg/ratfun.hpp"

// Seeded random rational functions built from degree-1 factors, in x1, x2, h.
namespace testgen {

inline dynwg::LinearForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  while (true) {
    dynwg::LinearForm f = dynwg::LinearForm::x(1, c(rng)) + dynwg::LinearForm::x(2, c(rng)) +
                          dynwg::LinearForm::hbar(c(rng));
    if (!f.is_zero()) return f;
  }
}

/// The factors are kept so that the reciprocal can be built as constructed.
struct Factored {
  dynwg::Scalar lead;
  std::vector<dynwg::LinearForm> num, den;
  dynwg::RatFun value() const {
    dynwg::Polynomial p(lead);
    for (const auto& f : num) p = p * f;
    return dynwg::RatFun::quotient(std::move(p), den);
  }
  dynwg::RatFun reciprocal() const {
    dynwg::Polynomial p(dynwg::Scalar(1) / lead);
    for (const auto& f : den) p = p * f;
    return dynwg::RatFun::quotient(std::move(p), num);
  }
};

inline Factored random_factors(std::mt19937_64& rng, int max_factors = 3) {
  std::uniform_int_distribution<int> n(0, max_factors);
  std::uniform_int_distribution<int> c(-5, 5);
  Factored out;
  int k = c(rng);
  if (k == 0) k = 1;
  out.lead = dynwg::Scalar(k, std::uniform_int_distribution<int>(1, 4)(rng));
  out.lead.canonicalize();
  for (int a = n(rng); a > 0; --a) out.num.push_back(random_form(rng));
  for (int a = n(rng); a > 0; --a) out.den.push_back(random_form(rng));
  return out;
}

inline dynwg::RatFun random_factored(std::mt19937_64& rng, int max_factors = 3) {
  std::uniform_int_distribution<int> n(0, max_factors);
  std::uniform_int_distribution<int> c(-5, 5);
  int k = c(rng);
  if (k == 0) k = 1;
  dynwg::Scalar lead(k, std::uniform_int_distribution<int>(1, 4)(rng));
  lead.canonicalize();
  dynwg::Polynomial num(lead);
  for (int a = n(rng); a > 0; --a) num = num * random_form(rng);
  std::vector<dynwg::LinearForm> den;
  for (int a = n(rng); a > 0; --a) den.push_back(random_form(rng));
  return dynwg::RatFun::quotient(std::move(num), den);
}

/// x1 -> a x1 + b x2 + c h, x2 -> ... with small integer coefficients.
inline dynwg::Substitution random_substitution(std::mt19937_64& rng) {
  dynwg::Substitution s;
  s.x_images = {random_form(rng), random_form(rng)};
  return s;
}

}  // namespace testgen
