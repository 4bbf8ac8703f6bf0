#pragma once

#include <random>
#include <vector>

#include "coxkl/laurent.hpp"

namespace testing_support {

// Random sparse polynomial over `alphabet` with exponents in [-3, 3] and
// coefficients in [-5, 5].
inline coxkl::LaurentPoly random_poly(std::mt19937_64& rng, const coxkl::AlphabetPtr& alphabet,
                                      int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> coeff(-5, 5);
  coxkl::LaurentPoly p = coxkl::LaurentPoly::constant(alphabet, 0);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(alphabet->size());
    for (int& x : e) x = exp(rng);
    p += coxkl::LaurentPoly::monomial(alphabet, e, coeff(rng));
  }
  return p;
}

}  // namespace testing_support
