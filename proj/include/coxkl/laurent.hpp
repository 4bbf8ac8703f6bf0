#pragma once

// Exact Laurent polynomials in a small number of named commuting parameters,
// with integer coefficients of unbounded size.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxkl {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxParameters = 8;
using Exponents = std::array<std::int32_t, kMaxParameters>;

// Ordered list of parameter names. Polynomials compare alphabets by content.
using Alphabet = std::vector<std::string>;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);
// The one-parameter alphabet {"q"} used by every specialized computation.
const AlphabetPtr& q_alphabet();

class LaurentPoly {
 public:
  struct Term {
    Exponents exps{};
    BigInt coeff;
  };

  // The zero polynomial. A polynomial without an alphabet is a pure constant
  // and combines with any alphabet.
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: integers promote implicitly

  static LaurentPoly constant(AlphabetPtr alphabet, const BigInt& c);
  static LaurentPoly monomial(AlphabetPtr alphabet, std::span<const int> exps,
                              const BigInt& c = 1);
  // name^power
  static LaurentPoly variable(AlphabetPtr alphabet, std::string_view name, int power = 1);

  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t num_params() const noexcept { return alphabet_ ? alphabet_->size() : 0; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Ring involution sending every parameter x to x^-1.
  LaurentPoly bar() const;

  // Terms with exponent vector lexicographically greatest first: "q^2 - 2 + q^-2".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) {
    return os << p.to_string();
  }

  // Single-parameter helpers.
  int min_degree() const;  // requires non-zero
  int max_degree() const;
  BigInt coeff_at(int degree) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Term> terms_;  // ascending by exps, no zero coefficients
};

// Sends each named parameter to q^k; names absent from `powers` must be "q"
// itself (which maps to q). Exponent 0 is rejected.
LaurentPoly specialize(const LaurentPoly& x, const std::map<std::string, int>& powers);

// True iff every exponent is <= -1 (one-parameter input).
bool in_qinv_lattice(const LaurentPoly& x);

}  // namespace coxkl
