#include <doctest.h>

#include <random>

#include "coxkl/error.hpp"
#include "coxkl/laurent.hpp"
#include "support/random_poly.hpp"

using coxkl::LaurentPoly;
using testing_support::random_poly;

namespace {

const coxkl::AlphabetPtr& pq() {
  static const auto a = coxkl::make_alphabet({"p", "q"});
  return a;
}

LaurentPoly q(int k = 1) { return LaurentPoly::variable(coxkl::q_alphabet(), "q", k); }
LaurentPoly p2(int k = 1) { return LaurentPoly::variable(pq(), "p", k); }
LaurentPoly q2(int k = 1) { return LaurentPoly::variable(pq(), "q", k); }

}  // namespace

TEST_CASE("laurent arithmetic examples") {
  CHECK((q() - q(-1)) + q(-1) == q());
  CHECK((q() + q(-1)) * (q() - q(-1)) == q(2) - q(-2));
  const LaurentPoly d = p2() - p2(-1);
  CHECK(d * d == p2(2) - 2 + p2(-2));
  CHECK((d * d).to_string() == "p^2 - 2 + p^-2");
  CHECK((q(2) - 2 + q(-2)).to_string() == "q^2 - 2 + q^-2");
  CHECK((p2(2) * q2(-1) * 3).to_string() == "3*p^2*q^-1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK((-q(-1)).to_string() == "-q^-1");
}

TEST_CASE("alphabet mismatch is rejected") {
  auto other = coxkl::make_alphabet({"q", "r"});
  const LaurentPoly r = LaurentPoly::variable(other, "r");
  CHECK_THROWS_AS(q2() + r, coxkl::InvalidInput);
  CHECK_THROWS_AS(q2() * r, coxkl::InvalidInput);
  CHECK_THROWS_AS(coxkl::make_alphabet({"q", "q"}), coxkl::InvalidInput);
  // Plain integers combine with anything.
  CHECK((r + 1) - 1 == r);
}

TEST_CASE("bar involution") {
  CHECK(q().bar() == q(-1));
  CHECK((q() - q(-1)).bar() == -(q() - q(-1)));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly x = random_poly(rng, pq());
    const LaurentPoly y = random_poly(rng, pq());
    CHECK(x.bar().bar() == x);
    CHECK((x * y).bar() == x.bar() * y.bar());
    CHECK((x + y).bar() == x.bar() + y.bar());
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng, pq());
    const LaurentPoly b = random_poly(rng, pq());
    const LaurentPoly c = random_poly(rng, pq());
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a - a == LaurentPoly());
    CHECK(a * 1 == a);
  }
}

TEST_CASE("specialization") {
  const LaurentPoly d = p2() - p2(-1);
  CHECK(coxkl::specialize(d, {{"p", 1}}) == q() - q(-1));
  CHECK(coxkl::specialize(p2() * q2(), {{"p", 2}}) == q(3));
  CHECK_THROWS_AS(coxkl::specialize(d, {{"p", 0}}), coxkl::InvalidInput);
  CHECK_THROWS_AS(coxkl::specialize(d, {}), coxkl::InvalidInput);

  std::mt19937_64 rng(3);
  for (int k : {-2, -1, 1, 3}) {
    const std::map<std::string, int> m{{"p", k}};
    for (int i = 0; i < 100; ++i) {
      const LaurentPoly x = random_poly(rng, pq());
      const LaurentPoly y = random_poly(rng, pq());
      CHECK(coxkl::specialize(x.bar(), m) == coxkl::specialize(x, m).bar());
      CHECK(coxkl::specialize(x * y, m) == coxkl::specialize(x, m) * coxkl::specialize(y, m));
      CHECK(coxkl::specialize(x + y, m) == coxkl::specialize(x, m) + coxkl::specialize(y, m));
    }
  }
}

TEST_CASE("q^-1 Z[q^-1] membership") {
  CHECK(coxkl::in_qinv_lattice(q(-1) + 3 * q(-2)));
  CHECK_FALSE(coxkl::in_qinv_lattice(LaurentPoly::constant(coxkl::q_alphabet(), 1)));
  CHECK(coxkl::in_qinv_lattice(LaurentPoly()));
  CHECK_FALSE(coxkl::in_qinv_lattice(q(-1) + q()));
  CHECK_THROWS_AS(coxkl::in_qinv_lattice(p2()), coxkl::InvalidInput);
}

TEST_CASE("single parameter degrees") {
  const LaurentPoly x = q(-2) * 4 + q(3) - 7;
  CHECK(x.min_degree() == -2);
  CHECK(x.max_degree() == 3);
  CHECK(x.coeff_at(0) == -7);
  CHECK(x.coeff_at(1) == 0);
  CHECK_THROWS_AS(LaurentPoly().min_degree(), coxkl::DomainError);
}

TEST_CASE("big coefficients stay exact") {
  LaurentPoly x = q() + 1;
  LaurentPoly acc = 1;
  for (int i = 0; i < 80; ++i) acc *= x;
  // Middle binomial coefficient C(80,40).
  CHECK(acc.coeff_at(40) == coxkl::BigInt("107507208733336176461620"));
}
