#include <doctest.h>

#include <random>

#include "coxkl/coxeter.hpp"
#include "coxkl/error.hpp"
#include "support/oracles.hpp"

using namespace coxkl;

namespace {

Word w1(std::initializer_list<int> one_based) {
  Word w;
  for (int a : one_based) w.push_back(a - 1);
  return w;
}

}  // namespace

TEST_CASE("system sizes") {
  struct Row {
    const char* label;
    std::size_t roots, order;
  } rows[] = {{"A1", 1, 2},  {"A2", 3, 6},   {"B2", 4, 8},    {"G2", 6, 12},
              {"B3", 9, 48}, {"C3", 9, 48},  {"A3", 6, 24},   {"D4", 12, 192},
              {"F4", 24, 1152}, {"E6", 36, 51840}};
  for (const auto& r : rows) {
    CAPTURE(r.label);
    auto sys = CoxeterSystem::from_type(r.label);
    CHECK(sys->positive_roots().size() == r.roots);
    CHECK(sys->element_table().size() == r.order);
    CHECK(sys->element_table().length(sys->element_table().longest()) == static_cast<int>(r.roots));
  }
}

TEST_CASE("unsupported and invalid inputs") {
  CHECK_THROWS_AS(CoxeterSystem::from_type("H3"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_type("I5"), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_type("X4"), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::from_coxeter_matrix({{1, 5}, {5, 1}}), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_coxeter_matrix({{1, 8}, {8, 1}}), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_coxeter_matrix({{1, 0}, {0, 1}}), UnsupportedType);
  CHECK_THROWS_AS(CoxeterSystem::from_coxeter_matrix({{1, 3}, {4, 1}}), InvalidInput);
  CHECK_THROWS_AS(CoxeterSystem::from_coxeter_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}),
                  UnsupportedType);
  SystemOptions small;
  small.element_cap = 100;
  CHECK_THROWS_AS(CoxeterSystem::from_type("F4", small)->element_table(), ResourceLimit);
  auto g2 = CoxeterSystem::from_type("G2");
  CHECK_THROWS_AS(g2->normal_form(Word{2}), InvalidInput);
  auto other = CoxeterSystem::from_type("G2");
  CHECK_THROWS_AS(g2->multiply(g2->generator(0), other->generator(0)), InvalidInput);
}

TEST_CASE("Coxeter matrix input matches type labels") {
  auto m = CoxeterSystem::from_coxeter_matrix({{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}});
  CHECK(m->element_table().size() == 1152);
  CHECK(m->positive_roots().size() == 24);
  CHECK(m->param_of_generator(0) == m->param_of_generator(1));
  CHECK(m->param_of_generator(2) == m->param_of_generator(3));
  CHECK(m->param_of_generator(0) != m->param_of_generator(2));
}

TEST_CASE("parameter conventions") {
  auto f4 = CoxeterSystem::from_type("F4");
  CHECK(f4->param_of_generator(0) == "p");
  CHECK(f4->param_of_generator(1) == "p");
  CHECK(f4->param_of_generator(2) == "q");
  CHECK(f4->param_of_generator(3) == "q");
  auto g2 = CoxeterSystem::from_type("G2");
  CHECK(g2->param_of_generator(0) == "p");
  CHECK(g2->param_of_generator(1) == "q");
  auto b4 = CoxeterSystem::from_type("B4");
  CHECK(b4->param_of_generator(0) == "p");
  for (int s = 1; s < 4; ++s) CHECK(b4->param_of_generator(s) == "q");
  auto a3 = CoxeterSystem::from_type("A3");
  CHECK(a3->parameter_alphabet()->size() == 1);
  for (const char* label : {"B3", "F4", "G2", "D4", "C3"}) {
    auto sys = CoxeterSystem::from_type(label);
    for (int s = 0; s < sys->rank(); ++s)
      for (int t = 0; t < sys->rank(); ++t)
        if (sys->conjugate_generators(s, t))
          CHECK(sys->param_of_generator(s) == sys->param_of_generator(t));
  }
  CHECK(f4->conjugate_generators(0, 1));
  CHECK_FALSE(f4->conjugate_generators(1, 2));
}

TEST_CASE("root action examples") {
  auto g2 = CoxeterSystem::from_type("G2");
  const Root a1 = g2->simple_root(0), a2 = g2->simple_root(1);
  CHECK(g2->root_action(g2->identity(), a1) == a1);
  CHECK(g2->root_action(g2->generator(0), a1) == -a1);
  // s1(a2) = a2 - a_{12} a1 with a_{12} = <a2, a1^vee>.
  Root expect = a2;
  expect.coords[0] -= g2->cartan_matrix()[0][1];
  CHECK(g2->root_action(g2->generator(0), a2) == expect);
  CHECK_THROWS_AS(g2->root_action(g2->identity(), Root{{1, -1}}), InvalidInput);
  // The long root is alpha_1.
  CHECK(g2->bilinear(a1, a1) == 3 * g2->bilinear(a2, a2));
}

TEST_CASE("root_action is a homomorphism") {
  for (const char* label : {"B2", "G2"}) {
    auto sys = CoxeterSystem::from_type(label);
    const auto& t = sys->element_table();
    for (std::size_t u = 0; u < t.size(); ++u)
      for (std::size_t v = 0; v < t.size(); ++v)
        for (const Root& b : sys->positive_roots()) {
          const auto& eu = t.element(u);
          const auto& ev = t.element(v);
          CHECK(sys->root_action(sys->multiply(eu, ev), b) ==
                sys->root_action(eu, sys->root_action(ev, b)));
        }
  }
  auto f4 = CoxeterSystem::from_type("F4");
  const auto& t = f4->element_table();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, t.size() - 1);
  for (int i = 0; i < 300; ++i) {
    const auto& u = t.element(pick(rng));
    const auto& v = t.element(pick(rng));
    const Root& b = f4->positive_roots()[i % 24];
    CHECK(f4->root_action(f4->multiply(u, v), b) == f4->root_action(u, f4->root_action(v, b)));
  }
}

TEST_CASE("normal forms") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK(a2->normal_form(w1({1, 1})).is_identity());
  CHECK(a2->normal_form(w1({2, 1, 2})).word() == w1({1, 2, 1}));
  CHECK(a2->normal_form(w1({1, 2, 1})).word() == w1({1, 2, 1}));
  auto g2 = CoxeterSystem::from_type("G2");
  const auto x = g2->normal_form(w1({2, 1, 2, 1, 2, 1}));
  CHECK(x == g2->normal_form(w1({1, 2, 1, 2, 1, 2})));
  CHECK(x.word() == w1({1, 2, 1, 2, 1, 2}));
  // Idempotence and reducedness on all of B3.
  auto b3 = CoxeterSystem::from_type("B3");
  for (const auto& w : b3->enumerate_elements()) {
    CHECK(b3->normal_form(w.word()) == w);
    CHECK(b3->inversion_set(w).size() == w.length());
    CHECK(b3->inversion_set(b3->inverse(w)).size() == w.length());
  }
  // Generator order changes the chosen word.
  SystemOptions rev;
  rev.generator_order = {1, 0};
  auto a2r = CoxeterSystem::from_type("A2", rev);
  CHECK(a2r->normal_form(w1({1, 2, 1})).word() == w1({2, 1, 2}));
}

TEST_CASE("lengths and descents") {
  auto g2 = CoxeterSystem::from_type("G2");
  CHECK(g2->length(g2->identity()) == 0);
  CHECK(g2->element_table().length(g2->element_table().longest()) == 6);
  CHECK(g2->inversion_set(g2->generator(0)) == std::vector<int>{0});
  for (const char* label : {"B3", "F4"}) {
    auto sys = CoxeterSystem::from_type(label);
    const auto& t = sys->element_table();
    for (ElementTable::Index w = 0; w < t.size(); w += (t.size() > 200 ? 7 : 1)) {
      const auto& e = t.element(w);
      const auto rd = sys->right_descents(e);
      for (int s = 0; s < sys->rank(); ++s) {
        const int d = t.length(t.right_mul(w, s)) - t.length(w);
        CHECK((d == 1 || d == -1));
        const bool desc = d < 0;
        CHECK(desc == (std::find(rd.begin(), rd.end(), s) != rd.end()));
        CHECK(desc == sys->root_action(e, sys->simple_root(s)).is_negative());
      }
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword oracle") {
  auto a2 = CoxeterSystem::from_type("A2");
  CHECK_FALSE(a2->bruhat_leq(a2->generator(0), a2->generator(1)));
  for (const char* label : {"B2", "G2", "A3"}) {
    auto sys = CoxeterSystem::from_type(label);
    const auto& t = sys->element_table();
    for (ElementTable::Index u = 0; u < t.size(); ++u) {
      CHECK(t.bruhat_leq(0, u));
      for (ElementTable::Index w = 0; w < t.size(); ++w) {
        const bool oracle = testing_support::bruhat_by_subwords(t, u, w);
        CHECK(t.bruhat_leq(u, w) == oracle);
        if (label[0] != 'A') CHECK(sys->bruhat_leq(t.element(u), t.element(w)) == oracle);
      }
    }
  }
}

TEST_CASE("reflections and roots") {
  for (const char* label : {"B3", "G2", "F4"}) {
    auto sys = CoxeterSystem::from_type(label);
    const auto& roots = sys->positive_roots();
    std::size_t reflections = 0;
    for (const auto& w : sys->enumerate_elements())
      if (sys->is_reflection(w)) ++reflections;
    CHECK(reflections == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const auto t = sys->reflection_of_root(static_cast<int>(i));
      CHECK(sys->root_of_reflection(t) == static_cast<int>(i));
      const long long bb = sys->bilinear(roots[i], roots[i]);
      for (const Root& v : roots) {
        const long long c = 2 * sys->bilinear(v, roots[i]) / bb;
        Root expect = v;
        for (std::size_t k = 0; k < expect.coords.size(); ++k)
          expect.coords[k] -= static_cast<int>(c * roots[i].coords[k]);
        CHECK(sys->root_action(t, v) == expect);
      }
    }
    CHECK_THROWS_AS(sys->root_of_reflection(sys->identity()), DomainError);
  }
}

TEST_CASE("enumeration order") {
  auto a1 = CoxeterSystem::from_type("A1");
  const auto els = a1->enumerate_elements();
  REQUIRE(els.size() == 2);
  CHECK(els[0].is_identity());
  CHECK(els[1].word() == Word{0});
  auto b3 = CoxeterSystem::from_type("B3");
  const auto all = b3->enumerate_elements();
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(b3->shortlex_less(all[i - 1].word(), all[i].word()));
  CHECK(word_label(w1({4, 3, 2})) == "432");
  CHECK(word_label({}) == "e");
}
