#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxkl/error.hpp"
#include "coxkl/reflection_subgroup.hpp"
#include "support/oracles.hpp"

using namespace coxkl;

namespace {

Word w1(std::initializer_list<int> one_based) {
  Word w;
  for (int a : one_based) w.push_back(a - 1);
  return w;
}

std::vector<std::string> labels(const ElementTable& t, const std::vector<Index>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(word_label(t.word(x)));
  return out;
}

Index idx(const SystemPtr& sys, std::initializer_list<int> one_based) {
  return sys->element_table().index_of_word(w1(one_based));
}

// Every subgroup generated by at most `k` reflections of `sys`.
std::vector<SubgroupPtr> small_subgroups(const SystemPtr& sys, int k) {
  const int n = static_cast<int>(sys->positive_roots().size());
  std::set<std::vector<int>> seen;
  std::vector<SubgroupPtr> out;
  std::vector<std::vector<int>> seeds{{}};
  for (int a = 0; a < n; ++a) {
    seeds.push_back({a});
    if (k >= 2)
      for (int b = a + 1; b < n; ++b) {
        seeds.push_back({a, b});
        if (k >= 3)
          for (int c = b + 1; c < n; ++c) seeds.push_back({a, b, c});
      }
  }
  for (const auto& s : seeds) {
    auto g = ReflectionSubgroup::from_roots(sys, s);
    if (seen.insert(g->positive_roots()).second) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("root closure") {
  auto g2 = CoxeterSystem::from_type("G2");
  const int a1 = g2->positive_root_index(g2->simple_root(0));
  CHECK(close_roots(*g2, {a1}) == std::vector<int>{a1});
  const int r121 = g2->root_of_reflection(g2->normal_form(w1({1, 2, 1})));
  const int a2 = g2->positive_root_index(g2->simple_root(1));
  CHECK(close_roots(*g2, {a2, r121}).size() == 3);

  auto f4 = CoxeterSystem::from_type("F4");
  std::vector<int> seed;
  for (auto w : {w1({2}), w1({3}), w1({4}), w1({1, 2, 3, 2, 1})})
    seed.push_back(f4->root_of_reflection(f4->normal_form(w)));
  CHECK(close_roots(*f4, seed).size() == 16);
  CHECK_THROWS_AS(close_roots(*f4, {99}), InvalidInput);
}

TEST_CASE("canonical generators") {
  auto g2 = CoxeterSystem::from_type("G2");
  const int a1 = g2->positive_root_index(g2->simple_root(0));
  CHECK(canonical_generator_roots(*g2, {a1}) == std::vector<int>{a1});
  auto f = ReflectionSubgroup::from_reflections(g2, {w1({2}), w1({1, 2, 1, 2, 1})});
  REQUIRE(f->rank() == 2);
  CHECK(f->canonical_generators()[0].word() == w1({2}));
  CHECK(f->canonical_generators()[1].word() == w1({1, 2, 1, 2, 1}));
  CHECK(f->coxeter_matrix()[0][1] == 2);

  auto full = ReflectionSubgroup::from_simple(g2, {0, 1});
  CHECK(full->canonical_generators()[0] == g2->generator(0));
  CHECK(full->canonical_generators()[1] == g2->generator(1));
  CHECK(full->order() == 12);

  // A subset that is not closed.
  const int a2 = g2->positive_root_index(g2->simple_root(1));
  CHECK_THROWS_AS(canonical_generator_roots(*g2, {a1, a2}), InvalidInput);
  CHECK_THROWS_AS(ReflectionSubgroup::from_reflections(g2, {w1({1, 2})}), InvalidInput);
}

TEST_CASE("G2 subgroups") {
  auto g2 = CoxeterSystem::from_type("G2");
  const auto& t = g2->element_table();
  auto a2 = ReflectionSubgroup::from_reflections(g2, {w1({2}), w1({1, 2, 1})});
  CHECK(a2->order() == 6);
  CHECK_FALSE(a2->is_standard_parabolic());
  CHECK(labels(t, a2->elements()) ==
        std::vector<std::string>{"e", "2", "121", "1212", "2121", "21212"});
  CHECK(a2->length_f(0) == 0);
  CHECK(a2->length_f(idx(g2, {2})) == 1);
  CHECK(a2->length_f(idx(g2, {1, 2, 1})) == 1);
  CHECK(a2->length_f(idx(g2, {2, 1, 2, 1, 2})) == 3);
  CHECK_THROWS_AS(a2->length_f(idx(g2, {1})), DomainError);
  CHECK(labels(t, CosetSystem(a2).reps()) == std::vector<std::string>{"e", "1"});

  auto b = ReflectionSubgroup::from_reflections(g2, {w1({2}), w1({1, 2, 1, 2, 1})});
  CHECK(labels(t, b->elements()) == std::vector<std::string>{"e", "2", "12121", "121212"});
  CHECK(labels(t, CosetSystem(b).reps()) == std::vector<std::string>{"e", "1", "12"});
  auto c = ReflectionSubgroup::from_reflections(g2, {w1({1}), w1({2, 1, 2, 1, 2})});
  CHECK(labels(t, CosetSystem(c).reps()) == std::vector<std::string>{"e", "2", "21"});
}

TEST_CASE("F4 subgroups") {
  auto f4 = CoxeterSystem::from_type("F4");
  const auto& t = f4->element_table();
  auto c4 = ReflectionSubgroup::from_reflections(f4, {w1({2}), w1({3}), w1({4}), w1({1, 2, 3, 2, 1})});
  CHECK(c4->order() == 384);
  CHECK(labels(t, CosetSystem(c4).reps()) == std::vector<std::string>{"e", "1", "12"});
  CHECK(ReflectionSubgroup::from_simple(f4, {1, 2})->is_standard_parabolic());
  CHECK(ReflectionSubgroup::from_roots(f4, {})->is_standard_parabolic());
  CHECK(ReflectionSubgroup::from_roots(f4, {})->order() == 1);

  SystemOptions rev;
  rev.generator_order = {3, 2, 1, 0};
  auto f4r = CoxeterSystem::from_type("F4", rev);
  auto b3a1 = ReflectionSubgroup::from_reflections(
      f4r, {w1({1}), w1({2}), w1({3}), w1({4, 3, 2, 3, 1, 2, 3, 4, 3, 2, 3, 1, 2, 3, 4})});
  CHECK(b3a1->order() == 96);
  auto got = labels(f4r->element_table(), CosetSystem(b3a1).reps());
  const std::vector<std::string> listed{"e",      "4",      "43",      "432",
                                        "4321",   "4323",   "43231",   "43234",
                                        "432312", "432341", "4323123", "4323412"};
  // Displayed in a different order from (length, ShortLex); compare words as a set.
  std::vector<std::string> sorted_listed = listed;
  std::sort(got.begin(), got.end());
  std::sort(sorted_listed.begin(), sorted_listed.end());
  CHECK(got == sorted_listed);
}

TEST_CASE("characterizations of minimal representatives") {
  for (const char* label : {"B2", "B3", "G2"}) {
    auto sys = CoxeterSystem::from_type(label);
    const auto& t = sys->element_table();
    for (const auto& f : small_subgroups(sys, 3)) {
      CAPTURE(label);
      const CosetSystem cs(f);
      CHECK(cs.size() * f->order() == t.size());
      bool unique = false;
      CHECK(testing_support::coset_minima(*f, &unique) == cs.reps());
      CHECK(unique);
      CHECK(f->generators_by_minimality() == f->generator_indices());
      std::vector<Index> refl;
      for (Index w : f->elements())
        if (sys->is_reflection(t.element(w))) refl.push_back(w);
      CHECK(refl.size() == f->positive_roots().size());
      for (Index w = 0; w < t.size(); ++w) {
        bool by_gens = true;
        for (Index s : f->generator_indices())
          by_gens &= t.length(t.multiply(s, w)) > t.length(w);
        bool by_refl = true;
        for (Index r : refl) by_refl &= t.length(t.multiply(r, w)) > t.length(w);
        CHECK(by_gens == cs.contains(w));
        CHECK(by_refl == cs.contains(w));
      }
      if (f->order() <= 100) {
        for (Index r : refl)
          for (Index w : f->elements()) {
            const Index rw = t.multiply(r, w);
            CHECK((t.length(rw) > t.length(w)) == (f->length_f(rw) > f->length_f(w)));
          }
      }
      for (Index sigma : f->elements())
        for (Index w : cs.reps())
          CHECK(t.length(t.multiply(sigma, w)) >= f->length_f(sigma) + t.length(w));
    }
  }
}

TEST_CASE("decomposition") {
  auto b3 = CoxeterSystem::from_type("B3");
  const auto& t = b3->element_table();
  // The three sign changes generate a subgroup of type B1 x B1 x B1.
  auto f = ReflectionSubgroup::from_reflections(b3, {w1({1}), w1({2, 1, 2}), w1({3, 2, 1, 2, 3})});
  CHECK(f->order() == 8);
  CHECK(f->rank() == 3);
  const CosetSystem cs(f);
  std::set<std::pair<Index, Index>> seen;
  for (Index w = 0; w < t.size(); ++w) {
    const auto d = decompose(*f, w);
    CHECK(f->contains(d.sigma));
    CHECK(cs.contains(d.rep));
    CHECK(t.multiply(d.sigma, d.rep) == w);
    // No other factorization w = sigma' rep' with rep' in ^fW.
    int count = 0;
    for (Index sigma : f->elements())
      if (cs.contains(t.multiply(t.inverse(sigma), w))) ++count;
    CHECK(count == 1);
    seen.insert({d.sigma, d.rep});
  }
  CHECK(seen.size() == t.size());
  for (Index r : cs.reps()) {
    const auto d = decompose(*f, r);
    CHECK(d.sigma == 0);
    CHECK(d.rep == r);
  }
  for (Index s : f->generator_indices())
    for (Index r : cs.reps()) {
      const auto d = decompose(*f, t.multiply(s, r));
      CHECK(d.sigma == s);
      CHECK(d.rep == r);
    }
}

TEST_CASE("product decomposition") {
  auto b3 = CoxeterSystem::from_type("B3");
  auto wf = ReflectionSubgroup::from_simple(b3, {0, 1});
  auto wg = ReflectionSubgroup::from_reflections(b3, {w1({1}), w1({2, 1, 2})});
  const auto chk = product_bijection(wg, wf);
  CHECK(chk.bijective());
  CHECK(chk.length_additive);
  CHECK(chk.inner_in_middle * chk.middle_reps == chk.inner_reps);

  const auto same = product_bijection(wf, wf);
  CHECK(same.inner_in_middle == 1);
  CHECK(same.bijective());
  for (const auto& tr : same.triples) CHECK(tr.product == tr.right);

  auto nonpar = ReflectionSubgroup::from_reflections(b3, {w1({1}), w1({3, 2, 1, 2, 3})});
  CHECK_THROWS_AS(product_bijection(ReflectionSubgroup::from_roots(b3, {}), nonpar),
                  PreconditionError);
  CHECK_THROWS_AS(check_product_decomposition(wf, wg), InvalidInput);

  auto f4 = CoxeterSystem::from_type("F4");
  auto c4 = ReflectionSubgroup::from_reflections(f4, {w1({2}), w1({3}), w1({4}), w1({1, 2, 3, 2, 1})});
  auto g = ReflectionSubgroup::from_reflections(f4, {w1({3}), w1({4}), w1({1, 2, 3, 2, 1})});
  const auto f422 = check_product_decomposition(g, c4);
  CHECK(f422.inner_reps == 48);
  CHECK(f422.inner_in_middle == 16);
  CHECK(f422.middle_reps == 3);
  CHECK(f422.bijective());
}
