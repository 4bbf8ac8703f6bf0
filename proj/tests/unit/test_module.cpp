#include <doctest.h>

#include "coxkl/error.hpp"
#include "coxkl/module.hpp"

using namespace coxkl;

namespace {

// The one-dimensional module of H(W_J) on which every H_s acts by q_s.
RightModule trivial_module(const HeckeAlgebra& sub) {
  const int n = sub.system().rank();
  std::vector<std::vector<SparseVec>> action(n);
  for (int s = 0; s < n; ++s) action[s].push_back(unit_vector(0, sub.params().of(s)));
  return RightModule(sub.params(), sub.system().coxeter_matrix(),
                     {sub.system().generator_order().begin(), sub.system().generator_order().end()},
                     std::move(action), 1);
}

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> J;
    for (int s = 0; s < n; ++s)
      if (mask >> s & 1) J.push_back(s);
    out.push_back(J);
  }
  return out;
}

}  // namespace

TEST_CASE("sparse vector helpers") {
  SparseVec v;
  add_term(v, 2, LaurentPoly(3));
  add_term(v, 2, LaurentPoly(-3));
  CHECK(v.empty());
  axpy(v, LaurentPoly(2), SparseVec{{0, LaurentPoly(1)}, {1, LaurentPoly(-1)}});
  CHECK(v.size() == 2);
  CHECK(scaled(v, LaurentPoly(0)).empty());
  const auto q = LaurentPoly::variable(q_alphabet(), "q");
  CHECK(render_vector({{0, q - q.bar()}, {1, 1}}, {"M_e", "M_{s1}"}, 1) ==
        "M_{s1} + (q - q^-1) M_e");
  CHECK(render_vector({{0, q}}, {"M_e"}) == "q M_e");
  CHECK(render_vector({}, {"M_e"}) == "0");
}

TEST_CASE("standard parabolic modules agree with induction from the trivial module") {
  for (const char* label : {"B3", "G2", "F4"}) {
    auto sys = CoxeterSystem::from_type(label);
    HeckeAlgebra h(sys, ParamSet::generic(*sys));
    for (const auto& J : subsets(sys->rank())) {
      if (std::string(label) == "F4" && J.size() < 3) continue;  // keep the suite fast
      CAPTURE(label);
      CAPTURE(J.size());
      const CosetSystem cs(ReflectionSubgroup::from_simple(sys, J));
      const RightModule direct = three_case_module(cs, h.params());
      CHECK(check_relations(direct).ok());
      ParabolicEmbedding emb(h, J);
      const RightModule triv = trivial_module(emb.sub());
      const InducedModule ind = induce(triv, emb);
      CHECK(ind.reps == cs.reps());
      CHECK(ind.module == direct);
      BarMap tb{{unit_vector(0, h.params().one())}};
      const BarMap b1 = induced_bar(ind, triv, tb, emb);
      const BarMap b2 = cyclic_bar(direct, cs);
      CHECK(b1.images == b2.images);
      CHECK(b2.is_involution());
    }
  }
}

TEST_CASE("three-case module on the trivial subgroup is the regular representation") {
  auto g2 = CoxeterSystem::from_type("G2");
  HeckeAlgebra h(g2, ParamSet::generic(*g2));
  const CosetSystem cs(ReflectionSubgroup::from_roots(g2, {}));
  const RightModule reg = three_case_module(cs, h.params());
  REQUIRE(reg.dim() == 12);
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i < 12; ++i) {
      const HeckeElement x = h.mul_by_generator(h.basis(static_cast<Index>(i)), s);
      SparseVec expect;
      for (const auto& [w, c] : x.coeffs) add_term(expect, static_cast<int>(w), c);
      CHECK(reg.image(i, s) == expect);
    }
  const RelationReport r = check_relations(reg);
  CHECK(r.ok());
  CHECK(r.quadratic_checked == 2);
  CHECK(r.braid_checked == 1);
}

TEST_CASE("relation checker reports a broken module") {
  auto a2 = CoxeterSystem::from_type("A2");
  const ParamSet ps = ParamSet::specialized(*a2, 1);
  const auto q = ps.of(0);
  // H_1 acts by q and H_2 by -q^-1 on a line: quadratic relations hold, braid fails.
  std::vector<std::vector<SparseVec>> action{{unit_vector(0, q)}, {unit_vector(0, -q.bar())}};
  RightModule m(ps, a2->coxeter_matrix(), {0, 1}, action);
  const RelationReport r = check_relations(m);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].relation == "braid");
  CHECK(r.failures[0].witness == 0);
  std::vector<std::vector<SparseVec>> bad{{unit_vector(0, q * q)}, {unit_vector(0, q)}};
  CHECK_FALSE(quadratic_holds(RightModule(ps, a2->coxeter_matrix(), {0, 1}, bad), 0));
  CHECK_THROWS_AS(RightModule(ps, a2->coxeter_matrix(), {0, 1}, {{unit_vector(3, q)}, {unit_vector(0, q)}}),
                  InvalidInput);
}
