#include <doctest.h>

#include <algorithm>

#include "coxkl/braid_verify.hpp"
#include "coxkl/error.hpp"
#include "coxkl/typeb.hpp"

using namespace coxkl;

namespace {

Candidate candidate(const CatalogCase& c, const ParamSet& params) {
  return Candidate(ReflectionSubgroup::from_reflections(catalog_system(c), c.generators), params);
}

Candidate candidate(const std::string& id, int k = 0) {
  const CatalogCase& c = catalog_case(id);
  auto sys = catalog_system(c);
  return candidate(c, k == 0 ? ParamSet::generic(*sys) : ParamSet::specialized(*sys, k));
}

std::vector<Word> sorted(std::vector<Word> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("catalog contents") {
  CHECK(catalog().size() == 6);
  CHECK_THROWS_AS(catalog_case("E8-X"), InvalidInput);
  for (const auto& c : catalog()) {
    CAPTURE(c.id);
    const Candidate cand = candidate(c.id);
    CHECK(cand.quadratic_ok());
    const VerificationReport rep = verify_candidate(cand, c.id);
    if (!c.expected_reps.empty()) CHECK(sorted(rep.rep_words) == sorted(c.expected_reps));
  }
  const VerificationReport b3a1 = verify_candidate(candidate("F4-B3A1"));
  CHECK(b3a1.subgroup_order == 96);
  CHECK(b3a1.reps == 12);
  const VerificationReport g = verify_candidate(candidate("F4-422"));
  CHECK(g.reps == 48);
  CHECK(verify_candidate(candidate("G2-A2")).subgroup_order == 6);
  CHECK(verify_candidate(candidate("F4-C4")).subgroup_order == 384);
}

TEST_CASE("catalog verdicts with equal parameters") {
  for (const auto& c : catalog()) {
    CAPTURE(c.id);
    CHECK(verify_candidate(candidate(c.id, 1)).verdict() == c.expected);
  }
}

TEST_CASE("catalog verdicts with independent parameters") {
  // (H1 H2)^3 - (H2 H1)^3 on the G2 A1 x A1 candidates has entries
  // +-(p^2 - q^2) / (p q^2); nonzero unless p = q.
  CHECK(verify_candidate(candidate("G2-A2")).pass());
  CHECK(verify_candidate(candidate("F4-C4")).pass());
  for (int k : {0, 2, -1}) {
    CAPTURE(k);
    const VerificationReport a = verify_candidate(candidate("G2-A1A1-a", k));
    REQUIRE(a.relations.failures.size() == 1);
    CHECK(a.relations.failures[0].relation == "braid");
    CHECK(a.relations.failures[0].s == 0);
    CHECK(a.relations.failures[0].t == 1);
    CHECK_FALSE(verify_candidate(candidate("G2-A1A1-b", k)).pass());
    CHECK(verify_candidate(candidate("G2-A2", k)).pass());
    CHECK(verify_candidate(candidate("F4-C4", k)).pass());
    CHECK_FALSE(verify_candidate(candidate("F4-422", k)).pass());
    CHECK_FALSE(verify_candidate(candidate("F4-B3A1", k)).pass());
  }
  const VerificationReport r = verify_candidate(candidate("F4-B3A1"));
  CHECK(r.relations.quadratic_checked == 4);
  CHECK(r.relations.braid_checked == 6);
  CHECK(r.relations.failures[0].relation == "braid");
}

TEST_CASE("action tables") {
  CHECK(action_table_lines(candidate("G2-A2")) ==
        std::vector<std::string>{
            "M_f H_1 = M_{f·s1}",
            "M_{f·s1} H_1 = (p - p^-1) M_{f·s1} + M_f",
            "M_f H_2 = q M_f",
            "M_{f·s1} H_2 = q M_{f·s1}",
        });
  CHECK(action_table_lines(candidate("G2-A1A1-b")) ==
        std::vector<std::string>{
            "M_f H_1 = p M_f",
            "M_{f·s2} H_1 = M_{f·s2s1}",
            "M_{f·s2s1} H_1 = (p - p^-1) M_{f·s2s1} + M_{f·s2}",
            "M_f H_2 = M_{f·s2}",
            "M_{f·s2} H_2 = (q - q^-1) M_{f·s2} + M_f",
            "M_{f·s2s1} H_2 = q M_{f·s2s1}",
        });
  const auto f4 = action_table_lines(candidate("F4-C4"));
  REQUIRE(f4.size() == 12);
  CHECK(f4[5] == "M_{f·s1s2} H_2 = (p - p^-1) M_{f·s1s2} + M_{f·s1}");
  CHECK(f4[11] == "M_{f·s1s2} H_4 = q M_{f·s1s2}");

  auto a1 = CoxeterSystem::from_type("A1");
  const Candidate reg(ReflectionSubgroup::from_reflections(a1, {}), ParamSet::generic(*a1));
  CHECK(action_table_lines(reg) ==
        std::vector<std::string>{"M_e H_1 = M_{s1}", "M_{s1} H_1 = (q - q^-1) M_{s1} + M_e"});
}

TEST_CASE("whole group and standard parabolic candidates") {
  for (const std::string type : {"B3", "G2", "A3"}) {
    auto sys = CoxeterSystem::from_type(type);
    const int n = sys->rank();
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> J;
      for (int s = 0; s < n; ++s)
        if (mask >> s & 1) J.push_back(s);
      const Candidate c(ReflectionSubgroup::from_simple(sys, J), ParamSet::generic(*sys));
      CHECK(verify_candidate(c).pass());
      if (mask == (1 << n) - 1) {
        REQUIRE(c.module().dim() == 1);
        for (int s = 0; s < n; ++s) CHECK(c.module().image(0, s) == SparseVec{{0, c.params().of(s)}});
      }
    }
  }
  auto f4 = CoxeterSystem::from_type("F4");
  for (const std::vector<int>& J : {std::vector<int>{0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {1, 2}})
    CHECK(verify_candidate(Candidate(ReflectionSubgroup::from_simple(f4, J), ParamSet::generic(*f4))).pass());
}

TEST_CASE("type-B quasi-parabolic candidates agree with the orbit modules") {
  for (auto [r, m] : {std::pair{1, 1}, std::pair{1, 2}, std::pair{0, 3}})
    for (int d = 1; d <= 3; ++d)
      for (const auto& f : antidominant_words(IndexSet(r, m), d)) {
        CAPTURE(f.to_string());
        const OrbitModule orbit(f, type_b_params(d));
        const Candidate c(orbit.stabilizer(), type_b_params(d));
        CHECK(verify_candidate(c).pass());
        CHECK(c.module() == orbit.module());
      }
}

TEST_CASE("resource cap") {
  auto f4 = CoxeterSystem::from_type("F4");
  CHECK_THROWS_AS(Candidate(ReflectionSubgroup::from_reflections(f4, {}), ParamSet::generic(*f4), 100),
                  ResourceLimit);
}
