#include "coxkl/braid_verify.hpp"

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

Word w1(std::initializer_list<int> one_based) {
  Word w;
  for (int s : one_based) w.push_back(s - 1);
  return w;
}

std::vector<CatalogCase> build_catalog() {
  const std::vector<int> f4_order = {3, 2, 1, 0};
  return {
      {"G2-A2", "G2", {}, {w1({2}), w1({1, 2, 1})}, "pass", {w1({}), w1({1})}},
      {"G2-A1A1-a", "G2", {}, {w1({2}), w1({1, 2, 1, 2, 1})}, "pass",
       {w1({}), w1({1}), w1({1, 2})}},
      {"G2-A1A1-b", "G2", {}, {w1({1}), w1({2, 1, 2, 1, 2})}, "pass",
       {w1({}), w1({2}), w1({2, 1})}},
      {"F4-C4", "F4", f4_order, {w1({2}), w1({3}), w1({4}), w1({1, 2, 3, 2, 1})}, "pass",
       {w1({}), w1({1}), w1({1, 2})}},
      {"F4-422", "F4", f4_order, {w1({3}), w1({4}), w1({1, 2, 3, 2, 1})}, "fail", {}},
      {"F4-B3A1", "F4", f4_order,
       {w1({1}), w1({2}), w1({3}), w1({4, 3, 2, 3, 1, 2, 3, 4, 3, 2, 3, 1, 2, 3, 4})}, "fail",
       {w1({}), w1({4}), w1({4, 3}), w1({4, 3, 2}), w1({4, 3, 2, 1}), w1({4, 3, 2, 3}),
        w1({4, 3, 2, 3, 1}), w1({4, 3, 2, 3, 4}), w1({4, 3, 2, 3, 1, 2}), w1({4, 3, 2, 3, 4, 1}),
        w1({4, 3, 2, 3, 1, 2, 3}), w1({4, 3, 2, 3, 4, 1, 2})}},
  };
}

}  // namespace

const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> cases = build_catalog();
  return cases;
}

const CatalogCase& catalog_case(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw InvalidInput("unknown catalog case '" + id + "'");
}

SystemPtr catalog_system(const CatalogCase& c) {
  SystemOptions opts;
  opts.generator_order = c.generator_order;
  return CoxeterSystem::from_type(c.type, opts);
}

std::string word_label(const Word& w, int rank) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (rank > 9 && i) s += ',';
    s += std::to_string(w[i] + 1);
  }
  return s;
}

Candidate::Candidate(SubgroupPtr subgroup, ParamSet params, std::size_t cap) {
  const std::size_t n = subgroup->table().size() / subgroup->order();
  if (n > cap)
    throw ResourceLimit("|^fW| = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  cosets_ = std::make_unique<CosetSystem>(std::move(subgroup));
  module_ = std::make_unique<RightModule>(three_case_module(*cosets_, params));
  quadratic_ok_ = true;
  for (int s = 0; s < module_->rank(); ++s)
    if (!quadratic_holds(*module_, s)) quadratic_ok_ = false;
}

std::vector<std::string> Candidate::basis_names() const {
  const bool trivial = subgroup().order() == 1;
  const ElementTable& t = cosets_->table();
  std::vector<std::string> out;
  for (Index w : cosets_->reps()) {
    const Word& word = t.word(w);
    if (word.empty()) {
      out.push_back(trivial ? "M_e" : "M_f");
      continue;
    }
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) s += "s" + std::to_string(word[i] + 1);
    out.push_back(trivial ? "M_{" + s + "}" : "M_{f·" + s + "}");
  }
  return out;
}

VerificationReport verify_candidate(const Candidate& c, std::string case_id) {
  VerificationReport rep;
  rep.case_id = std::move(case_id);
  rep.subgroup_order = c.subgroup().order();
  rep.reps = c.cosets().size();
  for (const auto& g : c.subgroup().canonical_generators()) rep.canonical_generators.push_back(g.word());
  for (Index w : c.cosets().reps()) rep.rep_words.push_back(c.cosets().table().word(w));
  rep.relations = check_relations(c.module());
  return rep;
}

std::vector<std::string> action_table_lines(const Candidate& c) {
  const std::vector<std::string> names = c.basis_names();
  std::vector<std::string> out;
  for (int s = 0; s < c.module().rank(); ++s)
    for (int i = 0; i < c.module().dim(); ++i)
      out.push_back(names[i] + " H_" + std::to_string(s + 1) + " = " +
                    render_vector(c.module().image(i, s), names, i));
  return out;
}

}  // namespace coxkl
