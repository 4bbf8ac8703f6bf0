#pragma once

// Candidate modules for arbitrary reflection subgroups: the three-case action
// on ^fW, mechanical relation checks, and the built-in catalog of G2 and F4
// subgroups.

#include <memory>
#include <string>
#include <vector>

#include "coxkl/module.hpp"

namespace coxkl {

struct CatalogCase {
  std::string id;
  std::string type;
  std::vector<int> generator_order;  // empty = index order
  std::vector<Word> generators;      // 0-based reflection words
  std::string expected;              // expected verdict
  std::vector<Word> expected_reps;   // displayed ^fW, when given
};

const std::vector<CatalogCase>& catalog();
// InvalidInput for an unknown id.
const CatalogCase& catalog_case(const std::string& id);
SystemPtr catalog_system(const CatalogCase& c);

class Candidate {
 public:
  // ResourceLimit when |^fW| exceeds `cap`.
  Candidate(SubgroupPtr subgroup, ParamSet params, std::size_t cap = 4096);

  const ReflectionSubgroup& subgroup() const noexcept { return cosets_->subgroup(); }
  const CosetSystem& cosets() const noexcept { return *cosets_; }
  const RightModule& module() const noexcept { return *module_; }
  const ParamSet& params() const noexcept { return module_->params(); }
  const CoxeterSystem& system() const noexcept { return subgroup().ambient(); }
  // Quadratic relations, checked on construction.
  bool quadratic_ok() const noexcept { return quadratic_ok_; }

  // "M_f", "M_{f·s1s2}"; "M_e", "M_{s1}" when W_f is trivial.
  std::vector<std::string> basis_names() const;

 private:
  std::unique_ptr<CosetSystem> cosets_;
  std::unique_ptr<RightModule> module_;
  bool quadratic_ok_ = false;
};

struct VerificationReport {
  std::string case_id;
  std::size_t subgroup_order = 0;
  std::size_t reps = 0;
  std::vector<Word> canonical_generators;
  std::vector<Word> rep_words;
  RelationReport relations;
  bool pass() const { return relations.ok(); }
  std::string verdict() const { return pass() ? "pass" : "fail"; }
};

VerificationReport verify_candidate(const Candidate& c, std::string case_id = "");

// One line per generator and basis vector, generators in index order:
// "M_{f·s1} H_1 = (p - p^-1) M_{f·s1} + M_f".
std::vector<std::string> action_table_lines(const Candidate& c);

// Word with 1-based letters concatenated ("432") or comma separated for rank > 9.
std::string word_label(const Word& w, int rank);

}  // namespace coxkl
