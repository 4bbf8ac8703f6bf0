#pragma once

// Reflection subgroups W_f of a finite Coxeter group W, their canonical
// (Dyer) Coxeter generators S_f, the internal length l_f, and the sets ^fW of
// minimal length right coset representatives.

#include <memory>
#include <vector>

#include "coxkl/coxeter.hpp"

namespace coxkl {

using Index = ElementTable::Index;

// Least set of positive roots containing `seed` and closed under mutual
// reflection (images replaced by their positive representative).
std::vector<int> close_roots(const CoxeterSystem& w, std::vector<int> seed);

// Canonical simple roots of a closed positive subsystem: beta contributes iff
// the only root of the subsystem made negative by s_beta is beta itself.
// Throws InvalidInput when `closed` is not closed.
std::vector<int> canonical_generator_roots(const CoxeterSystem& w, const std::vector<int>& closed);

class ReflectionSubgroup {
 public:
  static std::shared_ptr<const ReflectionSubgroup> from_reflections(SystemPtr ambient,
                                                                    const std::vector<Word>& words);
  static std::shared_ptr<const ReflectionSubgroup> from_roots(SystemPtr ambient,
                                                              std::vector<int> root_indices);
  static std::shared_ptr<const ReflectionSubgroup> from_simple(SystemPtr ambient,
                                                               std::vector<int> generators);

  const CoxeterSystem& ambient() const noexcept { return *ambient_; }
  const SystemPtr& ambient_ptr() const noexcept { return ambient_; }
  const ElementTable& table() const { return ambient_->element_table(); }

  // Indices into ambient positive_roots(), ascending.
  const std::vector<int>& positive_roots() const noexcept { return roots_; }
  // Canonical generators S_f in ambient (length, ShortLex) order, with their roots.
  const std::vector<GroupElement>& canonical_generators() const noexcept { return gens_; }
  const std::vector<int>& simple_roots() const noexcept { return simple_roots_; }
  const std::vector<Index>& generator_indices() const noexcept { return gen_index_; }
  const IntMatrix& coxeter_matrix() const noexcept { return coxeter_; }
  int rank() const noexcept { return static_cast<int>(gens_.size()); }

  // W_f in ambient table order.
  const std::vector<Index>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Index w) const { return lf_.at(w) >= 0; }
  // Word length over S_f; DomainError outside W_f.
  int length_f(Index w) const;

  bool is_standard_parabolic() const;
  bool contains_subgroup(const ReflectionSubgroup& other) const;

  // S_f recomputed from its defining minimality property
  // {r in W_f n R : l(tr) > l(r) for all reflections t != r of W_f}.
  std::vector<Index> generators_by_minimality() const;

 private:
  ReflectionSubgroup() = default;
  static std::shared_ptr<const ReflectionSubgroup> build(SystemPtr ambient, std::vector<int> roots);

  SystemPtr ambient_;
  std::vector<int> roots_;
  std::vector<int> simple_roots_;
  std::vector<GroupElement> gens_;
  std::vector<Index> gen_index_;
  IntMatrix coxeter_;
  std::vector<Index> elements_;
  std::vector<int> lf_;  // per ambient element; -1 outside W_f
};

using SubgroupPtr = std::shared_ptr<const ReflectionSubgroup>;

// w^{-1}(beta) > 0 for every canonical simple root beta of W_f.
bool is_minimal_rep(const ReflectionSubgroup& f, Index w);

class CosetSystem {
 public:
  explicit CosetSystem(SubgroupPtr subgroup);

  const ReflectionSubgroup& subgroup() const noexcept { return *subgroup_; }
  const SubgroupPtr& subgroup_ptr() const noexcept { return subgroup_; }
  const ElementTable& table() const { return subgroup_->table(); }
  // ^fW in (length, ShortLex) order.
  const std::vector<Index>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }
  bool contains(Index w) const { return position_.at(w) >= 0; }
  // Position of a representative in reps(); -1 if w is not one.
  int position(Index w) const { return position_.at(w); }

 private:
  SubgroupPtr subgroup_;
  std::vector<Index> reps_;
  std::vector<int> position_;
};

CosetSystem minimal_reps(SubgroupPtr subgroup);

struct Decomposition {
  Index sigma;  // in W_f
  Index rep;    // in ^fW
};
// w = sigma * rep with rep in ^fW; checks l(w) >= l_f(sigma) + l(rep).
Decomposition decompose(const ReflectionSubgroup& f, Index w);

struct ProductCheck {
  std::size_t inner_in_middle = 0;  // |^g(W_f)|
  std::size_t middle_reps = 0;      // |^fW|
  std::size_t inner_reps = 0;       // |^gW|
  bool well_defined = true;         // every product lands in ^gW
  bool injective = true;
  bool surjective = true;
  bool length_additive = true;
  struct Triple {
    Index left, right, product;
  };
  std::vector<Triple> triples;  // ordered by (left, right) rep order
  bool bijective() const { return well_defined && injective && surjective; }
};

// The multiplication map ^g(W_f) x ^fW -> ^gW for reflection subgroups
// W_g <= W_f; no parabolicity assumed.
ProductCheck check_product_decomposition(const SubgroupPtr& inner, const SubgroupPtr& middle);
// As above, with the middle group required to be standard parabolic.
ProductCheck product_bijection(const SubgroupPtr& inner, const SubgroupPtr& middle);

}  // namespace coxkl
