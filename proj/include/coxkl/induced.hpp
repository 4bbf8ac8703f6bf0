#pragma once

// The quasi-permutation module M = M_f (x)_{H_{B_d}} H over an ambient W that
// contains W_d as the standard parabolic subgroup on a type-B chain
// c_0, ..., c_{d-1} of generators (m(c_0,c_1) = 4).

#include <memory>
#include <string>
#include <vector>

#include "coxkl/module.hpp"
#include "coxkl/typeb.hpp"

namespace coxkl {

// Throws InvalidInput unless `chain` lists distinct generators with
// m(c_0,c_1) = 4 (or d = 1), m(c_i,c_{i+1}) = 3 for i >= 1, and 2 otherwise.
void validate_type_b_chain(const CoxeterSystem& w, const std::vector<int>& chain);

class QuasiParabolicModule {
 public:
  QuasiParabolicModule(SystemPtr ambient, std::vector<int> chain, const WeightWord& f,
                       ParamSet params);

  const CoxeterSystem& ambient() const noexcept { return *ambient_; }
  const SystemPtr& ambient_ptr() const noexcept { return ambient_; }
  const std::vector<int>& chain() const noexcept { return chain_; }
  const OrbitModule& orbit() const noexcept { return *orbit_; }
  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const ParamSet& params() const noexcept { return algebra_->params(); }

  // W_f inside W and the representatives ^fW.
  const SubgroupPtr& subgroup() const noexcept { return subgroup_; }
  const CosetSystem& cosets() const noexcept { return *cosets_; }
  int dim() const { return static_cast<int>(cosets_->size()); }

  // ^fW_d mapped into W, and ^dW.
  const std::vector<Index>& orbit_reps() const noexcept { return orbit_reps_; }
  const std::vector<Index>& chain_reps() const noexcept { return chain_reps_; }
  // Basis element of ^fW -> (position in ^fW_d, position in ^dW).
  const std::vector<std::pair<int, int>>& factors() const noexcept { return factors_; }
  // (sigma, x) -> sigma x is a length-additive bijection ^fW_d x ^dW -> ^fW.
  bool factorization_ok() const noexcept { return factorization_ok_; }

  // The three-case action on ^fW.
  const RightModule& module() const noexcept { return *module_; }
  // m (x) h -> psi(m) (x) bar(h), on the standard basis.
  const BarMap& bar() const noexcept { return bar_; }

  // The same action and bar map computed through the tensor product route
  // (generic parabolic induction of M_f) and transported to ^fW.
  bool tensor_route_agrees() const noexcept { return tensor_agrees_; }
  bool bar_routes_agree() const noexcept { return bar_agrees_; }

 private:
  SystemPtr ambient_;
  std::vector<int> chain_;
  std::unique_ptr<OrbitModule> orbit_;
  std::unique_ptr<HeckeAlgebra> algebra_;
  SubgroupPtr subgroup_;
  std::unique_ptr<CosetSystem> cosets_;
  std::vector<Index> orbit_reps_, chain_reps_;
  std::vector<std::pair<int, int>> factors_;
  bool factorization_ok_ = false;
  std::unique_ptr<RightModule> module_;
  BarMap bar_;
  bool tensor_agrees_ = false;
  bool bar_agrees_ = false;
};

// A word of W_d read in the ambient group through the chain.
Word chain_word(const std::vector<int>& chain, const Word& w);

}  // namespace coxkl
