#pragma once

// Type-B quasi-permutation modules: weight words over I_{r|m|r}, the tensor
// space V^{(x)d} with its H_{B_d}-action, the cyclic modules M_f with the bar
// involution psi, and the 3-step induction construction of M_f.
//
// Half-integer values are stored doubled throughout.

#include <memory>
#include <string>
#include <vector>

#include "coxkl/hecke.hpp"
#include "coxkl/module.hpp"
#include "coxkl/reflection_subgroup.hpp"

namespace coxkl {

enum class ValueClass { minus, bullet, plus };

class IndexSet {
 public:
  IndexSet(int r, int m);

  int r() const noexcept { return r_; }
  int m() const noexcept { return m_; }
  int size() const noexcept { return 2 * r_ + m_; }
  // Doubled values in ascending order.
  std::vector<int> values() const;
  bool contains(int twice) const noexcept;
  ValueClass classify(int twice) const;
  // 0-based rank of a value in ascending order.
  int position(int twice) const;
  int value_at(int position) const { return 2 * position - (size() - 1); }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  int r_ = 0, m_ = 0;
};

// "1/2", "-3/2", "0", "-1" for a doubled value.
std::string format_half(int twice);

class WeightWord {
 public:
  WeightWord(IndexSet set, std::vector<int> doubled);
  // Values given as numbers, each required to be an element of the set.
  static WeightWord from_values(IndexSet set, const std::vector<double>& values);

  const IndexSet& index_set() const noexcept { return set_; }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int d() const noexcept { return static_cast<int>(entries_.size()); }
  int operator[](int pos) const { return entries_.at(pos); }

  // (m-1)/2 >= f(1) >= ... >= f(d).
  bool is_antidominant() const;

  struct Block {
    int value = 0;  // doubled
    int start = 0;  // 0-based first position
    int size = 0;
    ValueClass cls = ValueClass::bullet;
  };
  // Maximal runs of equal consecutive entries.
  std::vector<Block> blocks() const;

  std::string to_string() const;

  friend bool operator==(const WeightWord& a, const WeightWord& b) {
    return a.set_ == b.set_ && a.entries_ == b.entries_;
  }

 private:
  IndexSet set_;
  std::vector<int> entries_;
};

// f.s_j: j > 0 swaps entries j, j+1 (1-based); j = 0 negates f(1) unless it lies in I_bullet.
WeightWord weight_act(const WeightWord& f, int j);
WeightWord weight_act_word(WeightWord f, const Word& w);

// Weakly decreasing words bounded by (m-1)/2, in lexicographically decreasing order.
std::vector<WeightWord> antidominant_words(const IndexSet& set, int d);

// W_d = B_d with generator order s_0 < s_1 < ... < s_{d-1}.
SystemPtr type_b_system(int d);
// q_0 = p and q_i = q over the alphabet {p, q}.
ParamSet type_b_params(int d);

class TensorSpace {
 public:
  TensorSpace(IndexSet set, int d, ParamSet params);

  const IndexSet& index_set() const noexcept { return set_; }
  int d() const noexcept { return d_; }
  int dim() const noexcept { return dim_; }
  const ParamSet& params() const noexcept { return params_; }

  // Mixed radix, most significant digit f(1).
  int index_of(const WeightWord& f) const;
  WeightWord word_at(int index) const;

  SparseVec act(const SparseVec& x, int i) const;
  RightModule module() const;

 private:
  IndexSet set_;
  int d_ = 0;
  int dim_ = 0;
  ParamSet params_;
};

// M_f = M_f H_{B_d} for antidominant f, on the basis {M_{f.sigma} : sigma in ^fW_d}.
class OrbitModule {
 public:
  OrbitModule(const WeightWord& f, ParamSet params);

  const WeightWord& f() const noexcept { return f_; }
  const SystemPtr& system() const noexcept { return system_; }
  const HeckeAlgebra& algebra() const noexcept { return *algebra_; }
  const SubgroupPtr& stabilizer() const noexcept { return stabilizer_; }
  const CosetSystem& cosets() const noexcept { return *cosets_; }
  const std::vector<WeightWord>& basis_words() const noexcept { return words_; }
  int dim() const noexcept { return static_cast<int>(words_.size()); }

  // Reflections generating W_f, assembled from the block structure.
  const std::vector<Word>& stabilizer_seeds() const noexcept { return seeds_; }
  // W_f equals {w in W_d : f.w = f}.
  bool stabilizer_matches() const noexcept { return stabilizer_matches_; }

  // Three-case formula on ^fW_d.
  const RightModule& module() const noexcept { return *module_; }
  // The tensor action restricted to the orbit of f.
  const RightModule& tensor_module() const noexcept { return *tensor_module_; }
  bool tables_agree() const { return *module_ == *tensor_module_; }

  // psi(M_{f.sigma}) = M_f bar(H_sigma).
  const BarMap& psi() const noexcept { return psi_; }

  std::vector<std::string> basis_names() const;

 private:
  WeightWord f_;
  SystemPtr system_;
  std::unique_ptr<HeckeAlgebra> algebra_;
  std::vector<Word> seeds_;
  SubgroupPtr stabilizer_;
  std::unique_ptr<CosetSystem> cosets_;
  std::vector<WeightWord> words_;
  bool stabilizer_matches_ = false;
  std::unique_ptr<RightModule> module_;
  std::unique_ptr<RightModule> tensor_module_;
  BarMap psi_;
};

struct ThreeStepInduction {
  std::vector<int> sf;          // generators of S_f
  std::vector<int> sf_bullet;   // generators of S_f^bullet
  std::vector<int> wf_bullet;   // generators of W_f^bullet
  std::vector<Index> d_reps;    // ^fD, as elements of W_d
  std::vector<Index> w_reps;    // ^fW^bullet
  bool extension_ok = false;    // H_0 -> p Id satisfies the relations of H(W_f^bullet)
  std::unique_ptr<RightModule> module;  // the induced H_{B_d}-module
  // (1 (x) H_{s1}) (x) H_{s2} at index i1 * |w_reps| + i2 -> position of s1 s2 in ^fW_d, or -1.
  std::vector<int> basis_map;
  bool bijective = false;
  bool intertwines = false;
  bool isomorphic() const { return bijective && intertwines; }
};

ThreeStepInduction three_step_induction(const OrbitModule& orbit);

}  // namespace coxkl
