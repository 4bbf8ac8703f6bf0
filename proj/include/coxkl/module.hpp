#pragma once

// Right modules over a Hecke algebra given by the action of each generator on
// a finite standard basis, relation checks, and parabolic induction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxkl/hecke.hpp"
#include "coxkl/reflection_subgroup.hpp"

namespace coxkl {

// Basis index -> coefficient; no zero coefficients.
using SparseVec = std::map<int, LaurentPoly>;

void axpy(SparseVec& y, const LaurentPoly& a, const SparseVec& x);
void add_term(SparseVec& y, int i, const LaurentPoly& c);
SparseVec scaled(const SparseVec& x, const LaurentPoly& a);
SparseVec unit_vector(int i, const LaurentPoly& one);
SparseVec bar_coefficients(const SparseVec& x);

class RightModule {
 public:
  // action[s][i] = m_i * H_s. `dim` is only needed when there are no generators.
  RightModule(ParamSet params, IntMatrix coxeter, std::vector<int> generator_order,
              std::vector<std::vector<SparseVec>> action, int dim = -1);

  int rank() const noexcept { return static_cast<int>(action_.size()); }
  int dim() const noexcept { return dim_; }
  const ParamSet& params() const noexcept { return params_; }
  const IntMatrix& coxeter_matrix() const noexcept { return coxeter_; }
  const std::vector<int>& generator_order() const noexcept { return order_; }
  const SparseVec& image(int i, int s) const { return action_.at(s).at(i); }
  const std::vector<std::vector<SparseVec>>& action() const noexcept { return action_; }

  SparseVec act(const SparseVec& v, int s) const;
  SparseVec act_word(SparseVec v, const Word& w) const;
  // v * h for h in an algebra over a system with the same generators.
  SparseVec act_hecke(const SparseVec& v, const HeckeAlgebra& alg, const HeckeElement& h) const;
  // v * b_s with b_s = H_s + q_s^-1 (q_s a positive power of q) or
  // H_s - q_s (negative power).
  SparseVec act_bar_invariant(const SparseVec& v, int s) const;

  friend bool operator==(const RightModule& a, const RightModule& b) {
    return a.action_ == b.action_;
  }

 private:
  ParamSet params_;
  IntMatrix coxeter_;
  std::vector<int> order_;
  std::vector<std::vector<SparseVec>> action_;
  int dim_ = 0;
};

struct RelationFailure {
  std::string relation;  // "quadratic" or "braid"
  int s = 0, t = 0;      // t == s for quadratic failures
  int witness = 0;       // lowest basis index where the two sides differ
  int differing = 0;     // number of basis vectors where they differ
  SparseVec lhs, rhs;
};

struct RelationReport {
  std::vector<RelationFailure> failures;
  int quadratic_checked = 0;
  int braid_checked = 0;
  bool ok() const { return failures.empty(); }
};

// Quadratic relations for every generator, then for every pair s != t (in
// generator order) the full products of length m(s,t).
RelationReport check_relations(const RightModule& m);
bool braid_pair_holds(const RightModule& m, int s, int t, RelationFailure* failure = nullptr);
bool quadratic_holds(const RightModule& m, int s, RelationFailure* failure = nullptr);

// The semilinear involution of a module, stored as the images of the basis.
struct BarMap {
  std::vector<SparseVec> images;
  SparseVec apply(const SparseVec& x) const;
  bool is_involution() const;
};

// m_w * H_s for the standard basis {m_w : w in ^fW}:
//   m_{ws} + (q_s - q_s^-1) m_w   if ws < w,
//   m_{ws}                        if ws > w and ws in ^fW,
//   q_s m_w                       otherwise.
RightModule three_case_module(const CosetSystem& cosets, const ParamSet& params);

// bar(m_e) = m_e and bar(m_w) = bar(m_{w'}) * bar(H_s) for w = w's in ^fW.
BarMap cyclic_bar(const RightModule& m, const CosetSystem& cosets);

// M (x)_{H(W_J)} H(W) for a right H(W_J)-module M whose generator k is J[k].
struct InducedModule {
  RightModule module;
  std::vector<int> J;
  std::vector<Index> reps;                 // ^JW, the minimal left coset side
  std::vector<std::pair<int, int>> basis;  // (basis of M, position in reps)
  int index_of(int b, int x) const { return b * static_cast<int>(reps.size()) + x; }
};

InducedModule induce(const RightModule& inner, const ParabolicEmbedding& embedding);
// Expresses (v (x) H_y) in the induced basis for an arbitrary y in W.
SparseVec tensor_with(const InducedModule& ind, const RightModule& inner,
                      const ParabolicEmbedding& embedding, const SparseVec& v, Index y);
// bar(b (x) H_x) = psi(b) (x) bar(H_x).
BarMap induced_bar(const InducedModule& ind, const RightModule& inner, const BarMap& inner_bar,
                   const ParabolicEmbedding& embedding);

// Minimal length representatives of W_J \ W for J a subset of S.
std::vector<Index> parabolic_reps(const ElementTable& t, const std::vector<int>& J);

// "(p - p^-1) M_{s1} + M_e": the `lead` term (if present) first, then the rest
// in basis order.
std::string render_vector(const SparseVec& v, const std::vector<std::string>& basis_names,
                          int lead = -1);

}  // namespace coxkl
