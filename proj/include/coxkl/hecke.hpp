#pragma once

// Iwahori-Hecke algebra H(W, S) with one parameter q_s per generator, in the
// normalization (H_s - q_s)(H_s + q_s^-1) = 0.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "coxkl/coxeter.hpp"
#include "coxkl/laurent.hpp"
#include "coxkl/reflection_subgroup.hpp"

namespace coxkl {

// The value of q_s for every generator, all over one alphabet.
struct ParamSet {
  AlphabetPtr alphabet;
  std::vector<LaurentPoly> q;

  // q_s = the named parameter of s, over the system's alphabet.
  static ParamSet generic(const CoxeterSystem& sys);
  // q_s = q^k for every parameter other than q itself, which stays q.
  static ParamSet specialized(const CoxeterSystem& sys, int k);
  static ParamSet specialized(const CoxeterSystem& sys, const std::map<std::string, int>& powers);
  // Every parameter sent through coxkl::specialize.
  ParamSet specialize(const std::map<std::string, int>& powers) const;
  // Parameters of the generators listed in `gens`, in that order.
  ParamSet restrict_to(const std::vector<int>& gens) const;

  const LaurentPoly& of(int s) const { return q.at(s); }
  LaurentPoly diff(int s) const { return q.at(s) - q.at(s).bar(); }
  bool single_parameter() const { return alphabet && alphabet->size() == 1; }
  // Exponent e with q_s = q^e; requires a single-parameter monomial.
  int exponent(int s) const;
  LaurentPoly zero() const { return LaurentPoly::constant(alphabet, 0); }
  LaurentPoly one() const { return LaurentPoly::constant(alphabet, 1); }
};

struct HeckeElement {
  std::map<Index, LaurentPoly> coeffs;  // basis H_w by table index; no zeros

  void add(Index w, const LaurentPoly& c);
  bool is_zero() const { return coeffs.empty(); }
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;
};

class HeckeAlgebra {
 public:
  HeckeAlgebra(SystemPtr system, ParamSet params);

  const CoxeterSystem& system() const noexcept { return *system_; }
  const SystemPtr& system_ptr() const noexcept { return system_; }
  const ElementTable& table() const noexcept { return *table_; }
  const ParamSet& params() const noexcept { return params_; }

  HeckeElement one() const { return basis(0); }
  HeckeElement basis(Index w) const;
  HeckeElement generator(int s) const;
  HeckeElement scalar(const LaurentPoly& c) const;

  // x * H_s.
  HeckeElement mul_by_generator(const HeckeElement& x, int s) const;
  // x * H_{s_1} ... H_{s_k}.
  HeckeElement mul_by_word(HeckeElement x, const Word& w) const;
  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;

  HeckeElement bar(const HeckeElement& x) const;
  // bar(H_w) = H_{w^-1}^{-1}, memoized.
  HeckeElement bar_basis(Index w) const;

  // "H[1,2,1] * (q - q^-1) + H[2]", terms in (length, ShortLex) order.
  std::string to_string(const HeckeElement& x) const;

 private:
  SystemPtr system_;
  const ElementTable* table_;
  ParamSet params_;
  mutable std::mutex bar_mutex_;
  mutable std::map<Index, HeckeElement> bar_cache_;
};

// H(W_J) for a subset J of S as a subalgebra: H_w -> H_w along W_J <= W.
class ParabolicEmbedding {
 public:
  ParabolicEmbedding(const HeckeAlgebra& ambient, std::vector<int> J);

  const std::vector<int>& generators() const noexcept { return J_; }
  const HeckeAlgebra& sub() const noexcept { return *sub_; }
  const HeckeAlgebra& ambient() const noexcept { return *ambient_; }
  // Sub-algebra generator k is ambient generator J[k].
  Index embed_element(Index sub_w) const { return image_.at(sub_w); }
  HeckeElement operator()(const HeckeElement& x) const;
  // Inverse on W_J; npos for ambient elements outside W_J.
  Index preimage(Index ambient_w) const;

 private:
  const HeckeAlgebra* ambient_;
  std::vector<int> J_;
  std::unique_ptr<HeckeAlgebra> sub_;
  std::vector<Index> image_;
  std::map<Index, Index> preimage_;
};

}  // namespace coxkl
