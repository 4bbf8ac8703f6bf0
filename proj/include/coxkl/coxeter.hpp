#pragma once

// Finite crystallographic Coxeter systems realized through their integral root
// systems. Elements are carried as ShortLex-least reduced words; for groups of
// desk-scale order an indexed element table provides O(1) multiplication by
// generators and a fast Bruhat test.

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxkl/laurent.hpp"

namespace coxkl {

// 0-based generator indices.
using Word = std::vector<int>;
using IntMatrix = std::vector<std::vector<int>>;

inline constexpr std::size_t kDefaultElementCap = 100000;

struct Root {
  std::vector<int> coords;  // coefficients over the simple roots

  bool is_positive() const;
  bool is_negative() const;
  Root operator-() const;
  auto operator<=>(const Root&) const = default;
};

class CoxeterSystem;
class ElementTable;

class GroupElement {
 public:
  GroupElement() = default;
  const Word& word() const noexcept { return word_; }
  std::size_t length() const noexcept { return word_.size(); }
  bool is_identity() const noexcept { return word_.empty(); }
  std::uint64_t system_id() const noexcept { return system_id_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  friend class CoxeterSystem;
  GroupElement(std::uint64_t id, Word w) : system_id_(id), word_(std::move(w)) {}
  std::uint64_t system_id_ = 0;
  Word word_;
};

struct SystemOptions {
  // Generators listed from smallest to largest for ShortLex; empty = index order.
  std::vector<int> generator_order;
  std::size_t element_cap = kDefaultElementCap;
};

class CoxeterSystem {
 public:
  // Type labels: An, Bn, Cn, Dn, E6, E7, E8, F4, G2.
  static std::shared_ptr<const CoxeterSystem> from_type(std::string_view label,
                                                        const SystemOptions& opts = {});
  static std::shared_ptr<const CoxeterSystem> from_coxeter_matrix(const IntMatrix& m,
                                                                  const SystemOptions& opts = {});

  const std::string& label() const noexcept { return label_; }
  int rank() const noexcept { return rank_; }
  std::uint64_t id() const noexcept { return id_; }
  const IntMatrix& coxeter_matrix() const noexcept { return coxeter_; }
  const IntMatrix& cartan_matrix() const noexcept { return cartan_; }
  int coxeter_order(int s, int t) const { return coxeter_.at(s).at(t); }
  std::span<const int> generator_order() const noexcept { return order_; }
  int order_position(int s) const { return position_.at(s); }
  std::size_t element_cap() const noexcept { return cap_; }

  // Symmetric form scaled to integers: (a_i, a_j) = symmetrizer_i * cartan_ij.
  const std::vector<int>& symmetrizer() const noexcept { return symmetrizer_; }
  long long bilinear(const Root& a, const Root& b) const;

  const std::vector<Root>& positive_roots() const noexcept { return positive_roots_; }
  Root simple_root(int s) const;
  // Index into positive_roots(), or -1 if not a positive root.
  int positive_root_index(const Root& r) const;
  bool is_root(const Root& r) const;
  Root reflect(int s, const Root& r) const;
  Root root_action(const GroupElement& w, const Root& r) const;

  GroupElement identity() const { return GroupElement(id_, {}); }
  GroupElement generator(int s) const;
  GroupElement normal_form(std::span<const int> word) const;
  GroupElement multiply(const GroupElement& u, const GroupElement& v) const;
  GroupElement inverse(const GroupElement& w) const;
  std::size_t length(const GroupElement& w) const;
  std::vector<int> right_descents(const GroupElement& w) const;
  std::vector<int> left_descents(const GroupElement& w) const;
  // Positive roots sent to negative roots by w, as indices into positive_roots().
  std::vector<int> inversion_set(const GroupElement& w) const;
  bool bruhat_leq(const GroupElement& u, const GroupElement& w) const;

  GroupElement reflection_of_root(int root_index) const;
  // Positive root of a reflection; throws DomainError for non-reflections.
  int root_of_reflection(const GroupElement& t) const;
  bool is_reflection(const GroupElement& t) const;

  // ShortLex comparison under the generator order.
  bool shortlex_less(const Word& a, const Word& b) const;

  const AlphabetPtr& parameter_alphabet() const noexcept { return alphabet_; }
  const std::string& param_of_generator(int s) const { return params_.at(s); }
  // s and t are conjugate iff joined by a path of odd-order edges.
  bool conjugate_generators(int s, int t) const;

  std::vector<GroupElement> enumerate_elements() const;
  // Built on first use; throws ResourceLimit above element_cap().
  const ElementTable& element_table() const;

  void check_same(const GroupElement& w) const;

 private:
  CoxeterSystem() = default;
  static std::shared_ptr<const CoxeterSystem> assemble(std::string label, IntMatrix coxeter,
                                                       IntMatrix cartan,
                                                       std::vector<std::string> params,
                                                       const SystemOptions& opts);
  void enumerate_roots();
  void check_word(std::span<const int> word) const;
  std::vector<int> matrix_of_inverse(std::span<const int> word) const;

  std::string label_;
  int rank_ = 0;
  std::uint64_t id_ = 0;
  IntMatrix coxeter_;
  IntMatrix cartan_;
  std::vector<int> symmetrizer_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::size_t cap_ = kDefaultElementCap;
  std::vector<Root> positive_roots_;
  std::map<Root, int> root_index_;
  std::vector<Word> root_conjugator_;  // beta = u(alpha_s): u
  std::vector<int> root_simple_;       // and s
  std::vector<std::string> params_;
  AlphabetPtr alphabet_;
  std::vector<int> conj_class_;

  mutable std::once_flag table_once_;
  mutable std::shared_ptr<const ElementTable> table_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

// All elements of a finite system in (length, ShortLex) order, referred to by
// index. Index 0 is the identity.
class ElementTable {
 public:
  using Index = std::uint32_t;
  static constexpr Index npos = static_cast<Index>(-1);

  explicit ElementTable(const CoxeterSystem& system);

  const CoxeterSystem& system() const noexcept { return *system_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& element(Index i) const { return elements_.at(i); }
  const Word& word(Index i) const { return elements_[i].word(); }
  int length(Index i) const { return static_cast<int>(elements_[i].length()); }
  Index index_of(const GroupElement& w) const;
  Index index_of_word(std::span<const int> word) const;  // any word, normalized
  Index right_mul(Index i, int s) const { return right_[i * rank_ + s]; }
  Index left_mul(Index i, int s) const { return left_[i * rank_ + s]; }
  Index inverse(Index i) const { return inverse_[i]; }
  Index multiply(Index u, Index v) const;
  bool is_right_descent(Index i, int s) const { return length(right_mul(i, s)) < length(i); }
  bool is_left_descent(Index i, int s) const { return length(left_mul(i, s)) < length(i); }
  bool bruhat_leq(Index u, Index w) const;
  Index longest() const { return static_cast<Index>(size() - 1); }

 private:
  const CoxeterSystem* system_;
  int rank_;
  std::vector<GroupElement> elements_;
  std::map<Word, Index> index_;
  std::vector<Index> right_;
  std::vector<Index> left_;
  std::vector<Index> inverse_;
  std::vector<int> first_right_descent_;
};

// Renders a 0-based word with 1-based letters, e.g. {0,1,0} -> "121"; uses '.'
// separators when some letter exceeds 9. The identity renders as "e".
std::string word_label(const Word& w);

}  // namespace coxkl
