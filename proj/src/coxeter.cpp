#include "coxkl/coxeter.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <numeric>
#include <sstream>

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

std::atomic<std::uint64_t> next_system_id{1};

IntMatrix square(int n, int fill) { return IntMatrix(n, std::vector<int>(n, fill)); }

void add_edge(IntMatrix& cox, IntMatrix& cartan, int i, int j, int m, int a_ij, int a_ji) {
  cox[i][j] = cox[j][i] = m;
  cartan[i][j] = a_ij;
  cartan[j][i] = a_ji;
}

// Cartan matrix with the lower-indexed end of a multiple bond long.
IntMatrix cartan_from_coxeter(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  IntMatrix a = square(n, 0);
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    for (int j = i + 1; j < n; ++j) {
      switch (m[i][j]) {
        case 2: break;
        case 3: a[i][j] = a[j][i] = -1; break;
        case 4: a[i][j] = -1; a[j][i] = -2; break;
        case 6: a[i][j] = -1; a[j][i] = -3; break;
        default: throw UnsupportedType("Coxeter order " + std::to_string(m[i][j]) +
                                       " is not crystallographic");
      }
    }
  }
  return a;
}

std::vector<std::string> params_by_conjugacy(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> cls(n, -1);
  int classes = 0;
  for (int s = 0; s < n; ++s) {
    if (cls[s] >= 0) continue;
    std::deque<int> todo{s};
    cls[s] = classes;
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop_front();
      for (int y = 0; y < n; ++y)
        if (cls[y] < 0 && m[x][y] % 2 == 1 && x != y) {
          cls[y] = classes;
          todo.push_back(y);
        }
    }
    ++classes;
  }
  std::vector<std::string> out(n);
  for (int s = 0; s < n; ++s) {
    if (classes == 1) {
      out[s] = "q";
    } else if (cls[s] == 0) {
      out[s] = "p";
    } else if (cls[s] == 1) {
      out[s] = "q";
    } else {
      out[s] = "q" + std::to_string(cls[s]);
    }
  }
  return out;
}

}  // namespace

bool Root::is_positive() const {
  bool any = false;
  for (int c : coords) {
    if (c < 0) return false;
    any |= c > 0;
  }
  return any;
}

bool Root::is_negative() const {
  bool any = false;
  for (int c : coords) {
    if (c > 0) return false;
    any |= c < 0;
  }
  return any;
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::from_type(std::string_view label,
                                                              const SystemOptions& opts) {
  if (label.size() < 2) throw InvalidInput("bad type label '" + std::string(label) + "'");
  const char family = label[0];
  int n = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw InvalidInput("bad type label '" + std::string(label) + "'");
    n = n * 10 + (c - '0');
    if (n > 64) throw UnsupportedType("rank too large in '" + std::string(label) + "'");
  }
  if (n < 1) throw InvalidInput("bad type label '" + std::string(label) + "'");
  IntMatrix cox = square(n, 2);
  IntMatrix cartan = square(n, 0);
  for (int i = 0; i < n; ++i) cox[i][i] = 1, cartan[i][i] = 2;
  std::vector<std::string> params(n, "q");
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) add_edge(cox, cartan, i, i + 1, 3, -1, -1);
      break;
    case 'B':
    case 'C':
      // Generator 1 is the special end of the chain (s_0 of the signed
      // permutation convention); for B its root is short.
      for (int i = 0; i + 1 < n; ++i) add_edge(cox, cartan, i, i + 1, 3, -1, -1);
      if (n >= 2) {
        if (family == 'B') {
          add_edge(cox, cartan, 0, 1, 4, -2, -1);
        } else {
          add_edge(cox, cartan, 0, 1, 4, -1, -2);
        }
      }
      params[0] = "p";
      break;
    case 'D':
      if (n < 4) throw UnsupportedType("type D needs rank at least 4");
      for (int i = 0; i + 2 < n; ++i) add_edge(cox, cartan, i, i + 1, 3, -1, -1);
      add_edge(cox, cartan, n - 3, n - 1, 3, -1, -1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw UnsupportedType("type E needs rank 6, 7 or 8");
      add_edge(cox, cartan, 0, 2, 3, -1, -1);
      add_edge(cox, cartan, 1, 3, 3, -1, -1);
      for (int i = 2; i + 1 < n; ++i) add_edge(cox, cartan, i, i + 1, 3, -1, -1);
      break;
    case 'F':
      if (n != 4) throw UnsupportedType("type F needs rank 4");
      add_edge(cox, cartan, 0, 1, 3, -1, -1);
      add_edge(cox, cartan, 1, 2, 4, -1, -2);
      add_edge(cox, cartan, 2, 3, 3, -1, -1);
      params = {"p", "p", "q", "q"};
      break;
    case 'G':
      if (n != 2) throw UnsupportedType("type G needs rank 2");
      add_edge(cox, cartan, 0, 1, 6, -1, -3);
      params = {"p", "q"};
      break;
    case 'H':
    case 'I':
      throw UnsupportedType("non-crystallographic type '" + std::string(label) + "'");
    default:
      throw InvalidInput("unknown type label '" + std::string(label) + "'");
  }
  return assemble(std::string(label), std::move(cox), std::move(cartan), std::move(params), opts);
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::from_coxeter_matrix(const IntMatrix& m,
                                                                        const SystemOptions& opts) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("Coxeter matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (m[i][i] != 1) throw InvalidInput("Coxeter matrix diagonal must be 1");
    for (int j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw InvalidInput("Coxeter matrix is not symmetric");
      if (i != j && m[i][j] < 2 && m[i][j] != 0)
        throw InvalidInput("off-diagonal Coxeter orders must be >= 2 (0 for infinity)");
      if (i != j && (m[i][j] == 0 || m[i][j] == 5 || m[i][j] >= 7))
        throw UnsupportedType("Coxeter order " + (m[i][j] == 0 ? std::string("infinity")
                                                                : std::to_string(m[i][j])) +
                              " is not finite crystallographic");
    }
  }
  // Finite Coxeter graphs are forests.
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m[i][j] > 2) {
          const int a = find(i), b = find(j);
          if (a == b) throw UnsupportedType("Coxeter graph has a cycle: group is infinite");
          parent[a] = b;
        }
  }
  return assemble("custom", m, cartan_from_coxeter(m), params_by_conjugacy(m), opts);
}

std::shared_ptr<const CoxeterSystem> CoxeterSystem::assemble(std::string label, IntMatrix coxeter,
                                                             IntMatrix cartan,
                                                             std::vector<std::string> params,
                                                             const SystemOptions& opts) {
  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->label_ = std::move(label);
  sys->rank_ = static_cast<int>(coxeter.size());
  sys->id_ = next_system_id++;
  sys->coxeter_ = std::move(coxeter);
  sys->cartan_ = std::move(cartan);
  sys->cap_ = opts.element_cap;
  const int n = sys->rank_;

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      static constexpr int expected[7] = {0, 0, 0, 1, 2, 0, 3};
      const int m = sys->coxeter_[i][j];
      if (sys->cartan_[i][j] * sys->cartan_[j][i] != expected[m])
        throw StructuralError("Cartan and Coxeter matrices disagree");
    }

  if (opts.generator_order.empty()) {
    sys->order_.resize(n);
    std::iota(sys->order_.begin(), sys->order_.end(), 0);
  } else {
    sys->order_ = opts.generator_order;
    std::vector<int> sorted = sys->order_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(n);
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) throw InvalidInput("generator order is not a permutation of S");
  }
  sys->position_.assign(n, 0);
  for (int k = 0; k < n; ++k) sys->position_[sys->order_[k]] = k;

  // Symmetrizer along the forest: d_j = d_i * a_ij / a_ji, then clear denominators.
  {
    std::vector<long long> num(n, 0), den(n, 1);
    for (int s = 0; s < n; ++s) {
      if (num[s] != 0) continue;
      num[s] = 1;
      std::deque<int> todo{s};
      while (!todo.empty()) {
        const int i = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
          if (j == i || sys->cartan_[i][j] == 0 || num[j] != 0) continue;
          num[j] = num[i] * sys->cartan_[i][j];
          den[j] = den[i] * sys->cartan_[j][i];
          const long long g = std::gcd(num[j], den[j]);
          num[j] /= g;
          den[j] /= g;
          if (den[j] < 0) num[j] = -num[j], den[j] = -den[j];
          todo.push_back(j);
        }
      }
    }
    long long l = 1;
    for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
    sys->symmetrizer_.resize(n);
    for (int i = 0; i < n; ++i) sys->symmetrizer_[i] = static_cast<int>(num[i] * (l / den[i]));
  }

  sys->params_ = std::move(params);
  std::vector<std::string> names;
  for (const auto& p : sys->params_)
    if (std::find(names.begin(), names.end(), p) == names.end()) names.push_back(p);
  std::sort(names.begin(), names.end());
  sys->alphabet_ = make_alphabet(std::move(names));

  sys->conj_class_.assign(n, -1);
  for (int s = 0, c = 0; s < n; ++s) {
    if (sys->conj_class_[s] >= 0) continue;
    std::deque<int> todo{s};
    sys->conj_class_[s] = c;
    while (!todo.empty()) {
      const int x = todo.front();
      todo.pop_front();
      for (int y = 0; y < n; ++y)
        if (y != x && sys->conj_class_[y] < 0 && sys->coxeter_[x][y] % 2 == 1) {
          sys->conj_class_[y] = c;
          todo.push_back(y);
        }
    }
    ++c;
  }
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (sys->conj_class_[s] == sys->conj_class_[t] && sys->params_[s] != sys->params_[t])
        throw InvalidInput("conjugate generators must share a parameter");

  sys->enumerate_roots();
  return sys;
}

void CoxeterSystem::enumerate_roots() {
  constexpr std::size_t kRootCap = 2000;
  const int n = rank_;
  std::deque<int> todo;
  for (int s = 0; s < n; ++s) {
    Root r = simple_root(s);
    root_index_.emplace(r, static_cast<int>(positive_roots_.size()));
    positive_roots_.push_back(std::move(r));
    root_conjugator_.push_back({});
    root_simple_.push_back(s);
    todo.push_back(s);
  }
  while (!todo.empty()) {
    const int b = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      Root g = reflect(i, positive_roots_[b]);
      if (g == positive_roots_[b]) continue;
      if (!g.is_positive()) {
        if (g.is_negative()) continue;  // only alpha_i itself
        throw StructuralError("mixed-sign root encountered");
      }
      if (root_index_.count(g)) continue;
      if (positive_roots_.size() >= kRootCap)
        throw UnsupportedType("root system does not close: group is infinite");
      Word u{i};
      u.insert(u.end(), root_conjugator_[b].begin(), root_conjugator_[b].end());
      root_index_.emplace(g, static_cast<int>(positive_roots_.size()));
      positive_roots_.push_back(std::move(g));
      root_conjugator_.push_back(std::move(u));
      root_simple_.push_back(root_simple_[b]);
      todo.push_back(static_cast<int>(positive_roots_.size()) - 1);
    }
  }
}

long long CoxeterSystem::bilinear(const Root& a, const Root& b) const {
  long long acc = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      acc += static_cast<long long>(a.coords[i]) * b.coords[j] * symmetrizer_[i] * cartan_[i][j];
  return acc;
}

Root CoxeterSystem::simple_root(int s) const {
  if (s < 0 || s >= rank_) throw InvalidInput("generator index out of range");
  Root r{std::vector<int>(rank_, 0)};
  r.coords[s] = 1;
  return r;
}

int CoxeterSystem::positive_root_index(const Root& r) const {
  auto it = root_index_.find(r);
  return it == root_index_.end() ? -1 : it->second;
}

bool CoxeterSystem::is_root(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != rank_) return false;
  return positive_root_index(r) >= 0 || positive_root_index(-r) >= 0;
}

Root CoxeterSystem::reflect(int s, const Root& r) const {
  Root out = r;
  int pairing = 0;
  for (int j = 0; j < rank_; ++j) pairing += cartan_[s][j] * r.coords[j];
  out.coords[s] -= pairing;
  return out;
}

Root CoxeterSystem::root_action(const GroupElement& w, const Root& r) const {
  check_same(w);
  if (!is_root(r)) throw InvalidInput("coordinate vector is not a root");
  Root out = r;
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) out = reflect(*it, out);
  return out;
}

GroupElement CoxeterSystem::generator(int s) const {
  if (s < 0 || s >= rank_) throw InvalidInput("generator index out of range");
  return GroupElement(id_, {s});
}

void CoxeterSystem::check_word(std::span<const int> word) const {
  for (int a : word)
    if (a < 0 || a >= rank_) throw InvalidInput("generator index out of range");
}

void CoxeterSystem::check_same(const GroupElement& w) const {
  if (w.system_id() != id_) throw InvalidInput("element belongs to a different Coxeter system");
}

// Columns of the result are w^{-1}(alpha_j), stored column-major.
std::vector<int> CoxeterSystem::matrix_of_inverse(std::span<const int> word) const {
  const int n = rank_;
  std::vector<int> u(static_cast<std::size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) u[j * n + j] = 1;
  for (int a : word) {
    // u <- s_a u: reflect every column.
    for (int j = 0; j < n; ++j) {
      int* col = &u[j * n];
      int pairing = 0;
      for (int k = 0; k < n; ++k) pairing += cartan_[a][k] * col[k];
      col[a] -= pairing;
    }
  }
  return u;
}

GroupElement CoxeterSystem::normal_form(std::span<const int> word) const {
  check_word(word);
  const int n = rank_;
  std::vector<int> u = matrix_of_inverse(word);
  Word out;
  for (;;) {
    // Smallest left descent: column s of w^{-1} is a negative root.
    int best = -1;
    for (int s = 0; s < n; ++s) {
      bool negative = false;
      for (int k = 0; k < n; ++k) {
        if (u[s * n + k] < 0) {
          negative = true;
          break;
        }
      }
      if (negative && (best < 0 || position_[s] < position_[best])) best = s;
    }
    if (best < 0) break;
    out.push_back(best);
    // w <- s w, i.e. w^{-1} <- w^{-1} s: col_j -= a_{s j} col_s.
    const int s = best;
    for (int j = 0; j < n; ++j) {
      if (j == s || cartan_[s][j] == 0) continue;
      for (int k = 0; k < n; ++k) u[j * n + k] -= cartan_[s][j] * u[s * n + k];
    }
    for (int k = 0; k < n; ++k) u[s * n + k] = -u[s * n + k];
  }
  return GroupElement(id_, std::move(out));
}

GroupElement CoxeterSystem::multiply(const GroupElement& u, const GroupElement& v) const {
  check_same(u);
  check_same(v);
  Word w = u.word();
  w.insert(w.end(), v.word().begin(), v.word().end());
  return normal_form(w);
}

GroupElement CoxeterSystem::inverse(const GroupElement& w) const {
  check_same(w);
  Word r(w.word().rbegin(), w.word().rend());
  return normal_form(r);
}

std::size_t CoxeterSystem::length(const GroupElement& w) const {
  check_same(w);
  return w.length();
}

std::vector<int> CoxeterSystem::right_descents(const GroupElement& w) const {
  std::vector<int> out;
  for (int s = 0; s < rank_; ++s)
    if (root_action(w, simple_root(s)).is_negative()) out.push_back(s);
  return out;
}

std::vector<int> CoxeterSystem::left_descents(const GroupElement& w) const {
  return right_descents(inverse(w));
}

std::vector<int> CoxeterSystem::inversion_set(const GroupElement& w) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < positive_roots_.size(); ++i)
    if (root_action(w, positive_roots_[i]).is_negative()) out.push_back(static_cast<int>(i));
  return out;
}

bool CoxeterSystem::bruhat_leq(const GroupElement& u_in, const GroupElement& w_in) const {
  check_same(u_in);
  check_same(w_in);
  GroupElement u = u_in;
  Word w = w_in.word();
  for (;;) {
    if (u.length() > w.size()) return false;
    if (w.empty()) return u.is_identity();
    // The last letter of a reduced word is a right descent, and dropping it
    // leaves the ShortLex-least word of ws.
    const int s = w.back();
    w.pop_back();
    Word us = u.word();
    us.push_back(s);
    GroupElement cand = normal_form(us);
    if (cand.length() < u.length()) u = std::move(cand);
  }
}

GroupElement CoxeterSystem::reflection_of_root(int root_index) const {
  if (root_index < 0 || root_index >= static_cast<int>(positive_roots_.size()))
    throw InvalidInput("positive root index out of range");
  const Word& u = root_conjugator_[root_index];
  Word t = u;
  t.push_back(root_simple_[root_index]);
  t.insert(t.end(), u.rbegin(), u.rend());
  return normal_form(t);
}

bool CoxeterSystem::is_reflection(const GroupElement& t) const {
  check_same(t);
  if (t.length() % 2 == 0) return false;
  const auto inv = inversion_set(t);
  // A reflection s_b negates b; look for the candidate among its inversions.
  for (int idx : inv)
    if (reflection_of_root(idx) == t) return true;
  return false;
}

int CoxeterSystem::root_of_reflection(const GroupElement& t) const {
  check_same(t);
  if (t.length() % 2 == 1)
    for (int idx : inversion_set(t))
      if (reflection_of_root(idx) == t) return idx;
  throw DomainError("element is not a reflection");
}

bool CoxeterSystem::shortlex_less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return position_[a[i]] < position_[b[i]];
  return false;
}

bool CoxeterSystem::conjugate_generators(int s, int t) const {
  return conj_class_.at(s) == conj_class_.at(t);
}

std::vector<GroupElement> CoxeterSystem::enumerate_elements() const {
  const ElementTable& t = element_table();
  std::vector<GroupElement> out;
  out.reserve(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.element(static_cast<ElementTable::Index>(i)));
  return out;
}

const ElementTable& CoxeterSystem::element_table() const {
  std::call_once(table_once_, [this] { table_ = std::make_shared<const ElementTable>(*this); });
  return *table_;
}

ElementTable::ElementTable(const CoxeterSystem& system)
    : system_(&system), rank_(system.rank()) {
  const std::size_t cap = system.element_cap();
  elements_.push_back(system.identity());
  index_.emplace(Word{}, 0);
  std::size_t layer_begin = 0;
  while (layer_begin < elements_.size()) {
    const std::size_t layer_end = elements_.size();
    std::vector<GroupElement> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (int s = 0; s < rank_; ++s) {
        Word w = elements_[i].word();
        w.push_back(s);
        GroupElement g = system.normal_form(w);
        if (g.length() <= elements_[i].length()) continue;
        if (index_.count(g.word())) continue;
        index_.emplace(g.word(), 0);
        next.push_back(std::move(g));
        if (elements_.size() + next.size() > cap)
          throw ResourceLimit("group order exceeds element cap " + std::to_string(cap));
      }
    }
    std::sort(next.begin(), next.end(), [&](const GroupElement& a, const GroupElement& b) {
      return system.shortlex_less(a.word(), b.word());
    });
    layer_begin = layer_end;
    for (auto& g : next) {
      index_[g.word()] = static_cast<Index>(elements_.size());
      elements_.push_back(std::move(g));
    }
  }
  const std::size_t n = elements_.size();
  right_.resize(n * rank_);
  left_.resize(n * rank_);
  inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = elements_[i].word();
    for (int s = 0; s < rank_; ++s) {
      Word r = w;
      r.push_back(s);
      right_[i * rank_ + s] = index_.at(system.normal_form(r).word());
      Word l{s};
      l.insert(l.end(), w.begin(), w.end());
      left_[i * rank_ + s] = index_.at(system.normal_form(l).word());
    }
    Word inv(w.rbegin(), w.rend());
    inverse_[i] = index_.at(system.normal_form(inv).word());
  }
}

ElementTable::Index ElementTable::index_of(const GroupElement& w) const {
  system_->check_same(w);
  auto it = index_.find(w.word());
  if (it == index_.end()) throw InvalidInput("element not in table");
  return it->second;
}

ElementTable::Index ElementTable::index_of_word(std::span<const int> word) const {
  Index i = 0;
  for (int a : word) {
    if (a < 0 || a >= rank_) throw InvalidInput("generator index out of range");
    i = right_mul(i, a);
  }
  return i;
}

ElementTable::Index ElementTable::multiply(Index u, Index v) const {
  for (int a : word(v)) u = right_mul(u, a);
  return u;
}

bool ElementTable::bruhat_leq(Index u, Index w) const {
  for (;;) {
    if (length(u) > length(w)) return false;
    if (w == 0) return u == 0;
    const int s = word(w).back();
    w = right_mul(w, s);
    const Index us = right_mul(u, s);
    if (length(us) < length(u)) u = us;
  }
}

std::string word_label(const Word& w) {
  if (w.empty()) return "e";
  const bool wide = std::any_of(w.begin(), w.end(), [](int a) { return a >= 9; });
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i) os << '.';
    os << w[i] + 1;
  }
  return os.str();
}

}  // namespace coxkl
