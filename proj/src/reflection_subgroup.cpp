#include "coxkl/reflection_subgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

Root reflect_in(const CoxeterSystem& w, const Root& beta, const Root& gamma) {
  const long long num = 2 * w.bilinear(gamma, beta);
  const long long den = w.bilinear(beta, beta);
  if (num % den != 0) throw StructuralError("non-integral root pairing");
  const long long c = num / den;
  Root out = gamma;
  for (std::size_t k = 0; k < out.coords.size(); ++k)
    out.coords[k] -= static_cast<int>(c * beta.coords[k]);
  return out;
}

int positive_rep_index(const CoxeterSystem& w, const Root& r) {
  const int i = w.positive_root_index(r.is_positive() ? r : -r);
  if (i < 0) throw StructuralError("reflection image is not a root");
  return i;
}

// w^{-1}(beta) for the table element w.
Root inverse_image(const ElementTable& t, Index w, Root beta) {
  const CoxeterSystem& sys = t.system();
  for (int a : t.word(w)) beta = sys.reflect(a, beta);
  return beta;
}

constexpr std::size_t kMinimalityCheckBound = 400;

}  // namespace

std::vector<int> close_roots(const CoxeterSystem& w, std::vector<int> seed) {
  const int nroots = static_cast<int>(w.positive_roots().size());
  std::set<int> closed;
  for (int i : seed) {
    if (i < 0 || i >= nroots) throw InvalidInput("positive root index out of range");
    closed.insert(i);
  }
  std::deque<int> todo(closed.begin(), closed.end());
  std::vector<int> members(closed.begin(), closed.end());
  while (!todo.empty()) {
    const int b = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < members.size(); ++k) {
      const int g = members[k];
      for (auto [x, y] : {std::pair{b, g}, std::pair{g, b}}) {
        const int img = positive_rep_index(
            w, reflect_in(w, w.positive_roots()[x], w.positive_roots()[y]));
        if (closed.insert(img).second) {
          todo.push_back(img);
          members.push_back(img);
        }
      }
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<int> canonical_generator_roots(const CoxeterSystem& w, const std::vector<int>& closed) {
  const auto& roots = w.positive_roots();
  std::set<int> member(closed.begin(), closed.end());
  for (int b : closed)
    for (int g : closed)
      if (!member.count(positive_rep_index(w, reflect_in(w, roots[b], roots[g]))))
        throw InvalidInput("root subset is not closed under reflection");
  std::vector<int> out;
  for (int b : closed) {
    bool only_self = true;
    for (int g : closed) {
      if (g == b) continue;
      if (reflect_in(w, roots[b], roots[g]).is_negative()) {
        only_self = false;
        break;
      }
    }
    if (only_self) out.push_back(b);
  }
  return out;
}

std::shared_ptr<const ReflectionSubgroup> ReflectionSubgroup::from_reflections(
    SystemPtr ambient, const std::vector<Word>& words) {
  std::vector<int> seed;
  for (const Word& wd : words) {
    const GroupElement t = ambient->normal_form(wd);
    if (!ambient->is_reflection(t))
      throw InvalidInput("subgroup generator " + word_label(wd) + " is not a reflection");
    seed.push_back(ambient->root_of_reflection(t));
  }
  auto closed = close_roots(*ambient, seed);
  return build(std::move(ambient), std::move(closed));
}

std::shared_ptr<const ReflectionSubgroup> ReflectionSubgroup::from_roots(
    SystemPtr ambient, std::vector<int> root_indices) {
  auto closed = close_roots(*ambient, std::move(root_indices));
  return build(std::move(ambient), std::move(closed));
}

std::shared_ptr<const ReflectionSubgroup> ReflectionSubgroup::from_simple(
    SystemPtr ambient, std::vector<int> generators) {
  std::vector<int> seed;
  for (int s : generators) seed.push_back(ambient->positive_root_index(ambient->simple_root(s)));
  return from_roots(std::move(ambient), std::move(seed));
}

std::shared_ptr<const ReflectionSubgroup> ReflectionSubgroup::build(SystemPtr ambient,
                                                                    std::vector<int> roots) {
  std::shared_ptr<ReflectionSubgroup> g(new ReflectionSubgroup());
  g->ambient_ = std::move(ambient);
  g->roots_ = std::move(roots);
  const ElementTable& t = g->ambient_->element_table();

  std::vector<std::pair<Index, int>> gens;
  for (int b : canonical_generator_roots(*g->ambient_, g->roots_))
    gens.emplace_back(t.index_of(g->ambient_->reflection_of_root(b)), b);
  std::sort(gens.begin(), gens.end());
  for (auto [idx, b] : gens) {
    g->gens_.push_back(t.element(idx));
    g->gen_index_.push_back(idx);
    g->simple_roots_.push_back(b);
  }

  const int r = g->rank();
  g->coxeter_.assign(r, std::vector<int>(r, 1));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const Index st = t.multiply(g->gen_index_[i], g->gen_index_[j]);
      Index acc = st;
      int m = 1;
      while (acc != 0) {
        acc = t.multiply(acc, st);
        ++m;
      }
      g->coxeter_[i][j] = m;
    }

  // W_f and l_f by breadth-first search over S_f.
  g->lf_.assign(t.size(), -1);
  g->lf_[0] = 0;
  g->elements_.push_back(0);
  for (std::size_t head = 0; head < g->elements_.size(); ++head) {
    const Index w = g->elements_[head];
    for (Index s : g->gen_index_) {
      const Index ws = t.multiply(w, s);
      if (g->lf_[ws] < 0) {
        g->lf_[ws] = g->lf_[w] + 1;
        g->elements_.push_back(ws);
      }
    }
  }
  std::sort(g->elements_.begin(), g->elements_.end());

  std::size_t reflections = 0;
  for (Index w : g->elements_)
    if (g->ambient_->is_reflection(t.element(w))) ++reflections;
  if (reflections != g->roots_.size())
    throw StructuralError("reflections of W_f do not match its root subsystem");

  if (t.size() <= kMinimalityCheckBound && g->generators_by_minimality() != g->gen_index_)
    throw StructuralError("inversion criterion disagrees with the minimality definition of S_f");
  return g;
}

int ReflectionSubgroup::length_f(Index w) const {
  const int l = lf_.at(w);
  if (l < 0) throw DomainError("element is not in the reflection subgroup");
  return l;
}

bool ReflectionSubgroup::is_standard_parabolic() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const GroupElement& g) { return g.length() == 1; });
}

bool ReflectionSubgroup::contains_subgroup(const ReflectionSubgroup& other) const {
  if (other.ambient_->id() != ambient_->id()) return false;
  return std::includes(roots_.begin(), roots_.end(), other.roots_.begin(), other.roots_.end());
}

std::vector<Index> ReflectionSubgroup::generators_by_minimality() const {
  const ElementTable& t = table();
  std::vector<Index> refl;
  for (int b : roots_) refl.push_back(t.index_of(ambient_->reflection_of_root(b)));
  std::vector<Index> out;
  for (Index r : refl) {
    bool minimal = true;
    for (Index s : refl) {
      if (s == r) continue;
      if (t.length(t.multiply(s, r)) <= t.length(r)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_minimal_rep(const ReflectionSubgroup& f, Index w) {
  const auto& roots = f.ambient().positive_roots();
  for (int b : f.simple_roots())
    if (!inverse_image(f.table(), w, roots[b]).is_positive()) return false;
  return true;
}

CosetSystem::CosetSystem(SubgroupPtr subgroup) : subgroup_(std::move(subgroup)) {
  const ElementTable& t = subgroup_->table();
  position_.assign(t.size(), -1);
  for (Index w = 0; w < t.size(); ++w) {
    if (is_minimal_rep(*subgroup_, w)) {
      position_[w] = static_cast<int>(reps_.size());
      reps_.push_back(w);
    }
  }
  if (reps_.size() * subgroup_->order() != t.size())
    throw StructuralError("|^fW| * |W_f| != |W|");
}

CosetSystem minimal_reps(SubgroupPtr subgroup) { return CosetSystem(std::move(subgroup)); }

Decomposition decompose(const ReflectionSubgroup& f, Index w) {
  const ElementTable& t = f.table();
  Index sigma = 0;
  Index rep = w;
  for (bool progress = true; progress;) {
    progress = false;
    for (Index s : f.generator_indices()) {
      const Index srep = t.multiply(s, rep);
      if (t.length(srep) < t.length(rep)) {
        rep = srep;
        sigma = t.multiply(sigma, s);
        progress = true;
        break;
      }
    }
  }
  if (t.multiply(sigma, rep) != w) throw StructuralError("decomposition does not recompose");
  if (t.length(w) < f.length_f(sigma) + t.length(rep))
    throw StructuralError("l(sigma w) >= l_f(sigma) + l(w) violated");
  return {sigma, rep};
}

ProductCheck check_product_decomposition(const SubgroupPtr& inner_ptr,
                                         const SubgroupPtr& middle_ptr) {
  const ReflectionSubgroup& inner = *inner_ptr;
  const ReflectionSubgroup& middle = *middle_ptr;
  if (!middle.contains_subgroup(inner))
    throw InvalidInput("inner reflection subgroup is not contained in the middle one");
  const ElementTable& t = middle.table();
  std::vector<Index> left;
  for (Index w : middle.elements())
    if (is_minimal_rep(inner, w)) left.push_back(w);
  const CosetSystem mid(middle_ptr);
  const CosetSystem in(inner_ptr);

  ProductCheck out;
  out.inner_in_middle = left.size();
  out.middle_reps = mid.size();
  out.inner_reps = in.size();
  std::vector<char> hit(t.size(), 0);
  for (Index a : left) {
    for (Index b : mid.reps()) {
      const Index p = t.multiply(a, b);
      out.triples.push_back({a, b, p});
      if (!in.contains(p)) out.well_defined = false;
      if (hit[p]) out.injective = false;
      hit[p] = 1;
      if (t.length(p) != t.length(a) + t.length(b)) out.length_additive = false;
    }
  }
  for (Index r : in.reps())
    if (!hit[r]) out.surjective = false;
  return out;
}

ProductCheck product_bijection(const SubgroupPtr& inner, const SubgroupPtr& middle) {
  if (!middle->is_standard_parabolic())
    throw PreconditionError("middle subgroup must be standard parabolic");
  return check_product_decomposition(inner, middle);
}

}  // namespace coxkl
