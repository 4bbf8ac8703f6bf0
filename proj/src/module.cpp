#include "coxkl/module.hpp"

#include <algorithm>
#include <sstream>

#include "coxkl/error.hpp"

namespace coxkl {

void add_term(SparseVec& y, int i, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = y.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) y.erase(it);
  }
}

void axpy(SparseVec& y, const LaurentPoly& a, const SparseVec& x) {
  if (a.is_zero()) return;
  for (const auto& [i, c] : x) add_term(y, i, a * c);
}

SparseVec scaled(const SparseVec& x, const LaurentPoly& a) {
  SparseVec out;
  axpy(out, a, x);
  return out;
}

SparseVec unit_vector(int i, const LaurentPoly& one) { return SparseVec{{i, one}}; }

SparseVec bar_coefficients(const SparseVec& x) {
  SparseVec out;
  for (const auto& [i, c] : x) out.emplace(i, c.bar());
  return out;
}

RightModule::RightModule(ParamSet params, IntMatrix coxeter, std::vector<int> generator_order,
                         std::vector<std::vector<SparseVec>> action, int dim)
    : params_(std::move(params)),
      coxeter_(std::move(coxeter)),
      order_(std::move(generator_order)),
      action_(std::move(action)) {
  if (action_.size() != params_.q.size() || coxeter_.size() != action_.size() ||
      order_.size() != action_.size())
    throw InvalidInput("module data disagree on the number of generators");
  dim_ = action_.empty() ? std::max(dim, 0) : static_cast<int>(action_[0].size());
  if (dim >= 0 && dim != dim_) throw InvalidInput("module dimension disagrees with action table");
  for (const auto& col : action_) {
    if (static_cast<int>(col.size()) != dim_) throw InvalidInput("ragged action table");
    for (const auto& v : col)
      for (const auto& [i, c] : v)
        if (i < 0 || i >= dim_) throw InvalidInput("action image outside the basis");
  }
}

SparseVec RightModule::act(const SparseVec& v, int s) const {
  SparseVec out;
  const auto& col = action_.at(s);
  for (const auto& [i, c] : v) axpy(out, c, col[i]);
  return out;
}

SparseVec RightModule::act_word(SparseVec v, const Word& w) const {
  for (int s : w) v = act(v, s);
  return v;
}

SparseVec RightModule::act_hecke(const SparseVec& v, const HeckeAlgebra& alg,
                                 const HeckeElement& h) const {
  SparseVec out;
  for (const auto& [w, c] : h.coeffs) axpy(out, c, act_word(v, alg.table().word(w)));
  return out;
}

SparseVec RightModule::act_bar_invariant(const SparseVec& v, int s) const {
  const int e = params_.exponent(s);
  if (e == 0) throw PreconditionError("parameter q^0 has no bar-invariant generator");
  SparseVec out = act(v, s);
  axpy(out, e > 0 ? params_.of(s).bar() : -params_.of(s), v);
  return out;
}

namespace {

int first_difference(const std::vector<SparseVec>& a, const std::vector<SparseVec>& b,
                     int* count) {
  int first = -1;
  *count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) {
      if (first < 0) first = static_cast<int>(i);
      ++*count;
    }
  }
  return first;
}

}  // namespace

bool quadratic_holds(const RightModule& m, int s, RelationFailure* failure) {
  // m H_s H_s = m + (q_s - q_s^-1) m H_s.
  const LaurentPoly d = m.params().diff(s);
  std::vector<SparseVec> lhs, rhs;
  for (int i = 0; i < m.dim(); ++i) {
    const SparseVec& once = m.image(i, s);
    lhs.push_back(m.act(once, s));
    SparseVec r = unit_vector(i, m.params().one());
    axpy(r, d, once);
    rhs.push_back(std::move(r));
  }
  int count = 0;
  const int first = first_difference(lhs, rhs, &count);
  if (first < 0) return true;
  if (failure) *failure = {"quadratic", s, s, first, count, lhs[first], rhs[first]};
  return false;
}

bool braid_pair_holds(const RightModule& m, int s, int t, RelationFailure* failure) {
  const int order = m.coxeter_matrix()[s][t];
  Word a, b;
  for (int k = 0; k < order; ++k) {
    a.push_back(k % 2 ? t : s);
    b.push_back(k % 2 ? s : t);
  }
  std::vector<SparseVec> lhs, rhs;
  for (int i = 0; i < m.dim(); ++i) {
    const SparseVec e = unit_vector(i, m.params().one());
    lhs.push_back(m.act_word(e, a));
    rhs.push_back(m.act_word(e, b));
  }
  int count = 0;
  const int first = first_difference(lhs, rhs, &count);
  if (first < 0) return true;
  if (failure) *failure = {"braid", s, t, first, count, lhs[first], rhs[first]};
  return false;
}

RelationReport check_relations(const RightModule& m) {
  RelationReport report;
  const auto& order = m.generator_order();
  for (int s : order) {
    RelationFailure f;
    ++report.quadratic_checked;
    if (!quadratic_holds(m, s, &f)) report.failures.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      RelationFailure f;
      ++report.braid_checked;
      if (!braid_pair_holds(m, order[i], order[j], &f)) report.failures.push_back(std::move(f));
    }
  return report;
}

SparseVec BarMap::apply(const SparseVec& x) const {
  SparseVec out;
  for (const auto& [i, c] : x) axpy(out, c.bar(), images.at(i));
  return out;
}

bool BarMap::is_involution() const {
  for (std::size_t i = 0; i < images.size(); ++i) {
    const SparseVec twice = apply(images[i]);
    if (twice.size() != 1 || twice.begin()->first != static_cast<int>(i) ||
        !(twice.begin()->second == LaurentPoly(1)))
      return false;
  }
  return true;
}

RightModule three_case_module(const CosetSystem& cosets, const ParamSet& params) {
  const ElementTable& t = cosets.table();
  const CoxeterSystem& sys = t.system();
  const int n = sys.rank();
  if (static_cast<int>(params.q.size()) != n) throw InvalidInput("one parameter per generator");
  std::vector<std::vector<SparseVec>> action(n);
  for (int s = 0; s < n; ++s) {
    const LaurentPoly d = params.diff(s);
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      const Index w = cosets.reps()[i];
      const Index ws = t.right_mul(w, s);
      SparseVec v;
      if (t.length(ws) < t.length(w)) {
        const int j = cosets.position(ws);
        if (j < 0) throw StructuralError("prefix of a minimal representative left ^fW");
        add_term(v, j, params.one());
        add_term(v, static_cast<int>(i), d);
      } else if (cosets.contains(ws)) {
        add_term(v, cosets.position(ws), params.one());
      } else {
        add_term(v, static_cast<int>(i), params.of(s));
      }
      action[s].push_back(std::move(v));
    }
  }
  std::vector<int> order(sys.generator_order().begin(), sys.generator_order().end());
  return RightModule(params, sys.coxeter_matrix(), std::move(order), std::move(action));
}

BarMap cyclic_bar(const RightModule& m, const CosetSystem& cosets) {
  const ElementTable& t = cosets.table();
  BarMap out;
  out.images.resize(cosets.size());
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    const Index w = cosets.reps()[i];
    if (w == 0) {
      out.images[i] = unit_vector(static_cast<int>(i), m.params().one());
      continue;
    }
    const int s = t.word(w).back();
    const int j = cosets.position(t.right_mul(w, s));
    const SparseVec& prev = out.images.at(j);  // shorter, already filled
    SparseVec v = m.act(prev, s);
    axpy(v, -m.params().diff(s), prev);
    out.images[i] = std::move(v);
  }
  return out;
}

std::vector<Index> parabolic_reps(const ElementTable& t, const std::vector<int>& J) {
  std::vector<Index> out;
  for (Index w = 0; w < t.size(); ++w) {
    bool minimal = true;
    for (int s : J) minimal &= !t.is_left_descent(w, s);
    if (minimal) out.push_back(w);
  }
  return out;
}

namespace {

// y = u * y' with u in W_J and y' in ^JW; returns (u, y').
std::pair<Index, Index> split_left(const ElementTable& t, const std::vector<int>& J, Index y) {
  Index u = 0;
  for (bool progress = true; progress;) {
    progress = false;
    for (int s : J) {
      if (t.is_left_descent(y, s)) {
        y = t.left_mul(y, s);
        u = t.right_mul(u, s);
        progress = true;
        break;
      }
    }
  }
  // u was accumulated as s_1 s_2 ... with y_orig = s_1 s_2 ... y.
  return {u, y};
}

}  // namespace

SparseVec tensor_with(const InducedModule& ind, const RightModule& inner,
                      const ParabolicEmbedding& embedding, const SparseVec& v, Index y) {
  const ElementTable& t = embedding.ambient().table();
  const auto [u, rest] = split_left(t, ind.J, y);
  const auto pos = std::lower_bound(ind.reps.begin(), ind.reps.end(), rest);
  if (pos == ind.reps.end() || *pos != rest) throw StructuralError("coset splitting failed");
  const int x = static_cast<int>(pos - ind.reps.begin());
  const Index sub_u = embedding.preimage(u);
  if (sub_u == ElementTable::npos) throw StructuralError("left factor outside W_J");
  const SparseVec bu = inner.act_word(v, embedding.sub().table().word(sub_u));
  SparseVec out;
  for (const auto& [b, c] : bu) add_term(out, ind.index_of(b, x), c);
  return out;
}

InducedModule induce(const RightModule& inner, const ParabolicEmbedding& embedding) {
  const HeckeAlgebra& alg = embedding.ambient();
  const ElementTable& t = alg.table();
  if (inner.rank() != static_cast<int>(embedding.generators().size()))
    throw InvalidInput("inner module rank does not match the parabolic subset");
  InducedModule ind{RightModule(alg.params(), alg.system().coxeter_matrix(),
                                {alg.system().generator_order().begin(),
                                 alg.system().generator_order().end()},
                                std::vector<std::vector<SparseVec>>(alg.system().rank())),
                    embedding.generators(), parabolic_reps(t, embedding.generators()), {}};
  for (int b = 0; b < inner.dim(); ++b)
    for (int x = 0; x < static_cast<int>(ind.reps.size()); ++x) ind.basis.emplace_back(b, x);

  const int n = alg.system().rank();
  std::vector<std::vector<SparseVec>> action(n);
  for (int s = 0; s < n; ++s) {
    for (const auto& [b, x] : ind.basis) {
      const HeckeElement hx = alg.mul_by_generator(alg.basis(ind.reps[x]), s);
      const SparseVec eb = unit_vector(b, alg.params().one());
      SparseVec out;
      for (const auto& [y, c] : hx.coeffs) axpy(out, c, tensor_with(ind, inner, embedding, eb, y));
      action[s].push_back(std::move(out));
    }
  }
  ind.module = RightModule(alg.params(), alg.system().coxeter_matrix(),
                           {alg.system().generator_order().begin(),
                            alg.system().generator_order().end()},
                           std::move(action), static_cast<int>(ind.basis.size()));
  return ind;
}

BarMap induced_bar(const InducedModule& ind, const RightModule& inner, const BarMap& inner_bar,
                   const ParabolicEmbedding& embedding) {
  const HeckeAlgebra& alg = embedding.ambient();
  BarMap out;
  for (const auto& [b, x] : ind.basis) {
    const HeckeElement hb = alg.bar_basis(ind.reps[x]);
    const SparseVec& pb = inner_bar.images.at(b);
    SparseVec v;
    for (const auto& [y, c] : hb.coeffs) axpy(v, c, tensor_with(ind, inner, embedding, pb, y));
    out.images.push_back(std::move(v));
  }
  return out;
}

std::string render_vector(const SparseVec& v, const std::vector<std::string>& basis_names,
                          int lead) {
  if (v.empty()) return "0";
  std::vector<int> order;
  if (v.count(lead)) order.push_back(lead);
  for (const auto& [i, c] : v)
    if (i != lead) order.push_back(i);
  std::ostringstream os;
  bool first = true;
  for (int i : order) {
    const LaurentPoly& c = v.at(i);
    if (!first) os << " + ";
    first = false;
    const std::string& name = basis_names.at(i);
    if (c == LaurentPoly(1)) {
      os << name;
    } else if (c == LaurentPoly(-1)) {
      os << '-' << name;
    } else if (c.terms().size() == 1 && c.terms()[0].coeff == 1 && !c.is_constant()) {
      os << c.to_string() << ' ' << name;
    } else {
      os << '(' << c.to_string() << ") " << name;
    }
  }
  return os.str();
}

}  // namespace coxkl
