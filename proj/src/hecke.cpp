#include "coxkl/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "coxkl/error.hpp"

namespace coxkl {

ParamSet ParamSet::generic(const CoxeterSystem& sys) {
  ParamSet p;
  p.alphabet = sys.parameter_alphabet();
  for (int s = 0; s < sys.rank(); ++s)
    p.q.push_back(LaurentPoly::variable(p.alphabet, sys.param_of_generator(s)));
  return p;
}

ParamSet ParamSet::specialized(const CoxeterSystem& sys, int k) {
  std::map<std::string, int> powers;
  for (const auto& name : *sys.parameter_alphabet())
    if (name != "q") powers[name] = k;
  return specialized(sys, powers);
}

ParamSet ParamSet::specialized(const CoxeterSystem& sys, const std::map<std::string, int>& powers) {
  return generic(sys).specialize(powers);
}

ParamSet ParamSet::specialize(const std::map<std::string, int>& powers) const {
  ParamSet p;
  p.alphabet = q_alphabet();
  for (const auto& x : q) p.q.push_back(coxkl::specialize(x, powers));
  return p;
}

ParamSet ParamSet::restrict_to(const std::vector<int>& gens) const {
  ParamSet p;
  p.alphabet = alphabet;
  for (int s : gens) p.q.push_back(q.at(s));
  return p;
}

int ParamSet::exponent(int s) const {
  const LaurentPoly& x = q.at(s);
  if (!single_parameter() || x.terms().size() != 1 || x.terms()[0].coeff != 1)
    throw PreconditionError("parameter is not a power of q");
  return x.terms()[0].exps[0];
}

void HeckeElement::add(Index w, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  for (const auto& [w, c] : o.coeffs) add(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  for (const auto& [w, c] : o.coeffs) add(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    coeffs.clear();
    return *this;
  }
  for (auto& [w, x] : coeffs) x *= c;
  return *this;
}

HeckeAlgebra::HeckeAlgebra(SystemPtr system, ParamSet params)
    : system_(std::move(system)), table_(&system_->element_table()), params_(std::move(params)) {
  if (static_cast<int>(params_.q.size()) != system_->rank())
    throw InvalidInput("one parameter per generator required");
  for (const auto& x : params_.q)
    if (x.is_zero()) throw InvalidInput("Hecke parameter must be non-zero");
  for (int s = 0; s < system_->rank(); ++s)
    for (int t = 0; t < system_->rank(); ++t)
      if (system_->conjugate_generators(s, t) && !(params_.q[s] == params_.q[t]))
        throw InvalidInput("conjugate generators need equal parameters");
}

HeckeElement HeckeAlgebra::basis(Index w) const {
  HeckeElement x;
  x.add(w, params_.one());
  return x;
}

HeckeElement HeckeAlgebra::generator(int s) const {
  if (s < 0 || s >= system_->rank()) throw InvalidInput("generator index out of range");
  return basis(table_->right_mul(0, s));
}

HeckeElement HeckeAlgebra::scalar(const LaurentPoly& c) const {
  HeckeElement x;
  x.add(0, c);
  return x;
}

HeckeElement HeckeAlgebra::mul_by_generator(const HeckeElement& x, int s) const {
  const LaurentPoly d = params_.diff(s);
  HeckeElement out;
  for (const auto& [w, c] : x.coeffs) {
    const Index ws = table_->right_mul(w, s);
    out.add(ws, c);
    if (table_->length(ws) < table_->length(w)) out.add(w, c * d);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_by_word(HeckeElement x, const Word& w) const {
  for (int s : w) x = mul_by_generator(x, s);
  return x;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement out;
  for (const auto& [v, c] : y.coeffs) out += mul_by_word(x, table_->word(v)) * c;
  return out;
}

HeckeElement HeckeAlgebra::bar_basis(Index w) const {
  {
    std::lock_guard lock(bar_mutex_);
    auto it = bar_cache_.find(w);
    if (it != bar_cache_.end()) return it->second;
  }
  HeckeElement out;
  if (w == 0) {
    out = one();
  } else {
    const int s = table_->word(w).back();
    const HeckeElement prev = bar_basis(table_->right_mul(w, s));
    // bar(H_s) = H_s^-1 = H_s - (q_s - q_s^-1).
    out = mul_by_generator(prev, s) - prev * params_.diff(s);
  }
  std::lock_guard lock(bar_mutex_);
  return bar_cache_.try_emplace(w, std::move(out)).first->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& x) const {
  HeckeElement out;
  for (const auto& [w, c] : x.coeffs) out += bar_basis(w) * c.bar();
  return out;
}

std::string HeckeAlgebra::to_string(const HeckeElement& x) const {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.coeffs) {
    if (!first) os << " + ";
    first = false;
    os << "H[";
    const Word& word = table_->word(w);
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word[i] + 1;
    os << ']';
    if (!(c == params_.one())) os << " * (" << c.to_string() << ')';
  }
  return os.str();
}

ParabolicEmbedding::ParabolicEmbedding(const HeckeAlgebra& ambient, std::vector<int> J)
    : ambient_(&ambient), J_(std::move(J)) {
  const CoxeterSystem& sys = ambient.system();
  for (int s : J_)
    if (s < 0 || s >= sys.rank()) throw InvalidInput("parabolic subset is not a subset of S");
  for (std::size_t i = 0; i < J_.size(); ++i)
    for (std::size_t j = i + 1; j < J_.size(); ++j)
      if (J_[i] == J_[j]) throw InvalidInput("parabolic subset lists a generator twice");
  IntMatrix m(J_.size(), std::vector<int>(J_.size(), 1));
  for (std::size_t i = 0; i < J_.size(); ++i)
    for (std::size_t j = 0; j < J_.size(); ++j)
      if (i != j) m[i][j] = sys.coxeter_order(J_[i], J_[j]);
  SystemOptions opts;
  opts.element_cap = sys.element_cap();
  // Keep ShortLex compatible with the ambient order.
  std::vector<int> order(J_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return sys.order_position(J_[a]) < sys.order_position(J_[b]);
  });
  opts.generator_order = order;
  auto subsys = CoxeterSystem::from_coxeter_matrix(m, opts);
  sub_ = std::make_unique<HeckeAlgebra>(subsys, ambient.params().restrict_to(J_));
  const ElementTable& st = sub_->table();
  for (Index w = 0; w < st.size(); ++w) {
    Index img = 0;
    for (int k : st.word(w)) img = ambient.table().right_mul(img, J_[k]);
    image_.push_back(img);
    preimage_.emplace(img, w);
  }
}

HeckeElement ParabolicEmbedding::operator()(const HeckeElement& x) const {
  HeckeElement out;
  for (const auto& [w, c] : x.coeffs) out.add(image_.at(w), c);
  return out;
}

Index ParabolicEmbedding::preimage(Index ambient_w) const {
  auto it = preimage_.find(ambient_w);
  return it == preimage_.end() ? ElementTable::npos : it->second;
}

}  // namespace coxkl
