#include "coxkl/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

const AlphabetPtr& unify(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!a) return b;
  if (!b || a == b || *a == *b) return a;
  throw InvalidInput("Laurent polynomial alphabet mismatch");
}

bool exps_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
  return a.exps < b.exps;
}

}  // namespace

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  if (names.size() > kMaxParameters)
    throw UnsupportedType("at most " + std::to_string(kMaxParameters) + " parameters supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw InvalidInput("duplicate parameter name " + names[i]);
  return std::make_shared<const Alphabet>(std::move(names));
}

const AlphabetPtr& q_alphabet() {
  static const AlphabetPtr q = make_alphabet({"q"});
  return q;
}

LaurentPoly::LaurentPoly(long long c) {
  if (c != 0) terms_.push_back(Term{Exponents{}, BigInt(c)});
}

LaurentPoly LaurentPoly::constant(AlphabetPtr alphabet, const BigInt& c) {
  LaurentPoly p;
  p.alphabet_ = std::move(alphabet);
  if (c != 0) p.terms_.push_back(Term{Exponents{}, c});
  return p;
}

LaurentPoly LaurentPoly::monomial(AlphabetPtr alphabet, std::span<const int> exps,
                                  const BigInt& c) {
  const std::size_t n = alphabet ? alphabet->size() : 0;
  if (exps.size() != n) throw InvalidInput("exponent vector length does not match alphabet");
  LaurentPoly p;
  p.alphabet_ = std::move(alphabet);
  if (c == 0) return p;
  Term t;
  std::copy(exps.begin(), exps.end(), t.exps.begin());
  t.coeff = c;
  p.terms_.push_back(std::move(t));
  return p;
}

LaurentPoly LaurentPoly::variable(AlphabetPtr alphabet, std::string_view name, int power) {
  if (!alphabet) throw InvalidInput("variable requires an alphabet");
  auto it = std::find(alphabet->begin(), alphabet->end(), name);
  if (it == alphabet->end()) throw InvalidInput("unknown parameter " + std::string(name));
  std::vector<int> e(alphabet->size(), 0);
  e[static_cast<std::size_t>(it - alphabet->begin())] = power;
  return monomial(std::move(alphabet), e);
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Exponents{});
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  alphabet_ = unify(alphabet_, o.alphabet_);
  if (o.terms_.empty()) return *this;
  if (o.terms_.size() == 1 && &o != this) {
    const Term& t = o.terms_[0];
    auto it = std::lower_bound(terms_.begin(), terms_.end(), t, exps_less);
    if (it != terms_.end() && it->exps == t.exps) {
      it->coeff += t.coeff;
      if (it->coeff == 0) terms_.erase(it);
    } else {
      terms_.insert(it, t);
    }
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps < a->exps) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.alphabet_ = unify(a.alphabet_, b.alphabet_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  // Shifting by a monomial preserves the term order, so the product is a
  // merge of |small| sorted rows.
  const auto& small = a.terms_.size() <= b.terms_.size() ? a.terms_ : b.terms_;
  const auto& big = a.terms_.size() <= b.terms_.size() ? b.terms_ : a.terms_;
  LaurentPoly row;
  row.alphabet_ = r.alphabet_;
  for (const auto& x : small) {
    row.terms_.clear();
    row.terms_.reserve(big.size());
    for (const auto& y : big) {
      LaurentPoly::Term t;
      for (std::size_t k = 0; k < kMaxParameters; ++k) t.exps[k] = x.exps[k] + y.exps[k];
      t.coeff = x.coeff * y.coeff;
      row.terms_.push_back(std::move(t));
    }
    if (r.terms_.empty()) {
      std::swap(r.terms_, row.terms_);
    } else {
      r += row;
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.alphabet_ && b.alphabet_ && a.alphabet_ != b.alphabet_ && *a.alphabet_ != *b.alphabet_)
    return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.alphabet_ = alphabet_;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Term t{it->exps, it->coeff};
    for (auto& e : t.exps) e = -e;
    r.terms_.push_back(std::move(t));
  }
  // Negation reverses lexicographic order, so the reversed sequence is sorted.
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const std::size_t n = num_params();
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const bool negative = it->coeff < 0;
    const BigInt mag = negative ? BigInt(-it->coeff) : it->coeff;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t k = 0; k < n; ++k) {
      const int e = it->exps[k];
      if (e == 0) continue;
      if (any) mono << '*';
      mono << (*alphabet_)[k];
      if (e != 1) mono << '^' << e;
      any = true;
    }
    if (!any) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << mono.str();
    }
  }
  return os.str();
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero polynomial");
  return terms_.front().exps[0];
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw DomainError("degree of zero polynomial");
  return terms_.back().exps[0];
}

BigInt LaurentPoly::coeff_at(int degree) const {
  for (const auto& t : terms_)
    if (t.exps[0] == degree) return t.coeff;
  return 0;
}

LaurentPoly specialize(const LaurentPoly& x, const std::map<std::string, int>& powers) {
  for (const auto& [name, k] : powers)
    if (k == 0) throw InvalidInput("specialization exponent 0 for " + name + " is not allowed");
  std::vector<int> weight(x.num_params(), 0);
  for (std::size_t k = 0; k < x.num_params(); ++k) {
    const std::string& name = (*x.alphabet())[k];
    auto it = powers.find(name);
    if (it != powers.end()) {
      weight[k] = it->second;
    } else if (name == "q") {
      weight[k] = 1;
    } else {
      throw InvalidInput("no specialization given for parameter " + name);
    }
  }
  LaurentPoly r = LaurentPoly::constant(q_alphabet(), 0);
  for (const auto& t : x.terms()) {
    int e = 0;
    for (std::size_t k = 0; k < weight.size(); ++k) e += weight[k] * t.exps[k];
    const int exps[1] = {e};
    r += LaurentPoly::monomial(q_alphabet(), exps, t.coeff);
  }
  return r;
}

bool in_qinv_lattice(const LaurentPoly& x) {
  if (x.num_params() > 1) throw InvalidInput("lattice test needs a one-parameter polynomial");
  for (const auto& t : x.terms())
    if (t.exps[0] > -1) return false;
  return true;
}

}  // namespace coxkl
