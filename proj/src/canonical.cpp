#include "coxkl/canonical.hpp"

#include <iterator>
#include <limits>
#include <map>

#include "coxkl/error.hpp"

namespace coxkl {

namespace {

LaurentPoly negative_part(const LaurentPoly& a) {
  LaurentPoly out = LaurentPoly::constant(a.alphabet(), 0);
  for (const auto& t : a.terms())
    if (t.exps[0] < 0) {
      const int e[1] = {t.exps[0]};
      out += LaurentPoly::monomial(a.alphabet(), e, t.coeff);
    }
  return out;
}

std::string word_string(const ElementTable& t, Index w) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.word(w).size(); ++i)
    s += (i ? "," : "") + std::to_string(t.word(w)[i] + 1);
  return s + "]";
}

[[noreturn]] void no_correction(const ElementTable& t, const std::vector<Index>& elements, int y, int w) {
  throw StructuralError("no bar-invariant correction exists at " + word_string(t, elements[y]) + " for C_" +
                        word_string(t, elements[w]));
}

[[noreturn]] void outside_interval() {
  throw StructuralError("canonical basis correction outside the Bruhat interval");
}

// Thrown by the machine-integer path; the solve is then redone exactly.
struct Overflow {};

// sum_i c[i] q^(lo + i), trimmed so that c is empty or has non-zero ends.
struct SmallPoly {
  int lo = 0;
  std::vector<long long> c;
  bool zero() const { return c.empty(); }
};

void trim(SmallPoly& p) {
  std::size_t a = 0, b = p.c.size();
  while (a < b && p.c[a] == 0) ++a;
  while (b > a && p.c[b - 1] == 0) --b;
  if (a == b) {
    p.c.clear();
    p.lo = 0;
    return;
  }
  p.c.erase(p.c.begin() + static_cast<std::ptrdiff_t>(b), p.c.end());
  p.c.erase(p.c.begin(), p.c.begin() + static_cast<std::ptrdiff_t>(a));
  p.lo += static_cast<int>(a);
}

SmallPoly to_small(const LaurentPoly& x) {
  SmallPoly p;
  if (x.is_zero()) return p;
  p.lo = x.min_degree();
  p.c.assign(static_cast<std::size_t>(x.max_degree() - p.lo + 1), 0);
  for (const auto& t : x.terms()) {
    if (t.coeff > std::numeric_limits<long long>::max() || t.coeff < std::numeric_limits<long long>::min())
      throw Overflow{};
    p.c[static_cast<std::size_t>(t.exps[0] - p.lo)] = static_cast<long long>(t.coeff);
  }
  return p;
}

LaurentPoly to_laurent(const SmallPoly& p, const AlphabetPtr& alphabet) {
  LaurentPoly out = LaurentPoly::constant(alphabet, 0);
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (p.c[i] != 0) {
      const int e[1] = {p.lo + static_cast<int>(i)};
      out += LaurentPoly::monomial(alphabet, e, p.c[i]);
    }
  return out;
}

SmallPoly bar_small(const SmallPoly& p) {
  SmallPoly r;
  if (p.zero()) return r;
  r.lo = -(p.lo + static_cast<int>(p.c.size()) - 1);
  r.c.assign(p.c.rbegin(), p.c.rend());
  return r;
}

void add_product(SmallPoly& acc, const SmallPoly& a, const SmallPoly& b) {
  if (a.zero() || b.zero()) return;
  const int lo = a.lo + b.lo;
  const int hi = lo + static_cast<int>(a.c.size() + b.c.size()) - 2;
  if (acc.zero()) {
    acc.lo = lo;
    acc.c.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  } else {
    const int old_hi = acc.lo + static_cast<int>(acc.c.size()) - 1;
    if (lo < acc.lo) {
      acc.c.insert(acc.c.begin(), static_cast<std::size_t>(acc.lo - lo), 0);
      acc.lo = lo;
    }
    if (hi > old_hi) acc.c.resize(acc.c.size() + static_cast<std::size_t>(hi - old_hi), 0);
  }
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      long long m;
      long long& slot = acc.c[static_cast<std::size_t>(lo - acc.lo) + i + j];
      if (__builtin_mul_overflow(a.c[i], b.c[j], &m) || __builtin_add_overflow(slot, m, &slot)) throw Overflow{};
    }
  trim(acc);
}

bool antisymmetric(const SmallPoly& a) {
  const std::size_t n = a.c.size();
  if (a.lo != -(a.lo + static_cast<int>(n) - 1)) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (a.c[i] != -a.c[n - 1 - i]) return false;
  return true;
}

SmallPoly negative_part(const SmallPoly& a) {
  SmallPoly r;
  for (std::size_t i = 0; i < a.c.size() && a.lo + static_cast<int>(i) < 0; ++i) r.c.push_back(a.c[i]);
  r.lo = a.lo;
  trim(r);
  return r;
}

// Same recursion as solve_exact() in machine integers.
CanonicalBasis solve_small(const BarMap& bar, const std::vector<Index>& elements, const ElementTable& table) {
  const int n = static_cast<int>(elements.size());
  const AlphabetPtr alphabet = bar.images.empty() ? nullptr : bar.images[0].at(0).alphabet();
  std::vector<std::vector<std::pair<int, SmallPoly>>> images(n);
  for (int z = 0; z < n; ++z)
    for (const auto& [y, r] : bar.images[z])
      if (y != z) images[z].emplace_back(y, to_small(r));

  CanonicalBasis cb{elements, std::vector<SparseVec>(n)};
  std::vector<SmallPoly> acc(n);
  std::vector<char> touched(n, 0);
  for (int w = 0; w < n; ++w) {
    SparseVec& p = cb.c[w];
    p[w] = bar.images[w].at(w);
    auto push = [&](int z, const SmallPoly& pz) {
      const SmallPoly pb = bar_small(pz);
      for (const auto& [y, r] : images[z]) {
        add_product(acc[y], pb, r);
        touched[y] = 1;
      }
    };
    push(w, SmallPoly{0, {1}});
    for (int y = w - 1; y >= 0; --y) {
      if (!touched[y]) continue;
      touched[y] = 0;
      const SmallPoly a = std::move(acc[y]);
      acc[y] = SmallPoly{};
      if (a.zero()) continue;
      if (!antisymmetric(a)) no_correction(table, elements, y, w);
      if (!table.bruhat_leq(elements[y], elements[w])) outside_interval();
      const SmallPoly py = negative_part(a);
      p[y] = to_laurent(py, alphabet);
      push(y, py);
    }
  }
  return cb;
}

CanonicalBasis solve_exact(const BarMap& bar, const std::vector<Index>& elements, const ElementTable& table) {
  const int n = static_cast<int>(elements.size());
  CanonicalBasis cb{elements, std::vector<SparseVec>(n)};
  for (int w = 0; w < n; ++w) {
    const LaurentPoly one = bar.images[w].at(w);
    SparseVec& p = cb.c[w];
    p[w] = one;
    // Coefficient of m_y in bar(C_w) - C_w is a_y - (p_y - bar p_y) with
    // a_y = sum_{z > y} bar(p_z) r_{y,z}; the lattice part of a_y is forced.
    // acc collects a_y as each p_z is fixed, largest z first.
    std::map<int, LaurentPoly> acc;
    auto push = [&](int z, const LaurentPoly& pz) {
      const LaurentPoly pb = pz.bar();
      for (const auto& [y, r] : bar.images[z])
        if (y != z) {
          auto [it, fresh] = acc.try_emplace(y, pb * r);
          if (!fresh) it->second += pb * r;
        }
    };
    push(w, one);
    while (!acc.empty()) {
      const auto last = std::prev(acc.end());
      const int y = last->first;
      const LaurentPoly a = std::move(last->second);
      acc.erase(last);
      if (a.is_zero()) continue;
      if (!(a.bar() == -a)) no_correction(table, elements, y, w);
      if (!table.bruhat_leq(elements[y], elements[w])) outside_interval();
      const LaurentPoly py = negative_part(a);
      p[y] = py;
      push(y, py);
    }
  }
  return cb;
}

}  // namespace

CanonicalBasis canonical_basis(const BarMap& bar, const std::vector<Index>& elements,
                               const ElementTable& table) {
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(bar.images.size()) != n)
    throw InvalidInput("bar map and basis have different sizes");
  for (int w = 0; w < n; ++w) {
    for (const auto& [y, c] : bar.images[w]) {
      if (c.num_params() > 1)
        throw PreconditionError("canonical bases need every parameter specialized to a power of q");
      if (y == w) {
        if (!(c == LaurentPoly::constant(c.alphabet(), 1)))
          throw StructuralError("bar matrix has a diagonal entry different from 1");
      } else if (y > w || !table.bruhat_leq(elements[y], elements[w])) {
        throw StructuralError("bar matrix is not unitriangular for the Bruhat order");
      }
    }
    if (!bar.images[w].contains(w)) throw StructuralError("bar matrix has a zero diagonal entry");
  }

  try {
    return solve_small(bar, elements, table);
  } catch (const Overflow&) {
    return solve_exact(bar, elements, table);
  }
}

CanonicalReport verify_canonical(const CanonicalBasis& cb, const BarMap& bar,
                                 const ElementTable& table) {
  CanonicalReport rep;
  for (int w = 0; w < static_cast<int>(cb.c.size()); ++w) {
    const std::string name = "C_" + word_string(table, cb.elements[w]);
    const SparseVec& c = cb.c[w];
    if (!(bar.apply(c) == c)) rep.violations.push_back(name + " is not bar-invariant");
    auto lead = c.find(w);
    if (lead == c.end() || !lead->second.is_constant() || !(lead->second == LaurentPoly::constant(lead->second.alphabet(), 1)))
      rep.violations.push_back(name + " does not have leading coefficient 1");
    for (const auto& [y, x] : c) {
      if (y == w) continue;
      if (!in_qinv_lattice(x))
        rep.violations.push_back(name + " coefficient at " + word_string(table, cb.elements[y]) +
                                 " is not in q^-1 Z[q^-1]");
      if (!table.bruhat_leq(cb.elements[y], cb.elements[w]))
        rep.violations.push_back(name + " has support outside the Bruhat interval at " +
                                 word_string(table, cb.elements[y]));
    }
  }
  return rep;
}

BarInvariantActionReport check_bar_invariant_action(const RightModule& m, const BarMap& bar,
                                                    const CosetSystem& cosets) {
  BarInvariantActionReport rep;
  const ElementTable& t = cosets.table();
  const ParamSet& params = m.params();
  for (int s = 0; s < m.rank(); ++s) {
    const int e = params.exponent(s);
    const LaurentPoly qs = params.of(s), qi = qs.bar();
    for (int i = 0; i < static_cast<int>(cosets.size()); ++i) {
      const Index w = cosets.reps()[i];
      const Index ws = t.right_mul(w, s);
      SparseVec expect;
      if (t.length(ws) < t.length(w)) {
        add_term(expect, cosets.position(ws), params.one());
        add_term(expect, i, e > 0 ? qs : -qi);
      } else if (cosets.contains(ws)) {
        add_term(expect, cosets.position(ws), params.one());
        add_term(expect, i, e > 0 ? qi : -qs);
      } else if (e > 0) {
        add_term(expect, i, qs + qi);
      }
      const SparseVec x = unit_vector(i, params.one());
      const SparseVec got = m.act_bar_invariant(x, s);
      ++rep.checked;
      if (got != expect)
        rep.violations.push_back("m_" + word_string(t, w) + " b_" + std::to_string(s + 1) +
                                 " differs from the rewritten action");
      if (bar.apply(got) != m.act_bar_invariant(bar.apply(x), s))
        rep.violations.push_back("b_" + std::to_string(s + 1) + " does not commute with bar at m_" +
                                 word_string(t, w));
    }
  }
  return rep;
}

}  // namespace coxkl
