#pragma once

// Canonical bases of modules with a standard basis indexed by elements of W
// and a bar involution that is unitriangular for the Bruhat order.

#include <string>
#include <vector>

#include "coxkl/module.hpp"

namespace coxkl {

struct CanonicalBasis {
  std::vector<Index> elements;  // basis index -> element of W
  // C_w = m_w + sum_{y < w} c_{y,w} m_y, one vector per basis index.
  std::vector<SparseVec> c;
};

// Requires one-parameter coefficients. Basis i corresponds to elements[i],
// listed in (length, ShortLex) order. Throws StructuralError when the bar
// matrix is not unitriangular or when no solution exists.
CanonicalBasis canonical_basis(const BarMap& bar, const std::vector<Index>& elements,
                               const ElementTable& table);

struct CanonicalReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Bar invariance, leading coefficient 1, off-diagonal coefficients in
// q^-1 Z[q^-1], and support below w in the Bruhat order.
CanonicalReport verify_canonical(const CanonicalBasis& cb, const BarMap& bar,
                                 const ElementTable& table);

struct BarInvariantActionReport {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Compares m_w b_s with the rewritten forms for b_s = H_s + q_s^-1
// (q_s in q^{>0}) and b_s = H_s - q_s (q_s in q^{<0}), and checks that b_s
// commutes with the bar map.
BarInvariantActionReport check_bar_invariant_action(const RightModule& m, const BarMap& bar,
                                                    const CosetSystem& cosets);

}  // namespace coxkl
