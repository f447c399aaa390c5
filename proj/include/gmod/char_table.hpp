#pragma once

#include "gmod/group.hpp"
#include "gmod/linalg.hpp"

namespace gmod {

struct CharacterTable {
  ConjClasses classes;
  int group_order = 1;
  std::vector<std::vector<cd>> rows;  // rows[r][c] = χ_r at the class-c representative
  std::vector<int> degrees;           // χ_r(1)
  int trivial_row = 0;

  std::size_t num_classes() const { return classes.classes.size(); }
  /// χ_r at a group element (via its class).
  cd value_at(int row, int element) const { return rows[row][classes.class_of[element]]; }
};

/// Irr(G) from simultaneous eigenvectors of the class-sum multiplication
/// operators. Rows sorted by (degree, then value-wise descending on
/// (re, im) at 1e-6 granularity), which puts the trivial character first.
CharacterTable character_table(const Group& g, const ConjClasses& cc, double tol = kDefaultTol);

struct CentralIdempotent {
  int chi_index = 0;
  CVector coeffs;  // over group elements: (χ(1)/|G|)·conj(χ(g))
};

std::vector<CentralIdempotent> central_idempotents(const Group& g, const CharacterTable& t);

/// Group-algebra convolution (Σ a_g g)(Σ b_h h) = Σ_{g,h} a_g b_h (gh).
CVector convolve(const Group& g, const CVector& a, const CVector& b);

}  // namespace gmod
