#pragma once

#include "gmod/char_table.hpp"
#include "gmod/rep_engine.hpp"

namespace gmod {

// G-homomorphism M⊗M → M as a dense coefficient tensor.
// tensor[(i·d + j)·d + k] = coefficient of output coordinate k on input e_i ⊗ e_j.
struct Intertwiner {
  int dim = 0;
  CVector tensor;  // length dim³
};

struct IntertwinerBasis {
  int dim = 0;
  std::vector<Intertwiner> maps;  // orthonormal in coefficient space

  std::size_t count() const { return maps.size(); }
};

/// dim Hom_G(M_a ⊗ M_b, M_c) = (1/|G|)·Σ χ_a χ_b conj(χ_c), classwise.
int cg_multiplicity(const CharacterTable& t, int a_row, int b_row, int c_row);

/// Basis of Hom_G(M⊗M, M) via the Reynolds projector applied to elementary
/// tensors, block triple by block triple; the rank is cross-checked against
/// cg_multiplicity per triple.
IntertwinerBasis hom_basis(const ModuleM& m, const CharacterTable& t, double tol = kDefaultTol);

/// π(u ⊗ v).
CVector apply_intertwiner(const Intertwiner& pi, const CVector& u, const CVector& v);

/// The g-rotation of a coefficient tensor; equivariant tensors are exactly
/// the fixed points, and averaging rotations over G gives the Reynolds
/// projector.
CVector tensor_rotate(const ModuleM& m, int gi, const CVector& tensor);

/// (1/|G|)·Σ_g tensor_rotate(g, tensor).
CVector reynolds(const ModuleM& m, const CVector& tensor);

}  // namespace gmod
