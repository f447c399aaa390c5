#pragma once

#include "gmod/char_table.hpp"
#include "gmod/group.hpp"
#include "gmod/linalg.hpp"
#include "gmod/rng.hpp"

namespace gmod {

struct Irrep {
  int chi_index = 0;
  int dim = 1;
  std::vector<CMatrix> matrices;  // one unitary dim×dim matrix per element, canonical order
};

// M = ⊕_χ M_χ, each irreducible exactly once, trivial block first.
struct ModuleM {
  std::vector<Irrep> irreps;
  std::vector<int> offsets;  // offsets[b] = first coordinate of block b
  int total_dim = 0;
  std::vector<CMatrix> action;  // block-diagonal unitary per element

  std::size_t num_blocks() const { return irreps.size(); }
  int block_dim(std::size_t b) const { return irreps[b].dim; }
};

/// Left-translation matrices on C^G: (g·a)(x) = a(g⁻¹x), i.e. column y
/// carries a single 1 in row gy.
std::vector<CMatrix> regular_rep(const Group& g);

/// Left translation of a single coordinate vector: out[g·x] = in[x].
CVector translate(const Group& g, int gi, const CVector& a);

/// Image of convolution by e_χ inside C^G; dimension is certified to be
/// χ(1)² (BadIsotypicDim otherwise). χ(1) is read off e_χ's identity
/// coefficient χ(1)²/|G|.
Subspace isotypic_component(const Group& g, const CentralIdempotent& e, double tol = kDefaultTol);

/// One copy of M_χ inside its isotypic component: commutant splitting with
/// a seeded random Hermitian draw, retried up to 8 times.
Irrep split_irrep(const Group& g, const Subspace& isotypic, const CharacterTable& t, int chi_row,
                  const Rng& seed);

ModuleM build_M(const Group& g, const CharacterTable& t, const Rng& seed);

/// Coordinates of block b inside M, as a subspace of the total space.
Subspace block_subspace(const ModuleM& m, std::size_t b, double tol = kDefaultTol);

/// Image of the averaging projector (1/|H|)·Σ_{h∈H} action(h).
Subspace fixed_subspace(const ModuleM& m, const Subgroup& h, double tol = kDefaultTol);

/// Rank of the averaging projector restricted to each block.
std::vector<int> fixed_block_dims(const ModuleM& m, const Subgroup& h, double tol = kDefaultTol);

/// Character-theoretic oracle: dim M_χ^H = (1/|H|)·Σ_{h∈H} χ(h), which must
/// round to an integer (NotAnInteger otherwise).
int fixed_dim_by_character(const CharacterTable& t, const Subgroup& h, int chi_row);

}  // namespace gmod
