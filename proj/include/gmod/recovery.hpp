#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gmod/group.hpp"
#include "gmod/intertwiner.hpp"
#include "gmod/rep_engine.hpp"

namespace gmod {

// Coordinate-equality tolerance for the idempotent partition; indicator
// gaps are O(1), so this is deliberately looser than the rank tolerance.
inline constexpr double kPartitionTol = 1e-6;

// Subspace R ⊆ M together with its per-block parts R_χ = R ∩ M_χ
// (components are in block-local coordinates).
struct RSubspace {
  Subspace space;
  std::vector<Subspace> components;
};

struct ClosureViolation {
  int map_index = 0;
  int u_index = 0;
  int v_index = 0;
  double residual = 0.0;
};

// Realization of R inside C^G: all a with every column of
// Σ_g a(g)·ρ_χ(g⁻¹) in R_χ, for every χ. Spanned by the indicators of
// the left cosets of the recovered subgroup.
struct SSpace {
  Subspace space;
};

struct RecoveryCertificate {
  std::vector<std::vector<int>> partition;  // blocks of element indices
  Subgroup subgroup;                        // the block containing the identity
  std::vector<CVector> idempotents;         // exact 0/1 indicator per block
  bool fixed_match = false;
};

RSubspace decompose_R(const Subspace& space, const ModuleM& m, double tol = kDefaultTol);

/// Hypothesis test: π(u⊗v) ∈ R for every basis map and every basis pair.
/// A violation is a value, not an error.
std::optional<ClosureViolation> check_closure(const RSubspace& r, const IntertwinerBasis& basis,
                                              double tol = kDefaultTol);

/// Least hom-closed subspace containing the input and the trivial block.
RSubspace closure(const Subspace& space, const ModuleM& m, const IntertwinerBasis& basis,
                  double tol = kDefaultTol);

/// Coordinatewise product on C^G.
CVector hadamard(const CVector& a, const CVector& b);

SSpace embed_S(const RSubspace& r, const ModuleM& m, const Group& g, double tol = kDefaultTol);

/// Blocks of the coordinate-equality refinement over the basis of S; the
/// block count is certified to equal dim S.
std::vector<std::vector<int>> partition_from_S(const SSpace& s, double coord_tol = kPartitionTol);

RecoveryCertificate recover_subgroup(const RSubspace& r, const ModuleM& m, const Group& g,
                                     const IntertwinerBasis& basis, double tol = kDefaultTol);

struct SubgroupResult {
  std::vector<int> subgroup;
  bool closure_ok = false;
  std::vector<int> recovered;
  bool match = false;
  std::vector<int> block_dims;  // per-χ dims of M^H
  int space_dim = 0;
  int s_dim = 0;
  std::string note;  // failure detail, empty on success
};

struct TrialResult {
  int trial = 0;
  bool ok = false;
  std::vector<int> recovered;
  int r_dim = 0;
  std::string note;
};

struct VerificationReport {
  int group_order = 0;
  int subgroup_count = 0;
  std::vector<SubgroupResult> results;
  std::vector<TrialResult> random_trials;
  bool injectivity_ok = false;
  bool all_ok = false;
  double elapsed_seconds = 0.0;  // informational; not part of the canonical report
};

/// Exhaustive subgroup round-trip plus seeded random closure trials.
VerificationReport verify_galois(const Group& g, std::uint64_t seed, double tol = kDefaultTol,
                                 int trials = 25);

}  // namespace gmod
