#include "gmod/recovery.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "gmod/error.hpp"
#include "gmod/kernels.hpp"
#include "gmod/rng.hpp"

namespace gmod {

RSubspace decompose_R(const Subspace& space, const ModuleM& m, double tol) {
  if (static_cast<int>(space.ambient_dim) != m.total_dim)
    fail(Errc::dimension_mismatch, "subspace does not live in M coordinates");

  CVector trivial_unit(m.total_dim);
  trivial_unit[m.offsets[0]] = 1.0;
  if (residual_norm(space, trivial_unit) > tol)
    fail(Errc::missing_trivial, "subspace does not contain the trivial block");

  RSubspace r;
  r.space = space;
  std::size_t dim_sum = 0;
  for (std::size_t b = 0; b < m.num_blocks(); ++b) {
    Subspace part = intersect(space, block_subspace(m, b, tol));
    int o = m.offsets[b];
    int d = m.irreps[b].dim;
    std::vector<CVector> local;
    local.reserve(part.dim());
    for (const auto& v : part.basis)
      local.emplace_back(v.begin() + o, v.begin() + o + d);
    r.components.push_back(span(local, d, tol));
    dim_sum += r.components.back().dim();
  }
  if (dim_sum != space.dim())
    fail(Errc::not_block_decomposable,
         "component dimensions sum to " + std::to_string(dim_sum) + " but the space has dimension " +
             std::to_string(space.dim()));
  return r;
}

std::optional<ClosureViolation> check_closure(const RSubspace& r, const IntertwinerBasis& basis,
                                              double tol) {
  for (std::size_t mi = 0; mi < basis.maps.size(); ++mi)
    for (std::size_t ui = 0; ui < r.space.basis.size(); ++ui)
      for (std::size_t vi = 0; vi < r.space.basis.size(); ++vi) {
        CVector w = apply_intertwiner(basis.maps[mi], r.space.basis[ui], r.space.basis[vi]);
        double res = residual_norm(r.space, w);
        if (res > tol * std::max(1.0, vec_norm(w)))
          return ClosureViolation{static_cast<int>(mi), static_cast<int>(ui),
                                  static_cast<int>(vi), res};
      }
  return std::nullopt;
}

RSubspace closure(const Subspace& space, const ModuleM& m, const IntertwinerBasis& basis,
                  double tol) {
  CVector trivial_unit(m.total_dim);
  trivial_unit[m.offsets[0]] = 1.0;
  std::vector<CVector> seed = space.basis;
  seed.push_back(trivial_unit);
  Subspace r = span(seed, m.total_dim, tol);

  for (int round = 0; round <= m.total_dim; ++round) {
    std::vector<CVector> vecs = r.basis;
    for (const auto& pi : basis.maps)
      for (const auto& u : r.basis)
        for (const auto& v : r.basis) vecs.push_back(apply_intertwiner(pi, u, v));
    Subspace next = span(vecs, m.total_dim, tol);
    if (next.dim() == r.dim()) break;
    r = std::move(next);
  }
  return decompose_R(r, m, tol);
}

CVector hadamard(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "hadamard operand length");
  CVector out(a.size());
  kern::hadamard(a.data(), b.data(), out.data(), a.size());
  return out;
}

SSpace embed_S(const RSubspace& r, const ModuleM& m, const Group& g, double tol) {
  int n = g.order();
  // membership constraints: for every χ and every direction q orthogonal to
  // R_χ, each column j of Σ_g a(g)·ρ_χ(g⁻¹) must satisfy q†·column = 0.
  // The g⁻¹ keeps the coset convention straight: the indicator of a left
  // coset cH transforms to ρ(H-average)·ρ(c⁻¹), whose columns are H-fixed.
  std::vector<CVector> rows;
  for (std::size_t b = 0; b < m.num_blocks(); ++b) {
    int d = m.irreps[b].dim;
    Subspace comp = complement(r.components[b]);
    for (const auto& q : comp.basis)
      for (int j = 0; j < d; ++j) {
        CVector row(n);
        for (int gi = 0; gi < n; ++gi) {
          const CMatrix& rep = m.irreps[b].matrices[g.inv[gi]];
          cd acc{0.0, 0.0};
          for (int i = 0; i < d; ++i) acc += std::conj(q[i]) * rep.at(i, j);
          row[gi] = acc;
        }
        rows.push_back(std::move(row));
      }
  }
  CMatrix c(rows.size(), n);
  for (std::size_t rr = 0; rr < rows.size(); ++rr)
    for (int j = 0; j < n; ++j) c.at(rr, j) = rows[rr][j];

  SSpace s;
  s.space = nullspace(c, tol);

  std::size_t expected = 0;
  for (std::size_t b = 0; b < m.num_blocks(); ++b)
    expected += static_cast<std::size_t>(m.irreps[b].dim) * r.components[b].dim();
  if (s.space.dim() != expected)
    fail(Errc::right_ideal_check_failed,
         "dim S is " + std::to_string(s.space.dim()) + ", expected " + std::to_string(expected));

  CVector ones(n, cd(1.0, 0.0));
  if (!contains(s.space, ones))
    fail(Errc::right_ideal_check_failed, "S does not contain the all-ones element");

  // ideal stability: translating mass from g to s·g permutes left cosets,
  // so S must be carried into itself by every generator
  for (const auto& gen : g.generators) {
    int si = -1;
    for (int i = 0; i < n; ++i)
      if (g.elements[i] == gen) {
        si = i;
        break;
      }
    for (const auto& bvec : s.space.basis) {
      CVector moved(n);
      for (int gi = 0; gi < n; ++gi) moved[g.mult[si][gi]] = bvec[gi];
      if (!contains(s.space, moved))
        fail(Errc::right_ideal_check_failed, "S is not translation-stable");
    }
  }
  return s;
}

std::vector<std::vector<int>> partition_from_S(const SSpace& s, double coord_tol) {
  int n = static_cast<int>(s.space.ambient_dim);
  std::vector<std::vector<int>> blocks;
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t b = 0; b < blocks.size() && !placed; ++b) {
      bool same = true;
      for (const auto& v : s.space.basis)
        if (std::abs(v[x] - v[reps[b]]) > coord_tol) {
          same = false;
          break;
        }
      if (same) {
        blocks[b].push_back(x);
        placed = true;
      }
    }
    if (!placed) {
      blocks.push_back({x});
      reps.push_back(x);
    }
  }
  if (blocks.size() != s.space.dim())
    fail(Errc::not_an_idempotent_span,
         "coordinate partition has " + std::to_string(blocks.size()) + " blocks but dim S is " +
             std::to_string(s.space.dim()));
  return blocks;
}

RecoveryCertificate recover_subgroup(const RSubspace& r, const ModuleM& m, const Group& g,
                                     const IntertwinerBasis& basis, double tol) {
  if (auto viol = check_closure(r, basis, tol))
    fail(Errc::not_closed, "hom closure fails at map " + std::to_string(viol->map_index) +
                               ", pair (" + std::to_string(viol->u_index) + "," +
                               std::to_string(viol->v_index) + "), residual " +
                               std::to_string(viol->residual));

  SSpace s = embed_S(r, m, g, tol);
  auto blocks = partition_from_S(s);

  RecoveryCertificate cert;
  cert.partition = blocks;
  int n = g.order();
  for (const auto& blk : blocks) {
    CVector ind(n);
    for (int x : blk) ind[x] = 1.0;
    if (!contains(s.space, ind))
      fail(Errc::not_an_idempotent_span, "a block indicator is not in S");
    cert.idempotents.push_back(std::move(ind));
  }

  std::vector<int> g1;
  for (const auto& blk : blocks)
    if (std::find(blk.begin(), blk.end(), 0) != blk.end()) {
      g1 = blk;
      break;
    }
  std::sort(g1.begin(), g1.end());
  if (!is_subgroup(g, g1))
    fail(Errc::subgroup_axiom_failed, "identity block is not closed under the group operations");
  cert.subgroup = Subgroup{g1};

  for (const auto& blk : blocks) {
    std::vector<int> sorted_blk = blk;
    std::sort(sorted_blk.begin(), sorted_blk.end());
    if (sorted_blk == g1) continue;
    int least = sorted_blk.front();
    std::vector<int> coset;
    coset.reserve(g1.size());
    for (int h : g1) coset.push_back(g.mult[least][h]);
    std::sort(coset.begin(), coset.end());
    if (coset != sorted_blk)
      fail(Errc::coset_check_failed, "a partition block is not a left coset of the identity block");
  }

  Subspace fixed = fixed_subspace(m, cert.subgroup, tol);
  if (!equal(fixed, r.space))
    fail(Errc::fixed_space_mismatch, "fixed space of the recovered subgroup differs from R");
  cert.fixed_match = true;
  return cert;
}

VerificationReport verify_galois(const Group& g, std::uint64_t seed, double tol, int trials) {
  auto t0 = std::chrono::steady_clock::now();
  Rng root(seed);

  ConjClasses cc = conjugacy_classes(g);
  CharacterTable table = character_table(g, cc, tol);
  ModuleM m = build_M(g, table, root.derive(1));
  IntertwinerBasis basis = hom_basis(m, table, tol);
  std::vector<Subgroup> subgroups = enumerate_subgroups(g);

  VerificationReport rep;
  rep.group_order = g.order();
  rep.subgroup_count = static_cast<int>(subgroups.size());
  rep.all_ok = true;

  std::vector<Subspace> fixed_spaces;
  fixed_spaces.reserve(subgroups.size());

  for (const auto& h : subgroups) {
    SubgroupResult res;
    res.subgroup = h.member_indices;
    Subspace fh = fixed_subspace(m, h, tol);
    fixed_spaces.push_back(fh);
    res.space_dim = static_cast<int>(fh.dim());
    res.block_dims = fixed_block_dims(m, h, tol);
    try {
      RSubspace r = decompose_R(fh, m, tol);
      res.closure_ok = !check_closure(r, basis, tol).has_value();
      RecoveryCertificate cert = recover_subgroup(r, m, g, basis, tol);
      res.recovered = cert.subgroup.member_indices;
      res.s_dim = static_cast<int>(cert.partition.size());
      res.match = (res.recovered == h.member_indices) && cert.fixed_match;
    } catch (const Error& e) {
      res.note = e.what();
      res.match = false;
    }
    if (!res.closure_ok || !res.match) rep.all_ok = false;
    rep.results.push_back(std::move(res));
  }

  rep.injectivity_ok = true;
  for (std::size_t i = 0; i < fixed_spaces.size() && rep.injectivity_ok; ++i)
    for (std::size_t j = i + 1; j < fixed_spaces.size(); ++j)
      if (equal(fixed_spaces[i], fixed_spaces[j])) {
        rep.injectivity_ok = false;
        break;
      }
  if (!rep.injectivity_ok) rep.all_ok = false;

  for (int k = 0; k < trials; ++k) {
    TrialResult tr;
    tr.trial = k;
    try {
      Rng draw = root.derive(1000 + static_cast<std::uint64_t>(k));
      std::vector<CVector> one = {draw.gaussian_vec(m.total_dim)};
      RSubspace r = closure(span(one, m.total_dim, tol), m, basis, tol);
      tr.r_dim = static_cast<int>(r.space.dim());
      RecoveryCertificate cert = recover_subgroup(r, m, g, basis, tol);
      tr.recovered = cert.subgroup.member_indices;
      tr.ok = cert.fixed_match;
    } catch (const Error& e) {
      tr.note = e.what();
      tr.ok = false;
    }
    if (!tr.ok) rep.all_ok = false;
    rep.random_trials.push_back(std::move(tr));
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gmod
