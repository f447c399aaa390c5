#include "gmod/rep_engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gmod/error.hpp"
#include "gmod/kernels.hpp"

namespace gmod {

std::vector<CMatrix> regular_rep(const Group& g) {
  int n = g.order();
  std::vector<CMatrix> out;
  out.reserve(n);
  for (int gi = 0; gi < n; ++gi) {
    CMatrix m(n, n);
    for (int y = 0; y < n; ++y) m.at(g.mult[gi][y], y) = 1.0;
    out.push_back(std::move(m));
  }
  return out;
}

CVector translate(const Group& g, int gi, const CVector& a) {
  int n = g.order();
  CVector out(n);
  for (int y = 0; y < n; ++y) out[g.mult[gi][y]] = a[y];
  return out;
}

Subspace isotypic_component(const Group& g, const CentralIdempotent& e, double tol) {
  int n = g.order();
  if (static_cast<int>(e.coeffs.size()) != n)
    fail(Errc::dimension_mismatch, "idempotent length must be the group order");
  // e_χ(1) = χ(1)²/|G| recovers the degree
  double d_est = std::sqrt(std::max(0.0, e.coeffs[0].real()) * n);
  int deg = static_cast<int>(std::round(d_est));
  if (std::abs(d_est - deg) > 1e-6 || deg < 1)
    fail(Errc::bad_isotypic_dim, "identity coefficient is not a squared degree over |G|");

  // convolution by e: column y is e * δ_y, entry (x, y) = e(x·y⁻¹)
  std::vector<CVector> cols(n, CVector(n));
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) cols[y][x] = e.coeffs[g.mult[x][g.inv[y]]];
  Subspace s = span(cols, n, tol);
  if (static_cast<int>(s.dim()) != deg * deg)
    fail(Errc::bad_isotypic_dim, "isotypic rank " + std::to_string(s.dim()) +
                                     " does not equal degree squared " + std::to_string(deg * deg));
  return s;
}

namespace {

// action matrix of element gi on an invariant subspace, in its basis
CMatrix restricted_action(const Group& g, const Subspace& space, int gi) {
  int d = static_cast<int>(space.dim());
  int n = g.order();
  CMatrix r(d, d);
  for (int j = 0; j < d; ++j) {
    CVector lj = translate(g, gi, space.basis[j]);
    for (int i = 0; i < d; ++i) r.at(i, j) = kern::dot_conj(space.basis[i].data(), lj.data(), n);
  }
  return r;
}

std::vector<int> generator_indices(const Group& g) {
  std::vector<int> idx;
  for (const auto& s : g.generators) {
    for (int i = 0; i < g.order(); ++i) {
      if (g.elements[i] == s) {
        idx.push_back(i);
        break;
      }
    }
  }
  if (idx.empty()) idx.push_back(0);
  return idx;
}

}  // namespace

Irrep split_irrep(const Group& g, const Subspace& isotypic, const CharacterTable& t, int chi_row,
                  const Rng& seed) {
  int n = g.order();
  int deg = t.degrees[chi_row];
  int d_iso = static_cast<int>(isotypic.dim());
  double tol = isotypic.tol;
  if (d_iso != deg * deg)
    fail(Errc::bad_isotypic_dim, "isotypic dimension does not match the character degree");

  std::vector<int> gens = generator_indices(g);
  std::vector<CMatrix> rho_gen;
  rho_gen.reserve(gens.size());
  for (int s : gens) rho_gen.push_back(restricted_action(g, isotypic, s));

  // commutant: all X with X·ρ(s) − ρ(s)·X = 0 for every generator
  CMatrix c(gens.size() * d_iso * d_iso, d_iso * d_iso);
  std::size_t row = 0;
  for (const auto& rho : rho_gen) {
    for (int k = 0; k < d_iso; ++k)
      for (int l = 0; l < d_iso; ++l) {
        for (int i = 0; i < d_iso; ++i)
          for (int j = 0; j < d_iso; ++j) {
            cd v{0.0, 0.0};
            if (i == k) v += rho.at(j, l);
            if (j == l) v -= rho.at(k, i);
            c.at(row, i * d_iso + j) = v;
          }
        ++row;
      }
  }
  Subspace comm = nullspace(c, tol);
  if (static_cast<int>(comm.dim()) != deg * deg)
    fail(Errc::split_degenerate, "commutant dimension " + std::to_string(comm.dim()) +
                                     " does not equal degree squared");

  const char* last_check_failure = nullptr;
  for (int attempt = 0; attempt < 8; ++attempt) {
    Rng r = seed.derive(static_cast<std::uint64_t>(attempt));
    CMatrix a(d_iso, d_iso);
    for (const auto& x : comm.basis) {
      cd cf = r.gaussian_c();
      kern::axpy(cf, x.data(), a.e.data(), a.e.size());
    }
    CMatrix h = a + a.adjoint();
    auto clusters = hermitian_eigensplit(h, tol);

    const Subspace* sel = nullptr;
    for (const auto& cl : clusters)
      if (static_cast<int>(cl.space.dim()) == deg) {
        sel = &cl.space;
        break;
      }
    if (!sel) continue;

    // lift the eigenspace basis back to C^G
    std::vector<CVector> u(deg, CVector(n));
    for (int i = 0; i < deg; ++i)
      for (int j = 0; j < d_iso; ++j)
        kern::axpy(sel->basis[i][j], isotypic.basis[j].data(), u[i].data(), n);

    std::vector<CMatrix> mats(n);
    for (int gi = 0; gi < n; ++gi) {
      CMatrix m(deg, deg);
      for (int j = 0; j < deg; ++j) {
        CVector lj = translate(g, gi, u[j]);
        for (int i = 0; i < deg; ++i) m.at(i, j) = kern::dot_conj(u[i].data(), lj.data(), n);
      }
      mats[gi] = std::move(m);
    }

    CMatrix id = CMatrix::identity(deg);
    bool ok = true;
    for (int gi = 0; gi < n && ok; ++gi)
      if (max_abs(mats[gi] * mats[gi].adjoint() - id) > tol) {
        ok = false;
        last_check_failure = "constructed matrices are not unitary";
      }
    for (int gi = 0; gi < n && ok; ++gi)
      for (int hj = 0; hj < n && ok; ++hj)
        if (max_abs(mats[gi] * mats[hj] - mats[g.mult[gi][hj]]) > tol) {
          ok = false;
          last_check_failure = "constructed matrices do not multiply like the group";
        }
    for (std::size_t cl = 0; cl < t.num_classes() && ok; ++cl) {
      cd tr{0.0, 0.0};
      const CMatrix& m = mats[t.classes.representatives[cl]];
      for (int i = 0; i < deg; ++i) tr += m.at(i, i);
      if (std::abs(tr - t.rows[chi_row][cl]) > tol) {
        ok = false;
        last_check_failure = "trace does not match the character row";
      }
    }
    if (ok) {
      double s = 0.0;
      for (int gi = 0; gi < n; ++gi) {
        cd tr{0.0, 0.0};
        for (int i = 0; i < deg; ++i) tr += mats[gi].at(i, i);
        s += std::norm(tr);
      }
      s /= static_cast<double>(n);
      if (std::abs(s - 1.0) > tol) {
        ok = false;
        last_check_failure = "trace-square average differs from 1";
      }
    }
    if (!ok) continue;

    Irrep ir;
    ir.chi_index = chi_row;
    ir.dim = deg;
    ir.matrices = std::move(mats);
    return ir;
  }
  if (last_check_failure) fail(Errc::irreducibility_check_failed, last_check_failure);
  fail(Errc::split_degenerate,
       "no eigenspace of dimension " + std::to_string(deg) + " after 8 draws");
}

ModuleM build_M(const Group& g, const CharacterTable& t, const Rng& seed) {
  auto idems = central_idempotents(g, t);
  ModuleM m;
  int off = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Subspace iso = isotypic_component(g, idems[r]);
    Irrep ir = split_irrep(g, iso, t, static_cast<int>(r), seed.derive(r));
    m.offsets.push_back(off);
    off += ir.dim;
    m.irreps.push_back(std::move(ir));
  }
  m.total_dim = off;
  int n = g.order();
  m.action.reserve(n);
  for (int gi = 0; gi < n; ++gi) {
    CMatrix a(off, off);
    for (std::size_t b = 0; b < m.irreps.size(); ++b) {
      int o = m.offsets[b];
      int d = m.irreps[b].dim;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a.at(o + i, o + j) = m.irreps[b].matrices[gi].at(i, j);
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

Subspace block_subspace(const ModuleM& m, std::size_t b, double tol) {
  Subspace s = zero_subspace(m.total_dim, tol);
  for (int i = 0; i < m.irreps[b].dim; ++i) {
    CVector v(m.total_dim);
    v[m.offsets[b] + i] = 1.0;
    s.basis.push_back(std::move(v));
  }
  return s;
}

namespace {

CMatrix averaging_projector(const ModuleM& m, const Subgroup& h) {
  int d = m.total_dim;
  CMatrix p(d, d);
  for (int hi : h.member_indices)
    for (std::size_t i = 0; i < p.e.size(); ++i) p.e[i] += m.action[hi].e[i];
  double w = 1.0 / static_cast<double>(h.member_indices.size());
  for (auto& z : p.e) z *= w;
  return p;
}

}  // namespace

Subspace fixed_subspace(const ModuleM& m, const Subgroup& h, double tol) {
  CMatrix p = averaging_projector(m, h);
  int d = m.total_dim;
  std::vector<CVector> cols(d, CVector(d));
  for (int y = 0; y < d; ++y)
    for (int x = 0; x < d; ++x) cols[y][x] = p.at(x, y);
  return span(cols, d, tol);
}

std::vector<int> fixed_block_dims(const ModuleM& m, const Subgroup& h, double tol) {
  CMatrix p = averaging_projector(m, h);
  std::vector<int> dims;
  for (std::size_t b = 0; b < m.irreps.size(); ++b) {
    int o = m.offsets[b];
    int d = m.irreps[b].dim;
    std::vector<CVector> cols(d, CVector(d));
    for (int y = 0; y < d; ++y)
      for (int x = 0; x < d; ++x) cols[y][x] = p.at(o + x, o + y);
    dims.push_back(static_cast<int>(span(cols, d, tol).dim()));
  }
  return dims;
}

int fixed_dim_by_character(const CharacterTable& t, const Subgroup& h, int chi_row) {
  cd acc{0.0, 0.0};
  for (int hi : h.member_indices) acc += t.value_at(chi_row, hi);
  acc /= static_cast<double>(h.member_indices.size());
  double rounded = std::round(acc.real());
  if (std::abs(acc.real() - rounded) > 1e-6 || std::abs(acc.imag()) > 1e-6)
    fail(Errc::not_an_integer, "averaged character value is not an integer");
  return static_cast<int>(rounded);
}

}  // namespace gmod
