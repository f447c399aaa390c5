#include "gmod/intertwiner.hpp"

#include <cmath>
#include <string>

#include "gmod/error.hpp"
#include "gmod/kernels.hpp"

namespace gmod {

int cg_multiplicity(const CharacterTable& t, int a_row, int b_row, int c_row) {
  cd acc{0.0, 0.0};
  for (std::size_t c = 0; c < t.num_classes(); ++c)
    acc += static_cast<double>(t.classes.classes[c].size()) * t.rows[a_row][c] * t.rows[b_row][c] *
           std::conj(t.rows[c_row][c]);
  acc /= static_cast<double>(t.group_order);
  double rounded = std::round(acc.real());
  if (std::abs(acc.real() - rounded) > 1e-6 || std::abs(acc.imag()) > 1e-6 || rounded < 0.0)
    fail(Errc::not_an_integer, "character product average is not a nonnegative integer");
  return static_cast<int>(rounded);
}

IntertwinerBasis hom_basis(const ModuleM& m, const CharacterTable& t, double tol) {
  int d = m.total_dim;
  int n = static_cast<int>(m.action.size());
  IntertwinerBasis basis;
  basis.dim = d;

  std::size_t blocks = m.num_blocks();
  std::size_t expected_total = 0;
  for (std::size_t a = 0; a < blocks; ++a)
    for (std::size_t b = 0; b < blocks; ++b)
      for (std::size_t c = 0; c < blocks; ++c) {
        int da = m.block_dim(a), db = m.block_dim(b), dc = m.block_dim(c);
        int local = da * db * dc;
        int expected = cg_multiplicity(t, m.irreps[a].chi_index, m.irreps[b].chi_index,
                                       m.irreps[c].chi_index);
        expected_total += static_cast<std::size_t>(expected);
        if (expected == 0) continue;

        // Reynolds images of the elementary tensors of this block triple,
        // in block-local coordinates
        std::vector<CVector> images;
        images.reserve(local);
        for (int p = 0; p < da; ++p)
          for (int q = 0; q < db; ++q)
            for (int r = 0; r < dc; ++r) {
              CVector img(local);
              for (int gi = 0; gi < n; ++gi) {
                const CMatrix& ra = m.irreps[a].matrices[gi];
                const CMatrix& rb = m.irreps[b].matrices[gi];
                const CMatrix& rc = m.irreps[c].matrices[gi];
                for (int i = 0; i < da; ++i) {
                  cd fa = std::conj(ra.at(i, p));
                  if (fa == cd(0.0, 0.0)) continue;
                  for (int j = 0; j < db; ++j) {
                    cd fab = fa * std::conj(rb.at(j, q));
                    for (int k = 0; k < dc; ++k)
                      img[(i * db + j) * dc + k] += fab * rc.at(k, r);
                  }
                }
              }
              kern::scale(cd(1.0 / n, 0.0), img.data(), img.size());
              images.push_back(std::move(img));
            }
        Subspace local_span = span(images, local, tol);
        if (static_cast<int>(local_span.dim()) != expected)
          fail(Errc::dimension_mismatch_with_character_count,
               "Reynolds rank " + std::to_string(local_span.dim()) + " vs character count " +
                   std::to_string(expected) + " on block triple (" + std::to_string(a) + "," +
                   std::to_string(b) + "," + std::to_string(c) + ")");

        int oa = m.offsets[a], ob = m.offsets[b], oc = m.offsets[c];
        for (const auto& loc : local_span.basis) {
          Intertwiner pi;
          pi.dim = d;
          pi.tensor.assign(static_cast<std::size_t>(d) * d * d, cd{0.0, 0.0});
          for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j)
              for (int k = 0; k < dc; ++k)
                pi.tensor[(static_cast<std::size_t>(oa + i) * d + (ob + j)) * d + (oc + k)] =
                    loc[(i * db + j) * dc + k];
          basis.maps.push_back(std::move(pi));
        }
      }

  if (basis.maps.size() != expected_total)
    fail(Errc::dimension_mismatch_with_character_count,
         "basis size " + std::to_string(basis.maps.size()) + " vs character total " +
             std::to_string(expected_total));
  return basis;
}

CVector apply_intertwiner(const Intertwiner& pi, const CVector& u, const CVector& v) {
  int d = pi.dim;
  if (static_cast<int>(u.size()) != d || static_cast<int>(v.size()) != d)
    fail(Errc::dimension_mismatch, "intertwiner input length");
  CVector out(d);
  for (int i = 0; i < d; ++i) {
    if (u[i] == cd(0.0, 0.0)) continue;
    for (int j = 0; j < d; ++j) {
      cd w = u[i] * v[j];
      if (w == cd(0.0, 0.0)) continue;
      const cd* row = pi.tensor.data() + (static_cast<std::size_t>(i) * d + j) * d;
      kern::axpy(w, row, out.data(), d);
    }
  }
  return out;
}

CVector tensor_rotate(const ModuleM& m, int gi, const CVector& tensor) {
  int d = m.total_dim;
  const CMatrix& ag = m.action[gi];
  // contract one leg at a time: out[i][j][k] = Σ conj(A[i][i'])·conj(A[j][j'])·A[k][k']·T[i'][j'][k']
  CVector t1(static_cast<std::size_t>(d) * d * d);
  for (int i2 = 0; i2 < d; ++i2)  // output leg: t1[i'][j'][k] = Σ_{k'} A[k][k']·T[i'][j'][k']
    for (int j2 = 0; j2 < d; ++j2) {
      const cd* src = tensor.data() + (static_cast<std::size_t>(i2) * d + j2) * d;
      cd* dst = t1.data() + (static_cast<std::size_t>(i2) * d + j2) * d;
      for (int k = 0; k < d; ++k) {
        cd acc{0.0, 0.0};
        for (int k2 = 0; k2 < d; ++k2) acc += ag.at(k, k2) * src[k2];
        dst[k] = acc;
      }
    }
  CVector t2(static_cast<std::size_t>(d) * d * d);
  for (int i2 = 0; i2 < d; ++i2)  // second input leg: t2[i'][j][k] = Σ_{j'} conj(A[j][j'])·t1[i'][j'][k]
    for (int j = 0; j < d; ++j)
      for (int j2 = 0; j2 < d; ++j2) {
        cd f = std::conj(ag.at(j, j2));
        if (f == cd(0.0, 0.0)) continue;
        kern::axpy(f, t1.data() + (static_cast<std::size_t>(i2) * d + j2) * d,
                   t2.data() + (static_cast<std::size_t>(i2) * d + j) * d, d);
      }
  CVector out(static_cast<std::size_t>(d) * d * d);
  for (int i = 0; i < d; ++i)  // first input leg: out[i][j][k] = Σ_{i'} conj(A[i][i'])·t2[i'][j][k]
    for (int i2 = 0; i2 < d; ++i2) {
      cd f = std::conj(ag.at(i, i2));
      if (f == cd(0.0, 0.0)) continue;
      kern::axpy(f, t2.data() + (static_cast<std::size_t>(i2) * d) * d,
                 out.data() + (static_cast<std::size_t>(i) * d) * d,
                 static_cast<std::size_t>(d) * d);
    }
  return out;
}

CVector reynolds(const ModuleM& m, const CVector& tensor) {
  int n = static_cast<int>(m.action.size());
  CVector acc(tensor.size());
  for (int gi = 0; gi < n; ++gi) {
    CVector r = tensor_rotate(m, gi, tensor);
    kern::axpy(cd(1.0, 0.0), r.data(), acc.data(), acc.size());
  }
  kern::scale(cd(1.0 / n, 0.0), acc.data(), acc.size());
  return acc;
}

}  // namespace gmod
