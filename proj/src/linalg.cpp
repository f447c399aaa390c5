#include "gmod/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gmod/kernels.hpp"

namespace gmod {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(c, r) = std::conj(at(r, c));
  return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols != b.rows) fail(Errc::dimension_mismatch, "matrix product shape");
  CMatrix c(a.rows, b.cols);
  kern::gemm_acc(a.e.data(), b.e.data(), c.e.data(), a.rows, a.cols, b.cols);
  return c;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) fail(Errc::dimension_mismatch, "matrix sum shape");
  CMatrix c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] += b.e[i];
  return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) fail(Errc::dimension_mismatch, "matrix difference shape");
  CMatrix c = a;
  for (std::size_t i = 0; i < c.e.size(); ++i) c.e[i] -= b.e[i];
  return c;
}

CVector operator*(const CMatrix& a, const CVector& x) {
  if (a.cols != x.size()) fail(Errc::dimension_mismatch, "matrix-vector shape");
  CVector y(a.rows);
  kern::matvec(a.e.data(), a.rows, a.cols, x.data(), y.data());
  return y;
}

double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.e) m = std::max(m, std::abs(z));
  return m;
}

double vec_norm(const CVector& v) { return std::sqrt(kern::norm_sq(v.data(), v.size())); }

namespace {

// one Gram-Schmidt pass against an orthonormal list
void project_out(const std::vector<CVector>& basis, CVector& w) {
  for (const auto& b : basis) {
    cd c = kern::dot_conj(b.data(), w.data(), w.size());
    kern::axpy(-c, b.data(), w.data(), w.size());
  }
}

}  // namespace

Subspace zero_subspace(std::size_t ambient, double tol) {
  Subspace s;
  s.ambient_dim = ambient;
  s.tol = tol;
  return s;
}

Subspace full_subspace(std::size_t ambient, double tol) {
  Subspace s;
  s.ambient_dim = ambient;
  s.tol = tol;
  s.basis.resize(ambient, CVector(ambient));
  for (std::size_t i = 0; i < ambient; ++i) s.basis[i][i] = 1.0;
  return s;
}

Subspace span(const std::vector<CVector>& vectors, std::size_t ambient, double tol) {
  Subspace s;
  s.ambient_dim = ambient;
  s.tol = tol;
  double scale = 1.0;
  for (const auto& v : vectors) {
    if (v.size() != ambient) fail(Errc::dimension_mismatch, "span input length");
    scale = std::max(scale, vec_norm(v));
  }
  double threshold = tol * scale;
  for (const auto& v : vectors) {
    CVector w = v;
    project_out(s.basis, w);
    project_out(s.basis, w);
    double r = vec_norm(w);
    if (r > threshold) {
      kern::scale(cd(1.0 / r, 0.0), w.data(), w.size());
      s.basis.push_back(std::move(w));
    }
  }
  return s;
}

CVector project(const Subspace& a, const CVector& v) {
  if (v.size() != a.ambient_dim) fail(Errc::dimension_mismatch, "project input length");
  CVector w = v;
  project_out(a.basis, w);
  project_out(a.basis, w);
  CVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] - w[i];
  return p;
}

double residual_norm(const Subspace& a, const CVector& v) {
  if (v.size() != a.ambient_dim) fail(Errc::dimension_mismatch, "residual input length");
  CVector w = v;
  project_out(a.basis, w);
  project_out(a.basis, w);
  return vec_norm(w);
}

bool contains(const Subspace& a, const CVector& v) {
  return residual_norm(a, v) <= a.tol * std::max(1.0, vec_norm(v));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) fail(Errc::dimension_mismatch, "subspace sum ambient");
  std::vector<CVector> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return span(all, a.ambient_dim, a.tol);
}

Subspace complement(const Subspace& a) {
  std::size_t n = a.ambient_dim;
  Subspace c;
  c.ambient_dim = n;
  c.tol = a.tol;
  std::size_t want = n - a.dim();
  c.basis.reserve(want);
  while (c.dim() < want) {
    // pick the standard basis vector with the largest residual
    double best_norm = -1.0;
    CVector best;
    for (std::size_t i = 0; i < n; ++i) {
      CVector w(n);
      w[i] = 1.0;
      project_out(a.basis, w);
      project_out(c.basis, w);
      project_out(a.basis, w);
      project_out(c.basis, w);
      double r = vec_norm(w);
      if (r > best_norm) {
        best_norm = r;
        best = std::move(w);
      }
    }
    kern::scale(cd(1.0 / best_norm, 0.0), best.data(), best.size());
    c.basis.push_back(std::move(best));
  }
  return c;
}

Subspace nullspace(const CMatrix& m, double tol) {
  std::vector<CVector> rows(m.rows, CVector(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t j = 0; j < m.cols; ++j) rows[r][j] = std::conj(m.at(r, j));
  return complement(span(rows, m.cols, tol));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) fail(Errc::dimension_mismatch, "subspace intersect ambient");
  Subspace ca = complement(a);
  Subspace cb = complement(b);
  CMatrix m(ca.dim() + cb.dim(), a.ambient_dim);
  std::size_t r = 0;
  for (const auto& q : ca.basis) {
    for (std::size_t j = 0; j < q.size(); ++j) m.at(r, j) = std::conj(q[j]);
    ++r;
  }
  for (const auto& q : cb.basis) {
    for (std::size_t j = 0; j < q.size(); ++j) m.at(r, j) = std::conj(q[j]);
    ++r;
  }
  return nullspace(m, a.tol);
}

bool equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim != b.ambient_dim) fail(Errc::dimension_mismatch, "subspace equal ambient");
  if (a.dim() != b.dim()) return false;
  for (const auto& v : b.basis)
    if (!contains(a, v)) return false;
  for (const auto& v : a.basis)
    if (!contains(b, v)) return false;
  return true;
}

std::vector<EigenCluster> hermitian_eigensplit(const CMatrix& a, double tol) {
  if (a.rows != a.cols) fail(Errc::dimension_mismatch, "eigensplit needs a square matrix");
  std::size_t n = a.rows;
  for (const auto& z : a.e)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      fail(Errc::not_hermitian, "non-finite entry");
  double scale = std::max(1.0, max_abs(a));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (std::abs(a.at(r, c) - std::conj(a.at(c, r))) > tol * scale)
        fail(Errc::not_hermitian, "adjoint deviation above tolerance");

  CMatrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) h.at(r, c) = 0.5 * (a.at(r, c) + std::conj(a.at(c, r)));
  CMatrix v = CMatrix::identity(n);

  // two-sided Jacobi: phase-absorbing plane rotations
  for (int sweep = 0; sweep < 80; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(h.at(p, q)));
    if (off <= 1e-15 * scale) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double apq = std::abs(h.at(p, q));
        if (apq <= 1e-18 * scale) continue;
        cd u = h.at(p, q) / apq;
        double app = h.at(p, p).real();
        double aqq = h.at(q, q).real();
        double tau = (aqq - app) / (2.0 * apq);
        double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        double c = 1.0 / std::sqrt(1.0 + t * t);
        double s = t * c;
        cd cu = std::conj(u);
        for (std::size_t k = 0; k < n; ++k) {  // columns p,q of h and v
          cd hp = h.at(k, p), hq = h.at(k, q);
          h.at(k, p) = c * hp - s * cu * hq;
          h.at(k, q) = s * hp + cu * c * hq;
          cd vp = v.at(k, p), vq = v.at(k, q);
          v.at(k, p) = c * vp - s * cu * vq;
          v.at(k, q) = s * vp + cu * c * vq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // rows p,q of h
          cd hp = h.at(p, k), hq = h.at(q, k);
          h.at(p, k) = c * hp - s * u * hq;
          h.at(q, k) = s * hp + u * c * hq;
        }
        h.at(p, q) = 0.0;
        h.at(q, p) = 0.0;
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return h.at(i, i).real() < h.at(j, j).real(); });

  std::vector<EigenCluster> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && h.at(order[j], order[j]).real() - h.at(order[j - 1], order[j - 1]).real() <= 10.0 * tol)
      ++j;
    EigenCluster cl;
    cl.space.ambient_dim = n;
    cl.space.tol = tol;
    double acc = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      acc += h.at(order[k], order[k]).real();
      CVector col(n);
      for (std::size_t r = 0; r < n; ++r) col[r] = v.at(r, order[k]);
      cl.space.basis.push_back(std::move(col));
    }
    cl.value = acc / static_cast<double>(j - i);
    out.push_back(std::move(cl));
    i = j;
  }
  return out;
}

}  // namespace gmod
