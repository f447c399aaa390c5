#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "gmod/error.hpp"

namespace gmod {

using cd = std::complex<double>;
using CVector = std::vector<cd>;

inline constexpr double kDefaultTol = 1e-8;

struct CMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cd> e;  // row-major

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c) {}

  cd& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
  const cd& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }

  static CMatrix identity(std::size_t n);
  CMatrix adjoint() const;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& x);
double max_abs(const CMatrix& a);

double vec_norm(const CVector& v);

// Orthonormal basis of a subspace of C^ambient, certified at tolerance tol.
struct Subspace {
  std::size_t ambient_dim = 0;
  double tol = kDefaultTol;
  std::vector<CVector> basis;  // pairwise orthonormal

  std::size_t dim() const { return basis.size(); }
};

Subspace zero_subspace(std::size_t ambient, double tol = kDefaultTol);
Subspace full_subspace(std::size_t ambient, double tol = kDefaultTol);

/// Orthonormal span. Rank decision: a candidate direction is discarded when
/// its residual after projection is ≤ tol × max(1, largest input norm).
Subspace span(const std::vector<CVector>& vectors, std::size_t ambient, double tol = kDefaultTol);

/// Component of v inside A (twice-projected for stability).
CVector project(const Subspace& a, const CVector& v);
double residual_norm(const Subspace& a, const CVector& v);

bool contains(const Subspace& a, const CVector& v);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool equal(const Subspace& a, const Subspace& b);

/// Orthogonal complement (pivoted against the standard basis, deterministic).
Subspace complement(const Subspace& a);

/// Right nullspace {v : Cv = 0}.
Subspace nullspace(const CMatrix& c, double tol = kDefaultTol);

struct EigenCluster {
  double value;  // mean of the clustered eigenvalues
  Subspace space;
};

/// Eigen-decomposition of a Hermitian matrix (two-sided Jacobi), with
/// eigenvalues merged into clusters when consecutive gaps are ≤ 10·tol.
/// Clusters are sorted by ascending eigenvalue.
std::vector<EigenCluster> hermitian_eigensplit(const CMatrix& a, double tol = kDefaultTol);

}  // namespace gmod
