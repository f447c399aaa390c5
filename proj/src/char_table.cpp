#include "gmod/char_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gmod/error.hpp"
#include "gmod/rng.hpp"

namespace gmod {

namespace {

// a[i][j][l]: K_i K_j = Σ_l a[i][j][l] K_l in the center of the group algebra
std::vector<std::vector<std::vector<long>>> structure_constants(const Group& g,
                                                                const ConjClasses& cc) {
  std::size_t k = cc.classes.size();
  std::vector<std::vector<std::vector<long>>> a(
      k, std::vector<std::vector<long>>(k, std::vector<long>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long> count(k, 0);
      for (int x : cc.classes[i])
        for (int y : cc.classes[j]) ++count[cc.class_of[g.mult[x][y]]];
      for (std::size_t l = 0; l < k; ++l) {
        long size_l = static_cast<long>(cc.classes[l].size());
        if (count[l] % size_l != 0)
          fail(Errc::split_failure, "class algebra structure constants are not integral");
        a[i][j][l] = count[l] / size_l;
      }
    }
  return a;
}

struct RowCandidate {
  std::vector<cd> values;
  int degree;
};

// descending on (re, im) at 1e-6 granularity, classwise
bool value_less(const std::vector<cd>& x, const std::vector<cd>& y) {
  for (std::size_t c = 0; c < x.size(); ++c) {
    double dr = x[c].real() - y[c].real();
    if (dr > 1e-6) return true;
    if (dr < -1e-6) return false;
    double di = x[c].imag() - y[c].imag();
    if (di > 1e-6) return true;
    if (di < -1e-6) return false;
  }
  return false;
}

}  // namespace

CharacterTable character_table(const Group& g, const ConjClasses& cc, double tol) {
  std::size_t k = cc.classes.size();
  int n = g.order();
  auto a = structure_constants(g, cc);

  // multiplication operator of K_i in the orthonormal class basis
  // E_j = K_j / sqrt(|C_j|):  (M_i)_{l,j} = a[i][j][l] · sqrt(|C_l|/|C_j|)
  std::vector<CMatrix> m(k, CMatrix(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        m[i].at(l, j) = static_cast<double>(a[i][j][l]) *
                        std::sqrt(static_cast<double>(cc.classes[l].size()) /
                                  static_cast<double>(cc.classes[j].size()));

  Rng base(0x67616c6f6973ULL);  // fixed internal stream; the table is deterministic
  std::vector<RowCandidate> rows_found;
  for (int attempt = 0; attempt < 8 && rows_found.empty(); ++attempt) {
    Rng r = base.derive(static_cast<std::uint64_t>(attempt));
    CMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      cd u = r.gaussian_c();
      for (std::size_t row = 0; row < k; ++row)
        for (std::size_t col = 0; col < k; ++col) b.at(row, col) += u * m[i].at(row, col);
    }
    CMatrix h = b + b.adjoint();
    auto clusters = hermitian_eigensplit(h, tol);
    if (clusters.size() != k) continue;  // degenerate draw, retry

    std::vector<RowCandidate> rows;
    bool ok = true;
    for (const auto& cl : clusters) {
      CVector v = cl.space.basis[0];
      // rotate the global phase so the identity-class coordinate is real > 0
      cd v0 = v[0];
      if (std::abs(v0) * std::sqrt(static_cast<double>(n)) < 0.5) {
        ok = false;
        break;
      }
      cd phase = std::conj(v0) / std::abs(v0);
      for (auto& z : v) z *= phase;

      RowCandidate rc;
      rc.values.resize(k);
      for (std::size_t l = 0; l < k; ++l)
        rc.values[l] = std::conj(v[l]) * std::sqrt(static_cast<double>(n)) /
                       std::sqrt(static_cast<double>(cc.classes[l].size()));
      double deg = rc.values[0].real();
      double rounded = std::round(deg);
      if (std::abs(deg - rounded) > 1e-6 || std::abs(rc.values[0].imag()) > 1e-6 ||
          rounded < 1.0) {
        ok = false;
        break;
      }
      rc.degree = static_cast<int>(rounded);
      rc.values[0] = rounded;  // pin the identity column exactly
      rows.push_back(std::move(rc));
    }
    if (!ok) continue;

    long degree_sq = 0;
    for (const auto& rc : rows) degree_sq += static_cast<long>(rc.degree) * rc.degree;
    if (degree_sq != n) continue;

    rows_found = std::move(rows);
  }
  if (rows_found.empty())
    fail(Errc::split_failure, "class-sum spectrum did not split into " + std::to_string(k) +
                                  " simple eigenspaces after 8 draws");

  std::sort(rows_found.begin(), rows_found.end(), [](const RowCandidate& x, const RowCandidate& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return value_less(x.values, y.values);
  });

  CharacterTable t;
  t.classes = cc;
  t.group_order = n;
  for (auto& rc : rows_found) {
    t.rows.push_back(std::move(rc.values));
    t.degrees.push_back(rc.degree);
  }
  t.trivial_row = 0;
  for (std::size_t c = 0; c < k; ++c)
    if (std::abs(t.rows[0][c] - cd(1.0, 0.0)) > 1e-6)
      fail(Errc::split_failure, "canonical first row is not the trivial character");
  return t;
}

std::vector<CentralIdempotent> central_idempotents(const Group& g, const CharacterTable& t) {
  std::vector<CentralIdempotent> out;
  int n = g.order();
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    CentralIdempotent e;
    e.chi_index = static_cast<int>(r);
    e.coeffs.resize(n);
    double scale = static_cast<double>(t.degrees[r]) / static_cast<double>(n);
    for (int x = 0; x < n; ++x) e.coeffs[x] = scale * std::conj(t.value_at(static_cast<int>(r), x));
    out.push_back(std::move(e));
  }
  return out;
}

CVector convolve(const Group& g, const CVector& a, const CVector& b) {
  int n = g.order();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    fail(Errc::dimension_mismatch, "convolution operands must live on the group");
  CVector c(n);
  for (int x = 0; x < n; ++x) {
    if (a[x] == cd(0.0, 0.0)) continue;
    for (int y = 0; y < n; ++y) c[g.mult[x][y]] += a[x] * b[y];
  }
  return c;
}

}  // namespace gmod
