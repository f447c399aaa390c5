#include <immintrin.h>

#include "gmod/kernels.hpp"

// AVX2 kernel variants. Layout: std::complex<double> is two adjacent
// doubles, so one 256-bit register holds two complex values
// [re0, im0, re1, im1]. fmaddsub gives (a*b - c) on even lanes and
// (a*b + c) on odd lanes, which is exactly the complex-product sign
// pattern. Dot products keep two plain accumulators,
//   u += x .* y          (lanes a*c, b*d)
//   v += swap(x) .* y    (lanes b*c, a*d)
// and the four lane sums recombine into either the conjugated or the
// plain result at the end.

namespace gmod::kern {

namespace {

// [sum of even lanes, sum of odd lanes]
inline __m128d fold(__m256d v) {
  return _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
}

inline double lane0(__m128d v) { return _mm_cvtsd_f64(v); }
inline double lane1(__m128d v) { return _mm_cvtsd_f64(_mm_unpackhi_pd(v, v)); }

cd a_dot_conj(const cd* x, const cd* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d u = _mm256_setzero_pd();
  __m256d v = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    u = _mm256_fmadd_pd(xv, yv, u);
    v = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, v);
  }
  __m128d uf = fold(u);
  __m128d vf = fold(v);
  double re = lane0(uf) + lane1(uf);  // a*c + b*d
  double im = lane1(vf) - lane0(vf);  // a*d - b*c
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

cd a_dot(const cd* x, const cd* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  __m256d u = _mm256_setzero_pd();
  __m256d v = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    u = _mm256_fmadd_pd(xv, yv, u);
    v = _mm256_fmadd_pd(_mm256_permute_pd(xv, 0x5), yv, v);
  }
  __m128d uf = fold(u);
  __m128d vf = fold(v);
  double re = lane0(uf) - lane1(uf);  // a*c - b*d
  double im = lane0(vf) + lane1(vf);  // b*c + a*d
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

double a_norm_sq(const cd* x, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  __m128d f = fold(acc);
  double s = lane0(f) + lane1(f);
  for (; i < n; ++i) s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return s;
}

// (p+qi)(a+bi): even lanes p*a - q*b, odd lanes p*b + q*a.
inline __m256d mul_by_const(__m256d pr, __m256d pi, __m256d xv) {
  return _mm256_fmaddsub_pd(pr, xv, _mm256_mul_pd(pi, _mm256_permute_pd(xv, 0x5)));
}

void a_axpy(cd alpha, const cd* x, cd* y, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  double* yp = reinterpret_cast<double*>(y);
  __m256d pr = _mm256_set1_pd(alpha.real());
  __m256d pi = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, mul_by_const(pr, pi, xv)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void a_scale(cd alpha, cd* x, std::size_t n) {
  double* xp = reinterpret_cast<double*>(x);
  __m256d pr = _mm256_set1_pd(alpha.real());
  __m256d pi = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    _mm256_storeu_pd(xp + 2 * i, mul_by_const(pr, pi, xv));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void a_hadamard(const cd* x, const cd* y, cd* out, std::size_t n) {
  const double* xp = reinterpret_cast<const double*>(x);
  const double* yp = reinterpret_cast<const double*>(y);
  double* op = reinterpret_cast<double*>(out);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d xv = _mm256_loadu_pd(xp + 2 * i);
    __m256d yv = _mm256_loadu_pd(yp + 2 * i);
    __m256d xre = _mm256_movedup_pd(xv);         // [a0,a0,a1,a1]
    __m256d xim = _mm256_permute_pd(xv, 0xF);    // [b0,b0,b1,b1]
    __m256d ysw = _mm256_permute_pd(yv, 0x5);    // [d0,c0,d1,c1]
    _mm256_storeu_pd(op + 2 * i, _mm256_fmaddsub_pd(xre, yv, _mm256_mul_pd(xim, ysw)));
  }
  for (; i < n; ++i) out[i] = x[i] * y[i];
}

const Ops kAvx2 = {
    "avx2", a_dot_conj, a_dot, a_norm_sq, a_axpy, a_scale, a_hadamard,
};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace gmod::kern
