#include "gmod/kernels.hpp"

namespace gmod::kern {

namespace {

cd s_dot_conj(const cd* x, const cd* y, std::size_t n) {
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

cd s_dot(const cd* x, const cd* y, std::size_t n) {
  cd acc{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double s_norm_sq(const cd* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  return acc;
}

void s_axpy(cd alpha, const cd* x, cd* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void s_scale(cd alpha, cd* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

void s_hadamard(const cd* x, const cd* y, cd* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

const Ops kScalar = {
    "scalar", s_dot_conj, s_dot, s_norm_sq, s_axpy, s_scale, s_hadamard,
};

const Ops* g_active = nullptr;

}  // namespace

const Ops& scalar_ops() { return kScalar; }

#if defined(GMOD_WITH_AVX2)
const Ops& avx2_ops();  // defined in kernels_avx2.cpp

bool avx2_available() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#else
bool avx2_available() { return false; }
#endif

const Ops& active() {
  if (!g_active) {
#if defined(GMOD_WITH_AVX2)
    g_active = avx2_available() ? &avx2_ops() : &kScalar;
#else
    g_active = &kScalar;
#endif
  }
  return *g_active;
}

bool select(Backend b) {
  switch (b) {
    case Backend::Auto:
      g_active = nullptr;
      active();
      return true;
    case Backend::Scalar:
      g_active = &kScalar;
      return true;
    case Backend::Avx2:
#if defined(GMOD_WITH_AVX2)
      if (avx2_available()) {
        g_active = &avx2_ops();
        return true;
      }
#endif
      return false;
  }
  return false;
}

void matvec(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

void gemm_acc(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) axpy(a[i * k + l], b + l * n, c + i * n, n);
}

}  // namespace gmod::kern
