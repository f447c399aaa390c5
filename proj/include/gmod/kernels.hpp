#pragma once

#include <complex>
#include <cstddef>

// Complex double-precision inner-loop kernels. One scalar reference
// implementation plus an AVX2 variant; the active table is picked at
// runtime from CPU capabilities and can be forced for equivalence tests.

namespace gmod::kern {

using cd = std::complex<double>;

struct Ops {
  const char* name;
  cd (*dot_conj)(const cd* x, const cd* y, std::size_t n);  // sum conj(x_i)*y_i
  cd (*dot)(const cd* x, const cd* y, std::size_t n);       // sum x_i*y_i
  double (*norm_sq)(const cd* x, std::size_t n);            // sum |x_i|^2
  void (*axpy)(cd alpha, const cd* x, cd* y, std::size_t n);        // y += alpha*x
  void (*scale)(cd alpha, cd* x, std::size_t n);                    // x *= alpha
  void (*hadamard)(const cd* x, const cd* y, cd* out, std::size_t n);  // out_i = x_i*y_i
};

enum class Backend { Auto, Scalar, Avx2 };

const Ops& scalar_ops();
bool avx2_available();

/// Active kernel table (auto-detected on first use).
const Ops& active();

/// Force a backend. Returns false (and leaves the selection unchanged)
/// if the requested backend is not available on this CPU.
bool select(Backend b);

inline cd dot_conj(const cd* x, const cd* y, std::size_t n) { return active().dot_conj(x, y, n); }
inline cd dot(const cd* x, const cd* y, std::size_t n) { return active().dot(x, y, n); }
inline double norm_sq(const cd* x, std::size_t n) { return active().norm_sq(x, n); }
inline void axpy(cd alpha, const cd* x, cd* y, std::size_t n) { active().axpy(alpha, x, y, n); }
inline void scale(cd alpha, cd* x, std::size_t n) { active().scale(alpha, x, n); }
inline void hadamard(const cd* x, const cd* y, cd* out, std::size_t n) { active().hadamard(x, y, out, n); }

// Small dense helpers layered on the dispatched primitives (row-major).
void matvec(const cd* a, std::size_t rows, std::size_t cols, const cd* x, cd* y);  // y = A x
void gemm_acc(const cd* a, const cd* b, cd* c, std::size_t m, std::size_t k, std::size_t n);  // C += A B

}  // namespace gmod::kern
