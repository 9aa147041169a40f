#pragma once

// Double-precision arithmetic kernels used by the model, trainer and
// mixing code. Every kernel has a scalar reference implementation and,
// on x86-64 builds that support it, an AVX2+FMA variant. The backend is
// picked once at startup from CPUID and can be overridden with the
// environment variable DRGOSSIP_KERNELS (values: "scalar", "avx2") or
// programmatically via set_backend(). Scalar and AVX2 results may differ
// in the last bits (different summation order); the test suite bounds
// that drift.

#include <cstddef>
#include <string>

namespace drgossip::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
void set_backend(Backend b);
bool cpu_supports_avx2();
bool compiled_with_avx2();
std::string backend_name(Backend b);

// sum_i x[i]*y[i]
double dot(const double* x, const double* y, std::size_t n);
// sum_i x[i]
double sum(const double* x, std::size_t n);
// sum_i x[i]^2
double sumsq(const double* x, std::size_t n);
// sum_i (x[i]-y[i])^2
double sumsq_diff(const double* x, const double* y, std::size_t n);
// y[i] += a*x[i]
void axpy(double a, const double* x, double* y, std::size_t n);
// x[i] *= a
void scal(double a, double* x, std::size_t n);
// out[i] = a*x[i]
void scal_copy(double a, const double* x, double* out, std::size_t n);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double sumsq_diff(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void scal_copy(double a, const double* x, double* out, std::size_t n);
} // namespace scalar

#ifdef DRGOSSIP_HAVE_AVX2
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
double sum(const double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double sumsq_diff(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void scal(double a, double* x, std::size_t n);
void scal_copy(double a, const double* x, double* out, std::size_t n);
} // namespace avx2
#endif

} // namespace drgossip::kernels
