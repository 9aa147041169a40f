// AVX2+FMA kernel variants. This translation unit is the only one built
// with -mavx2 -mfma; callers reach it through the runtime dispatch in
// kernels.cpp, so nothing here executes on CPUs without AVX2.

#ifdef DRGOSSIP_HAVE_AVX2

#include "drgossip/kernels.hpp"

#include <immintrin.h>

namespace drgossip::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    double tmp[4];
    _mm256_storeu_pd(tmp, v);
    return (tmp[0] + tmp[1]) + (tmp[2] + tmp[3]);
}

} // namespace

double dot(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double sumsq(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

double sumsq_diff(const double* x, const double* y, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        acc = _mm256_fmadd_pd(d, d, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) x[i] *= a;
}

void scal_copy(double a, const double* x, double* out, std::size_t n) {
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(out + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i) out[i] = a * x[i];
}

} // namespace drgossip::kernels::avx2

#endif // DRGOSSIP_HAVE_AVX2
