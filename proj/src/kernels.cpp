#include "drgossip/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64)
#define DRGOSSIP_X86 1
#include <cpuid.h>
#else
#define DRGOSSIP_X86 0
#endif

namespace drgossip::kernels {

namespace scalar {

double dot(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
}

double sumsq(const double* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
    return s;
}

double sumsq_diff(const double* x, const double* y, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = x[i] - y[i];
        s += d * d;
    }
    return s;
}

void axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void scal_copy(double a, const double* x, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a * x[i];
}

} // namespace scalar

bool compiled_with_avx2() {
#ifdef DRGOSSIP_HAVE_AVX2
    return true;
#else
    return false;
#endif
}

bool cpu_supports_avx2() {
#if DRGOSSIP_X86
    static int cached = -1;
    if (cached < 0) {
        unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
        bool avx2 = false, fma = false;
        if (__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx)) avx2 = (ebx >> 5) & 1u;
        if (__get_cpuid(1, &eax, &ebx, &ecx, &edx)) fma = (ecx >> 12) & 1u;
        cached = (avx2 && fma) ? 1 : 0;
    }
    return cached == 1;
#else
    return false;
#endif
}

namespace {

Backend pick_default_backend() {
    if (const char* env = std::getenv("DRGOSSIP_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && compiled_with_avx2() && cpu_supports_avx2())
            return Backend::avx2;
        return Backend::scalar;
    }
    return (compiled_with_avx2() && cpu_supports_avx2()) ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> slot{pick_default_backend()};
    return slot;
}

} // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (b == Backend::avx2 && !(compiled_with_avx2() && cpu_supports_avx2()))
        b = Backend::scalar;
    backend_slot().store(b, std::memory_order_relaxed);
}

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

#ifdef DRGOSSIP_HAVE_AVX2
#define DRGOSSIP_DISPATCH(fn, ...) \
    return active_backend() == Backend::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__)
#define DRGOSSIP_DISPATCH_VOID(fn, ...)                                 \
    if (active_backend() == Backend::avx2) { avx2::fn(__VA_ARGS__); }   \
    else { scalar::fn(__VA_ARGS__); }
#else
#define DRGOSSIP_DISPATCH(fn, ...) return scalar::fn(__VA_ARGS__)
#define DRGOSSIP_DISPATCH_VOID(fn, ...) scalar::fn(__VA_ARGS__)
#endif

double dot(const double* x, const double* y, std::size_t n) { DRGOSSIP_DISPATCH(dot, x, y, n); }
double sum(const double* x, std::size_t n) { DRGOSSIP_DISPATCH(sum, x, n); }
double sumsq(const double* x, std::size_t n) { DRGOSSIP_DISPATCH(sumsq, x, n); }
double sumsq_diff(const double* x, const double* y, std::size_t n) {
    DRGOSSIP_DISPATCH(sumsq_diff, x, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
    DRGOSSIP_DISPATCH_VOID(axpy, a, x, y, n);
}
void scal(double a, double* x, std::size_t n) { DRGOSSIP_DISPATCH_VOID(scal, a, x, n); }
void scal_copy(double a, const double* x, double* out, std::size_t n) {
    DRGOSSIP_DISPATCH_VOID(scal_copy, a, x, out, n);
}

} // namespace drgossip::kernels
