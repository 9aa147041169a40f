#include "drgossip/mixing.hpp"

#include "drgossip/kernels.hpp"
#include "drgossip/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace drgossip {

namespace {

// C = A * B for dense row-major size x size matrices.
std::vector<double> matmul(const std::vector<double>& a, const std::vector<double>& b, int n) {
    std::vector<double> c(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a[static_cast<std::size_t>(i) * n + k];
            if (aik == 0.0) continue;
            kernels::axpy(aik, b.data() + static_cast<std::size_t>(k) * n,
                          c.data() + static_cast<std::size_t>(i) * n, n);
        }
    return c;
}

} // namespace

MixingMatrix metropolis_weights(const Graph& g) {
    const int n = g.num_nodes;
    MixingMatrix w;
    w.size = n;
    w.entries.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [i, j] : g.edges) {
        const double v = 1.0 / (1.0 + std::max(g.degrees[i], g.degrees[j]));
        w.entries[static_cast<std::size_t>(i) * n + j] = v;
        w.entries[static_cast<std::size_t>(j) * n + i] = v;
    }
    for (int i = 0; i < n; ++i) {
        double off = 0.0;
        for (int j : g.adjacency[i]) off += w.entries[static_cast<std::size_t>(i) * n + j];
        w.entries[static_cast<std::size_t>(i) * n + i] = 1.0 - off;
    }
    w.rho = spectral_norm(w.entries, n);
    return w;
}

double spectral_norm(const std::vector<double>& w, int size) {
    const int n = size;
    const double inv_k = 1.0 / n;
    // M = W^T W - J; symmetric PSD for symmetric doubly stochastic W.
    std::vector<double> m = matmul(w, w, n);
    for (double& v : m) v -= inv_k;

    Rng rng = make_rng(0x5EEDF00Dull);
    std::vector<double> v(n), u(n);
    for (double& x : v) x = uniform01(rng) - 0.5;
    double norm = std::sqrt(kernels::sumsq(v.data(), n));
    if (norm == 0.0) v[0] = norm = 1.0;
    kernels::scal(1.0 / norm, v.data(), n);

    double lambda_prev = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        for (int i = 0; i < n; ++i)
            u[i] = kernels::dot(m.data() + static_cast<std::size_t>(i) * n, v.data(), n);
        const double lambda = kernels::dot(v.data(), u.data(), n); // Rayleigh, ||v|| = 1
        const double unorm = std::sqrt(kernels::sumsq(u.data(), n));
        if (unorm == 0.0) return 0.0; // M annihilates v; happens for W = J
        kernels::scal_copy(1.0 / unorm, u.data(), v.data(), n);
        if (iter > 0 && std::abs(lambda - lambda_prev) <= 1e-10 * std::max(std::abs(lambda), 1e-30))
            return std::max(lambda, 0.0);
        lambda_prev = lambda;
    }
    throw std::runtime_error("spectral_norm: power iteration did not converge in 10000 iterations");
}

std::pair<double, double> contraction_check(const DeviceMatrix& a, const MixingMatrix& w, int n) {
    if (n < 1) throw std::invalid_argument("contraction_check needs n >= 1");
    if (a.num_devices != w.size) throw std::invalid_argument("contraction_check: size mismatch");
    const int k = w.size;

    std::vector<double> wn = w.entries;
    for (int i = 1; i < n; ++i) wn = matmul(wn, w.entries, k);
    const double inv_k = 1.0 / k;
    for (double& v : wn) v -= inv_k; // W^n - J

    // B = A (W^n - J), one output column at a time.
    DeviceMatrix b(a.dim, k);
    for (int j = 0; j < k; ++j) {
        double* out = b.col(j);
        for (int i = 0; i < k; ++i) {
            const double wij = wn[static_cast<std::size_t>(i) * k + j];
            kernels::axpy(wij, a.col(i), out, static_cast<std::size_t>(a.dim));
        }
    }
    const double lhs = kernels::sumsq(b.data.data(), b.data.size());
    const double rhs = std::pow(w.rho, n) * kernels::sumsq(a.data.data(), a.data.size());
    return {lhs, rhs};
}

void validate_mixing(const MixingMatrix& w, const Graph& g) {
    const int n = w.size;
    std::ostringstream err;
    if (n != g.num_nodes) throw std::runtime_error("mixing: size does not match graph");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = w(i, j);
            if (v != w(j, i)) {
                err << "mixing: W(" << i << "," << j << ") != W(" << j << "," << i << ")";
                throw std::runtime_error(err.str());
            }
            if (v < 0.0 || v > 1.0) {
                err << "mixing: W(" << i << "," << j << ") = " << v << " outside [0,1]";
                throw std::runtime_error(err.str());
            }
            if (i != j && v != 0.0 && !g.has_edge(i, j)) {
                err << "mixing: nonzero off-edge entry W(" << i << "," << j << ")";
                throw std::runtime_error(err.str());
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        double row = 0.0, col = 0.0;
        for (int j = 0; j < n; ++j) {
            row += w(i, j);
            col += w(j, i);
        }
        if (std::abs(row - 1.0) > 1e-12 || std::abs(col - 1.0) > 1e-12) {
            err << "mixing: row/column " << i << " sums to " << row << "/" << col;
            throw std::runtime_error(err.str());
        }
    }
    if (!(w.rho < 1.0 - 1e-9)) {
        err << "mixing: spectral norm rho = " << w.rho << " is not < 1";
        throw std::runtime_error(err.str());
    }
}

} // namespace drgossip
