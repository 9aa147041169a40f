#pragma once

// Mixing matrices for gossip averaging: Metropolis construction, spectral
// norm rho = ||W^T W - J||_2, and the contraction inequality
// ||A (W^n - J)||_F^2 <= rho^n ||A||_F^2 used by the test suites.

#include "drgossip/device_matrix.hpp"
#include "drgossip/graph.hpp"

#include <utility>
#include <vector>

namespace drgossip {

struct MixingMatrix {
    int size = 0;
    std::vector<double> entries; // row-major size x size
    double rho = 0.0;            // ||W^T W - J||_2, cached at construction

    double operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * size + j];
    }
};

// W_ij = 1/(1+max{d_i,d_j}) on edges, 0 off edges, diagonal completes
// each row to 1. Symmetric by construction (the (i,j) and (j,i) entries
// are written from the same expression).
MixingMatrix metropolis_weights(const Graph& g);

// Largest singular value of W^T W - J by power iteration (relative
// tolerance 1e-10, at most 10000 iterations; throws on non-convergence).
double spectral_norm(const std::vector<double>& w, int size);

// Both sides of the contraction inequality for A (d x K, device columns).
// Returns {lhs, rhs} = {‖A(W^n−J)‖_F^2, rho^n ‖A‖_F^2}.
std::pair<double, double> contraction_check(const DeviceMatrix& a, const MixingMatrix& w, int n);

// Throws std::runtime_error describing the first violated invariant:
// symmetry, row/column sums within 1e-12 of 1, entries in [0,1], zero
// off-edge entries, rho < 1.
void validate_mixing(const MixingMatrix& w, const Graph& g);

} // namespace drgossip
