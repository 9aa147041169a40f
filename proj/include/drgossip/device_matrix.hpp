#pragma once

// d x K matrix with one column per device, column-major so each device's
// parameter vector is contiguous.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace drgossip {

struct DeviceMatrix {
    int dim = 0;         // d
    int num_devices = 0; // K
    std::vector<double> data; // column-major

    DeviceMatrix() = default;
    DeviceMatrix(int d, int k)
        : dim(d), num_devices(k), data(static_cast<std::size_t>(d) * k, 0.0) {}

    double* col(int i) { return data.data() + static_cast<std::size_t>(i) * dim; }
    const double* col(int i) const { return data.data() + static_cast<std::size_t>(i) * dim; }
    std::span<double> col_span(int i) { return {col(i), static_cast<std::size_t>(dim)}; }
    std::span<const double> col_span(int i) const {
        return {col(i), static_cast<std::size_t>(dim)};
    }

    // Every column set to v.
    static DeviceMatrix broadcast(const std::vector<double>& v, int k) {
        DeviceMatrix m(static_cast<int>(v.size()), k);
        for (int i = 0; i < k; ++i)
            std::copy(v.begin(), v.end(), m.col(i));
        return m;
    }
};

} // namespace drgossip
