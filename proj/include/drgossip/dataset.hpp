#pragma once

// Labeled datasets: synthetic Gaussian mixtures plus a flat binary
// loader. File format (little-endian):
//   u32 magic = 0x44534554, u32 n, u32 m, u32 num_classes,
//   n*m f32 features (row-major), n u32 labels.
// Features are stored as given; image-style data should be scaled to
// [0,1] before writing.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace drgossip {

constexpr std::uint32_t kDatasetMagic = 0x44534554u;

struct LabeledDataset {
    int num_samples = 0;
    int feature_dim = 0;
    int num_classes = 0;
    std::vector<double> features; // row-major num_samples x feature_dim
    std::vector<int> labels;

    const double* sample(int i) const {
        return features.data() + static_cast<std::size_t>(i) * feature_dim;
    }
};

// Throws unless every class has >= 1 sample, all features are finite and
// num_samples >= min_samples.
void validate_dataset(const LabeledDataset& ds, int min_samples = 1);

// Class centers: vertices of a regular simplex at distance `separation`
// from the origin, embedded in the first (classes-1) coordinates.
std::vector<std::vector<double>> simplex_centers(int classes, int dim, double separation);

// Unit-variance isotropic Gaussian around each center; samples grouped by
// class (indices [c*per_class, (c+1)*per_class) carry label c).
LabeledDataset gaussian_mixture(int classes, int per_class, int dim, double separation,
                                std::uint64_t seed);

LabeledDataset load_dataset(const std::string& path);
void save_dataset(const LabeledDataset& ds, const std::string& path);

} // namespace drgossip
