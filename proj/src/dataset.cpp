#include "drgossip/dataset.hpp"

#include "drgossip/rng.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace drgossip {

void validate_dataset(const LabeledDataset& ds, int min_samples) {
    if (ds.num_samples < min_samples)
        throw std::invalid_argument("dataset: fewer samples than required");
    if (ds.feature_dim < 1 || ds.num_classes < 2)
        throw std::invalid_argument("dataset: needs feature_dim >= 1 and >= 2 classes");
    if (ds.labels.size() != static_cast<std::size_t>(ds.num_samples) ||
        ds.features.size() != static_cast<std::size_t>(ds.num_samples) * ds.feature_dim)
        throw std::invalid_argument("dataset: field sizes inconsistent");
    std::vector<int> counts(ds.num_classes, 0);
    for (int y : ds.labels) {
        if (y < 0 || y >= ds.num_classes) throw std::invalid_argument("dataset: label out of range");
        ++counts[y];
    }
    for (int c = 0; c < ds.num_classes; ++c)
        if (counts[c] == 0) throw std::invalid_argument("dataset: empty class");
    for (double v : ds.features)
        if (!std::isfinite(v)) throw std::invalid_argument("dataset: non-finite feature");
}

std::vector<std::vector<double>> simplex_centers(int classes, int dim, double separation) {
    if (classes < 2) throw std::invalid_argument("simplex_centers: needs >= 2 classes");
    if (dim < classes - 1)
        throw std::invalid_argument("simplex_centers: needs dim >= classes - 1");
    if (!(separation > 0.0)) throw std::invalid_argument("simplex_centers: separation must be > 0");

    const int m = classes;
    // Vertices e_c - centroid live in the hyperplane orthogonal to 1/sqrt(M);
    // the Householder reflection mapping that normal onto e_M rotates them
    // into the first M-1 coordinates.
    std::vector<double> normal(m, 1.0 / std::sqrt(static_cast<double>(m)));
    std::vector<double> hv = normal; // w = normal - e_M
    hv[m - 1] -= 1.0;
    double hnorm2 = 0.0;
    for (double v : hv) hnorm2 += v * v;

    std::vector<std::vector<double>> centers(m, std::vector<double>(dim, 0.0));
    const double vertex_norm = std::sqrt(1.0 - 1.0 / m);
    for (int c = 0; c < m; ++c) {
        std::vector<double> x(m, -1.0 / m);
        x[c] += 1.0;
        if (hnorm2 > 0.0) {
            double proj = 0.0;
            for (int i = 0; i < m; ++i) proj += hv[i] * x[i];
            const double f = 2.0 * proj / hnorm2;
            for (int i = 0; i < m; ++i) x[i] -= f * hv[i];
        }
        for (int i = 0; i < m - 1; ++i) centers[c][i] = x[i] * separation / vertex_norm;
    }
    return centers;
}

LabeledDataset gaussian_mixture(int classes, int per_class, int dim, double separation,
                                std::uint64_t seed) {
    if (per_class < 1) throw std::invalid_argument("gaussian_mixture: per_class must be >= 1");
    const auto centers = simplex_centers(classes, dim, separation);

    LabeledDataset ds;
    ds.num_samples = classes * per_class;
    ds.feature_dim = dim;
    ds.num_classes = classes;
    ds.features.resize(static_cast<std::size_t>(ds.num_samples) * dim);
    ds.labels.resize(ds.num_samples);

    Rng rng = make_rng(seed);
    NormalStream normals(rng);
    std::size_t at = 0;
    for (int c = 0; c < classes; ++c) {
        for (int s = 0; s < per_class; ++s) {
            ds.labels[c * per_class + s] = c;
            for (int d = 0; d < dim; ++d) ds.features[at++] = centers[c][d] + normals.next();
        }
    }
    return ds;
}

namespace {

template <typename T>
T read_le(std::istream& in) {
    unsigned char buf[sizeof(T)];
    in.read(reinterpret_cast<char*>(buf), sizeof(T));
    if (!in) throw std::invalid_argument("dataset file: truncated");
    T v{};
    std::memcpy(&v, buf, sizeof(T)); // x86/arm little-endian
    return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

} // namespace

LabeledDataset load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("dataset file: cannot open " + path);
    if (read_le<std::uint32_t>(in) != kDatasetMagic)
        throw std::invalid_argument("dataset file: bad magic");
    const auto n = read_le<std::uint32_t>(in);
    const auto m = read_le<std::uint32_t>(in);
    const auto classes = read_le<std::uint32_t>(in);

    LabeledDataset ds;
    ds.num_samples = static_cast<int>(n);
    ds.feature_dim = static_cast<int>(m);
    ds.num_classes = static_cast<int>(classes);
    ds.features.resize(static_cast<std::size_t>(n) * m);
    for (auto& v : ds.features) v = static_cast<double>(read_le<float>(in));
    ds.labels.resize(n);
    for (auto& y : ds.labels) y = static_cast<int>(read_le<std::uint32_t>(in));
    validate_dataset(ds);
    return ds;
}

void save_dataset(const LabeledDataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("dataset file: cannot open " + path + " for writing");
    write_le(out, kDatasetMagic);
    write_le(out, static_cast<std::uint32_t>(ds.num_samples));
    write_le(out, static_cast<std::uint32_t>(ds.feature_dim));
    write_le(out, static_cast<std::uint32_t>(ds.num_classes));
    for (double v : ds.features) write_le(out, static_cast<float>(v));
    for (int y : ds.labels) write_le(out, static_cast<std::uint32_t>(y));
    if (!out) throw std::runtime_error("dataset file: write failed");
}

} // namespace drgossip
