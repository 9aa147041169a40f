#include "drgossip/model.hpp"

#include "drgossip/kernels.hpp"
#include "drgossip/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace drgossip {

std::vector<std::pair<int, int>> ModelSpec::layer_dims() const {
    if (input_dim < 1 || num_classes < 2)
        throw std::invalid_argument("model: needs input_dim >= 1 and >= 2 classes");
    if (kind == ModelKind::softmax) return {{input_dim, num_classes}};
    std::vector<std::pair<int, int>> dims;
    int in = input_dim;
    for (int h : hidden) {
        if (h < 1) throw std::invalid_argument("model: hidden width must be positive");
        dims.emplace_back(in, h);
        in = h;
    }
    dims.emplace_back(in, num_classes);
    return dims;
}

int ModelSpec::param_count() const {
    int d = 0;
    for (const auto& [in, out] : layer_dims()) d += in * out + out;
    return d;
}

std::vector<ParamSegment> param_layout(const ModelSpec& spec) {
    std::vector<ParamSegment> segs;
    std::size_t at = 0;
    for (const auto& [in, out] : spec.layer_dims()) {
        segs.push_back({at, out, in, false});
        at += static_cast<std::size_t>(in) * out;
        segs.push_back({at, out, 1, true});
        at += out;
    }
    return segs;
}

std::vector<double> init_params(const ModelSpec& spec, std::uint64_t seed) {
    std::vector<double> theta(spec.param_count(), 0.0);
    Rng rng = make_rng(seed);
    std::size_t at = 0;
    for (const auto& [in, out] : spec.layer_dims()) {
        const double bound = std::sqrt(6.0 / in);
        for (int i = 0; i < in * out; ++i)
            theta[at++] = (2.0 * uniform01(rng) - 1.0) * bound;
        at += out; // biases stay zero
    }
    return theta;
}

namespace {

struct Workspace {
    // Per-layer pre-activation z and activation a (a = relu(z) except the
    // last layer, where a holds the logits).
    std::vector<std::vector<double>> z;
    std::vector<std::vector<double>> a;
    std::vector<double> probs;
    std::vector<double> delta_out, delta_in;
};

void check_theta(const ModelSpec& spec, const std::vector<double>& theta) {
    if (theta.size() != static_cast<std::size_t>(spec.param_count()))
        throw std::invalid_argument("model: parameter vector length mismatch");
}

// Runs all linear layers for one sample; returns the logits buffer.
const std::vector<double>& forward(const ModelSpec& spec, const std::vector<double>& theta,
                                   const double* x, Workspace& ws) {
    const auto dims = spec.layer_dims();
    const int layers = static_cast<int>(dims.size());
    ws.z.resize(layers);
    ws.a.resize(layers);

    const double* input = x;
    std::size_t at = 0;
    for (int l = 0; l < layers; ++l) {
        const auto [in, out] = dims[l];
        auto& z = ws.z[l];
        z.resize(out);
        const double* w = theta.data() + at;
        const double* b = theta.data() + at + static_cast<std::size_t>(in) * out;
        for (int o = 0; o < out; ++o)
            z[o] = kernels::dot(w + static_cast<std::size_t>(o) * in, input, in) + b[o];
        for (int o = 0; o < out; ++o)
            if (!std::isfinite(z[o]))
                throw std::runtime_error("model: non-finite activation in layer " +
                                         std::to_string(l));
        auto& a = ws.a[l];
        a.resize(out);
        if (l + 1 < layers) {
            for (int o = 0; o < out; ++o) a[o] = z[o] > 0.0 ? z[o] : 0.0;
            input = a.data();
        } else {
            a = z; // logits
        }
        at += static_cast<std::size_t>(in) * out + out;
    }
    return ws.a[layers - 1];
}

// Stable log-softmax pieces: probs and the cross-entropy for label y.
double cross_entropy(const std::vector<double>& logits, int y, std::vector<double>& probs) {
    const int m = static_cast<int>(logits.size());
    double zmax = logits[0];
    for (int i = 1; i < m; ++i) zmax = std::max(zmax, logits[i]);
    double sum = 0.0;
    probs.resize(m);
    for (int i = 0; i < m; ++i) {
        probs[i] = std::exp(logits[i] - zmax);
        sum += probs[i];
    }
    const double lse = zmax + std::log(sum);
    for (int i = 0; i < m; ++i) probs[i] /= sum;
    return lse - logits[y];
}

} // namespace

LossGrad loss_and_grad(const ModelSpec& spec, const std::vector<double>& theta,
                       const LabeledDataset& ds, std::span<const int> batch) {
    check_theta(spec, theta);
    if (batch.empty()) throw std::invalid_argument("loss_and_grad: empty batch");
    const auto dims = spec.layer_dims();
    const int layers = static_cast<int>(dims.size());
    if (ds.feature_dim != spec.input_dim)
        throw std::invalid_argument("loss_and_grad: feature dim does not match model");

    LossGrad out;
    out.grad.assign(theta.size(), 0.0);
    Workspace ws;
    double loss_sum = 0.0;

    for (int idx : batch) {
        const double* x = ds.sample(idx);
        const auto& logits = forward(spec, theta, x, ws);
        double loss = cross_entropy(logits, ds.labels[idx], ws.probs);
        if (!std::isfinite(loss))
            throw std::runtime_error("model: non-finite loss at sample " + std::to_string(idx));
        if (spec.clip > 0.0 && loss > spec.clip) {
            loss_sum += spec.clip; // clipped sample: zero gradient
            continue;
        }
        loss_sum += loss;

        // delta for the logits layer
        auto& delta = ws.delta_out;
        delta = ws.probs;
        delta[ds.labels[idx]] -= 1.0;

        std::size_t layer_offset = theta.size();
        for (int l = layers - 1; l >= 0; --l) {
            const auto [in, out_dim] = dims[l];
            layer_offset -= static_cast<std::size_t>(in) * out_dim + out_dim;
            double* gw = out.grad.data() + layer_offset;
            double* gb = gw + static_cast<std::size_t>(in) * out_dim;
            const double* input = l == 0 ? x : ws.a[l - 1].data();

            for (int o = 0; o < out_dim; ++o) {
                if (delta[o] != 0.0)
                    kernels::axpy(delta[o], input, gw + static_cast<std::size_t>(o) * in, in);
                gb[o] += delta[o];
            }
            if (l > 0) {
                auto& delta_in = ws.delta_in;
                delta_in.assign(in, 0.0);
                const double* w = theta.data() + layer_offset;
                for (int o = 0; o < out_dim; ++o)
                    if (delta[o] != 0.0)
                        kernels::axpy(delta[o], w + static_cast<std::size_t>(o) * in,
                                      delta_in.data(), in);
                for (int i = 0; i < in; ++i)
                    if (!(ws.z[l - 1][i] > 0.0)) delta_in[i] = 0.0; // relu mask
                delta.swap(delta_in);
            }
        }
    }

    const double inv_b = 1.0 / static_cast<double>(batch.size());
    out.mean_loss = loss_sum * inv_b;
    kernels::scal(inv_b, out.grad.data(), out.grad.size());
    return out;
}

double mean_loss(const ModelSpec& spec, const std::vector<double>& theta,
                 const LabeledDataset& ds, std::span<const int> batch) {
    check_theta(spec, theta);
    if (batch.empty()) throw std::invalid_argument("mean_loss: empty batch");
    Workspace ws;
    double loss_sum = 0.0;
    for (int idx : batch) {
        const auto& logits = forward(spec, theta, ds.sample(idx), ws);
        double loss = cross_entropy(logits, ds.labels[idx], ws.probs);
        if (spec.clip > 0.0 && loss > spec.clip) loss = spec.clip;
        loss_sum += loss;
    }
    return loss_sum / static_cast<double>(batch.size());
}

double accuracy(const ModelSpec& spec, const std::vector<double>& theta,
                const LabeledDataset& ds, std::span<const int> subset) {
    check_theta(spec, theta);
    if (subset.empty()) throw std::invalid_argument("accuracy: empty subset");
    Workspace ws;
    int correct = 0;
    for (int idx : subset) {
        const auto& logits = forward(spec, theta, ds.sample(idx), ws);
        int best = 0;
        for (int c = 1; c < static_cast<int>(logits.size()); ++c)
            if (logits[c] > logits[best]) best = c; // ties keep the lower index
        if (best == ds.labels[idx]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(subset.size());
}

std::vector<double> predict_proba(const ModelSpec& spec, const std::vector<double>& theta,
                                  const double* x) {
    check_theta(spec, theta);
    Workspace ws;
    const auto& logits = forward(spec, theta, x, ws);
    std::vector<double> probs;
    cross_entropy(logits, 0, probs);
    return probs;
}

void save_params(const std::vector<double>& theta, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("params: cannot open " + path + " for writing");
    const std::uint64_t n = theta.size();
    out.write(reinterpret_cast<const char*>(&n), sizeof(n));
    out.write(reinterpret_cast<const char*>(theta.data()),
              static_cast<std::streamsize>(n * sizeof(double)));
    if (!out) throw std::runtime_error("params: write failed");
}

std::vector<double> load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("params: cannot open " + path);
    std::uint64_t n = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof(n));
    std::vector<double> theta(n);
    in.read(reinterpret_cast<char*>(theta.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!in) throw std::invalid_argument("params: truncated file");
    return theta;
}

} // namespace drgossip
