#pragma once

// Differentiable predictors: multinomial softmax regression and a
// two-hidden-layer ReLU MLP. Cross-entropy under a stable log-softmax,
// analytic gradients, optional per-sample loss clipping (clipped samples
// contribute zero gradient, which keeps the loss bounded).

#include "drgossip/dataset.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace drgossip {

enum class ModelKind { softmax, mlp };

struct ModelSpec {
    ModelKind kind = ModelKind::softmax;
    int input_dim = 0;
    int num_classes = 0;
    std::vector<int> hidden = {128, 64}; // mlp only
    double clip = 0.0;                   // c_max; 0 disables clipping

    // Linear layers as (fan_in, fan_out) pairs.
    std::vector<std::pair<int, int>> layer_dims() const;
    int param_count() const;
};

struct ParamSegment {
    std::size_t offset;
    int rows; // fan_out
    int cols; // fan_in, or 1 for a bias
    bool is_bias;
};
// Slices of the flat parameter vector, ordered (W0, b0, W1, b1, ...).
std::vector<ParamSegment> param_layout(const ModelSpec& spec);

// Kaiming-uniform weights (bound sqrt(6/fan_in)), zero biases.
std::vector<double> init_params(const ModelSpec& spec, std::uint64_t seed);

struct LossGrad {
    double mean_loss = 0.0;
    std::vector<double> grad;
};

// Mean cross-entropy over the batch and its exact gradient. Throws on
// non-finite activations (message names the layer).
LossGrad loss_and_grad(const ModelSpec& spec, const std::vector<double>& theta,
                       const LabeledDataset& ds, std::span<const int> batch);

// Forward-only mean loss.
double mean_loss(const ModelSpec& spec, const std::vector<double>& theta,
                 const LabeledDataset& ds, std::span<const int> batch);

// Argmax accuracy; ties broken toward the lowest class index.
double accuracy(const ModelSpec& spec, const std::vector<double>& theta,
                const LabeledDataset& ds, std::span<const int> subset);

// Class probabilities for one sample.
std::vector<double> predict_proba(const ModelSpec& spec, const std::vector<double>& theta,
                                  const double* x);

// Little-endian: u64 length then length f64 values.
void save_params(const std::vector<double>& theta, const std::string& path);
std::vector<double> load_params(const std::string& path);

} // namespace drgossip
