#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lfsr/tensor.hpp"

namespace lfsr {

enum class LayerKind : std::uint32_t { Conv = 0, Relu = 1, FullyConnected = 2 };

/// Shape description of one layer. Convolutions are valid (no padding)
/// cross-correlations with square, odd-or-1 kernels.
struct LayerSpec {
    LayerKind kind = LayerKind::Relu;
    // conv
    std::size_t in_channels = 0;
    std::size_t out_channels = 0;
    std::size_t kernel = 0;
    // fully connected
    std::size_t in_size = 0;
    std::size_t out_size = 0;
    // Scales the layer's base learning rate (biases share the layer rate).
    double lr_mult = 1.0;

    static LayerSpec conv(std::size_t n_in, std::size_t n_out, std::size_t k,
                          double lr_mult = 1.0) {
        LayerSpec s;
        s.kind = LayerKind::Conv;
        s.in_channels = n_in;
        s.out_channels = n_out;
        s.kernel = k;
        s.lr_mult = lr_mult;
        return s;
    }
    static LayerSpec relu() {
        LayerSpec s;
        s.kind = LayerKind::Relu;
        return s;
    }
    static LayerSpec fully_connected(std::size_t in, std::size_t out, double lr_mult = 1.0) {
        LayerSpec s;
        s.kind = LayerKind::FullyConnected;
        s.in_size = in;
        s.out_size = out;
        s.lr_mult = lr_mult;
        return s;
    }

    bool has_params() const { return kind != LayerKind::Relu; }
};

struct Layer {
    LayerSpec spec;
    Tensor weights; // conv: (n_out, n_in, k, k); fc: (out, in)
    Tensor bias;    // conv: (n_out); fc: (out)
};

struct Network {
    std::vector<Layer> layers;
    std::uint64_t rng_seed = 0;
};

/// Per-layer parameter gradients; entries for ReLU layers stay empty.
struct NetworkGradients {
    std::vector<Tensor> weights;
    std::vector<Tensor> bias;

    void add(const NetworkGradients& other);
    bool all_finite() const;
};

/// Deterministic Gaussian weight init (mean 0, stddev sigma; biases zero).
/// Same seed always reproduces the same tensors bit for bit.
void init_weights(Layer& layer, std::uint64_t seed, double sigma);

/// Builds a network from specs, validating shape compatibility against
/// `input_dims` (C,H,W) and initializing parameters from `seed`.
Network build_network(const std::vector<LayerSpec>& specs,
                      const std::vector<std::size_t>& input_dims, std::uint64_t seed,
                      double init_sigma = 1e-3);

/// Walks the layer stack checking the valid-convolution shape law
/// H' = H - k + 1 and FC input size; returns the output dims. Throws with
/// both shapes on any incompatibility.
std::vector<std::size_t> validate_network(const std::vector<LayerSpec>& specs,
                                          const std::vector<std::size_t>& input_dims);

// Layer primitives. Convolution is valid cross-correlation (no kernel flip).
Tensor conv2d_forward(const Tensor& input, const Tensor& weights, const Tensor& bias);
void conv2d_backward(const Tensor& input, const Tensor& weights, const Tensor& grad_out,
                     Tensor& grad_input, Tensor& grad_weights, Tensor& grad_bias);
Tensor relu_forward(const Tensor& input);
Tensor relu_backward(const Tensor& input, const Tensor& grad_out);
Tensor fc_forward(const Tensor& input, const Tensor& weights, const Tensor& bias);
void fc_backward(const Tensor& input, const Tensor& weights, const Tensor& grad_out,
                 Tensor& grad_input, Tensor& grad_weights, Tensor& grad_bias);

/// loss = (1/n) * sum((pred - target)^2); returns the loss and d(loss)/d(pred).
std::pair<double, Tensor> mse_loss(const Tensor& pred, const Tensor& target);

/// Intermediate activations of one forward pass, kept for backprop.
struct ForwardCache {
    std::vector<Tensor> inputs; // input to each layer; inputs[0] is the sample
    Tensor output;
};

Tensor forward(const Network& net, const Tensor& input);
ForwardCache forward_cached(const Network& net, const Tensor& input);

/// Gradients of all parameters (and of the input) for one sample, given
/// d(loss)/d(output). Accumulates into `grads` so a batch can be summed.
Tensor backward(const Network& net, const ForwardCache& cache, const Tensor& grad_output,
                NetworkGradients& grads);

NetworkGradients zero_gradients(const Network& net);

} // namespace lfsr
