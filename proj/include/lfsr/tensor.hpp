#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "lfsr/errors.hpp"

namespace lfsr {

/// Dense row-major tensor of doubles. Shapes used here are (channels,
/// height, width) for feature maps and flat (n) for vectors.
struct Tensor {
    std::vector<std::size_t> dims;
    std::vector<double> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> d)
        : dims(std::move(d)),
          data(std::accumulate(dims.begin(), dims.end(), std::size_t{1},
                               std::multiplies<>()),
               0.0) {}

    std::size_t size() const { return data.size(); }

    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }

    bool same_dims(const Tensor& o) const { return dims == o.dims; }
};

inline std::string dims_to_string(const std::vector<std::size_t>& dims) {
    std::string s = "(";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(dims[i]);
    }
    return s + ")";
}

} // namespace lfsr
