#include "lfsr/resample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace lfsr {

double bicubic_weight(const BicubicKernel& kernel, double x) {
    const double a = kernel.a;
    const double ax = std::abs(x);
    if (ax <= 1.0)
        return ((a + 2.0) * ax - (a + 3.0)) * ax * ax + 1.0;
    if (ax < 2.0)
        return (((a * ax - 5.0 * a) * ax) + 8.0 * a) * ax - 4.0 * a;
    return 0.0;
}

namespace {

struct TapSet {
    std::array<std::ptrdiff_t, 4> index;
    std::array<double, 4> weight;
};

// Align-centers mapping with clamp-to-edge taps for one axis.
std::vector<TapSet> make_taps(std::size_t in_n, std::size_t out_n,
                              const BicubicKernel& kernel) {
    const double scale = static_cast<double>(in_n) / static_cast<double>(out_n);
    std::vector<TapSet> taps(out_n);
    for (std::size_t d = 0; d < out_n; ++d) {
        const double src = (static_cast<double>(d) + 0.5) * scale - 0.5;
        const double base = std::floor(src);
        const double frac = src - base;
        TapSet& ts = taps[d];
        for (int k = -1; k <= 2; ++k) {
            std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(base) + k;
            idx = std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(in_n) - 1);
            ts.index[k + 1] = idx;
            ts.weight[k + 1] = bicubic_weight(kernel, frac - k);
        }
    }
    return taps;
}

} // namespace

Image bicubic_resize(const Image& img, std::size_t out_h, std::size_t out_w,
                     const BicubicKernel& kernel) {
    if (out_h == 0 || out_w == 0)
        throw Error("invalid-shape: bicubic_resize output dimensions must be positive");
    if (img.height == 0 || img.width == 0)
        throw Error("invalid-shape: bicubic_resize input is empty");

    const auto col_taps = make_taps(img.width, out_w, kernel);
    const auto row_taps = make_taps(img.height, out_h, kernel);

    Image out(out_h, out_w, img.channels);
    // Horizontal pass into a temp plane, then vertical; clamp only at the end.
    std::vector<double> temp(img.height * out_w);
    for (std::size_t c = 0; c < img.channels; ++c) {
        for (std::size_t y = 0; y < img.height; ++y) {
            const double* row = &img.data[(c * img.height + y) * img.width];
            for (std::size_t x = 0; x < out_w; ++x) {
                const TapSet& ts = col_taps[x];
                double acc = 0.0;
                for (int k = 0; k < 4; ++k) acc += ts.weight[k] * row[ts.index[k]];
                temp[y * out_w + x] = acc;
            }
        }
        for (std::size_t y = 0; y < out_h; ++y) {
            const TapSet& ts = row_taps[y];
            for (std::size_t x = 0; x < out_w; ++x) {
                double acc = 0.0;
                for (int k = 0; k < 4; ++k)
                    acc += ts.weight[k] * temp[static_cast<std::size_t>(ts.index[k]) * out_w + x];
                out.at(c, y, x) = std::clamp(acc, 0.0, 1.0);
            }
        }
    }
    return out;
}

Image bicubic_upsample_2x(const Image& img, const BicubicKernel& kernel) {
    if (img.height < 2 || img.width < 2)
        throw Error("invalid-shape: bicubic_upsample_2x needs at least a 2x2 image, got " +
                    std::to_string(img.height) + "x" + std::to_string(img.width));
    return bicubic_resize(img, img.height * 2, img.width * 2, kernel);
}

Image nearest_resize(const Image& img, std::size_t out_h, std::size_t out_w) {
    if (out_h == 0 || out_w == 0)
        throw Error("invalid-shape: nearest_resize output dimensions must be positive");
    Image out(out_h, out_w, img.channels);
    auto nearest_index = [](std::size_t d, std::size_t in_n, std::size_t out_n) {
        const double scale = static_cast<double>(in_n) / static_cast<double>(out_n);
        const double src = (static_cast<double>(d) + 0.5) * scale - 0.5;
        // Ties round toward the lower source index.
        std::ptrdiff_t idx = static_cast<std::ptrdiff_t>(std::ceil(src - 0.5));
        return static_cast<std::size_t>(
            std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(in_n) - 1));
    };
    std::vector<std::size_t> xi(out_w);
    for (std::size_t x = 0; x < out_w; ++x) xi[x] = nearest_index(x, img.width, out_w);
    for (std::size_t c = 0; c < img.channels; ++c)
        for (std::size_t y = 0; y < out_h; ++y) {
            const std::size_t sy = nearest_index(y, img.height, out_h);
            for (std::size_t x = 0; x < out_w; ++x)
                out.at(c, y, x) = img.at(c, sy, xi[x]);
        }
    return out;
}

Image nearest_upsample_2x(const Image& img) {
    Image out(img.height * 2, img.width * 2, img.channels);
    for (std::size_t c = 0; c < img.channels; ++c)
        for (std::size_t y = 0; y < out.height; ++y)
            for (std::size_t x = 0; x < out.width; ++x)
                out.at(c, y, x) = img.at(c, y / 2, x / 2);
    return out;
}

} // namespace lfsr
