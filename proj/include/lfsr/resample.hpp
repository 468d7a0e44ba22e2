#pragma once

#include <cstddef>

#include "lfsr/lightfield.hpp"

namespace lfsr {

/// Keys piecewise-cubic interpolation kernel. Weight is 1 at offset 0 and 0
/// at all nonzero integer offsets; support is (-2, 2).
struct BicubicKernel {
    double a = -0.5;
};

/// Kernel weight at signed offset x.
double bicubic_weight(const BicubicKernel& kernel, double x);

/// Separable bicubic resize with the align-centers grid mapping
/// src = (dst + 0.5) * scale - 0.5 per axis. Borders clamp to edge; the
/// result is clamped to [0,1].
Image bicubic_resize(const Image& img, std::size_t out_h, std::size_t out_w,
                     const BicubicKernel& kernel = {});

/// Doubles both image dimensions. Same kernel and grid convention as
/// bicubic_resize, so upsampling by 2x and resizing to 2x agree.
Image bicubic_upsample_2x(const Image& img, const BicubicKernel& kernel = {});

/// Nearest-neighbor resize under the same align-centers mapping (ties round
/// toward the lower source index).
Image nearest_resize(const Image& img, std::size_t out_h, std::size_t out_w);

/// 2x nearest-neighbor upsampling that replicates each sample into a 2x2
/// block: out(y,x) = in(y/2, x/2). Keeps known samples at even positions.
Image nearest_upsample_2x(const Image& img);

} // namespace lfsr
