#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lfsr/errors.hpp"

namespace lfsr {

/// Planar multi-channel 2D image, row-major per channel, samples in [0,1].
struct Image {
    std::size_t height = 0;
    std::size_t width = 0;
    std::size_t channels = 1;
    std::vector<double> data; // [channel][row][col]

    Image() = default;
    Image(std::size_t h, std::size_t w, std::size_t c = 1)
        : height(h), width(w), channels(c), data(h * w * c, 0.0) {}

    double& at(std::size_t c, std::size_t y, std::size_t x) {
        return data[(c * height + y) * width + x];
    }
    double at(std::size_t c, std::size_t y, std::size_t x) const {
        return data[(c * height + y) * width + x];
    }
    std::size_t pixel_count() const { return height * width; }

    bool same_shape(const Image& o) const {
        return height == o.height && width == o.width && channels == o.channels;
    }
};

/// One AxA angular block of a single channel, tagged with its lenslet index.
struct LensletRegion {
    std::size_t side = 0;
    std::size_t origin_s = 0;
    std::size_t origin_t = 0;
    std::vector<double> data; // row-major, data[u*side + v]

    LensletRegion() = default;
    explicit LensletRegion(std::size_t a) : side(a), data(a * a, 0.0) {}

    double& at(std::size_t u, std::size_t v) { return data[u * side + v]; }
    double at(std::size_t u, std::size_t v) const { return data[u * side + v]; }
};

/// One sub-aperture view: the HxW image obtained by fixing (u,v).
struct PerspectiveImage {
    Image image;
    std::size_t u = 0;
    std::size_t v = 0;
};

/// Canonical 4D light field. Samples are indexed (channel, s, t, u, v),
/// row-major in that order: s,t select the lenslet, u,v the angular
/// position inside its AxA block. All samples lie in [0,1].
class LightField {
public:
    LightField() = default;
    LightField(std::size_t h, std::size_t w, std::size_t angular, std::size_t channels)
        : spatial_h_(h), spatial_w_(w), angular_(angular), channels_(channels),
          data_(h * w * angular * angular * channels, 0.0) {
        if (h == 0 || w == 0 || angular == 0 || (channels != 1 && channels != 3))
            throw Error("invalid-shape: light field needs H,W,A > 0 and 1 or 3 channels");
    }

    std::size_t height() const { return spatial_h_; }
    std::size_t width() const { return spatial_w_; }
    std::size_t angular() const { return angular_; }
    std::size_t channels() const { return channels_; }
    std::size_t sample_count() const { return data_.size(); }

    double& at(std::size_t c, std::size_t s, std::size_t t, std::size_t u, std::size_t v) {
        return data_[index(c, s, t, u, v)];
    }
    double at(std::size_t c, std::size_t s, std::size_t t, std::size_t u, std::size_t v) const {
        return data_[index(c, s, t, u, v)];
    }

    const std::vector<double>& raw() const { return data_; }
    std::vector<double>& raw() { return data_; }

    bool same_shape(const LightField& o) const {
        return spatial_h_ == o.spatial_h_ && spatial_w_ == o.spatial_w_ &&
               angular_ == o.angular_ && channels_ == o.channels_;
    }

private:
    std::size_t index(std::size_t c, std::size_t s, std::size_t t,
                      std::size_t u, std::size_t v) const {
        return (((c * spatial_h_ + s) * spatial_w_ + t) * angular_ + u) * angular_ + v;
    }

    std::size_t spatial_h_ = 0;
    std::size_t spatial_w_ = 0;
    std::size_t angular_ = 0;
    std::size_t channels_ = 1;
    std::vector<double> data_;
};

/// Slices the lenslet mosaic (one AxA block per lenslet) into a light field.
/// lf(c,s,t,u,v) = mosaic(c, s*A+u, t*A+v). Pure gather, no arithmetic.
LightField lf_from_lenslet_mosaic(const Image& mosaic, std::size_t angular);

/// Exact inverse of lf_from_lenslet_mosaic.
Image lf_to_lenslet_mosaic(const LightField& lf);

/// Picks the pixel at angular position (u,v) from every lenslet.
PerspectiveImage extract_perspective(const LightField& lf, std::size_t u, std::size_t v);

/// Reassembles a complete AxA grid of views into a light field. The grid is
/// indexed views[u*A + v]; every view must agree on (H,W) and channels.
LightField perspectives_to_lf(const std::vector<PerspectiveImage>& views, std::size_t angular);

/// Copies one channel's AxA block behind lenslet (s,t).
LensletRegion extract_lenslet(const LightField& lf, std::size_t c, std::size_t s, std::size_t t);

/// Keeps even angular indices: out(s,t,u,v) = lf(s,t,2u,2v). Requires even A.
LightField downsample_angular(const LightField& lf);

/// Keeps even lenslet indices: out(s,t,.,.) = lf(2s,2t,.,.). Odd H or W keep
/// indices 0,2,4,... giving ceil(H/2) rows.
LightField downsample_spatial(const LightField& lf);

/// Splits an RGB field into three single-channel fields, channel order preserved.
std::vector<LightField> split_channels(const LightField& lf);

/// Inverse of split_channels; the three fields must agree on shape.
LightField merge_channels(const std::vector<LightField>& fields);

} // namespace lfsr
