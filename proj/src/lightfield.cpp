#include "lfsr/lightfield.hpp"

#include <string>

namespace lfsr {

namespace {

void check_unit_range(const std::vector<double>& samples, const char* what) {
    for (double v : samples) {
        if (!(v >= 0.0 && v <= 1.0))
            throw Error(std::string("out-of-range: ") + what + " sample " +
                        std::to_string(v) + " outside [0,1]");
    }
}

} // namespace

LightField lf_from_lenslet_mosaic(const Image& mosaic, std::size_t angular) {
    if (angular == 0)
        throw Error("invalid-shape: angular side must be positive");
    if (mosaic.height % angular != 0)
        throw Error("not-divisible: mosaic height " + std::to_string(mosaic.height) +
                    " not divisible by angular side " + std::to_string(angular));
    if (mosaic.width % angular != 0)
        throw Error("not-divisible: mosaic width " + std::to_string(mosaic.width) +
                    " not divisible by angular side " + std::to_string(angular));
    check_unit_range(mosaic.data, "mosaic");

    const std::size_t h = mosaic.height / angular;
    const std::size_t w = mosaic.width / angular;
    LightField lf(h, w, angular, mosaic.channels);
    for (std::size_t c = 0; c < mosaic.channels; ++c)
        for (std::size_t s = 0; s < h; ++s)
            for (std::size_t t = 0; t < w; ++t)
                for (std::size_t u = 0; u < angular; ++u)
                    for (std::size_t v = 0; v < angular; ++v)
                        lf.at(c, s, t, u, v) = mosaic.at(c, s * angular + u, t * angular + v);
    return lf;
}

Image lf_to_lenslet_mosaic(const LightField& lf) {
    const std::size_t a = lf.angular();
    Image mosaic(lf.height() * a, lf.width() * a, lf.channels());
    for (std::size_t c = 0; c < lf.channels(); ++c)
        for (std::size_t s = 0; s < lf.height(); ++s)
            for (std::size_t t = 0; t < lf.width(); ++t)
                for (std::size_t u = 0; u < a; ++u)
                    for (std::size_t v = 0; v < a; ++v)
                        mosaic.at(c, s * a + u, t * a + v) = lf.at(c, s, t, u, v);
    return mosaic;
}

PerspectiveImage extract_perspective(const LightField& lf, std::size_t u, std::size_t v) {
    if (u >= lf.angular() || v >= lf.angular())
        throw Error("index-out-of-range: angular index (" + std::to_string(u) + "," +
                    std::to_string(v) + ") outside " + std::to_string(lf.angular()) + "x" +
                    std::to_string(lf.angular()) + " grid");
    PerspectiveImage view;
    view.u = u;
    view.v = v;
    view.image = Image(lf.height(), lf.width(), lf.channels());
    for (std::size_t c = 0; c < lf.channels(); ++c)
        for (std::size_t s = 0; s < lf.height(); ++s)
            for (std::size_t t = 0; t < lf.width(); ++t)
                view.image.at(c, s, t) = lf.at(c, s, t, u, v);
    return view;
}

LightField perspectives_to_lf(const std::vector<PerspectiveImage>& views, std::size_t angular) {
    if (views.size() != angular * angular)
        throw Error("missing-view: expected " + std::to_string(angular * angular) +
                    " views, got " + std::to_string(views.size()));
    const Image& first = views.front().image;
    for (const auto& view : views) {
        if (!view.image.same_shape(first))
            throw Error("shape-mismatch: view (" + std::to_string(view.u) + "," +
                        std::to_string(view.v) + ") is " + std::to_string(view.image.height) +
                        "x" + std::to_string(view.image.width) + "x" +
                        std::to_string(view.image.channels) + ", expected " +
                        std::to_string(first.height) + "x" + std::to_string(first.width) +
                        "x" + std::to_string(first.channels));
    }

    LightField lf(first.height, first.width, angular, first.channels);
    std::vector<bool> seen(angular * angular, false);
    for (const auto& view : views) {
        if (view.u >= angular || view.v >= angular)
            throw Error("index-out-of-range: view tagged (" + std::to_string(view.u) + "," +
                        std::to_string(view.v) + ") outside grid");
        seen[view.u * angular + view.v] = true;
        for (std::size_t c = 0; c < first.channels; ++c)
            for (std::size_t s = 0; s < first.height; ++s)
                for (std::size_t t = 0; t < first.width; ++t)
                    lf.at(c, s, t, view.u, view.v) = view.image.at(c, s, t);
    }
    for (std::size_t u = 0; u < angular; ++u)
        for (std::size_t v = 0; v < angular; ++v)
            if (!seen[u * angular + v])
                throw Error("missing-view: no view for angular index (" + std::to_string(u) +
                            "," + std::to_string(v) + ")");
    return lf;
}

LensletRegion extract_lenslet(const LightField& lf, std::size_t c, std::size_t s, std::size_t t) {
    if (c >= lf.channels() || s >= lf.height() || t >= lf.width())
        throw Error("index-out-of-range: lenslet (c=" + std::to_string(c) + ",s=" +
                    std::to_string(s) + ",t=" + std::to_string(t) + ")");
    LensletRegion region(lf.angular());
    region.origin_s = s;
    region.origin_t = t;
    for (std::size_t u = 0; u < lf.angular(); ++u)
        for (std::size_t v = 0; v < lf.angular(); ++v)
            region.at(u, v) = lf.at(c, s, t, u, v);
    return region;
}

LightField downsample_angular(const LightField& lf) {
    if (lf.angular() % 2 != 0)
        throw Error("odd-angular: angular side " + std::to_string(lf.angular()) +
                    " must be even to halve");
    const std::size_t a = lf.angular() / 2;
    LightField out(lf.height(), lf.width(), a, lf.channels());
    for (std::size_t c = 0; c < lf.channels(); ++c)
        for (std::size_t s = 0; s < lf.height(); ++s)
            for (std::size_t t = 0; t < lf.width(); ++t)
                for (std::size_t u = 0; u < a; ++u)
                    for (std::size_t v = 0; v < a; ++v)
                        out.at(c, s, t, u, v) = lf.at(c, s, t, 2 * u, 2 * v);
    return out;
}

LightField downsample_spatial(const LightField& lf) {
    const std::size_t h = (lf.height() + 1) / 2;
    const std::size_t w = (lf.width() + 1) / 2;
    LightField out(h, w, lf.angular(), lf.channels());
    for (std::size_t c = 0; c < lf.channels(); ++c)
        for (std::size_t s = 0; s < h; ++s)
            for (std::size_t t = 0; t < w; ++t)
                for (std::size_t u = 0; u < lf.angular(); ++u)
                    for (std::size_t v = 0; v < lf.angular(); ++v)
                        out.at(c, s, t, u, v) = lf.at(c, 2 * s, 2 * t, u, v);
    return out;
}

std::vector<LightField> split_channels(const LightField& lf) {
    if (lf.channels() != 3)
        throw Error("channel-mismatch: split_channels needs 3 channels, got " +
                    std::to_string(lf.channels()));
    std::vector<LightField> out;
    out.reserve(3);
    for (std::size_t c = 0; c < 3; ++c) {
        LightField mono(lf.height(), lf.width(), lf.angular(), 1);
        for (std::size_t s = 0; s < lf.height(); ++s)
            for (std::size_t t = 0; t < lf.width(); ++t)
                for (std::size_t u = 0; u < lf.angular(); ++u)
                    for (std::size_t v = 0; v < lf.angular(); ++v)
                        mono.at(0, s, t, u, v) = lf.at(c, s, t, u, v);
        out.push_back(std::move(mono));
    }
    return out;
}

LightField merge_channels(const std::vector<LightField>& fields) {
    if (fields.size() != 3)
        throw Error("channel-mismatch: merge_channels needs 3 fields, got " +
                    std::to_string(fields.size()));
    const LightField& first = fields.front();
    for (const auto& f : fields) {
        if (f.channels() != 1)
            throw Error("channel-mismatch: merge_channels inputs must be single-channel");
        if (!(f.height() == first.height() && f.width() == first.width() &&
              f.angular() == first.angular()))
            throw Error("shape-mismatch: merge_channels inputs disagree on dimensions");
    }
    LightField out(first.height(), first.width(), first.angular(), 3);
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t s = 0; s < first.height(); ++s)
            for (std::size_t t = 0; t < first.width(); ++t)
                for (std::size_t u = 0; u < first.angular(); ++u)
                    for (std::size_t v = 0; v < first.angular(); ++v)
                        out.at(c, s, t, u, v) = fields[c].at(0, s, t, u, v);
    return out;
}

} // namespace lfsr
