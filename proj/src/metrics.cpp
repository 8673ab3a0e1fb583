// SPDX-License-Identifier: Apache-2.0
// ----------------------------------------------------------------------------
// Copyright 2026 The astc-lite Authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at:
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.
// ----------------------------------------------------------------------------

#include "astc_lite/metrics.hpp"

#include "astc_lite/errors.hpp"

#include <array>
#include <string>
#include <vector>

namespace astc_lite {

namespace {

void check_same_dims(const ImageRGB8& a, const ImageRGB8& b)
{
    if (a.width() != b.width() || a.height() != b.height()) {
        throw DimensionError("image dimensions differ: " + std::to_string(a.width()) + "x" +
                             std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                             std::to_string(b.height()));
    }
}

std::vector<double> luma(const ImageRGB8& img)
{
    std::vector<double> out;
    out.reserve(img.pixel_count());
    for (const Rgb& p : img.pixels()) {
        out.push_back(0.299 * p.r + 0.587 * p.g + 0.114 * p.b);
    }
    return out;
}

std::array<double, kSsimWindow> gaussian_kernel()
{
    constexpr double sigma = 1.5;
    std::array<double, kSsimWindow> k{};
    double sum = 0.0;
    for (int i = 0; i < kSsimWindow; ++i) {
        const double d = i - kSsimWindow / 2;
        k[static_cast<std::size_t>(i)] = std::exp(-(d * d) / (2.0 * sigma * sigma));
        sum += k[static_cast<std::size_t>(i)];
    }
    for (double& v : k) {
        v /= sum;
    }
    return k;
}

// Separable "valid" filter: output is (w - 10) x (h - 10).
std::vector<double> filter_valid(const std::vector<double>& src, int w, int h,
                                 const std::array<double, kSsimWindow>& k)
{
    const int ow = w - kSsimWindow + 1;
    const int oh = h - kSsimWindow + 1;
    std::vector<double> horizontal(static_cast<std::size_t>(ow) * h);
    for (int y = 0; y < h; ++y) {
        const double* row = src.data() + static_cast<std::size_t>(y) * w;
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kSsimWindow; ++i) {
                acc += k[static_cast<std::size_t>(i)] * row[x + i];
            }
            horizontal[static_cast<std::size_t>(y) * ow + x] = acc;
        }
    }
    std::vector<double> out(static_cast<std::size_t>(ow) * oh);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (int i = 0; i < kSsimWindow; ++i) {
                acc += k[static_cast<std::size_t>(i)] * horizontal[static_cast<std::size_t>(y + i) * ow + x];
            }
            out[static_cast<std::size_t>(y) * ow + x] = acc;
        }
    }
    return out;
}

} // namespace

double mse(const ImageRGB8& ref, const ImageRGB8& dist)
{
    check_same_dims(ref, dist);
    const auto a = ref.pixels();
    const auto b = dist.pixels();
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int dr = a[i].r - b[i].r;
        const int dg = a[i].g - b[i].g;
        const int db = a[i].b - b[i].b;
        sum += static_cast<std::uint64_t>(dr * dr + dg * dg + db * db);
    }
    return static_cast<double>(sum) / (3.0 * static_cast<double>(a.size()));
}

double psnr(const ImageRGB8& ref, const ImageRGB8& dist)
{
    const double m = mse(ref, dist);
    if (m == 0.0) {
        return kInfinitePsnr;
    }
    return 10.0 * std::log10(255.0 * 255.0 / m);
}

double ssim(const ImageRGB8& ref, const ImageRGB8& dist)
{
    check_same_dims(ref, dist);
    if (ref.width() < kSsimWindow || ref.height() < kSsimWindow) {
        throw DimensionError("SSIM needs at least 11x11 pixels, got " + std::to_string(ref.width()) + "x" +
                             std::to_string(ref.height()));
    }
    if (ref == dist) {
        return 1.0;
    }

    const int w = ref.width();
    const int h = ref.height();
    const std::vector<double> x = luma(ref);
    const std::vector<double> y = luma(dist);
    std::vector<double> xx(x.size());
    std::vector<double> yy(x.size());
    std::vector<double> xy(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        xx[i] = x[i] * x[i];
        yy[i] = y[i] * y[i];
        xy[i] = x[i] * y[i];
    }

    const auto k = gaussian_kernel();
    const auto mu_x = filter_valid(x, w, h, k);
    const auto mu_y = filter_valid(y, w, h, k);
    const auto e_xx = filter_valid(xx, w, h, k);
    const auto e_yy = filter_valid(yy, w, h, k);
    const auto e_xy = filter_valid(xy, w, h, k);

    constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    double total = 0.0;
    for (std::size_t i = 0; i < mu_x.size(); ++i) {
        const double mx = mu_x[i];
        const double my = mu_y[i];
        const double var_x = e_xx[i] - mx * mx;
        const double var_y = e_yy[i] - my * my;
        const double cov = e_xy[i] - mx * my;
        total += ((2.0 * mx * my + c1) * (2.0 * cov + c2)) /
                 ((mx * mx + my * my + c1) * (var_x + var_y + c2));
    }
    return total / static_cast<double>(mu_x.size());
}

double bpp(std::size_t payload_bytes, int width, int height)
{
    if (width < 1 || height < 1) {
        throw DimensionError("bpp of an empty image is undefined");
    }
    return 8.0 * static_cast<double>(payload_bytes) / (static_cast<double>(width) * static_cast<double>(height));
}

} // namespace astc_lite
