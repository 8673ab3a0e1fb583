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

/**
 * @brief Encoder stages for the pruned ASTC configuration.
 */

#include "astc_lite/astc_codec.hpp"

#include "astc_lite/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace astc_lite {

namespace {

int channel_sum(const Rgb& c) noexcept
{
    return c.r + c.g + c.b;
}

// round(31x / 255) with ties away from zero. 62x is even and 255 odd, so an
// exact tie cannot occur.
std::uint8_t quantize_channel(int x) noexcept
{
    return static_cast<std::uint8_t>((62 * x + 255) / 510);
}

/// Channel-separated copy of a block.
struct Planes {
    int count = 0;
    int width = 0;
    int height = 0;
    alignas(16) std::array<std::uint8_t, kMaxBlockTexels> r{};
    alignas(16) std::array<std::uint8_t, kMaxBlockTexels> g{};
    alignas(16) std::array<std::uint8_t, kMaxBlockTexels> b{};

    explicit Planes(const BlockView& block) noexcept
        : count(block.texel_count()), width(block.width()), height(block.height())
    {
        for (int i = 0; i < count; ++i) {
            const Rgb& t = block.storage[static_cast<std::size_t>(i)];
            r[static_cast<std::size_t>(i)] = t.r;
            g[static_cast<std::size_t>(i)] = t.g;
            b[static_cast<std::size_t>(i)] = t.b;
        }
    }
};

void plane_range(const std::array<std::uint8_t, kMaxBlockTexels>& plane, int count, int& lo, int& hi) noexcept
{
    std::uint8_t mn = 255;
    std::uint8_t mx = 0;
    for (int i = 0; i < count; ++i) {
        mn = std::min(mn, plane[static_cast<std::size_t>(i)]);
        mx = std::max(mx, plane[static_cast<std::size_t>(i)]);
    }
    lo = mn;
    hi = mx;
}

EndpointPair select_endpoints(const Planes& planes)
{
    std::array<int, 3> lo{};
    std::array<int, 3> hi{};
    plane_range(planes.r, planes.count, lo[0], hi[0]);
    plane_range(planes.g, planes.count, lo[1], hi[1]);
    plane_range(planes.b, planes.count, lo[2], hi[2]);

    std::array<std::uint8_t, 3> e0{};
    std::array<std::uint8_t, 3> e1{};
    for (int c = 0; c < 3; ++c) {
        const int inset = (hi[c] - lo[c]) >> 4;
        e0[c] = static_cast<std::uint8_t>(lo[c] + inset);
        e1[c] = static_cast<std::uint8_t>(hi[c] - inset);
    }

    EndpointPair ep{{e0[0], e0[1], e0[2]}, {e1[0], e1[1], e1[2]}};
    if (channel_sum(ep.e0) > channel_sum(ep.e1)) {
        std::swap(ep.e0, ep.e1);
    }
    return ep;
}

IdealWeights project_weights(const Planes& planes, const EndpointPair& endpoints)
{
    IdealWeights ideal;
    ideal.width = planes.width;
    ideal.height = planes.height;

    const int dr = endpoints.e1.r - endpoints.e0.r;
    const int dg = endpoints.e1.g - endpoints.e0.g;
    const int db = endpoints.e1.b - endpoints.e0.b;
    const int length_sq = dr * dr + dg * dg + db * db;
    if (length_sq == 0) {
        return ideal;
    }

    const double inv_length_sq = 1.0 / static_cast<double>(length_sq);
    const int offset = endpoints.e0.r * dr + endpoints.e0.g * dg + endpoints.e0.b * db;
    std::array<int, kMaxBlockTexels> dot;
    for (int i = 0; i < planes.count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        dot[k] = planes.r[k] * dr + planes.g[k] * dg + planes.b[k] * db - offset;
    }
    for (int i = 0; i < planes.count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        ideal.values[k] = std::clamp(static_cast<double>(dot[k]) * inv_length_sq, 0.0, 1.0);
    }
    return ideal;
}

} // namespace

EndpointPair select_endpoints(const BlockView& block)
{
    return select_endpoints(Planes(block));
}

IdealWeights project_weights(const BlockView& block, const EndpointPair& endpoints)
{
    return project_weights(Planes(block), endpoints);
}

GridValues downsample_weights(const IdealWeights& ideal)
{
    GridValues grid{};
    const int w = ideal.width;
    const int h = ideal.height;
    for (int j = 0; j < kGridHeight; ++j) {
        const double y = static_cast<double>(j * (h - 1)) / (kGridHeight - 1);
        const int y0 = std::min(static_cast<int>(y), h - 1);
        const int y1 = std::min(y0 + 1, h - 1);
        const double fy = y - y0;
        for (int i = 0; i < kGridWidth; ++i) {
            const double x = static_cast<double>(i * (w - 1)) / (kGridWidth - 1);
            const int x0 = std::min(static_cast<int>(x), w - 1);
            const int x1 = std::min(x0 + 1, w - 1);
            const double fx = x - x0;

            const double top = ideal.at(x0, y0) * (1.0 - fx) + ideal.at(x1, y0) * fx;
            const double bottom = ideal.at(x0, y1) * (1.0 - fx) + ideal.at(x1, y1) * fx;
            grid[static_cast<std::size_t>(i + j * kGridWidth)] = top * (1.0 - fy) + bottom * fy;
        }
    }
    return grid;
}

WeightGrid quantize_weights(const GridValues& grid)
{
    WeightGrid out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double scaled = std::floor(grid[i] * 3.0 + 0.5);
        out.q[i] = static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 3.0));
    }
    return out;
}

EndpointQuantization quantize_endpoints(const EndpointPair& endpoints)
{
    EndpointQuantization result;
    auto& v = result.endpoints.v;
    v[0] = quantize_channel(endpoints.e0.r);
    v[1] = quantize_channel(endpoints.e1.r);
    v[2] = quantize_channel(endpoints.e0.g);
    v[3] = quantize_channel(endpoints.e1.g);
    v[4] = quantize_channel(endpoints.e0.b);
    v[5] = quantize_channel(endpoints.e1.b);

    // The decoder picks the blue-contraction branch when the unquantized sum
    // of endpoint 1 is below that of endpoint 0.
    const int s0 = unquantize_endpoint(v[0]) + unquantize_endpoint(v[2]) + unquantize_endpoint(v[4]);
    const int s1 = unquantize_endpoint(v[1]) + unquantize_endpoint(v[3]) + unquantize_endpoint(v[5]);
    if (s1 < s0) {
        std::swap(v[0], v[1]);
        std::swap(v[2], v[3]);
        std::swap(v[4], v[5]);
        result.invert_weights = true;
    }
    return result;
}

QuantizedBlock encode_block_parameters(const BlockView& block)
{
    const Planes planes(block);
    const EndpointPair endpoints = select_endpoints(planes);
    const IdealWeights ideal = project_weights(planes, endpoints);
    WeightGrid weights = quantize_weights(downsample_weights(ideal));
    const EndpointQuantization quantized = quantize_endpoints(endpoints);
    if (quantized.invert_weights) {
        for (auto& q : weights.q) {
            q = static_cast<std::uint8_t>(3 - q);
        }
    }
    return {quantized.endpoints, weights};
}

AstcBlock encode_block(const BlockView& block, const EncoderConfig& config)
{
    if (block.size != config.block) {
        throw DimensionError("block footprint " + std::string(to_string(block.size)) +
                             " does not match encoder footprint " + std::string(to_string(config.block)));
    }
    const QuantizedBlock params = encode_block_parameters(block);
    return pack_block(params.endpoints, params.weights);
}

} // namespace astc_lite
