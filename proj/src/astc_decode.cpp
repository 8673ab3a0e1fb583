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
 * @brief Decoder for the pruned configuration, bit-exact with the LDR profile
 *        in decode_unorm8 mode.
 */

#include "astc_lite/astc_codec.hpp"

#include <algorithm>

namespace astc_lite {

namespace {

struct InfillEntry {
    std::array<std::uint8_t, 4> index;
    std::array<std::uint8_t, 4> factor;
};

using InfillTable = std::array<InfillEntry, kMaxBlockTexels>;

InfillTable build_infill_table(BlockSize size)
{
    const int bw = block_width(size);
    const int bh = block_height(size);
    const int ds = (1024 + bw / 2) / (bw - 1);
    const int dt = (1024 + bh / 2) / (bh - 1);

    InfillTable table{};
    for (int t = 0; t < bh; ++t) {
        for (int s = 0; s < bw; ++s) {
            const int gs = (ds * s * (kGridWidth - 1) + 32) >> 6;
            const int gt = (dt * t * (kGridHeight - 1) + 32) >> 6;
            const int js = gs >> 4;
            const int fs = gs & 0xF;
            const int jt = gt >> 4;
            const int ft = gt & 0xF;

            const int w11 = (fs * ft + 8) >> 4;
            const int w10 = ft - w11;
            const int w01 = fs - w11;
            const int w00 = 16 - fs - ft + w11;

            // Neighbours past the last row/column always carry a zero factor.
            const int js1 = std::min(js + 1, kGridWidth - 1);
            const int jt1 = std::min(jt + 1, kGridHeight - 1);

            InfillEntry& e = table[static_cast<std::size_t>(t * bw + s)];
            e.index = {static_cast<std::uint8_t>(js + jt * kGridWidth),
                       static_cast<std::uint8_t>(js1 + jt * kGridWidth),
                       static_cast<std::uint8_t>(js + jt1 * kGridWidth),
                       static_cast<std::uint8_t>(js1 + jt1 * kGridWidth)};
            e.factor = {static_cast<std::uint8_t>(w00), static_cast<std::uint8_t>(w01),
                        static_cast<std::uint8_t>(w10), static_cast<std::uint8_t>(w11)};
        }
    }
    return table;
}

const InfillTable& infill_table(BlockSize size)
{
    static const InfillTable table12 = build_infill_table(BlockSize::k12x12);
    static const InfillTable table8 = build_infill_table(BlockSize::k8x8);
    return size == BlockSize::k12x12 ? table12 : table8;
}

Rgb blue_contract(int r, int g, int b) noexcept
{
    return {static_cast<std::uint8_t>((r + b) >> 1), static_cast<std::uint8_t>((g + b) >> 1),
            static_cast<std::uint8_t>(b)};
}

std::uint8_t lerp_channel(int c0, int c1, int weight) noexcept
{
    const int e0 = c0 * 257;
    const int e1 = c1 * 257;
    const int c16 = (e0 * (64 - weight) + e1 * weight + 32) >> 6;
    return static_cast<std::uint8_t>(c16 >> 8);
}

} // namespace

EndpointPair decode_endpoints(const QuantizedEndpoints& endpoints)
{
    std::array<int, 6> v{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = unquantize_endpoint(endpoints.v[i]);
    }
    const int s0 = v[0] + v[2] + v[4];
    const int s1 = v[1] + v[3] + v[5];
    if (s1 >= s0) {
        return {{static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[2]), static_cast<std::uint8_t>(v[4])},
                {static_cast<std::uint8_t>(v[1]), static_cast<std::uint8_t>(v[3]), static_cast<std::uint8_t>(v[5])}};
    }
    return {blue_contract(v[1], v[3], v[5]), blue_contract(v[0], v[2], v[4])};
}

TexelWeights infill_weights(const std::array<int, kGridCount>& grid, BlockSize size)
{
    const InfillTable& table = infill_table(size);
    TexelWeights out{};
    const int count = block_texel_count(size);
    for (int i = 0; i < count; ++i) {
        const InfillEntry& e = table[static_cast<std::size_t>(i)];
        int sum = 8;
        for (std::size_t k = 0; k < 4; ++k) {
            sum += grid[e.index[k]] * e.factor[k];
        }
        out[static_cast<std::size_t>(i)] = sum >> 4;
    }
    return out;
}

Rgb interpolate_color(const EndpointPair& unquantized, int weight)
{
    return {lerp_channel(unquantized.e0.r, unquantized.e1.r, weight),
            lerp_channel(unquantized.e0.g, unquantized.e1.g, weight),
            lerp_channel(unquantized.e0.b, unquantized.e1.b, weight)};
}

Rgb interpolate_color(const QuantizedEndpoints& endpoints, int weight)
{
    return interpolate_color(decode_endpoints(endpoints), weight);
}

BlockView decode_block(const AstcBlock& block, BlockSize size)
{
    const QuantizedBlock params = unpack_block(block);
    const EndpointPair endpoints = decode_endpoints(params.endpoints);

    std::array<int, kGridCount> grid{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = unquantize_weight(params.weights.q[i]);
    }
    const TexelWeights weights = infill_weights(grid, size);

    BlockView out(size);
    auto texels = out.texels();
    for (std::size_t i = 0; i < texels.size(); ++i) {
        texels[i] = interpolate_color(endpoints, weights[i]);
    }
    return out;
}

} // namespace astc_lite
