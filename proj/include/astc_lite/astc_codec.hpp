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
 * @brief Single-configuration ASTC encoder and decoder.
 *
 * Every block this library writes uses the same ASTC configuration:
 *
 *  - one partition, color endpoint mode 8 (LDR RGB direct), single plane;
 *  - six color endpoint values at 5 bits each (range 0..31, plain bits);
 *  - an 8x5 weight grid at 2 bits per weight (range 0..3, plain bits).
 *
 * Both quantization ranges are powers of two, so neither stream needs the
 * trit/quint packing of bounded integer sequence encoding. Only the block
 * footprint varies: 12x12 (0.89 bpp) or 8x8 (2.0 bpp).
 *
 * Block layout, bit 0 being the least significant bit of byte 0:
 *
 *     bits   0..10   block mode (0x066)
 *     bits  11..12   partition count - 1 (0)
 *     bits  13..16   color endpoint mode (8)
 *     bits  17..46   endpoint values v0..v5, 5 bits each
 *     bit       47   unused (0)
 *     bits  48..127  weights, bit-reversed: weight k bit 0 at bit 127 - 2k
 *
 * The encoder pipeline per block is endpoint selection (bounding box with a
 * 1/16 inset), orthogonal projection onto the endpoint line, bilinear
 * downsampling of the per-texel weights to the 8x5 grid, and direct rounding
 * of weights and endpoints.
 */
#pragma once

#include "astc_lite/image.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace astc_lite {

inline constexpr int kGridWidth = 8;
inline constexpr int kGridHeight = 5;
inline constexpr int kGridCount = kGridWidth * kGridHeight;

/// Block-mode field for a single-plane 8x5 grid with weight range 0..3.
inline constexpr std::uint32_t kBlockMode = 0x066;
inline constexpr std::uint32_t kColorEndpointMode = 8;
inline constexpr int kBlockBytes = 16;

struct EncoderConfig {
    BlockSize block = BlockSize::k12x12;

    static constexpr int endpoint_bits = 5;
    static constexpr int weight_bits = 2;
    static constexpr int grid_width = kGridWidth;
    static constexpr int grid_height = kGridHeight;
    static constexpr int partitions = 1;
    static constexpr int color_endpoint_mode = static_cast<int>(kColorEndpointMode);
    static constexpr bool dual_plane = false;
};

struct EndpointPair {
    Rgb e0;
    Rgb e1;

    friend constexpr bool operator==(const EndpointPair&, const EndpointPair&) = default;
};

/// Per-texel line parameters in [0,1], row-major with stride `width`.
struct IdealWeights {
    int width = 0;
    int height = 0;
    std::array<double, kMaxBlockTexels> values{};

    double at(int x, int y) const noexcept { return values[static_cast<std::size_t>(y * width + x)]; }
    double& at(int x, int y) noexcept { return values[static_cast<std::size_t>(y * width + x)]; }
};

/// Unquantized weights at the 8x5 grid positions, index x + 8 * y.
using GridValues = std::array<double, kGridCount>;

/// Quantized 2-bit weights, index x + 8 * y.
struct WeightGrid {
    std::array<std::uint8_t, kGridCount> q{};

    friend constexpr bool operator==(const WeightGrid&, const WeightGrid&) = default;
};

/// Six 5-bit endpoint values in CEM 8 order (r0, r1, g0, g1, b0, b1).
struct QuantizedEndpoints {
    std::array<std::uint8_t, 6> v{};

    friend constexpr bool operator==(const QuantizedEndpoints&, const QuantizedEndpoints&) = default;
};

struct EndpointQuantization {
    QuantizedEndpoints endpoints;
    /// Set when the quantized endpoints were swapped; weights must become 3 - q.
    bool invert_weights = false;
};

struct QuantizedBlock {
    QuantizedEndpoints endpoints;
    WeightGrid weights;

    friend constexpr bool operator==(const QuantizedBlock&, const QuantizedBlock&) = default;
};

/// One 128-bit physical block, byte 0 first as stored on disk.
struct AstcBlock {
    std::array<std::uint8_t, kBlockBytes> bytes{};

    friend constexpr bool operator==(const AstcBlock&, const AstcBlock&) = default;
};

/// Per-texel unquantized weights in [0,64].
using TexelWeights = std::array<int, kMaxBlockTexels>;

// Encoder stages ------------------------------------------------------------

/// Per-channel bounding box shrunk by floor((max - min) / 16) at both ends.
EndpointPair select_endpoints(const BlockView& block);

/// Clamped orthogonal projection of each texel onto the e0->e1 line; all zero
/// when the line is degenerate.
IdealWeights project_weights(const BlockView& block, const EndpointPair& endpoints);

/**
 * Bilinear resampling to the 8x5 grid. Grid cell (i, j) samples the source at
 * x = i * (w - 1) / 7, y = j * (h - 1) / 4 so the grid corners land exactly on
 * the source corners.
 */
GridValues downsample_weights(const IdealWeights& ideal);

/// round(3w), ties away from zero.
WeightGrid quantize_weights(const GridValues& grid);

/// round(31x / 255) per channel, then canonical ordering for the CEM 8 decoder.
EndpointQuantization quantize_endpoints(const EndpointPair& endpoints);

// Bitstream -----------------------------------------------------------------

AstcBlock pack_block(const QuantizedEndpoints& endpoints, const WeightGrid& weights);

/// Throws UnsupportedConfiguration for anything but the pruned configuration.
QuantizedBlock unpack_block(const AstcBlock& block);

// Decoder stages ------------------------------------------------------------

/// 5-bit to 8-bit by bit replication.
constexpr int unquantize_endpoint(int q) noexcept
{
    return (q << 3) | (q >> 2);
}

/// 2-bit weight to the 0..64 range: {0, 21, 43, 64}.
constexpr int unquantize_weight(int q) noexcept
{
    const int replicated = (q << 4) | (q << 2) | q;
    return replicated > 32 ? replicated + 1 : replicated;
}

/// CEM 8 endpoint decode, including the blue-contraction branch.
EndpointPair decode_endpoints(const QuantizedEndpoints& endpoints);

/// Decoder-side weight infill from the 8x5 grid to every texel of the footprint.
TexelWeights infill_weights(const std::array<int, kGridCount>& grid, BlockSize size);

/// LDR interpolation with 16-bit endpoint expansion; returns the top 8 bits.
Rgb interpolate_color(const EndpointPair& unquantized, int weight);
Rgb interpolate_color(const QuantizedEndpoints& endpoints, int weight);

// Whole blocks --------------------------------------------------------------

/// Quantized parameters chosen by the encoder for one block.
QuantizedBlock encode_block_parameters(const BlockView& block);

/// Throws DimensionError when block.size differs from config.block.
AstcBlock encode_block(const BlockView& block, const EncoderConfig& config = {});

BlockView decode_block(const AstcBlock& block, BlockSize size);

// Whole images --------------------------------------------------------------

struct EncodeStats {
    std::size_t payload_bytes = 0;
    double bpp = 0.0;
    double encode_ms = 0.0;
};

struct EncodedImage {
    BlockSize block = BlockSize::k12x12;
    int width = 0;
    int height = 0;
    int padded_width = 0;
    int padded_height = 0;
    std::vector<AstcBlock> blocks;
    EncodeStats stats;

    BlockGrid grid() const noexcept
    {
        return {padded_width / block_width(block), padded_height / block_height(block)};
    }
};

/// 16 * ceil(w / bw) * ceil(h / bh).
std::size_t payload_bytes_for(int width, int height, BlockSize size) noexcept;

/**
 * Pads, then encodes every block in raster order. The output is identical for
 * any thread count.
 */
EncodedImage encode_image(const ImageRGB8& img, const EncoderConfig& config = {}, int threads = 1);

/// Throws DimensionError on a block-count mismatch, UnsupportedConfiguration
/// for foreign blocks.
ImageRGB8 decode_image(std::span<const AstcBlock> blocks, BlockSize size, int width, int height,
                       int threads = 1);

ImageRGB8 decode_image(const EncodedImage& encoded, int threads = 1);

} // namespace astc_lite
