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

#include "astc_lite/astc_codec.hpp"

#include "astc_lite/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace astc_lite {

namespace {

// Reads a block of the edge-replicated padded image without materializing it.
void gather_block(const ImageRGB8& img, int bx, int by, BlockView& block)
{
    const int bw = block.width();
    const int bh = block.height();
    const int x0 = bx * bw;
    const int y0 = by * bh;
    const int last_x = img.width() - 1;
    const int last_y = img.height() - 1;
    const bool interior = x0 + bw - 1 <= last_x;

    for (int y = 0; y < bh; ++y) {
        const auto row = img.row(std::min(y0 + y, last_y));
        Rgb* dst = block.storage.data() + y * bw;
        if (interior) {
            std::copy_n(row.begin() + x0, bw, dst);
        } else {
            for (int x = 0; x < bw; ++x) {
                dst[x] = row[static_cast<std::size_t>(std::min(x0 + x, last_x))];
            }
        }
    }
}

} // namespace

std::size_t payload_bytes_for(int width, int height, BlockSize size) noexcept
{
    const auto bx = static_cast<std::size_t>((width + block_width(size) - 1) / block_width(size));
    const auto by = static_cast<std::size_t>((height + block_height(size) - 1) / block_height(size));
    return kBlockBytes * bx * by;
}

EncodedImage encode_image(const ImageRGB8& img, const EncoderConfig& config, int threads)
{
    const auto start = std::chrono::steady_clock::now();

    EncodedImage out;
    out.block = config.block;
    out.width = img.width();
    out.height = img.height();
    out.padded_width = padded_extent(img.width(), block_width(config.block));
    out.padded_height = padded_extent(img.height(), block_height(config.block));
    const BlockGrid grid = out.grid();
    out.blocks.resize(grid.count());

    detail::parallel_for(static_cast<std::size_t>(grid.blocks_y), threads,
                         [&](std::size_t row_begin, std::size_t row_end) {
        BlockView block(config.block);
        for (std::size_t by = row_begin; by < row_end; ++by) {
            for (int bx = 0; bx < grid.blocks_x; ++bx) {
                gather_block(img, bx, static_cast<int>(by), block);
                out.blocks[by * static_cast<std::size_t>(grid.blocks_x) + static_cast<std::size_t>(bx)] =
                    encode_block(block, config);
            }
        }
    });

    const auto stop = std::chrono::steady_clock::now();
    out.stats.payload_bytes = out.blocks.size() * kBlockBytes;
    out.stats.bpp = 8.0 * static_cast<double>(out.stats.payload_bytes) /
                    (static_cast<double>(img.width()) * static_cast<double>(img.height()));
    out.stats.encode_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return out;
}

ImageRGB8 decode_image(std::span<const AstcBlock> blocks, BlockSize size, int width, int height, int threads)
{
    if (width < 1 || height < 1) {
        throw DimensionError("decoded image dimensions must be positive");
    }
    const int padded_w = padded_extent(width, block_width(size));
    const int padded_h = padded_extent(height, block_height(size));
    const BlockGrid grid{padded_w / block_width(size), padded_h / block_height(size)};
    if (blocks.size() != grid.count()) {
        throw DimensionError("expected " + std::to_string(grid.count()) + " blocks for " +
                             std::to_string(width) + "x" + std::to_string(height) + " at " +
                             std::string(to_string(size)) + ", got " + std::to_string(blocks.size()));
    }

    ImageRGB8 padded(padded_w, padded_h);
    detail::parallel_for(static_cast<std::size_t>(grid.blocks_y), threads,
                         [&](std::size_t row_begin, std::size_t row_end) {
        for (std::size_t by = row_begin; by < row_end; ++by) {
            for (int bx = 0; bx < grid.blocks_x; ++bx) {
                const AstcBlock& b =
                    blocks[by * static_cast<std::size_t>(grid.blocks_x) + static_cast<std::size_t>(bx)];
                place_block(padded, bx, static_cast<int>(by), decode_block(b, size));
            }
        }
    });
    return crop(padded, width, height);
}

ImageRGB8 decode_image(const EncodedImage& encoded, int threads)
{
    return decode_image(encoded.blocks, encoded.block, encoded.width, encoded.height, threads);
}

} // namespace astc_lite
