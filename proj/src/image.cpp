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

#include "astc_lite/image.hpp"

#include "astc_lite/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace astc_lite {

std::string_view to_string(BlockSize size) noexcept
{
    return size == BlockSize::k12x12 ? "12x12" : "8x8";
}

std::optional<BlockSize> parse_block_size(std::string_view text) noexcept
{
    if (text == "12x12") {
        return BlockSize::k12x12;
    }
    if (text == "8x8") {
        return BlockSize::k8x8;
    }
    return std::nullopt;
}

ImageRGB8::ImageRGB8(int width, int height, Rgb fill)
    : width_(width), height_(height)
{
    if (width < 1 || height < 1) {
        throw DimensionError("image dimensions must be at least 1x1, got " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

ImageRGB8::ImageRGB8(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels))
{
    if (width < 1 || height < 1) {
        throw DimensionError("image dimensions must be at least 1x1, got " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw DimensionError("pixel count " + std::to_string(pixels_.size()) +
                             " does not match " + std::to_string(width) + "x" + std::to_string(height));
    }
}

BlockView::BlockView(BlockSize footprint, Rgb fill)
    : size(footprint)
{
    storage.fill(fill);
}

ImageRGB8 pad_to_blocks(const ImageRGB8& img, BlockSize size)
{
    const int out_w = padded_extent(img.width(), block_width(size));
    const int out_h = padded_extent(img.height(), block_height(size));
    if (out_w == img.width() && out_h == img.height()) {
        return img;
    }

    ImageRGB8 out(out_w, out_h);
    for (int y = 0; y < out_h; ++y) {
        const int sy = std::min(y, img.height() - 1);
        const auto src = img.row(sy);
        auto dst = out.pixels().subspan(static_cast<std::size_t>(y) * out_w, out_w);
        std::copy(src.begin(), src.end(), dst.begin());
        std::fill(dst.begin() + img.width(), dst.end(), src.back());
    }
    return out;
}

BlockGrid block_grid_dims(const ImageRGB8& img, BlockSize size)
{
    const int bw = block_width(size);
    const int bh = block_height(size);
    if (img.width() % bw != 0 || img.height() % bh != 0) {
        throw DimensionError("image " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                             " is not a multiple of the " + std::string(to_string(size)) + " footprint");
    }
    return {img.width() / bw, img.height() / bh};
}

namespace {

void check_block_index(const ImageRGB8& img, int bx, int by, BlockSize size)
{
    const BlockGrid grid = block_grid_dims(img, size);
    if (bx < 0 || by < 0 || bx >= grid.blocks_x || by >= grid.blocks_y) {
        throw std::out_of_range("block (" + std::to_string(bx) + "," + std::to_string(by) +
                                ") outside " + std::to_string(grid.blocks_x) + "x" +
                                std::to_string(grid.blocks_y) + " block grid");
    }
}

} // namespace

BlockView extract_block(const ImageRGB8& img, int bx, int by, BlockSize size)
{
    check_block_index(img, bx, by, size);
    BlockView block(size);
    const int bw = block.width();
    const int bh = block.height();
    for (int y = 0; y < bh; ++y) {
        const auto src = img.row(by * bh + y).subspan(static_cast<std::size_t>(bx) * bw, bw);
        std::copy(src.begin(), src.end(), block.storage.begin() + y * bw);
    }
    return block;
}

void place_block(ImageRGB8& img, int bx, int by, const BlockView& block)
{
    check_block_index(img, bx, by, block.size);
    const int bw = block.width();
    const int bh = block.height();
    for (int y = 0; y < bh; ++y) {
        auto dst = img.pixels().subspan(static_cast<std::size_t>(by * bh + y) * img.width() +
                                        static_cast<std::size_t>(bx) * bw, bw);
        std::copy_n(block.storage.begin() + y * bw, bw, dst.begin());
    }
}

ImageRGB8 crop(const ImageRGB8& img, int width, int height)
{
    if (width < 1 || height < 1 || width > img.width() || height > img.height()) {
        throw DimensionError("cannot crop " + std::to_string(img.width()) + "x" +
                             std::to_string(img.height()) + " image to " +
                             std::to_string(width) + "x" + std::to_string(height));
    }
    if (width == img.width() && height == img.height()) {
        return img;
    }
    std::vector<Rgb> pixels;
    pixels.reserve(static_cast<std::size_t>(width) * height);
    for (int y = 0; y < height; ++y) {
        const auto src = img.row(y).first(width);
        pixels.insert(pixels.end(), src.begin(), src.end());
    }
    return ImageRGB8(width, height, std::move(pixels));
}

} // namespace astc_lite
