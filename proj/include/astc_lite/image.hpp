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
 * @brief RGB raster buffers, padding to block multiples and block access.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace astc_lite {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

/// The two supported block footprints.
enum class BlockSize : std::uint8_t {
    k12x12,
    k8x8,
};

constexpr int block_width(BlockSize size) noexcept
{
    return size == BlockSize::k12x12 ? 12 : 8;
}

constexpr int block_height(BlockSize size) noexcept
{
    return size == BlockSize::k12x12 ? 12 : 8;
}

constexpr int block_texel_count(BlockSize size) noexcept
{
    return block_width(size) * block_height(size);
}

inline constexpr int kMaxBlockTexels = 144;

std::string_view to_string(BlockSize size) noexcept;

/// Parses "12x12" or "8x8".
std::optional<BlockSize> parse_block_size(std::string_view text) noexcept;

/// Row-major interleaved 8-bit RGB image. Dimensions are always at least 1x1.
class ImageRGB8 {
public:
    /// Throws DimensionError for non-positive dimensions.
    ImageRGB8(int width, int height, Rgb fill = {});

    /// Throws DimensionError when pixels.size() != width * height.
    ImageRGB8(int width, int height, std::vector<Rgb> pixels);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::size_t pixel_count() const noexcept { return pixels_.size(); }

    Rgb& at(int x, int y) noexcept { return pixels_[index(x, y)]; }
    const Rgb& at(int x, int y) const noexcept { return pixels_[index(x, y)]; }

    std::span<Rgb> pixels() noexcept { return pixels_; }
    std::span<const Rgb> pixels() const noexcept { return pixels_; }

    std::span<const Rgb> row(int y) const noexcept
    {
        return std::span<const Rgb>(pixels_).subspan(static_cast<std::size_t>(y) * width_, width_);
    }

    friend bool operator==(const ImageRGB8&, const ImageRGB8&) = default;

private:
    std::size_t index(int x, int y) const noexcept
    {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    int width_;
    int height_;
    std::vector<Rgb> pixels_;
};

/// One footprint-sized tile of texels, stored row-major with stride block_width(size).
struct BlockView {
    BlockSize size = BlockSize::k12x12;
    std::array<Rgb, kMaxBlockTexels> storage{};

    BlockView() = default;
    explicit BlockView(BlockSize footprint, Rgb fill = {});

    int width() const noexcept { return block_width(size); }
    int height() const noexcept { return block_height(size); }
    int texel_count() const noexcept { return block_texel_count(size); }

    Rgb& texel(int x, int y) noexcept { return storage[static_cast<std::size_t>(y * width() + x)]; }
    const Rgb& texel(int x, int y) const noexcept { return storage[static_cast<std::size_t>(y * width() + x)]; }

    std::span<Rgb> texels() noexcept { return std::span<Rgb>(storage).first(texel_count()); }
    std::span<const Rgb> texels() const noexcept { return std::span<const Rgb>(storage).first(texel_count()); }

    friend bool operator==(const BlockView& a, const BlockView& b) noexcept
    {
        if (a.size != b.size) {
            return false;
        }
        const auto ta = a.texels();
        const auto tb = b.texels();
        for (std::size_t i = 0; i < ta.size(); ++i) {
            if (ta[i] != tb[i]) {
                return false;
            }
        }
        return true;
    }
};

struct BlockGrid {
    int blocks_x = 0;
    int blocks_y = 0;

    std::size_t count() const noexcept
    {
        return static_cast<std::size_t>(blocks_x) * static_cast<std::size_t>(blocks_y);
    }

    friend constexpr bool operator==(const BlockGrid&, const BlockGrid&) = default;
};

/// Smallest multiple of the footprint that covers `extent`.
constexpr int padded_extent(int extent, int block) noexcept
{
    return (extent + block - 1) / block * block;
}

/**
 * Pads to the next multiple of the footprint in each dimension. New pixels
 * copy the nearest in-bounds pixel, clamping x and y independently.
 */
ImageRGB8 pad_to_blocks(const ImageRGB8& img, BlockSize size);

/// Throws DimensionError unless both dimensions are footprint multiples.
BlockGrid block_grid_dims(const ImageRGB8& img, BlockSize size);

/// Throws std::out_of_range for block indices outside the grid.
BlockView extract_block(const ImageRGB8& img, int bx, int by, BlockSize size);
void place_block(ImageRGB8& img, int bx, int by, const BlockView& block);

/// Top-left sub-image. Throws DimensionError if the crop exceeds the image.
ImageRGB8 crop(const ImageRGB8& img, int width, int height);

} // namespace astc_lite
