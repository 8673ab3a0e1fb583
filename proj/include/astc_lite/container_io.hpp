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
 * @brief The .astc container and raster image files.
 *
 * .astc layout (16-byte header, then raster-order blocks):
 *
 *     0..3    magic 13 AB A1 5C
 *     4,5,6   block x, y, z (bytes)
 *     7..9    image x, 24-bit little endian
 *     10..12  image y
 *     13..15  image z
 *
 * Image dimensions are the original, unpadded ones.
 */
#pragma once

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/image.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace astc_lite {

inline constexpr std::array<std::uint8_t, 4> kAstcMagic{0x13, 0xAB, 0xA1, 0x5C};
inline constexpr std::size_t kAstcHeaderBytes = 16;

struct AstcFile {
    BlockSize block = BlockSize::k12x12;
    int width = 0;
    int height = 0;
    std::vector<AstcBlock> blocks;

    friend bool operator==(const AstcFile&, const AstcFile&) = default;
};

AstcFile to_astc_file(const EncodedImage& encoded);

/// Throws DimensionError when the block count does not match the dimensions.
std::vector<std::uint8_t> serialize_astc(const AstcFile& file);

/// Throws BadMagicError, UnsupportedFootprintError or TruncatedDataError.
AstcFile parse_astc(std::span<const std::uint8_t> bytes);

void write_astc(const std::filesystem::path& path, const AstcFile& file);
AstcFile read_astc(const std::filesystem::path& path);

enum class RasterFormat {
    kPng,
    kPpm,
};

/// Chosen by extension (.png / .ppm, case-insensitive). Throws UnsupportedImageFormat.
RasterFormat raster_format_for(const std::filesystem::path& path);

bool has_raster_extension(const std::filesystem::path& path) noexcept;

/// Binary PPM (P6, maxval 255).
std::vector<std::uint8_t> encode_ppm(const ImageRGB8& img);
ImageRGB8 decode_ppm(std::span<const std::uint8_t> bytes);

/// PNG via libpng. Alpha is dropped, gray and palette images expand to RGB,
/// 16-bit samples are rejected.
std::vector<std::uint8_t> encode_png(const ImageRGB8& img);
ImageRGB8 decode_png(std::span<const std::uint8_t> bytes);

/// Detects PNG or PPM from the file signature.
ImageRGB8 read_image(const std::filesystem::path& path);

/// Format chosen by extension.
void write_image(const std::filesystem::path& path, const ImageRGB8& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

} // namespace astc_lite
