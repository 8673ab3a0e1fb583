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
 * @brief PNG (libpng) and binary PPM readers and writers.
 */

#include "astc_lite/container_io.hpp"

#include "astc_lite/errors.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <csetjmp>
#include <cstring>
#include <limits>
#include <string>

namespace astc_lite {

namespace {

std::string lower_extension(const std::filesystem::path& path)
{
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext;
}

// PPM -----------------------------------------------------------------------

class PpmHeaderReader {
public:
    explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    long next_int()
    {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
            throw FormatError("malformed PPM header");
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw FormatError("PPM header value out of range");
            }
            ++pos_;
        }
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset()
    {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError("malformed PPM header");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments()
    {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;
};

// PNG -----------------------------------------------------------------------

struct PngReadSource {
    std::span<const std::uint8_t> bytes;
    std::size_t offset = 0;
};

void png_read_callback(png_structp png, png_bytep out, png_size_t count)
{
    auto* src = static_cast<PngReadSource*>(png_get_io_ptr(png));
    if (src->offset + count > src->bytes.size()) {
        png_error(png, "unexpected end of PNG data");
    }
    std::memcpy(out, src->bytes.data() + src->offset, count);
    src->offset += count;
}

void png_write_callback(png_structp png, png_bytep data, png_size_t count)
{
    auto* dst = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
    dst->insert(dst->end(), data, data + count);
}

void png_flush_callback(png_structp) {}

[[noreturn]] void png_error_callback(png_structp png, png_const_charp message)
{
    auto* text = static_cast<std::string*>(png_get_error_ptr(png));
    if (text != nullptr) {
        *text = message;
    }
    png_longjmp(png, 1);
}

void png_warning_callback(png_structp, png_const_charp) {}

} // namespace

RasterFormat raster_format_for(const std::filesystem::path& path)
{
    const std::string ext = lower_extension(path);
    if (ext == ".png") {
        return RasterFormat::kPng;
    }
    if (ext == ".ppm") {
        return RasterFormat::kPpm;
    }
    throw UnsupportedImageFormat("unsupported image extension '" + path.extension().string() +
                                 "' (expected .png or .ppm)");
}

bool has_raster_extension(const std::filesystem::path& path) noexcept
{
    const std::string ext = lower_extension(path);
    return ext == ".png" || ext == ".ppm";
}

std::vector<std::uint8_t> encode_ppm(const ImageRGB8& img)
{
    const std::string header =
        "P6\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + img.pixel_count() * 3);
    for (const Rgb& p : img.pixels()) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

ImageRGB8 decode_ppm(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        throw UnsupportedImageFormat("not a binary PPM (P6) file");
    }
    PpmHeaderReader reader(bytes);
    const long width = reader.next_int();
    const long height = reader.next_int();
    const long maxval = reader.next_int();
    if (width < 1 || height < 1) {
        throw FormatError("PPM dimensions must be positive");
    }
    if (maxval > 255) {
        throw UnsupportedImageFormat("16-bit PPM samples are not supported (maxval " + std::to_string(maxval) + ")");
    }
    if (maxval != 255) {
        throw UnsupportedImageFormat("only PPM maxval 255 is supported (maxval " + std::to_string(maxval) + ")");
    }

    const std::size_t offset = reader.raster_offset();
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - std::min(offset, bytes.size()) < count * 3) {
        throw TruncatedDataError("PPM raster truncated");
    }
    std::vector<Rgb> pixels(count);
    const std::uint8_t* src = bytes.data() + offset;
    for (std::size_t i = 0; i < count; ++i) {
        pixels[i] = {src[3 * i], src[3 * i + 1], src[3 * i + 2]};
    }
    return ImageRGB8(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

ImageRGB8 decode_png(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < 8 || png_sig_cmp(bytes.data(), 0, 8) != 0) {
        throw UnsupportedImageFormat("not a PNG file");
    }

    std::string error;
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, &error, png_error_callback, png_warning_callback);
    if (png == nullptr) {
        throw Error("libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw Error("libpng initialisation failed");
    }

    PngReadSource source{bytes, 0};
    std::vector<Rgb> pixels;
    std::vector<png_bytep> rows;
    png_uint_32 width = 0;
    png_uint_32 height = 0;
    volatile bool sixteen_bit = false;

    // No C++ objects with non-trivial destructors may be created between
    // setjmp and a potential longjmp.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        if (sixteen_bit) {
            throw UnsupportedImageFormat("16-bit PNG samples are not supported");
        }
        throw FormatError("invalid PNG: " + error);
    }

    png_set_read_fn(png, &source, png_read_callback);
    png_read_info(png, info);
    width = png_get_image_width(png, info);
    height = png_get_image_height(png, info);
    const int bit_depth = png_get_bit_depth(png, info);
    const int color_type = png_get_color_type(png, info);
    if (bit_depth == 16) {
        sixteen_bit = true;
        png_longjmp(png, 1);
    }
    if (width > static_cast<png_uint_32>(std::numeric_limits<int>::max()) ||
        height > static_cast<png_uint_32>(std::numeric_limits<int>::max())) {
        png_error(png, "image too large");
    }

    if (color_type == PNG_COLOR_TYPE_PALETTE) {
        png_set_palette_to_rgb(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) {
        png_set_expand_gray_1_2_4_to_8(png);
    }
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA) {
        png_set_gray_to_rgb(png);
    }
    png_set_strip_alpha(png);
    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    if (png_get_rowbytes(png, info) != static_cast<png_size_t>(width) * 3) {
        png_error(png, "unexpected row layout after conversion");
    }

    pixels.resize(static_cast<std::size_t>(width) * height);
    rows.resize(height);
    for (png_uint_32 y = 0; y < height; ++y) {
        rows[y] = reinterpret_cast<png_bytep>(pixels.data() + static_cast<std::size_t>(y) * width);
    }
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    return ImageRGB8(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> encode_png(const ImageRGB8& img)
{
    std::string error;
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, &error, png_error_callback, png_warning_callback);
    if (png == nullptr) {
        throw Error("libpng initialisation failed");
    }
    png_infop info = png_create_info_struct(png);
    if (info == nullptr) {
        png_destroy_write_struct(&png, nullptr);
        throw Error("libpng initialisation failed");
    }

    std::vector<std::uint8_t> out;
    std::vector<png_bytep> rows(static_cast<std::size_t>(img.height()));
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw FormatError("PNG encoding failed: " + error);
    }

    png_set_write_fn(png, &out, png_write_callback, png_flush_callback);
    png_set_IHDR(png, info, static_cast<png_uint_32>(img.width()), static_cast<png_uint_32>(img.height()), 8,
                 PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    for (int y = 0; y < img.height(); ++y) {
        // libpng takes non-const row pointers but does not modify them when writing.
        rows[static_cast<std::size_t>(y)] =
            const_cast<png_bytep>(reinterpret_cast<const png_byte*>(img.row(y).data()));
    }
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    return out;
}

ImageRGB8 read_image(const std::filesystem::path& path)
{
    const std::vector<std::uint8_t> bytes = read_file(path);
    if (bytes.size() >= 8 && png_sig_cmp(bytes.data(), 0, 8) == 0) {
        return decode_png(bytes);
    }
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
        return decode_ppm(bytes);
    }
    throw UnsupportedImageFormat("'" + path.string() + "' is neither a PNG nor a binary PPM file");
}

void write_image(const std::filesystem::path& path, const ImageRGB8& img)
{
    switch (raster_format_for(path)) {
    case RasterFormat::kPng:
        write_file(path, encode_png(img));
        break;
    case RasterFormat::kPpm:
        write_file(path, encode_ppm(img));
        break;
    }
}

} // namespace astc_lite
