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

#include "astc_lite/container_io.hpp"

#include "astc_lite/errors.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>
#include <string>

namespace astc_lite {

namespace {

constexpr int kMaxDimension = (1 << 24) - 1;

void put_u24(std::vector<std::uint8_t>& out, std::size_t offset, std::uint32_t value)
{
    out[offset] = static_cast<std::uint8_t>(value);
    out[offset + 1] = static_cast<std::uint8_t>(value >> 8);
    out[offset + 2] = static_cast<std::uint8_t>(value >> 16);
}

std::uint32_t get_u24(std::span<const std::uint8_t> bytes, std::size_t offset)
{
    return static_cast<std::uint32_t>(bytes[offset]) | (static_cast<std::uint32_t>(bytes[offset + 1]) << 8) |
           (static_cast<std::uint32_t>(bytes[offset + 2]) << 16);
}

} // namespace

AstcFile to_astc_file(const EncodedImage& encoded)
{
    return {encoded.block, encoded.width, encoded.height, encoded.blocks};
}

std::vector<std::uint8_t> serialize_astc(const AstcFile& file)
{
    if (file.width < 1 || file.height < 1 || file.width > kMaxDimension || file.height > kMaxDimension) {
        throw DimensionError("image dimensions do not fit the .astc header");
    }
    const std::size_t expected = payload_bytes_for(file.width, file.height, file.block) / kBlockBytes;
    if (file.blocks.size() != expected) {
        throw DimensionError("expected " + std::to_string(expected) + " blocks, got " +
                             std::to_string(file.blocks.size()));
    }

    std::vector<std::uint8_t> out(kAstcHeaderBytes + file.blocks.size() * kBlockBytes);
    std::copy(kAstcMagic.begin(), kAstcMagic.end(), out.begin());
    out[4] = static_cast<std::uint8_t>(block_width(file.block));
    out[5] = static_cast<std::uint8_t>(block_height(file.block));
    out[6] = 1;
    put_u24(out, 7, static_cast<std::uint32_t>(file.width));
    put_u24(out, 10, static_cast<std::uint32_t>(file.height));
    put_u24(out, 13, 1);
    auto dst = out.begin() + static_cast<std::ptrdiff_t>(kAstcHeaderBytes);
    for (const AstcBlock& b : file.blocks) {
        dst = std::copy(b.bytes.begin(), b.bytes.end(), dst);
    }
    return out;
}

AstcFile parse_astc(std::span<const std::uint8_t> bytes)
{
    if (bytes.size() < kAstcHeaderBytes) {
        throw TruncatedDataError("file too short for an .astc header (" + std::to_string(bytes.size()) + " bytes)");
    }
    if (!std::equal(kAstcMagic.begin(), kAstcMagic.end(), bytes.begin())) {
        throw BadMagicError("not an .astc file: bad magic number");
    }

    const int bx = bytes[4];
    const int by = bytes[5];
    const int bz = bytes[6];
    AstcFile file;
    if (bx == 12 && by == 12 && bz == 1) {
        file.block = BlockSize::k12x12;
    } else if (bx == 8 && by == 8 && bz == 1) {
        file.block = BlockSize::k8x8;
    } else {
        throw UnsupportedFootprintError("unsupported block footprint " + std::to_string(bx) + "x" +
                                        std::to_string(by) + "x" + std::to_string(bz));
    }

    file.width = static_cast<int>(get_u24(bytes, 7));
    file.height = static_cast<int>(get_u24(bytes, 10));
    const std::uint32_t depth = get_u24(bytes, 13);
    if (depth != 1) {
        throw UnsupportedFootprintError("3D images are not supported (z = " + std::to_string(depth) + ")");
    }
    if (file.width < 1 || file.height < 1) {
        throw FormatError("image dimensions in the .astc header must be positive");
    }

    const std::size_t payload = payload_bytes_for(file.width, file.height, file.block);
    const std::size_t available = bytes.size() - kAstcHeaderBytes;
    if (available < payload) {
        throw TruncatedDataError("payload truncated: expected " + std::to_string(payload) + " bytes, found " +
                                 std::to_string(available));
    }
    if (available > payload) {
        throw FormatError("unexpected " + std::to_string(available - payload) + " trailing bytes after payload");
    }

    file.blocks.resize(payload / kBlockBytes);
    for (std::size_t i = 0; i < file.blocks.size(); ++i) {
        std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(kAstcHeaderBytes + i * kBlockBytes), kBlockBytes,
                    file.blocks[i].bytes.begin());
    }
    return file;
}

void write_astc(const std::filesystem::path& path, const AstcFile& file)
{
    write_file(path, serialize_astc(file));
}

AstcFile read_astc(const std::filesystem::path& path)
{
    return parse_astc(read_file(path));
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path)
{
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
        throw IoError("'" + path.string() + "' is a directory");
    }
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    const std::streamoff size = in.tellg();
    if (size < 0) {
        throw IoError("cannot determine the size of '" + path.string() + "'");
    }
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
    in.seekg(0);
    in.read(reinterpret_cast<char*>(bytes.data()), size);
    if (in.gcount() != size) {
        throw IoError("error reading '" + path.string() + "'");
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("error writing '" + path.string() + "'");
    }
}

} // namespace astc_lite
