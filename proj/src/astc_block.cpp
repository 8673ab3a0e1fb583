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
 * @brief 128-bit block packing and unpacking.
 */

#include "astc_lite/astc_codec.hpp"

#include "astc_lite/errors.hpp"

#include <sstream>

namespace astc_lite {

namespace {

constexpr int kPartitionCountShift = 11;
constexpr int kCemShift = 13;
constexpr int kEndpointShift = 17;
constexpr int kEndpointBits = 5;

// Void-extent blocks have 0x1FC in the low nine bits.
constexpr std::uint32_t kVoidExtentMask = 0x1FF;
constexpr std::uint32_t kVoidExtentPattern = 0x1FC;

/// The block as two little-endian 64-bit halves.
class Bits128 {
public:
    Bits128() = default;

    explicit Bits128(const AstcBlock& block) noexcept
    {
        for (int i = 0; i < 8; ++i) {
            lo_ |= static_cast<std::uint64_t>(block.bytes[static_cast<std::size_t>(i)]) << (8 * i);
            hi_ |= static_cast<std::uint64_t>(block.bytes[static_cast<std::size_t>(i + 8)]) << (8 * i);
        }
    }

    AstcBlock to_block() const noexcept
    {
        AstcBlock block;
        for (int i = 0; i < 8; ++i) {
            block.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(lo_ >> (8 * i));
            block.bytes[static_cast<std::size_t>(i + 8)] = static_cast<std::uint8_t>(hi_ >> (8 * i));
        }
        return block;
    }

    bool bit(int pos) const noexcept
    {
        return pos < 64 ? ((lo_ >> pos) & 1U) != 0 : ((hi_ >> (pos - 64)) & 1U) != 0;
    }

    void set_bit(int pos) noexcept
    {
        if (pos < 64) {
            lo_ |= std::uint64_t{1} << pos;
        } else {
            hi_ |= std::uint64_t{1} << (pos - 64);
        }
    }

    // Fields never straddle bit 64 in this layout except through per-bit access.
    std::uint32_t read(int pos, int count) const noexcept
    {
        std::uint32_t value = 0;
        for (int i = 0; i < count; ++i) {
            value |= static_cast<std::uint32_t>(bit(pos + i)) << i;
        }
        return value;
    }

    void write(int pos, int count, std::uint32_t value) noexcept
    {
        for (int i = 0; i < count; ++i) {
            if ((value >> i) & 1U) {
                set_bit(pos + i);
            }
        }
    }

private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
};

std::string hex(std::uint32_t value)
{
    std::ostringstream os;
    os << "0x" << std::hex << value;
    return os.str();
}

} // namespace

AstcBlock pack_block(const QuantizedEndpoints& endpoints, const WeightGrid& weights)
{
    Bits128 bits;
    bits.write(0, 11, kBlockMode);
    bits.write(kPartitionCountShift, 2, 0);
    bits.write(kCemShift, 4, kColorEndpointMode);
    for (int i = 0; i < 6; ++i) {
        bits.write(kEndpointShift + kEndpointBits * i, kEndpointBits, endpoints.v[static_cast<std::size_t>(i)] & 0x1FU);
    }
    for (int k = 0; k < kGridCount; ++k) {
        const unsigned q = weights.q[static_cast<std::size_t>(k)] & 0x3U;
        if (q & 1U) {
            bits.set_bit(127 - 2 * k);
        }
        if (q & 2U) {
            bits.set_bit(126 - 2 * k);
        }
    }
    return bits.to_block();
}

QuantizedBlock unpack_block(const AstcBlock& block)
{
    const Bits128 bits(block);
    const std::uint32_t mode = bits.read(0, 11);
    if ((mode & kVoidExtentMask) == kVoidExtentPattern) {
        throw UnsupportedConfiguration("void-extent blocks are not supported");
    }
    if (mode != kBlockMode) {
        throw UnsupportedConfiguration("unsupported block mode " + hex(mode) + ", expected " + hex(kBlockMode));
    }
    const std::uint32_t partitions = bits.read(kPartitionCountShift, 2) + 1;
    if (partitions != 1) {
        throw UnsupportedConfiguration("unsupported partition count " + std::to_string(partitions));
    }
    const std::uint32_t cem = bits.read(kCemShift, 4);
    if (cem != kColorEndpointMode) {
        throw UnsupportedConfiguration("unsupported color endpoint mode " + std::to_string(cem));
    }

    QuantizedBlock out;
    for (int i = 0; i < 6; ++i) {
        out.endpoints.v[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(bits.read(kEndpointShift + kEndpointBits * i, kEndpointBits));
    }
    for (int k = 0; k < kGridCount; ++k) {
        const unsigned q = (bits.bit(127 - 2 * k) ? 1U : 0U) | (bits.bit(126 - 2 * k) ? 2U : 0U);
        out.weights.q[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(q);
    }
    return out;
}

} // namespace astc_lite
