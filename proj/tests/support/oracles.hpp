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
 * @brief Test-only oracles and generators.
 *
 * Everything here is deliberately written without calling the library code it
 * is used to check: brute-force sweeps, direct per-window sums, naive loops.
 */
#pragma once

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/container_io.hpp"
#include "astc_lite/image.hpp"

#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace astc_lite::test {

// Generators ----------------------------------------------------------------

ImageRGB8 random_image(std::mt19937& rng, int width, int height);
ImageRGB8 constant_image(int width, int height, Rgb color);

/// Smooth gradients plus mild noise; a stand-in for photographic content.
ImageRGB8 smooth_image(std::mt19937& rng, int width, int height);

enum class BlockKind {
    kNoise,
    kConstant,
    kTwoColor,
    kFullRange,
    kSingleOutlier,
    kGradient,
    kLineColors,
};

/// Random block of the given kind.
BlockView random_block(std::mt19937& rng, BlockSize size, BlockKind kind);
BlockView random_block(std::mt19937& rng, BlockSize size);

QuantizedBlock random_quantized_block(std::mt19937& rng);

// Oracles -------------------------------------------------------------------

/// Endpoint selection written as sort-based min/max with explicit division.
EndpointPair scalar_select_endpoints(const std::vector<Rgb>& texels);

/// argmin over t in {0, 1/4095, ..., 1} of |p - (e0 + t (e1 - e0))|^2.
double sweep_projection(Rgb p, const EndpointPair& ep);

/// Bilinear sample of a row-major grid at real coordinates, written directly
/// from the four-neighbour formula.
double bilinear_sample(const std::vector<double>& src, int width, int height, double x, double y);

/// SSIM evaluated window by window with explicit Gaussian weights and no
/// separable filtering.
double brute_force_ssim(const ImageRGB8& a, const ImageRGB8& b);

/// Every footprint block replaced by its mean color (rounded).
ImageRGB8 block_mean_baseline(const ImageRGB8& img, BlockSize size);

// Reference decoder ---------------------------------------------------------

struct ReferenceDecoder {
    /// Decodes `astc_path` with the external reference decoder. Returns
    /// nullopt when it is not installed.
    static std::optional<ImageRGB8> decode(const std::filesystem::path& astc_path, std::string* diagnostics = nullptr);
};

std::filesystem::path make_temp_dir(const std::string& tag);

} // namespace astc_lite::test
