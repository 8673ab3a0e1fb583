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
 * @brief Rate and distortion measurements.
 *
 * PSNR is taken over the MSE of all interleaved RGB samples. SSIM uses the
 * original single-scale formulation on BT.601 luma: 11x11 Gaussian window
 * with sigma 1.5, K1 = 0.01, K2 = 0.03, L = 255, averaged over every window
 * position that fits entirely inside the image (no border handling).
 */
#pragma once

#include "astc_lite/image.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace astc_lite {

/// PSNR of identical images.
inline constexpr double kInfinitePsnr = std::numeric_limits<double>::infinity();

inline constexpr int kSsimWindow = 11;

struct MetricsReport {
    double psnr_db = 0.0;
    double ssim = 0.0;
    double bpp = 0.0;
};

inline bool is_infinite_psnr(double psnr_db) noexcept
{
    return std::isinf(psnr_db) && psnr_db > 0;
}

/// Mean squared error over all channels. Throws DimensionError on mismatch.
double mse(const ImageRGB8& ref, const ImageRGB8& dist);

/// 10 log10(255^2 / MSE); kInfinitePsnr when MSE is zero.
double psnr(const ImageRGB8& ref, const ImageRGB8& dist);

/// Throws DimensionError on mismatch or when either side is below 11x11.
double ssim(const ImageRGB8& ref, const ImageRGB8& dist);

/// 8 * payload_bytes / (width * height). Throws DimensionError for empty images.
double bpp(std::size_t payload_bytes, int width, int height);

} // namespace astc_lite
