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
 * @brief Encode throughput benchmark and the line-latency calculator.
 */
#pragma once

#include "astc_lite/image.hpp"

#include <span>

namespace astc_lite {

/// Published single-core encode time for a 2048x1024 frame on an ARM
/// Cortex-A76 with NEON, for printing beside local measurements.
inline constexpr double kReferenceMsPerFrame12x12 = 5.8;
inline constexpr double kReferenceMsPerFrame8x8 = 7.0;

inline constexpr int kMinBenchIterations = 3;

struct BenchReport {
    double ms_per_frame = 0.0;
    double stddev_ms = 0.0;
    int frames = 0;
    int iterations = 0;
    int threads = 1;
    BlockSize block = BlockSize::k12x12;
    double bpp = 0.0;
};

/**
 * Encodes every frame once as warmup (discarded), then `iterations` more
 * times, timing each frame encode individually. Images must already be in
 * memory; no I/O is timed. The mean and standard deviation are taken over
 * all frames * iterations samples; bpp is pooled over all frames.
 *
 * Throws std::invalid_argument for an empty frame list or fewer than
 * kMinBenchIterations iterations.
 */
BenchReport run_bench(std::span<const ImageRGB8> frames, BlockSize block, int iterations, int threads = 1);

/**
 * Pipelined chunk model: the encoder and the link each spend time
 * proportional to the number of image lines in a chunk, and a chunk is done
 * when it has been encoded and transmitted. Successive chunks overlap, so the
 * latency of the pipeline is the time for one chunk.
 *
 *     encode_ms(L)   = L / height * encode_ms_per_frame
 *     transmit_ms(L) = L * width * bpp / (link_mbits_per_s * 1000)
 *
 * An infinite link rate removes the transmit term; a zero encode time removes
 * the encode term. At least one term must be non-zero.
 */
struct LatencyModel {
    double encode_ms_per_frame = 0.0;
    double link_mbits_per_s = 0.0;
    double bpp = 0.0;
    int width = 0;
    int height = 0;
    double budget_ms = 0.0;
};

struct LatencyBreakdown {
    double lines = 0.0;
    double encode_ms_per_line = 0.0;
    double transmit_ms_per_line = 0.0;
    /// Encode and transmit time of a chunk of `lines` lines.
    double encode_ms = 0.0;
    double transmit_ms = 0.0;
    /// The budget does not cover even one full line.
    bool below_one_line = false;
};

/// Largest chunk height L with encode_ms(L) + transmit_ms(L) <= budget_ms.
/// Throws std::invalid_argument for a model outside its domain.
LatencyBreakdown latency_lines(const LatencyModel& model);

} // namespace astc_lite
