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

#include "astc_lite/bench.hpp"

#include "astc_lite/astc_codec.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace astc_lite {

BenchReport run_bench(std::span<const ImageRGB8> frames, BlockSize block, int iterations, int threads)
{
    if (frames.empty()) {
        throw std::invalid_argument("benchmark needs at least one image");
    }
    if (iterations < kMinBenchIterations) {
        throw std::invalid_argument("benchmark needs at least " + std::to_string(kMinBenchIterations) +
                                    " timed iterations, got " + std::to_string(iterations));
    }

    const EncoderConfig config{block};
    double payload_bits = 0.0;
    double pixels = 0.0;
    for (const ImageRGB8& frame : frames) {
        const EncodedImage warmup = encode_image(frame, config, threads);
        payload_bits += 8.0 * static_cast<double>(warmup.stats.payload_bytes);
        pixels += static_cast<double>(frame.width()) * frame.height();
    }

    std::vector<double> samples;
    samples.reserve(frames.size() * static_cast<std::size_t>(iterations));
    for (int it = 0; it < iterations; ++it) {
        for (const ImageRGB8& frame : frames) {
            const auto start = std::chrono::steady_clock::now();
            const EncodedImage encoded = encode_image(frame, config, threads);
            const auto stop = std::chrono::steady_clock::now();
            if (encoded.blocks.empty()) {
                throw std::logic_error("encoder produced no blocks");
            }
            samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
        }
    }

    double mean = 0.0;
    for (double s : samples) {
        mean += s;
    }
    mean /= static_cast<double>(samples.size());
    double var = 0.0;
    for (double s : samples) {
        var += (s - mean) * (s - mean);
    }
    var = samples.size() > 1 ? var / static_cast<double>(samples.size() - 1) : 0.0;

    BenchReport report;
    report.ms_per_frame = mean;
    report.stddev_ms = std::sqrt(var);
    report.frames = static_cast<int>(frames.size());
    report.iterations = iterations;
    report.threads = threads;
    report.block = block;
    report.bpp = payload_bits / pixels;
    return report;
}

LatencyBreakdown latency_lines(const LatencyModel& model)
{
    if (model.width < 1 || model.height < 1) {
        throw std::invalid_argument("latency model needs positive image dimensions");
    }
    if (!(model.budget_ms > 0.0) || !std::isfinite(model.budget_ms)) {
        throw std::invalid_argument("latency budget must be positive and finite");
    }
    if (!(model.bpp > 0.0) || !std::isfinite(model.bpp)) {
        throw std::invalid_argument("bpp must be positive and finite");
    }
    if (!(model.link_mbits_per_s > 0.0)) {
        throw std::invalid_argument("link rate must be positive (use infinity for an ideal link)");
    }
    if (!(model.encode_ms_per_frame >= 0.0) || !std::isfinite(model.encode_ms_per_frame)) {
        throw std::invalid_argument("encode time must be non-negative and finite");
    }

    LatencyBreakdown out;
    out.encode_ms_per_line = model.encode_ms_per_frame / model.height;
    out.transmit_ms_per_line = std::isinf(model.link_mbits_per_s)
                                   ? 0.0
                                   : model.width * model.bpp / (model.link_mbits_per_s * 1000.0);
    const double per_line = out.encode_ms_per_line + out.transmit_ms_per_line;
    if (per_line <= 0.0) {
        throw std::invalid_argument("latency model has neither encode nor transmit cost");
    }
    out.lines = model.budget_ms / per_line;
    out.encode_ms = out.lines * out.encode_ms_per_line;
    out.transmit_ms = out.lines * out.transmit_ms_per_line;
    out.below_one_line = out.lines < 1.0;
    return out;
}

} // namespace astc_lite
