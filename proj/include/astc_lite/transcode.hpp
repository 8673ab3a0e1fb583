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
 * @brief Compress-then-decompress of single images and whole directory trees,
 *        used to build degraded copies of training datasets.
 */
#pragma once

#include "astc_lite/image.hpp"
#include "astc_lite/metrics.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace astc_lite {

struct RoundtripResult {
    ImageRGB8 decoded;
    std::size_t payload_bytes = 0;
    /// ssim is NaN for images below the 11x11 SSIM window.
    MetricsReport metrics;
};

RoundtripResult roundtrip(const ImageRGB8& img, BlockSize block, int threads = 1);

struct TranscodeRow {
    std::filesystem::path relative_path;
    bool ok = false;
    std::string error;
    /// Set when the failure was an I/O problem rather than bad content.
    bool io_error = false;
    MetricsReport metrics;
};

struct TranscodeSummary {
    std::vector<TranscodeRow> rows;
    int skipped = 0;
    int failed = 0;
    double mean_bpp = 0.0;
    double mean_psnr_db = 0.0;

    int succeeded() const noexcept { return static_cast<int>(rows.size()) - failed; }
};

/**
 * Walks `in_dir` recursively in sorted order and writes, for every .png/.ppm
 * file, its roundtripped version to the same relative path under `out_dir`.
 * Other files are skipped and counted. Per-file failures are recorded and the
 * walk continues. Means are over successful files only.
 *
 * Throws IoError if `in_dir` is not a directory or `out_dir` cannot be created.
 */
TranscodeSummary transcode_directory(const std::filesystem::path& in_dir, const std::filesystem::path& out_dir,
                                     BlockSize block, int threads = 1);

} // namespace astc_lite
