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

#include "astc_lite/transcode.hpp"

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/container_io.hpp"
#include "astc_lite/errors.hpp"

#include <algorithm>
#include <limits>
#include <system_error>

namespace astc_lite {

namespace fs = std::filesystem;

RoundtripResult roundtrip(const ImageRGB8& img, BlockSize block, int threads)
{
    const EncodedImage encoded = encode_image(img, EncoderConfig{block}, threads);
    ImageRGB8 decoded = decode_image(encoded, threads);

    MetricsReport metrics;
    metrics.psnr_db = psnr(img, decoded);
    metrics.ssim = (img.width() >= kSsimWindow && img.height() >= kSsimWindow)
                       ? ssim(img, decoded)
                       : std::numeric_limits<double>::quiet_NaN();
    metrics.bpp = encoded.stats.bpp;
    return {std::move(decoded), encoded.stats.payload_bytes, metrics};
}

TranscodeSummary transcode_directory(const fs::path& in_dir, const fs::path& out_dir, BlockSize block, int threads)
{
    std::error_code ec;
    if (!fs::is_directory(in_dir, ec)) {
        throw IoError("'" + in_dir.string() + "' is not a directory");
    }
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
    }

    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(in_dir, ec); !ec && it != fs::recursive_directory_iterator();
         it.increment(ec)) {
        if (it->is_regular_file()) {
            files.push_back(fs::relative(it->path(), in_dir));
        }
    }
    if (ec) {
        throw IoError("cannot walk '" + in_dir.string() + "': " + ec.message());
    }
    std::sort(files.begin(), files.end());

    TranscodeSummary summary;
    double bpp_sum = 0.0;
    double psnr_sum = 0.0;
    for (const fs::path& rel : files) {
        if (!has_raster_extension(rel)) {
            ++summary.skipped;
            continue;
        }
        TranscodeRow row;
        row.relative_path = rel;
        try {
            const ImageRGB8 img = read_image(in_dir / rel);
            const RoundtripResult result = roundtrip(img, block, threads);
            const fs::path target = out_dir / rel;
            fs::create_directories(target.parent_path());
            write_image(target, result.decoded);
            row.metrics = result.metrics;
            row.ok = true;
            bpp_sum += row.metrics.bpp;
            psnr_sum += row.metrics.psnr_db;
        } catch (const IoError& e) {
            row.error = e.what();
            row.io_error = true;
        } catch (const fs::filesystem_error& e) {
            row.error = e.what();
            row.io_error = true;
        } catch (const Error& e) {
            row.error = e.what();
        }
        if (!row.ok) {
            ++summary.failed;
        }
        summary.rows.push_back(std::move(row));
    }

    const int ok = summary.succeeded();
    if (ok > 0) {
        summary.mean_bpp = bpp_sum / ok;
        summary.mean_psnr_db = psnr_sum / ok;
    }
    return summary;
}

} // namespace astc_lite
