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
 * @brief astc-lite command-line tool.
 *
 * Exit codes: 0 success, 1 usage, 2 I/O, 3 format or conformance.
 * Results go to stdout as one key=value record per line (or one JSON object
 * with --json); diagnostics go to stderr.
 */

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/bench.hpp"
#include "astc_lite/container_io.hpp"
#include "astc_lite/errors.hpp"
#include "astc_lite/metrics.hpp"
#include "astc_lite/transcode.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace astc_lite;

namespace {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitFormat = 3,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v, int precision = 6)
{
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (std::isnan(v)) {
        return "n/a";
    }
    std::ostringstream os;
    os.precision(precision);
    os << v;
    return os.str();
}

json json_number(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

class Record {
public:
    explicit Record(std::string kind) : kind_(std::move(kind)) { object_["command"] = kind_; }

    Record& add(const std::string& key, const std::string& value)
    {
        text_ += " " + key + "=" + value;
        object_[key] = value;
        return *this;
    }

    Record& add(const std::string& key, double value, int precision = 6)
    {
        text_ += " " + key + "=" + format_double(value, precision);
        object_[key] = json_number(value);
        return *this;
    }

    Record& add(const std::string& key, long long value)
    {
        text_ += " " + key + "=" + std::to_string(value);
        object_[key] = value;
        return *this;
    }

    Record& add(const std::string& key, int value) { return add(key, static_cast<long long>(value)); }
    Record& add(const std::string& key, std::size_t value) { return add(key, static_cast<long long>(value)); }

    void print_text() const { std::cout << kind_ << text_ << '\n'; }
    const json& object() const { return object_; }

private:
    std::string kind_;
    std::string text_;
    json object_;
};

BlockSize block_from_flag(const std::string& text)
{
    if (auto b = parse_block_size(text)) {
        return *b;
    }
    throw UsageError("--block must be 12x12 or 8x8, got '" + text + "'");
}

void check_threads(int threads)
{
    if (threads < 1) {
        throw UsageError("--threads must be at least 1");
    }
}

void emit(const Record& record, bool as_json)
{
    if (as_json) {
        std::cout << record.object().dump() << '\n';
    } else {
        record.print_text();
    }
}

std::vector<fs::path> collect_images(const fs::path& root)
{
    std::vector<fs::path> out;
    if (fs::is_regular_file(root)) {
        out.push_back(root);
        return out;
    }
    if (!fs::is_directory(root)) {
        throw IoError("'" + root.string() + "' does not exist");
    }
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (entry.is_regular_file() && has_raster_extension(entry.path())) {
            out.push_back(entry.path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Commands ------------------------------------------------------------------

struct CodecOptions {
    std::string block = "12x12";
    int threads = 1;
    bool json = false;
};

int cmd_encode(const std::string& in, const std::string& out, const CodecOptions& opt)
{
    const BlockSize block = block_from_flag(opt.block);
    check_threads(opt.threads);
    const ImageRGB8 img = read_image(in);
    const EncodedImage encoded = encode_image(img, EncoderConfig{block}, opt.threads);
    write_astc(out, to_astc_file(encoded));

    Record r("encode");
    r.add("input", in)
        .add("output", out)
        .add("width", img.width())
        .add("height", img.height())
        .add("block", std::string(to_string(block)))
        .add("blocks", encoded.blocks.size())
        .add("payload_bytes", encoded.stats.payload_bytes)
        .add("bpp", encoded.stats.bpp)
        .add("encode_ms", encoded.stats.encode_ms, 4)
        .add("threads", opt.threads);
    emit(r, opt.json);
    return kExitOk;
}

int cmd_decode(const std::string& in, const std::string& out, const CodecOptions& opt)
{
    check_threads(opt.threads);
    raster_format_for(out);
    const AstcFile file = read_astc(in);
    const auto start = std::chrono::steady_clock::now();
    const ImageRGB8 img = decode_image(file.blocks, file.block, file.width, file.height, opt.threads);
    const auto stop = std::chrono::steady_clock::now();
    write_image(out, img);

    Record r("decode");
    r.add("input", in)
        .add("output", out)
        .add("width", img.width())
        .add("height", img.height())
        .add("block", std::string(to_string(file.block)))
        .add("decode_ms", std::chrono::duration<double, std::milli>(stop - start).count(), 4);
    emit(r, opt.json);
    return kExitOk;
}

int cmd_roundtrip(const std::string& in, const std::string& out, const CodecOptions& opt)
{
    const BlockSize block = block_from_flag(opt.block);
    check_threads(opt.threads);
    raster_format_for(out);
    const ImageRGB8 img = read_image(in);
    const RoundtripResult result = roundtrip(img, block, opt.threads);
    write_image(out, result.decoded);

    Record r("roundtrip");
    r.add("input", in)
        .add("output", out)
        .add("width", img.width())
        .add("height", img.height())
        .add("block", std::string(to_string(block)))
        .add("payload_bytes", result.payload_bytes)
        .add("bpp", result.metrics.bpp)
        .add("psnr_db", result.metrics.psnr_db, 5)
        .add("ssim", result.metrics.ssim, 6);
    emit(r, opt.json);
    return kExitOk;
}

int cmd_transcode(const std::string& in_dir, const std::string& out_dir, const CodecOptions& opt)
{
    const BlockSize block = block_from_flag(opt.block);
    check_threads(opt.threads);
    const TranscodeSummary summary = transcode_directory(in_dir, out_dir, block, opt.threads);

    json rows = json::array();
    for (const TranscodeRow& row : summary.rows) {
        if (row.ok) {
            Record r("file");
            r.add("path", row.relative_path.generic_string())
                .add("psnr_db", row.metrics.psnr_db, 5)
                .add("ssim", row.metrics.ssim, 6)
                .add("bpp", row.metrics.bpp);
            if (opt.json) {
                rows.push_back(r.object());
            } else {
                r.print_text();
            }
        } else {
            std::cerr << "error: " << row.relative_path.generic_string() << ": " << row.error << '\n';
            if (opt.json) {
                rows.push_back({{"command", "file"}, {"path", row.relative_path.generic_string()}, {"error", row.error}});
            }
        }
    }
    if (summary.skipped > 0) {
        std::cerr << "warning: skipped " << summary.skipped << " non-image file(s)\n";
    }
    if (summary.rows.empty()) {
        std::cerr << "warning: no images found in '" << in_dir << "'\n";
    }

    Record total("transcode");
    total.add("files", summary.rows.size())
        .add("ok", summary.succeeded())
        .add("failed", summary.failed)
        .add("skipped", summary.skipped)
        .add("block", std::string(to_string(block)))
        .add("mean_bpp", summary.mean_bpp)
        .add("mean_psnr_db", summary.mean_psnr_db, 5);
    if (opt.json) {
        json obj = total.object();
        obj["rows"] = rows;
        std::cout << obj.dump() << '\n';
    } else {
        total.print_text();
    }

    if (summary.failed == 0) {
        return kExitOk;
    }
    const bool format_failure = std::any_of(summary.rows.begin(), summary.rows.end(),
                                            [](const TranscodeRow& r) { return !r.ok && !r.io_error; });
    return format_failure ? kExitFormat : kExitIo;
}

int cmd_metrics(const std::string& ref_path, const std::string& dist_path, bool as_json)
{
    const ImageRGB8 ref = read_image(ref_path);
    const ImageRGB8 dist = read_image(dist_path);
    const double p = psnr(ref, dist);
    const double s = (ref.width() >= kSsimWindow && ref.height() >= kSsimWindow)
                         ? ssim(ref, dist)
                         : std::numeric_limits<double>::quiet_NaN();
    Record r("metrics");
    r.add("reference", ref_path)
        .add("distorted", dist_path)
        .add("psnr_db", p, 5)
        .add("ssim", s, 6)
        .add("mse", mse(ref, dist));
    emit(r, as_json);
    return kExitOk;
}

struct BenchOptions {
    std::string block = "12x12";
    int iterations = 10;
    int threads = 1;
    bool io_timing = false;
    bool json = false;
};

int cmd_bench(const std::string& path, const BenchOptions& opt)
{
    const BlockSize block = block_from_flag(opt.block);
    check_threads(opt.threads);
    if (opt.iterations < kMinBenchIterations) {
        throw UsageError("--iters must be at least " + std::to_string(kMinBenchIterations));
    }

    const auto load_start = std::chrono::steady_clock::now();
    std::vector<ImageRGB8> frames;
    for (const fs::path& p : collect_images(path)) {
        frames.push_back(read_image(p));
    }
    const auto load_stop = std::chrono::steady_clock::now();
    if (frames.empty()) {
        throw IoError("no images found in '" + path + "'");
    }

    const BenchReport report = run_bench(frames, block, opt.iterations, opt.threads);
    const double reference = block == BlockSize::k12x12 ? kReferenceMsPerFrame12x12 : kReferenceMsPerFrame8x8;

    Record r("bench");
    r.add("frames", report.frames)
        .add("width", frames.front().width())
        .add("height", frames.front().height())
        .add("block", std::string(to_string(report.block)))
        .add("iterations", report.iterations)
        .add("threads", report.threads)
        .add("ms_per_frame", report.ms_per_frame, 4)
        .add("stddev_ms", report.stddev_ms, 4)
        .add("bpp", report.bpp)
        .add("reference_ms_per_frame", reference, 3);
    if (opt.io_timing) {
        r.add("load_ms", std::chrono::duration<double, std::milli>(load_stop - load_start).count(), 4);
    }
    emit(r, opt.json);
    if (!opt.json) {
        std::cout << "reference: " << format_double(reference, 3)
                  << " ms/frame for 2048x1024 on one ARM Cortex-A76 core with NEON; measured "
                  << format_double(report.ms_per_frame, 4) << " ms/frame here\n";
    }
    return kExitOk;
}

struct LatencyOptions {
    double encode_ms = kReferenceMsPerFrame12x12;
    double link_mbps = 500.0;
    double bpp = 128.0 / 144.0;
    int width = 2048;
    int height = 1024;
    double budget_ms = 1.0;
    bool json = false;
};

int cmd_latency(const LatencyOptions& opt)
{
    LatencyModel model{opt.encode_ms, opt.link_mbps, opt.bpp, opt.width, opt.height, opt.budget_ms};
    LatencyBreakdown result;
    try {
        result = latency_lines(model);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    Record r("latency");
    r.add("lines", result.lines, 5)
        .add("encode_ms", result.encode_ms, 5)
        .add("transmit_ms", result.transmit_ms, 5)
        .add("encode_ms_per_line", result.encode_ms_per_line, 6)
        .add("transmit_ms_per_line", result.transmit_ms_per_line, 6)
        .add("budget_ms", opt.budget_ms)
        .add("link_mbits_per_s", opt.link_mbps)
        .add("bpp", opt.bpp)
        .add("width", opt.width)
        .add("height", opt.height)
        .add("encode_ms_per_frame", opt.encode_ms);
    emit(r, opt.json);
    if (result.below_one_line) {
        std::cerr << "warning: the budget does not cover a single line (" << format_double(result.lines, 4)
                  << " lines)\n";
    }
    if (!opt.json) {
        std::cout << "context: published figures for 2048x1024 at 0.89 bpp, 5.8 ms/frame, 1 ms budget are "
                     "145 lines (500 Mbit/s) and 3.2 lines (2 Mbit/s); they are not reproduced by this "
                     "pipelined model and are shown unverified\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"astc-lite: fixed-rate single-configuration ASTC encoder/decoder"};
    app.require_subcommand(1);

    CodecOptions codec;
    std::string in_path;
    std::string out_path;

    auto add_codec_flags = [&](CLI::App* sub, bool with_block) {
        if (with_block) {
            sub->add_option("--block", codec.block, "Block footprint: 12x12 or 8x8")->capture_default_str();
        }
        sub->add_option("--threads", codec.threads, "Worker threads")->capture_default_str();
        sub->add_flag("--json", codec.json, "Emit one JSON object instead of text records");
    };

    auto* encode = app.add_subcommand("encode", "Encode a PNG/PPM image to .astc");
    encode->add_option("input", in_path, "Input image (.png or .ppm)")->required();
    encode->add_option("output", out_path, "Output .astc file")->required();
    add_codec_flags(encode, true);

    auto* decode = app.add_subcommand("decode", "Decode an .astc file to PNG/PPM (format by extension)");
    decode->add_option("input", in_path, "Input .astc file")->required();
    decode->add_option("output", out_path, "Output image (.png or .ppm)")->required();
    add_codec_flags(decode, false);

    auto* rt = app.add_subcommand("roundtrip", "Encode and decode in memory, write the result, print metrics");
    rt->add_option("input", in_path, "Input image")->required();
    rt->add_option("output", out_path, "Output image (.png or .ppm)")->required();
    add_codec_flags(rt, true);

    auto* transcode = app.add_subcommand("transcode", "Roundtrip every image of a directory tree");
    transcode->add_option("input_dir", in_path, "Source directory")->required();
    transcode->add_option("output_dir", out_path, "Destination directory (mirrors the source tree)")->required();
    add_codec_flags(transcode, true);

    bool metrics_json = false;
    auto* metrics = app.add_subcommand("metrics", "PSNR and SSIM between two images");
    metrics->add_option("reference", in_path, "Reference image")->required();
    metrics->add_option("distorted", out_path, "Distorted image")->required();
    metrics->add_flag("--json", metrics_json, "Emit JSON");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "Time pure encode of pre-loaded images");
    bench->add_option("path", in_path, "Image file or directory")->required();
    bench->add_option("--block", bench_opt.block, "Block footprint: 12x12 or 8x8")->capture_default_str();
    bench->add_option("--iters", bench_opt.iterations, "Timed iterations (after one warmup)")->capture_default_str();
    bench->add_option("--threads", bench_opt.threads, "Worker threads")->capture_default_str();
    bench->add_flag("--io-timing", bench_opt.io_timing, "Also report image loading time");
    bench->add_flag("--json", bench_opt.json, "Emit JSON");

    LatencyOptions lat;
    auto* latency = app.add_subcommand("latency", "Chunk height that fits an encode+transmit latency budget");
    latency->add_option("--encode-ms", lat.encode_ms, "Encode time per frame (ms)")->capture_default_str();
    latency->add_option("--link-mbps", lat.link_mbps, "Link rate in Mbit/s (inf for an ideal link)")
        ->capture_default_str();
    latency->add_option("--bpp", lat.bpp, "Bits per pixel")->capture_default_str();
    latency->add_option("--width", lat.width, "Frame width")->capture_default_str();
    latency->add_option("--height", lat.height, "Frame height")->capture_default_str();
    latency->add_option("--budget-ms", lat.budget_ms, "Latency budget (ms)")->capture_default_str();
    latency->add_flag("--json", lat.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*encode) {
            return cmd_encode(in_path, out_path, codec);
        }
        if (*decode) {
            return cmd_decode(in_path, out_path, codec);
        }
        if (*rt) {
            return cmd_roundtrip(in_path, out_path, codec);
        }
        if (*transcode) {
            return cmd_transcode(in_path, out_path, codec);
        }
        if (*metrics) {
            return cmd_metrics(in_path, out_path, metrics_json);
        }
        if (*bench) {
            return cmd_bench(in_path, bench_opt);
        }
        if (*latency) {
            return cmd_latency(lat);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFormat;
    }
    return kExitUsage;
}
