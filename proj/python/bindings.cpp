// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The astc-lite Authors

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/bench.hpp"
#include "astc_lite/container_io.hpp"
#include "astc_lite/errors.hpp"
#include "astc_lite/metrics.hpp"
#include "astc_lite/transcode.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstring>
#include <string>

namespace py = pybind11;
using namespace astc_lite;

namespace {

using U8Array = py::array_t<std::uint8_t, py::array::c_style | py::array::forcecast>;

ImageRGB8 to_image(const U8Array& array)
{
    if (array.ndim() != 3 || array.shape(2) != 3) {
        throw DimensionError("expected an array of shape (height, width, 3)");
    }
    const auto h = static_cast<int>(array.shape(0));
    const auto w = static_cast<int>(array.shape(1));
    std::vector<Rgb> pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
    std::memcpy(pixels.data(), array.data(), pixels.size() * 3);
    return ImageRGB8(w, h, std::move(pixels));
}

U8Array to_array(const ImageRGB8& img)
{
    U8Array out({img.height(), img.width(), 3});
    std::memcpy(out.mutable_data(), img.pixels().data(), img.pixels().size() * 3);
    return out;
}

U8Array block_to_array(const BlockView& block)
{
    U8Array out({block.height(), block.width(), 3});
    std::memcpy(out.mutable_data(), block.storage.data(), static_cast<std::size_t>(block.texel_count()) * 3);
    return out;
}

BlockSize block_arg(const py::object& value)
{
    if (py::isinstance<BlockSize>(value)) {
        return value.cast<BlockSize>();
    }
    const auto parsed = parse_block_size(value.cast<std::string>());
    if (!parsed) {
        throw UnsupportedConfiguration("block size must be 12x12 or 8x8");
    }
    return *parsed;
}

AstcBlock block_from_bytes(const py::bytes& data)
{
    const std::string s = data;
    if (s.size() != kBlockBytes) {
        throw DimensionError("an ASTC block is exactly 16 bytes");
    }
    AstcBlock b;
    std::memcpy(b.bytes.data(), s.data(), kBlockBytes);
    return b;
}

std::vector<AstcBlock> blocks_from_bytes(const py::bytes& data)
{
    const std::string s = data;
    if (s.size() % kBlockBytes != 0) {
        throw DimensionError("payload length is not a multiple of 16 bytes");
    }
    std::vector<AstcBlock> blocks(s.size() / kBlockBytes);
    std::memcpy(blocks.data(), s.data(), s.size());
    return blocks;
}

py::bytes blocks_to_bytes(const std::vector<AstcBlock>& blocks)
{
    return py::bytes(reinterpret_cast<const char*>(blocks.data()), blocks.size() * kBlockBytes);
}

py::dict metrics_dict(const MetricsReport& m)
{
    py::dict d;
    d["psnr_db"] = m.psnr_db;
    d["ssim"] = m.ssim;
    d["bpp"] = m.bpp;
    return d;
}

EncodedImage encoded_from_file(const AstcFile& file)
{
    EncodedImage e;
    e.block = file.block;
    e.width = file.width;
    e.height = file.height;
    e.padded_width = static_cast<int>(padded_extent(file.width, block_width(file.block)));
    e.padded_height = static_cast<int>(padded_extent(file.height, block_height(file.block)));
    e.blocks = file.blocks;
    e.stats.payload_bytes = file.blocks.size() * kBlockBytes;
    e.stats.bpp = bpp(e.stats.payload_bytes, file.width, file.height);
    return e;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Fixed-rate ASTC encoder and decoder (12x12 / 8x8, 8x5 weight grid, CEM 8)";

    static py::exception<FormatError> format_error(m, "AstcFormatError", PyExc_ValueError);
    static py::exception<UnsupportedConfiguration> config_error(m, "UnsupportedConfigurationError",
                                                                PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const FormatError& e) {
            py::set_error(format_error, e.what());
        } catch (const UnsupportedConfiguration& e) {
            py::set_error(config_error, e.what());
        } catch (const DimensionError& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const IoError& e) {
            py::set_error(PyExc_OSError, e.what());
        }
    });

    py::enum_<BlockSize>(m, "BlockSize")
        .value("B12x12", BlockSize::k12x12)
        .value("B8x8", BlockSize::k8x8)
        .def_property_readonly("width", [](BlockSize s) { return block_width(s); })
        .def_property_readonly("height", [](BlockSize s) { return block_height(s); })
        .def("__str__", [](BlockSize s) { return std::string(to_string(s)); });

    py::class_<EncodedImage>(m, "EncodedImage")
        .def_readonly("block", &EncodedImage::block)
        .def_readonly("width", &EncodedImage::width)
        .def_readonly("height", &EncodedImage::height)
        .def_readonly("padded_width", &EncodedImage::padded_width)
        .def_readonly("padded_height", &EncodedImage::padded_height)
        .def_property_readonly("payload", [](const EncodedImage& e) { return blocks_to_bytes(e.blocks); })
        .def_property_readonly("block_count", [](const EncodedImage& e) { return e.blocks.size(); })
        .def_property_readonly("payload_bytes", [](const EncodedImage& e) { return e.stats.payload_bytes; })
        .def_property_readonly("bpp", [](const EncodedImage& e) { return e.stats.bpp; })
        .def_property_readonly("encode_ms", [](const EncodedImage& e) { return e.stats.encode_ms; })
        .def("__repr__", [](const EncodedImage& e) {
            return "<EncodedImage " + std::to_string(e.width) + "x" + std::to_string(e.height) + " block=" +
                   std::string(to_string(e.block)) + " blocks=" + std::to_string(e.blocks.size()) + ">";
        });

    m.def(
        "encode",
        [](const U8Array& image, const py::object& block, int threads) {
            const ImageRGB8 img = to_image(image);
            const EncoderConfig config{block_arg(block)};
            py::gil_scoped_release release;
            return encode_image(img, config, threads);
        },
        py::arg("image"), py::arg("block") = "12x12", py::arg("threads") = 1,
        "Encode an (H, W, 3) uint8 array.");

    m.def(
        "decode",
        [](const EncodedImage& encoded, int threads) {
            ImageRGB8 img(1, 1);
            {
                py::gil_scoped_release release;
                img = decode_image(encoded, threads);
            }
            return to_array(img);
        },
        py::arg("encoded"), py::arg("threads") = 1);

    m.def(
        "decode_blocks",
        [](const py::bytes& payload, const py::object& block, int width, int height, int threads) {
            return to_array(decode_image(blocks_from_bytes(payload), block_arg(block), width, height, threads));
        },
        py::arg("payload"), py::arg("block"), py::arg("width"), py::arg("height"), py::arg("threads") = 1,
        "Decode raster-order 16-byte blocks to an (height, width, 3) array.");

    m.def(
        "encode_block",
        [](const U8Array& texels) {
            const ImageRGB8 img = to_image(texels);
            BlockSize size = BlockSize::k12x12;
            if (img.width() == 8 && img.height() == 8) {
                size = BlockSize::k8x8;
            } else if (img.width() != 12 || img.height() != 12) {
                throw DimensionError("a block is 12x12 or 8x8 texels");
            }
            const AstcBlock b = encode_block(extract_block(img, 0, 0, size), {size});
            return py::bytes(reinterpret_cast<const char*>(b.bytes.data()), kBlockBytes);
        },
        py::arg("texels"));

    m.def(
        "decode_block",
        [](const py::bytes& data, const py::object& block) {
            return block_to_array(decode_block(block_from_bytes(data), block_arg(block)));
        },
        py::arg("data"), py::arg("block") = "12x12");

    m.def(
        "pack_block",
        [](const std::array<int, 6>& endpoints, const std::array<int, kGridCount>& weights) {
            QuantizedEndpoints e;
            WeightGrid w;
            for (std::size_t i = 0; i < e.v.size(); ++i) {
                if (endpoints[i] < 0 || endpoints[i] > 31) {
                    throw DimensionError("endpoint values are 5-bit (0..31)");
                }
                e.v[i] = static_cast<std::uint8_t>(endpoints[i]);
            }
            for (std::size_t i = 0; i < w.q.size(); ++i) {
                if (weights[i] < 0 || weights[i] > 3) {
                    throw DimensionError("weights are 2-bit (0..3)");
                }
                w.q[i] = static_cast<std::uint8_t>(weights[i]);
            }
            const AstcBlock b = pack_block(e, w);
            return py::bytes(reinterpret_cast<const char*>(b.bytes.data()), kBlockBytes);
        },
        py::arg("endpoints"), py::arg("weights"),
        "Pack six 5-bit endpoints (r0 r1 g0 g1 b0 b1) and forty 2-bit weights.");

    m.def(
        "unpack_block",
        [](const py::bytes& data) {
            const QuantizedBlock qb = unpack_block(block_from_bytes(data));
            std::vector<int> endpoints(qb.endpoints.v.begin(), qb.endpoints.v.end());
            std::vector<int> weights(qb.weights.q.begin(), qb.weights.q.end());
            return py::make_tuple(endpoints, weights);
        },
        py::arg("data"));

    m.def(
        "psnr", [](const U8Array& a, const U8Array& b) { return psnr(to_image(a), to_image(b)); }, py::arg("ref"),
        py::arg("dist"), "PSNR in dB; identical images give inf.");
    m.def(
        "ssim", [](const U8Array& a, const U8Array& b) { return ssim(to_image(a), to_image(b)); }, py::arg("ref"),
        py::arg("dist"));
    m.def("bpp", &bpp, py::arg("payload_bytes"), py::arg("width"), py::arg("height"));

    m.def(
        "roundtrip",
        [](const U8Array& image, const py::object& block, int threads) {
            const RoundtripResult r = roundtrip(to_image(image), block_arg(block), threads);
            return py::make_tuple(to_array(r.decoded), metrics_dict(r.metrics));
        },
        py::arg("image"), py::arg("block") = "12x12", py::arg("threads") = 1,
        "Encode and decode; returns (decoded, {psnr_db, ssim, bpp}).");

    m.def(
        "read_astc", [](const std::filesystem::path& path) { return encoded_from_file(read_astc(path)); },
        py::arg("path"));
    m.def(
        "write_astc",
        [](const std::filesystem::path& path, const EncodedImage& encoded) {
            write_astc(path, to_astc_file(encoded));
        },
        py::arg("path"), py::arg("encoded"));

    m.def(
        "read_image", [](const std::filesystem::path& path) { return to_array(read_image(path)); },
        py::arg("path"), "Read a PNG or binary PPM as an (H, W, 3) uint8 array.");
    m.def(
        "write_image",
        [](const std::filesystem::path& path, const U8Array& image) { write_image(path, to_image(image)); },
        py::arg("path"), py::arg("image"));

    m.def(
        "latency_lines",
        [](double encode_ms_per_frame, double link_mbits_per_s, double bits_per_pixel, int width, int height,
           double budget_ms) {
            const LatencyBreakdown b =
                latency_lines({encode_ms_per_frame, link_mbits_per_s, bits_per_pixel, width, height, budget_ms});
            py::dict d;
            d["lines"] = b.lines;
            d["encode_ms"] = b.encode_ms;
            d["transmit_ms"] = b.transmit_ms;
            d["encode_ms_per_line"] = b.encode_ms_per_line;
            d["transmit_ms_per_line"] = b.transmit_ms_per_line;
            d["below_one_line"] = b.below_one_line;
            return d;
        },
        py::arg("encode_ms_per_frame") = kReferenceMsPerFrame12x12, py::arg("link_mbits_per_s") = 500.0,
        py::arg("bpp") = 8.0 / 9.0, py::arg("width") = 2048, py::arg("height") = 1024, py::arg("budget_ms") = 1.0);
}
