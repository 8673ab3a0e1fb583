// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The astc-lite Authors

#include "astc_lite/astc_codec.hpp"
#include "astc_lite/errors.hpp"
#include "astc_lite/metrics.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace astc_lite;

TEST_SUITE("codec_image")
{
    TEST_CASE("payload size is a function of dimensions only")
    {
        CHECK(payload_bytes_for(2048, 1024, BlockSize::k12x12) == 235296);
        CHECK(payload_bytes_for(2048, 1024, BlockSize::k8x8) == 524288);
        CHECK(payload_bytes_for(1, 1, BlockSize::k12x12) == 16);
        CHECK(payload_bytes_for(13, 9, BlockSize::k8x8) == 16 * 2 * 2);

        std::mt19937 rng(6);
        for (int i = 0; i < 10; ++i) {
            const int w = std::uniform_int_distribution<int>(1, 70)(rng);
            const int h = std::uniform_int_distribution<int>(1, 70)(rng);
            const EncodedImage noise = encode_image(test::random_image(rng, w, h));
            const EncodedImage flat = encode_image(test::constant_image(w, h, {1, 2, 3}));
            CHECK(noise.blocks.size() * kBlockBytes == payload_bytes_for(w, h, BlockSize::k12x12));
            CHECK(noise.stats.payload_bytes == flat.stats.payload_bytes);
            CHECK(noise.stats.bpp == flat.stats.bpp);
        }
    }

    TEST_CASE("block aligned bpp")
    {
        const EncodedImage a = encode_image(ImageRGB8(24, 24), {BlockSize::k12x12});
        CHECK(a.stats.payload_bytes == 64);
        CHECK(a.stats.bpp == 8.0 * 64 / (24 * 24));
        CHECK(a.stats.bpp == doctest::Approx(8.0 / 9.0).epsilon(1e-15));
        const EncodedImage b = encode_image(ImageRGB8(24, 24), {BlockSize::k8x8});
        CHECK(b.stats.bpp == 2.0);
        CHECK(a.grid() == BlockGrid{2, 2});
        CHECK(b.grid() == BlockGrid{3, 3});
    }

    TEST_CASE("bpp uses the original dimensions")
    {
        const EncodedImage e = encode_image(ImageRGB8(2048, 1024), {BlockSize::k12x12});
        CHECK(e.padded_width == 2052);
        CHECK(e.padded_height == 1032);
        CHECK(e.blocks.size() == 14706);
        CHECK(e.stats.bpp == bpp(235296, 2048, 1024));
    }

    TEST_CASE("implicit padding matches explicit padding")
    {
        std::mt19937 rng(19);
        const ImageRGB8 img = test::random_image(rng, 29, 17);
        for (BlockSize s : {BlockSize::k12x12, BlockSize::k8x8}) {
            const EncodedImage e = encode_image(img, {s});
            const ImageRGB8 padded = pad_to_blocks(img, s);
            const BlockGrid g = block_grid_dims(padded, s);
            REQUIRE(e.blocks.size() == static_cast<std::size_t>(g.count()));
            for (int by = 0; by < g.blocks_y; ++by) {
                for (int bx = 0; bx < g.blocks_x; ++bx) {
                    CHECK(e.blocks[static_cast<std::size_t>(by * g.blocks_x + bx)] ==
                          encode_block(extract_block(padded, bx, by, s), {s}));
                }
            }
        }
    }

    TEST_CASE("output is identical for any thread count")
    {
        std::mt19937 rng(20);
        const ImageRGB8 img = test::smooth_image(rng, 301, 157);
        const EncodedImage one = encode_image(img, {}, 1);
        for (int threads : {2, 3, 8}) {
            CHECK(encode_image(img, {}, threads).blocks == one.blocks);
            CHECK(decode_image(one, threads) == decode_image(one, 1));
        }
    }

    TEST_CASE("decode restores the original dimensions")
    {
        std::mt19937 rng(21);
        const ImageRGB8 img = test::random_image(rng, 37, 5);
        const ImageRGB8 out = decode_image(encode_image(img, {BlockSize::k8x8}));
        CHECK(out.width() == 37);
        CHECK(out.height() == 5);
    }

    TEST_CASE("every block decodes independently")
    {
        std::mt19937 rng(22);
        const ImageRGB8 img = test::smooth_image(rng, 96, 48);
        for (BlockSize s : {BlockSize::k12x12, BlockSize::k8x8}) {
            const EncodedImage e = encode_image(img, {s});
            const ImageRGB8 full = decode_image(e);
            const BlockGrid g = e.grid();
            for (int by = 0; by < g.blocks_y; ++by) {
                for (int bx = 0; bx < g.blocks_x; ++bx) {
                    const BlockView alone = decode_block(e.blocks[static_cast<std::size_t>(by * g.blocks_x + bx)], s);
                    CHECK(alone == extract_block(full, bx, by, s));
                }
            }
        }
    }

    TEST_CASE("block count mismatch is rejected")
    {
        const EncodedImage e = encode_image(ImageRGB8(24, 24));
        CHECK_THROWS_AS(decode_image(e.blocks, BlockSize::k12x12, 25, 24), DimensionError);
        CHECK_THROWS_AS(decode_image(e.blocks, BlockSize::k8x8, 24, 24), DimensionError);
    }

    TEST_CASE("smooth content beats the block mean baseline")
    {
        std::mt19937 rng(23);
        const ImageRGB8 img = test::smooth_image(rng, 240, 240);
        const double codec = psnr(img, decode_image(encode_image(img)));
        const double baseline = psnr(img, test::block_mean_baseline(img, BlockSize::k12x12));
        CHECK(codec > baseline);
    }
}
