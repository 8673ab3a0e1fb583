# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The astc-lite Authors
"""Fixed-rate ASTC encoder and decoder for one 12x12 / 8x8 configuration."""

from ._core import (
    AstcFormatError,
    BlockSize,
    EncodedImage,
    UnsupportedConfigurationError,
    bpp,
    decode,
    decode_block,
    decode_blocks,
    encode,
    encode_block,
    latency_lines,
    pack_block,
    psnr,
    read_astc,
    read_image,
    roundtrip,
    ssim,
    unpack_block,
    write_astc,
    write_image,
)

__all__ = [
    "AstcFormatError",
    "BlockSize",
    "EncodedImage",
    "UnsupportedConfigurationError",
    "bpp",
    "decode",
    "decode_block",
    "decode_blocks",
    "encode",
    "encode_block",
    "latency_lines",
    "pack_block",
    "psnr",
    "read_astc",
    "read_image",
    "roundtrip",
    "ssim",
    "unpack_block",
    "write_astc",
    "write_image",
]
