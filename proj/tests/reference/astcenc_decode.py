#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
# Copyright 2026 The astc-lite Authors
"""Decode an .astc file with ARM's astc-encoder (the Khronos reference codec).

Usage: astcenc_decode.py INPUT.astc OUTPUT.ppm

Decodes with the LDR (linear) profile in decode_unorm8 mode and writes a
binary PPM with alpha dropped. Exit status 77 means the reference decoder is
not installed (pip install astc-encoder-py).
"""

import sys


def main(argv):
    if len(argv) != 3:
        print(__doc__, file=sys.stderr)
        return 1
    try:
        import astc_encoder as ae
    except ImportError as exc:
        print(f"reference decoder unavailable: {exc}", file=sys.stderr)
        return 77

    with open(argv[1], "rb") as f:
        data = f.read()
    if data[:4] != b"\x13\xab\xa1\x5c":
        print("bad magic", file=sys.stderr)
        return 3
    bx, by, bz = data[4], data[5], data[6]
    width = int.from_bytes(data[7:10], "little")
    height = int.from_bytes(data[10:13], "little")

    flags = int(ae.ASTCConfigFlags.USE_DECODE_UNORM8) | int(ae.ASTCConfigFlags.DECOMPRESS_ONLY)
    config = ae.ASTCConfig(ae.ASTCProfile.LDR, bx, by, bz, 100, flags)
    context = ae.ASTCContext(config)
    image = ae.ASTCImage(ae.ASTCType.U8, width, height, 1)
    context.decompress(data[16:], image, ae.ASTCSwizzle.from_str("RGBA"))

    rgba = image.data
    rgb = bytearray(width * height * 3)
    rgb[0::3] = rgba[0::4]
    rgb[1::3] = rgba[1::4]
    rgb[2::3] = rgba[2::4]
    with open(argv[2], "wb") as f:
        f.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
        f.write(rgb)
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
