#!/usr/bin/env python3
# Copyright 2026 The gymv Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Freezes DejaVu Sans Mono Bold (14px, no anti-aliasing) into a bitmap table.

Run once; the output header is checked in so rendering never depends on the
fonts installed on the build machine.
"""
import sys

from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono-Bold.ttf"
WIDTH, HEIGHT, TOP = 9, 16, 1

HEADER = open(__file__).read().split('"""')[0].replace("#", "//")


def main(out_path):
    font = ImageFont.truetype(FONT, 14)
    rows = []
    for code in range(32, 127):
        im = Image.new("1", (WIDTH, HEIGHT + TOP + 2), 0)
        draw = ImageDraw.Draw(im)
        draw.fontmode = "1"
        draw.text((0, 0), chr(code), font=font, fill=1)
        glyph = []
        for y in range(TOP, TOP + HEIGHT):
            bits = 0
            for x in range(WIDTH):
                if im.getpixel((x, y)):
                    bits |= 1 << x
            glyph.append(bits)
        rows.append((code, glyph))
    with open(out_path, "w") as out:
        out.write(HEADER.replace("//!/usr/bin/env python3\n", ""))
        out.write("// Generated by tools/gen_font.py. Do not edit.\n")
        out.write("#pragma once\n\n#include <array>\n#include <cstdint>\n\n")
        out.write("namespace gymv::font {\n\n")
        out.write(f"inline constexpr int kGlyphWidth = {WIDTH};\n")
        out.write(f"inline constexpr int kGlyphHeight = {HEIGHT};\n")
        out.write("inline constexpr int kFirstChar = 32;\n")
        out.write("inline constexpr int kLastChar = 126;\n\n")
        out.write("// One uint16 per row, bit x set when column x is inked.\n")
        out.write(f"inline constexpr std::array<std::array<std::uint16_t, {HEIGHT}>, {len(rows)}> kGlyphs = {{{{\n")
        for code, glyph in rows:
            ch = chr(code)
            label = ch if ch not in "\\" else "backslash"
            out.write("    {{" + ", ".join(f"0x{v:03x}" for v in glyph) + f"}}}},  // '{label}'\n")
        out.write("}};\n\n}  // namespace gymv::font\n")


if __name__ == "__main__":
    main(sys.argv[1])
