// Copyright 2026 The gymv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Generated by tools/gen_font.py. Do not edit.
#pragma once

#include <array>
#include <cstdint>

namespace gymv::font {

inline constexpr int kGlyphWidth = 9;
inline constexpr int kGlyphHeight = 16;
inline constexpr int kFirstChar = 32;
inline constexpr int kLastChar = 126;

// One uint16 per row, bit x set when column x is inked.
inline constexpr std::array<std::array<std::uint16_t, 16>, 95> kGlyphs = {{
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // ' '
    {{0x000, 0x000, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // '!'
    {{0x000, 0x000, 0x066, 0x066, 0x066, 0x066, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '"'
    {{0x000, 0x000, 0x048, 0x048, 0x068, 0x0fe, 0x02c, 0x024, 0x07f, 0x016, 0x012, 0x012, 0x000, 0x000, 0x000, 0x000}},  // '#'
    {{0x000, 0x010, 0x010, 0x07c, 0x056, 0x016, 0x03e, 0x078, 0x0d0, 0x0d0, 0x0d6, 0x07c, 0x010, 0x010, 0x000, 0x000}},  // '$'
    {{0x000, 0x000, 0x006, 0x009, 0x009, 0x0c6, 0x030, 0x00c, 0x063, 0x090, 0x090, 0x060, 0x000, 0x000, 0x000, 0x000}},  // '%'
    {{0x000, 0x000, 0x038, 0x00c, 0x00c, 0x008, 0x01c, 0x0de, 0x0f6, 0x0f6, 0x066, 0x0fc, 0x000, 0x000, 0x000, 0x000}},  // '&'
    {{0x000, 0x000, 0x018, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '''
    {{0x000, 0x060, 0x030, 0x030, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x030, 0x030, 0x060, 0x000, 0x000, 0x000}},  // '('
    {{0x000, 0x00c, 0x018, 0x018, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x018, 0x018, 0x00c, 0x000, 0x000, 0x000}},  // ')'
    {{0x000, 0x000, 0x010, 0x0d6, 0x07c, 0x07c, 0x0d6, 0x010, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '*'
    {{0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x0ff, 0x0ff, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '+'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x008, 0x004, 0x000, 0x000, 0x000}},  // ','
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x03c, 0x03c, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '-'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // '.'
    {{0x000, 0x000, 0x0c0, 0x060, 0x060, 0x060, 0x030, 0x030, 0x018, 0x018, 0x00c, 0x00c, 0x00c, 0x006, 0x000, 0x000}},  // '/'
    {{0x000, 0x000, 0x038, 0x06c, 0x0c6, 0x0c6, 0x0d6, 0x0d6, 0x0c6, 0x0c6, 0x06c, 0x038, 0x000, 0x000, 0x000, 0x000}},  // '0'
    {{0x000, 0x000, 0x038, 0x034, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x0fc, 0x000, 0x000, 0x000, 0x000}},  // '1'
    {{0x000, 0x000, 0x07c, 0x0c2, 0x0c0, 0x0c0, 0x060, 0x070, 0x038, 0x01c, 0x00e, 0x0fe, 0x000, 0x000, 0x000, 0x000}},  // '2'
    {{0x000, 0x000, 0x07c, 0x0c2, 0x0c0, 0x0c0, 0x038, 0x0e0, 0x0c0, 0x0c0, 0x0e2, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // '3'
    {{0x000, 0x000, 0x060, 0x070, 0x078, 0x06c, 0x064, 0x066, 0x0fe, 0x060, 0x060, 0x060, 0x000, 0x000, 0x000, 0x000}},  // '4'
    {{0x000, 0x000, 0x07e, 0x006, 0x006, 0x03e, 0x062, 0x0c0, 0x0c0, 0x0c0, 0x062, 0x03c, 0x000, 0x000, 0x000, 0x000}},  // '5'
    {{0x000, 0x000, 0x038, 0x04c, 0x006, 0x07e, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c4, 0x078, 0x000, 0x000, 0x000, 0x000}},  // '6'
    {{0x000, 0x000, 0x0fe, 0x0c0, 0x0e0, 0x060, 0x070, 0x030, 0x030, 0x018, 0x018, 0x00c, 0x000, 0x000, 0x000, 0x000}},  // '7'
    {{0x000, 0x000, 0x07c, 0x0c6, 0x0c6, 0x0c6, 0x038, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // '8'
    {{0x000, 0x000, 0x03c, 0x046, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0fc, 0x0c0, 0x064, 0x038, 0x000, 0x000, 0x000, 0x000}},  // '9'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x000, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // ':'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x018, 0x018, 0x018, 0x000, 0x018, 0x018, 0x008, 0x004, 0x000, 0x000, 0x000}},  // ';'
    {{0x000, 0x000, 0x000, 0x000, 0x080, 0x0f0, 0x03c, 0x006, 0x03c, 0x0f0, 0x080, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '<'
    {{0x000, 0x000, 0x000, 0x000, 0x0fe, 0x0fe, 0x000, 0x000, 0x0fe, 0x0fe, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '='
    {{0x000, 0x000, 0x000, 0x000, 0x002, 0x01e, 0x078, 0x0c0, 0x078, 0x01e, 0x002, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '>'
    {{0x000, 0x000, 0x078, 0x0c4, 0x0c0, 0x060, 0x030, 0x018, 0x018, 0x000, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // '?'
    {{0x000, 0x000, 0x078, 0x0c6, 0x082, 0x0f9, 0x0cd, 0x085, 0x085, 0x0cd, 0x0f9, 0x002, 0x084, 0x0f8, 0x000, 0x000}},  // '@'
    {{0x000, 0x000, 0x038, 0x038, 0x038, 0x028, 0x06c, 0x06c, 0x07c, 0x06c, 0x0c6, 0x0c6, 0x000, 0x000, 0x000, 0x000}},  // 'A'
    {{0x000, 0x000, 0x07e, 0x0c6, 0x0c6, 0x0c6, 0x03e, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x07e, 0x000, 0x000, 0x000, 0x000}},  // 'B'
    {{0x000, 0x000, 0x078, 0x08c, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x08c, 0x078, 0x000, 0x000, 0x000, 0x000}},  // 'C'
    {{0x000, 0x000, 0x03e, 0x066, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x066, 0x03e, 0x000, 0x000, 0x000, 0x000}},  // 'D'
    {{0x000, 0x000, 0x0fe, 0x006, 0x006, 0x006, 0x07e, 0x006, 0x006, 0x006, 0x006, 0x0fe, 0x000, 0x000, 0x000, 0x000}},  // 'E'
    {{0x000, 0x000, 0x0fe, 0x006, 0x006, 0x006, 0x07e, 0x006, 0x006, 0x006, 0x006, 0x006, 0x000, 0x000, 0x000, 0x000}},  // 'F'
    {{0x000, 0x000, 0x078, 0x08c, 0x006, 0x006, 0x006, 0x0e6, 0x0c6, 0x0c6, 0x0cc, 0x0f8, 0x000, 0x000, 0x000, 0x000}},  // 'G'
    {{0x000, 0x000, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0fe, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x000, 0x000, 0x000, 0x000}},  // 'H'
    {{0x000, 0x000, 0x07e, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x07e, 0x000, 0x000, 0x000, 0x000}},  // 'I'
    {{0x000, 0x000, 0x0f0, 0x0c0, 0x0c0, 0x0c0, 0x0c0, 0x0c0, 0x0c0, 0x0c0, 0x0c2, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'J'
    {{0x000, 0x000, 0x0c6, 0x066, 0x036, 0x03e, 0x03e, 0x03e, 0x076, 0x066, 0x0c6, 0x0c6, 0x000, 0x000, 0x000, 0x000}},  // 'K'
    {{0x000, 0x000, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x006, 0x0fe, 0x000, 0x000, 0x000, 0x000}},  // 'L'
    {{0x000, 0x000, 0x0ee, 0x0ee, 0x0ee, 0x0ee, 0x0fe, 0x0d6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x000, 0x000, 0x000, 0x000}},  // 'M'
    {{0x000, 0x000, 0x0ce, 0x0ce, 0x0ce, 0x0de, 0x0d6, 0x0d6, 0x0f6, 0x0e6, 0x0e6, 0x0e6, 0x000, 0x000, 0x000, 0x000}},  // 'N'
    {{0x000, 0x000, 0x038, 0x06c, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x06c, 0x038, 0x000, 0x000, 0x000, 0x000}},  // 'O'
    {{0x000, 0x000, 0x07e, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x07e, 0x006, 0x006, 0x006, 0x006, 0x000, 0x000, 0x000, 0x000}},  // 'P'
    {{0x000, 0x000, 0x038, 0x06c, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x06c, 0x078, 0x060, 0x040, 0x000, 0x000}},  // 'Q'
    {{0x000, 0x000, 0x07e, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x03e, 0x066, 0x0c6, 0x0c6, 0x186, 0x000, 0x000, 0x000, 0x000}},  // 'R'
    {{0x000, 0x000, 0x07c, 0x086, 0x006, 0x006, 0x03e, 0x078, 0x0e0, 0x0c0, 0x0c2, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'S'
    {{0x000, 0x000, 0x0ff, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // 'T'
    {{0x000, 0x000, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x0c6, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'U'
    {{0x000, 0x000, 0x0c6, 0x0c6, 0x06c, 0x06c, 0x06c, 0x06c, 0x06c, 0x028, 0x038, 0x038, 0x000, 0x000, 0x000, 0x000}},  // 'V'
    {{0x000, 0x000, 0x0c3, 0x0c3, 0x0c3, 0x0db, 0x0da, 0x05a, 0x07e, 0x066, 0x066, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'W'
    {{0x000, 0x000, 0x0c6, 0x06c, 0x06c, 0x038, 0x038, 0x038, 0x038, 0x06c, 0x06c, 0x0c6, 0x000, 0x000, 0x000, 0x000}},  // 'X'
    {{0x000, 0x000, 0x0c3, 0x066, 0x066, 0x03c, 0x03c, 0x018, 0x018, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // 'Y'
    {{0x000, 0x000, 0x0fe, 0x0c0, 0x060, 0x070, 0x030, 0x018, 0x01c, 0x00c, 0x006, 0x0fe, 0x000, 0x000, 0x000, 0x000}},  // 'Z'
    {{0x000, 0x078, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x078, 0x000, 0x000, 0x000}},  // '['
    {{0x000, 0x000, 0x006, 0x004, 0x00c, 0x008, 0x018, 0x018, 0x030, 0x030, 0x020, 0x060, 0x040, 0x0c0, 0x000, 0x000}},  // 'backslash'
    {{0x000, 0x03c, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x03c, 0x000, 0x000, 0x000}},  // ']'
    {{0x000, 0x000, 0x018, 0x03c, 0x066, 0x0c3, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '^'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x0ff, 0x000}},  // '_'
    {{0x006, 0x00c, 0x018, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '`'
    {{0x000, 0x000, 0x000, 0x000, 0x038, 0x064, 0x060, 0x07c, 0x066, 0x066, 0x066, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'a'
    {{0x000, 0x006, 0x006, 0x006, 0x03e, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x03e, 0x000, 0x000, 0x000, 0x000}},  // 'b'
    {{0x000, 0x000, 0x000, 0x000, 0x038, 0x04c, 0x006, 0x006, 0x006, 0x006, 0x04c, 0x038, 0x000, 0x000, 0x000, 0x000}},  // 'c'
    {{0x000, 0x060, 0x060, 0x060, 0x07c, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'd'
    {{0x000, 0x000, 0x000, 0x000, 0x03c, 0x064, 0x066, 0x07e, 0x006, 0x006, 0x04c, 0x03c, 0x000, 0x000, 0x000, 0x000}},  // 'e'
    {{0x000, 0x070, 0x018, 0x018, 0x07e, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // 'f'
    {{0x000, 0x000, 0x000, 0x000, 0x07c, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x07c, 0x060, 0x060, 0x03c, 0x000}},  // 'g'
    {{0x000, 0x006, 0x006, 0x006, 0x03e, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'h'
    {{0x000, 0x018, 0x018, 0x000, 0x01e, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x07f, 0x000, 0x000, 0x000, 0x000}},  // 'i'
    {{0x000, 0x030, 0x030, 0x000, 0x03c, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x030, 0x01e, 0x000}},  // 'j'
    {{0x000, 0x006, 0x006, 0x006, 0x026, 0x036, 0x01e, 0x01e, 0x01e, 0x036, 0x036, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'k'
    {{0x000, 0x01e, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x0f0, 0x000, 0x000, 0x000, 0x000}},  // 'l'
    {{0x000, 0x000, 0x000, 0x000, 0x0ff, 0x0db, 0x0db, 0x0db, 0x0db, 0x0db, 0x0db, 0x0db, 0x000, 0x000, 0x000, 0x000}},  // 'm'
    {{0x000, 0x000, 0x000, 0x000, 0x03e, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'n'
    {{0x000, 0x000, 0x000, 0x000, 0x03c, 0x024, 0x066, 0x066, 0x066, 0x066, 0x024, 0x03c, 0x000, 0x000, 0x000, 0x000}},  // 'o'
    {{0x000, 0x000, 0x000, 0x000, 0x03e, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x03e, 0x006, 0x006, 0x006, 0x000}},  // 'p'
    {{0x000, 0x000, 0x000, 0x000, 0x07c, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x07c, 0x060, 0x060, 0x060, 0x000}},  // 'q'
    {{0x000, 0x000, 0x000, 0x000, 0x0fc, 0x01c, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x00c, 0x000, 0x000, 0x000, 0x000}},  // 'r'
    {{0x000, 0x000, 0x000, 0x000, 0x03c, 0x046, 0x006, 0x01e, 0x078, 0x060, 0x062, 0x03c, 0x000, 0x000, 0x000, 0x000}},  // 's'
    {{0x000, 0x000, 0x018, 0x018, 0x0fe, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x0f0, 0x000, 0x000, 0x000, 0x000}},  // 't'
    {{0x000, 0x000, 0x000, 0x000, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x066, 0x07c, 0x000, 0x000, 0x000, 0x000}},  // 'u'
    {{0x000, 0x000, 0x000, 0x000, 0x066, 0x066, 0x066, 0x024, 0x03c, 0x03c, 0x018, 0x018, 0x000, 0x000, 0x000, 0x000}},  // 'v'
    {{0x000, 0x000, 0x000, 0x000, 0x0c3, 0x0c3, 0x0db, 0x05a, 0x05a, 0x05a, 0x066, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'w'
    {{0x000, 0x000, 0x000, 0x000, 0x066, 0x03c, 0x03c, 0x018, 0x018, 0x03c, 0x03c, 0x066, 0x000, 0x000, 0x000, 0x000}},  // 'x'
    {{0x000, 0x000, 0x000, 0x000, 0x066, 0x066, 0x034, 0x03c, 0x03c, 0x01c, 0x018, 0x018, 0x018, 0x00c, 0x00e, 0x000}},  // 'y'
    {{0x000, 0x000, 0x000, 0x000, 0x07e, 0x060, 0x030, 0x038, 0x01c, 0x00c, 0x006, 0x07e, 0x000, 0x000, 0x000, 0x000}},  // 'z'
    {{0x000, 0x070, 0x018, 0x018, 0x018, 0x018, 0x018, 0x006, 0x018, 0x018, 0x018, 0x018, 0x018, 0x070, 0x000, 0x000}},  // '{'
    {{0x000, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x018, 0x000}},  // '|'
    {{0x000, 0x00e, 0x018, 0x018, 0x018, 0x018, 0x018, 0x060, 0x018, 0x018, 0x018, 0x018, 0x018, 0x00e, 0x000, 0x000}},  // '}'
    {{0x000, 0x000, 0x000, 0x000, 0x000, 0x09c, 0x0fe, 0x062, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000, 0x000}},  // '~'
}};

}  // namespace gymv::font
