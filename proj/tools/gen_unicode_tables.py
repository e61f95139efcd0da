#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Emits three tables:
  - punctuation ranges (general category P*)
  - whitespace code points
  - simple lowercase mappings for code points below 0x0530
Run from the repository root:  python3 tools/gen_unicode_tables.py
"""

import sys
import unicodedata

MAX_CP = 0x110000
LOWER_LIMIT = 0x0530  # Latin, Greek, Cyrillic; Arabic has no case


def punct_ranges():
    ranges = []
    start = None
    for cp in range(MAX_CP):
        is_p = unicodedata.category(chr(cp)).startswith("P")
        if is_p and start is None:
            start = cp
        elif not is_p and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def whitespace_points():
    return [cp for cp in range(MAX_CP) if chr(cp).isspace()]


def lower_map():
    out = []
    for cp in range(LOWER_LIMIT):
        lowered = chr(cp).lower()
        if len(lowered) == 1 and ord(lowered) != cp:
            out.append((cp, ord(lowered)))
    return out


def main():
    pr = punct_ranges()
    ws = whitespace_points()
    lm = lower_map()
    w = sys.stdout.write
    w("// Generated by tools/gen_unicode_tables.py (unicodedata %s). Do not edit.\n"
      % unicodedata.unidata_version)
    w("\nstruct CpRange { char32_t lo; char32_t hi; };\n")
    w("\nstatic constexpr CpRange kPunctRanges[] = {\n")
    for lo, hi in pr:
        w("    {0x%04X, 0x%04X},\n" % (lo, hi))
    w("};\n")
    w("\nstatic constexpr char32_t kWhitespace[] = {\n")
    for cp in ws:
        w("    0x%04X,\n" % cp)
    w("};\n")
    w("\nstruct CpPair { char32_t from; char32_t to; };\n")
    w("\nstatic constexpr CpPair kLowerMap[] = {\n")
    for frm, to in lm:
        w("    {0x%04X, 0x%04X},\n" % (frm, to))
    w("};\n")


if __name__ == "__main__":
    main()
