"""Brute-force linear VOI evaluation with exact rationals.

Writes the expected 8-bit frame for the 16x16 gradient (pixel r*16+c)
under its default min/max window, one row of 16 decimal values per line.
"""
from fractions import Fraction as F
import sys


def round_half_away(q):
    n = abs(q)
    whole = int(n)
    if n - whole >= F(1, 2):
        whole += 1
    return whole if q >= 0 else -whole


def voi(x, c, w):
    lo = c - F(1, 2) - (w - 1) / 2
    hi = c - F(1, 2) + (w - 1) / 2
    if x <= lo:
        return 0
    if x > hi:
        return 255
    return round_half_away(((x - (c - F(1, 2))) / (w - 1) + F(1, 2)) * 255)


def main(out):
    pixels = [r * 16 + c for r in range(16) for c in range(16)]
    lo, hi = min(pixels), max(pixels)
    center = F(lo + hi, 2)
    width = F(hi - lo + 1)
    with open(out, "w") as f:
        for r in range(16):
            f.write(" ".join(str(voi(F(p), center, width)) for p in pixels[r * 16:(r + 1) * 16]) + "\n")
    assert voi(F(-160), F(40), F(400)) == 0
    assert voi(F(240), F(40), F(400)) == 255
    assert voi(F(40), F(40), F(400)) == 128


if __name__ == "__main__":
    main(sys.argv[1])
