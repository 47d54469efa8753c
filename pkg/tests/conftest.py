"""Shared naive reference implementations, deliberately unpacked and slow.

Everything here works on plain Python lists of 0/1 ints so the packed-word
kernels in the package are checked against an independent route.
"""

import random

import pytest

from sclab.bitstream import Bitstream


def naive_bits(stream):
    return [stream.bit(i) for i in range(len(stream))]


def from_naive(bits):
    return Bitstream.from_bits(bits)


def naive_and(a, b):
    return [x & y for x, y in zip(a, b)]


def naive_xnor(a, b):
    return [1 - (x ^ y) for x, y in zip(a, b)]


def naive_mux2(a, b, sel):
    return [y if s else x for x, y, s in zip(a, b, sel)]


def naive_mux2_sub(a, b, sel):
    return [(1 - y) if s else x for x, y, s in zip(a, b, sel)]


def naive_mux4(i11, i12, i21, i22, su, sv):
    out = []
    for a, b, c, d, u, v in zip(i11, i12, i21, i22, su, sv):
        out.append([[a, b], [c, d]][u][v])
    return out


def naive_sng(numerator, rng_values):
    return [1 if numerator > r else 0 for r in rng_values]


def naive_scc(bits1, bits2):
    n = len(bits1)
    a = sum(1 for x, y in zip(bits1, bits2) if x and y)
    b = sum(1 for x, y in zip(bits1, bits2) if x and not y)
    c = sum(1 for x, y in zip(bits1, bits2) if not x and y)
    d = n - a - b - c
    ad, bc = a * d, b * c
    if ad > bc:
        den = n * min(a + b, a + c) - (a + b) * (a + c)
    else:
        den = (a + b) * (a + c) - n * max(a - d, 0)
    if den == 0:
        return None
    from fractions import Fraction

    return Fraction(ad - bc, den)


def random_bit_list(rng, length):
    return [rng.randint(0, 1) for _ in range(length)]


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
