"""SC media case studies: bilinear image scaling through a 4-to-1 MUX and
green-screen scene merging through a 2-to-1 MUX, plus PSNR/SSIM scoring.

Pixels encode value/256.  Alpha follows compositing semantics: alpha a selects
the foreground with probability a/256, except a=255 which means fully opaque
(an all-ones select stream), so binary mattes route bit-exactly.  The same
mapping defines the reference compositor.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConfigurationError, DomainError
from .sequences import SequenceSpec, resolve_spec, sequence_thresholds

_WORD = 64

# default sequence assignment: data from the base-2 reversal, the u select from
# the counter-order base-N generator, the v select from the binomial-scramble
# dimension; a base-2 digital-net triple, so the three comparisons stay jointly
# equidistributed off one shared counter
DATA_SPEC = SequenceSpec.parse("p2lsg:base=2")
U_SELECT_SPEC = SequenceSpec.parse("p2lsg:base=N")
V_SELECT_SPEC = SequenceSpec.parse("sobol:dim=2")
MERGE_SELECT_SPEC = SequenceSpec.parse("p2lsg:base=N")


def _as_uint8(pixels, ndim, what):
    arr = np.asarray(pixels)
    if arr.ndim != ndim or arr.size == 0:
        raise DomainError(f"{what} must be a nonempty {ndim}-D array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.min() < 0 or arr.max() > 255:
            raise DomainError(f"{what} samples must fit 8 bits")
        arr = arr.astype(np.uint8)
    return arr


@dataclass
class GrayImage:
    """8-bit single-channel raster, row-major."""

    pixels: np.ndarray

    def __post_init__(self):
        self.pixels = _as_uint8(self.pixels, 2, "gray image")

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def width(self):
        return self.pixels.shape[1]


@dataclass
class RgbImage:
    """8-bit three-channel raster, row-major RGB triples."""

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise DomainError(f"rgb image must have shape (H, W, 3), got {arr.shape}")
        self.pixels = _as_uint8(arr, 3, "rgb image")

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def width(self):
        return self.pixels.shape[1]


@dataclass
class AlphaMap:
    """8-bit coverage map: 0 = background, 255 = foreground."""

    alpha: np.ndarray

    def __post_init__(self):
        self.alpha = _as_uint8(self.alpha, 2, "alpha map")

    @property
    def height(self):
        return self.alpha.shape[0]

    @property
    def width(self):
        return self.alpha.shape[1]


def image_from_array(pixels):
    arr = np.asarray(pixels)
    return GrayImage(arr) if arr.ndim == 2 else RgbImage(arr)


# ---------------------------------------------------------------------------
# quality metrics
# ---------------------------------------------------------------------------

def _metric_planes(a, b):
    pa = a.pixels if isinstance(a, (GrayImage, RgbImage)) else np.asarray(a)
    pb = b.pixels if isinstance(b, (GrayImage, RgbImage)) else np.asarray(b)
    if pa.shape != pb.shape:
        raise DomainError(f"image shape mismatch: {pa.shape} vs {pb.shape}")
    return pa.astype(np.float64), pb.astype(np.float64)


def psnr(a, b, max_value=255):
    """Peak signal-to-noise ratio in dB; math.inf when the images are identical."""
    pa, pb = _metric_planes(a, b)
    mse = float(np.mean((pa - pb) ** 2))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(max_value * max_value / mse)


def _box_sums(x, w):
    integral = np.zeros((x.shape[0] + 1, x.shape[1] + 1))
    np.cumsum(np.cumsum(x, axis=0), axis=1, out=integral[1:, 1:])
    return (
        integral[w:, w:] - integral[:-w, w:] - integral[w:, :-w] + integral[:-w, :-w]
    )


def ssim(a, b, window=8):
    """Mean local SSIM over sliding 8x8 uniform windows, stride 1.

    Stabilizers C1=(0.01*255)^2, C2=(0.03*255)^2; population moments.  RGB
    inputs score as the mean over channels.
    """
    pa, pb = _metric_planes(a, b)
    if pa.ndim == 3:
        return float(np.mean([ssim(pa[..., c], pb[..., c], window) for c in range(3)]))
    if min(pa.shape) < window:
        raise DomainError(f"image {pa.shape} smaller than the {window}x{window} window")
    n = window * window
    c1 = (0.01 * 255) ** 2
    c2 = (0.03 * 255) ** 2
    mu_a = _box_sums(pa, window) / n
    mu_b = _box_sums(pb, window) / n
    var_a = _box_sums(pa * pa, window) / n - mu_a * mu_a
    var_b = _box_sums(pb * pb, window) / n - mu_b * mu_b
    cov = _box_sums(pa * pb, window) / n - mu_a * mu_b
    score = ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) / (
        (mu_a * mu_a + mu_b * mu_b + c1) * (var_a + var_b + c2)
    )
    return float(score.mean())


# ---------------------------------------------------------------------------
# chroma keying
# ---------------------------------------------------------------------------

def chroma_key_alpha(frame, green_threshold=100, dominance_margin=50):
    """Binary matte: background where green is strong and dominates red/blue."""
    pix = frame.pixels.astype(np.int16)
    g = pix[..., 1]
    dominance = g - np.maximum(pix[..., 0], pix[..., 2])
    background = (g > green_threshold) & (dominance > dominance_margin)
    return AlphaMap(np.where(background, 0, 255).astype(np.uint8))


# ---------------------------------------------------------------------------
# shared SC machinery
# ---------------------------------------------------------------------------

def _check_stream_length(n):
    if n < 2 or n & (n - 1):
        raise ConfigurationError(f"stream length must be a power of 2, got {n}")


def _packed_table(spec, n):
    """Packed comparator streams for every numerator 0..256 over one sequence.

    Row k holds bits [threshold < k]; row 256 is all ones (the fully-opaque
    select).
    """
    thr = sequence_thresholds(resolve_spec(spec, n), n, bits=8)
    bits = thr[None, :] < np.arange(257, dtype=np.int64)[:, None]
    packed = np.packbits(bits, axis=1, bitorder="little")
    words = -(-n // _WORD)
    buf = np.zeros((257, words * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view("<u8")


def _counts_to_pixels(counts, n):
    # nearest 8-bit value for counts/n, ties away from zero, capped at 255
    return np.minimum((counts * 256 + n // 2) // n, 255).astype(np.uint8)


def _axis_map(size, out_size):
    """Corner-aligned source mapping: exact base index and 8-bit offset per
    output coordinate (src = dst*(size-1)/(out_size-1), edges clamped)."""
    base = np.empty(out_size, dtype=np.int64)
    off8 = np.empty(out_size, dtype=np.int64)
    for d in range(out_size):
        if out_size == 1:
            s = Fraction(0)
        else:
            s = Fraction(d * (size - 1), out_size - 1)
        i = s.numerator // s.denominator
        base[d] = i
        off8[d] = min(255, round((s - i) * 256))
    return base, off8


# ---------------------------------------------------------------------------
# bilinear scaling
# ---------------------------------------------------------------------------

def _scale_plane_sc(pix, out_h, out_w, n, val, usel, vsel):
    h, w = pix.shape
    x1, u8 = _axis_map(w, out_w)
    y1, v8 = _axis_map(h, out_h)
    x2 = np.minimum(x1 + 1, w - 1)
    y2 = np.minimum(y1 + 1, h - 1)
    sel_u = usel[u8]  # (out_w, words)
    out = np.empty((out_h, out_w), dtype=np.uint8)
    for yo in range(out_h):
        r1, r2 = y1[yo], y2[yo]
        sel_v = vsel[v8[yo]][None, :]
        i11 = val[pix[r1, x1]]
        i12 = val[pix[r2, x1]]
        i21 = val[pix[r1, x2]]
        i22 = val[pix[r2, x2]]
        words = (
            (i11 & ~sel_u & ~sel_v)
            | (i12 & ~sel_u & sel_v)
            | (i21 & sel_u & ~sel_v)
            | (i22 & sel_u & sel_v)
        )
        counts = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        out[yo] = _counts_to_pixels(counts, n)
    return out


def _output_dims(h, w, factor):
    f = Fraction(factor)
    if f < 1:
        raise DomainError(f"scale factor must be >= 1, got {factor}")
    return round(h * f), round(w * f)


def scale_image_sc(image, scale_factor, stream_length=256,
                   seq_data=DATA_SPEC, seq_u=U_SELECT_SPEC, seq_v=V_SELECT_SPEC):
    """Bilinear scaling with a stochastic 4-to-1 MUX.

    The four clamped neighbors feed the MUX data inputs off one shared
    sequence (mutual correlation is fine for MUX data); the fractional offsets
    u and v drive the two select streams from two further sequences.
    """
    _check_stream_length(stream_length)
    out_h, out_w = _output_dims(
        image.pixels.shape[0], image.pixels.shape[1], scale_factor
    )
    val = _packed_table(seq_data, stream_length)
    usel = _packed_table(seq_u, stream_length)
    vsel = _packed_table(seq_v, stream_length)
    if isinstance(image, GrayImage):
        return GrayImage(
            _scale_plane_sc(image.pixels, out_h, out_w, stream_length, val, usel, vsel)
        )
    planes = [
        _scale_plane_sc(image.pixels[..., c], out_h, out_w, stream_length, val, usel, vsel)
        for c in range(3)
    ]
    return RgbImage(np.stack(planes, axis=-1))


def bilinear_reference(image, scale_factor):
    """Exact bilinear resampling oracle as float64, same grid convention."""
    pix = image.pixels if isinstance(image, (GrayImage, RgbImage)) else np.asarray(image)
    gray = pix.ndim == 2
    if gray:
        pix = pix[..., None]
    h, w = pix.shape[:2]
    out_h, out_w = _output_dims(h, w, scale_factor)
    # exact integer coordinate ratios, converted to float at the end
    def axis(size, out_size):
        if out_size == 1:
            return np.zeros(1, np.int64), np.zeros(1)
        num = np.arange(out_size, dtype=np.int64) * (size - 1)
        den = out_size - 1
        base = num // den
        frac = (num - base * den) / den
        return base, frac
    x1, u = axis(w, out_w)
    y1, v = axis(h, out_h)
    x2 = np.minimum(x1 + 1, w - 1)
    y2 = np.minimum(y1 + 1, h - 1)
    p = pix.astype(np.float64)
    uu = u[None, :, None]
    vv = v[:, None, None]
    out = (
        (1 - uu) * (1 - vv) * p[y1][:, x1]
        + (1 - uu) * vv * p[y2][:, x1]
        + uu * (1 - vv) * p[y1][:, x2]
        + uu * vv * p[y2][:, x2]
    )
    return out[..., 0] if gray else out


# ---------------------------------------------------------------------------
# scene merging
# ---------------------------------------------------------------------------

def _alpha_select_numerators(alpha):
    # alpha/256 select probability, except fully-opaque 255 -> 1.0 (row 256)
    a = alpha.astype(np.int64)
    return np.where(a == 255, 256, a)


def merge_scene_sc(background, foreground, alpha, stream_length=256,
                   seq_data=DATA_SPEC, seq_select=MERGE_SELECT_SPEC):
    """Per-pixel 2-to-1 MUX compositing: select 0 routes the background.

    Background and foreground streams share one sequence; the alpha select
    stream comes from a second, uncorrelated one.
    """
    _check_stream_length(stream_length)
    bg, fg = background.pixels, foreground.pixels
    if bg.shape != fg.shape or alpha.alpha.shape != bg.shape[:2]:
        raise DomainError(
            f"dimension mismatch: bg {bg.shape}, fg {fg.shape}, alpha {alpha.alpha.shape}"
        )
    n = stream_length
    val = _packed_table(seq_data, n)
    sel_table = _packed_table(seq_select, n)
    sel_nums = _alpha_select_numerators(alpha.alpha)
    out = np.empty_like(bg)
    for row in range(bg.shape[0]):
        sel = sel_table[sel_nums[row]]  # (W, words)
        for c in range(3):
            bg_s = val[bg[row, :, c]]
            fg_s = val[fg[row, :, c]]
            words = (bg_s & ~sel) | (fg_s & sel)
            counts = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
            out[row, :, c] = _counts_to_pixels(counts, n)
    return RgbImage(out)


def merge_reference(background, foreground, alpha):
    """Exact compositing oracle as float64, same alpha semantics as the SC path."""
    bg = background.pixels.astype(np.int64)
    fg = foreground.pixels.astype(np.int64)
    if bg.shape != fg.shape or alpha.alpha.shape != bg.shape[:2]:
        raise DomainError("dimension mismatch between frames and alpha")
    a = _alpha_select_numerators(alpha.alpha)[..., None]
    return (bg * (256 - a) + fg * a) / 256.0
