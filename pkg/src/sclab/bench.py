"""Exhaustive SC accuracy benchmarks over all 8-bit input pairs.

For every stream length the harness generates the comparator threshold form of
both sequences, builds the 2^n packed streams each side can produce, and
sweeps every (k1, k2) input pair through the real packed-word kernels.  Error
accumulation uses exact integer sums of absolute numerator errors, so results
are identical at any worker count and in any summation order.
"""

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction

import numpy as np

from .errors import ConfigurationError
from .sequences import resolve_spec, sequence_thresholds

_WORD = 64


@dataclass(frozen=True)
class BenchConfig:
    """One sweep: operation, the two sequence specs, and the lengths to visit."""

    operation: str
    sequence_pair: tuple
    lengths: tuple
    input_bits: int = 8
    workers: int = None

    def __post_init__(self):
        if self.operation not in ("mul", "add"):
            raise ConfigurationError(f"operation must be 'mul' or 'add', got {self.operation!r}")
        if list(self.lengths) != sorted(self.lengths):
            raise ConfigurationError("lengths must be ascending")
        for n in self.lengths:
            if n < 2 or n & (n - 1):
                raise ConfigurationError(f"lengths must be powers of 2, got {n}")
        if not 1 <= self.input_bits <= 16:
            raise ConfigurationError(f"input_bits must be in 1..16, got {self.input_bits}")


@dataclass(frozen=True)
class MaeRow:
    length: int
    mae_percent: Fraction
    wall_seconds: float


@dataclass
class MaeReport:
    operation: str
    pair_label: str
    input_bits: int
    rows: list = field(default_factory=list)

    def mae_by_length(self):
        return {row.length: row.mae_percent for row in self.rows}


def _packed_rows(thresholds, levels):
    """Packed streams for every input numerator 0..levels-1 over one sequence."""
    thresholds = np.asarray(thresholds, dtype=np.int32)
    n = thresholds.size
    bits = thresholds[None, :] < np.arange(levels, dtype=np.int32)[:, None]
    packed = np.packbits(bits, axis=1, bitorder="little")
    words = -(-n // _WORD)
    buf = np.zeros((levels, words * 8), dtype=np.uint8)
    buf[:, : packed.shape[1]] = packed
    return buf.view("<u8")


def _parallel_sum(worker, k_values, workers):
    workers = workers or os.cpu_count() or 1
    if workers <= 1:
        return sum(worker(k) for k in k_values)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(worker, k_values))


def mul_error_sum(thr_a, thr_b, input_bits=8, workers=None):
    """Exact integer sum over all input pairs of |cnt*K^2 - k1*k2*N|.

    The per-pair MAE contribution is that numerator over N*K^2.
    """
    k_count = 1 << input_bits
    n = len(thr_a)
    rows_a = _packed_rows(thr_a, k_count)
    rows_b = _packed_rows(thr_b, k_count)
    ks = np.arange(k_count, dtype=np.int64)
    kk = np.int64(k_count) * np.int64(k_count)

    def worker(k1):
        pops = np.bitwise_count(rows_a[k1][None, :] & rows_b).sum(axis=1, dtype=np.int64)
        return int(np.abs(pops * kk - (k1 * n) * ks).sum())

    return _parallel_sum(worker, range(k_count), workers)


def add_error_sum(thr_data, thr_select, input_bits=8, workers=None):
    """Exact integer sum over all pairs of |cnt*2K - (k1+k2)*N| for the MUX adder.

    Both addends come from thr_data (maximally correlated); the select stream
    encodes one half from thr_select.
    """
    k_count = 1 << input_bits
    n = len(thr_data)
    rows = _packed_rows(thr_data, k_count)
    select = _packed_rows(thr_select, k_count // 2 + 1)[k_count // 2]
    routed0 = rows & ~select[None, :]
    routed1 = rows & select[None, :]
    ks = np.arange(k_count, dtype=np.int64)

    def worker(k1):
        pops = np.bitwise_count(routed0[k1][None, :] | routed1).sum(axis=1, dtype=np.int64)
        return int(np.abs(pops * (2 * k_count) - (ks + k1) * n).sum())

    return _parallel_sum(worker, range(k_count), workers)


def _pair_thresholds(config, length):
    spec_a, spec_b = config.sequence_pair
    thr_a = sequence_thresholds(resolve_spec(spec_a, length), length, config.input_bits)
    thr_b = sequence_thresholds(resolve_spec(spec_b, length), length, config.input_bits)
    return thr_a, thr_b


def mae_mul_sweep(config):
    """MAE-percent of AND multiplication over the exhaustive input sweep."""
    if config.operation != "mul":
        raise ConfigurationError("mae_mul_sweep needs operation='mul'")
    k_count = 1 << config.input_bits
    report = _new_report(config)
    for n in config.lengths:
        start = time.perf_counter()
        err = mul_error_sum(*_pair_thresholds(config, n), config.input_bits, config.workers)
        mae = Fraction(100 * err, k_count * k_count * (n * k_count * k_count))
        report.rows.append(MaeRow(n, mae, time.perf_counter() - start))
    return report


def mae_add_sweep(config):
    """MAE-percent of MUX scaled addition over the exhaustive input sweep."""
    if config.operation != "add":
        raise ConfigurationError("mae_add_sweep needs operation='add'")
    k_count = 1 << config.input_bits
    report = _new_report(config)
    for n in config.lengths:
        start = time.perf_counter()
        err = add_error_sum(*_pair_thresholds(config, n), config.input_bits, config.workers)
        mae = Fraction(100 * err, k_count * k_count * (n * 2 * k_count))
        report.rows.append(MaeRow(n, mae, time.perf_counter() - start))
    return report


def run_bench(config):
    return mae_mul_sweep(config) if config.operation == "mul" else mae_add_sweep(config)


def _new_report(config):
    label = " & ".join(s.describe() for s in config.sequence_pair)
    return MaeReport(config.operation, label, config.input_bits)


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------

# displayed decimal places per length column, mirroring the published layout
_MUL_DECIMALS = {64: 2, 128: 2, 256: 2, 512: 3, 1024: 3, 2048: 3, 4096: 3,
                 8192: 4, 16384: 4, 32768: 4, 65536: 4}
_ADD_DECIMALS = {4: 2, 8: 2, 16: 2, 32: 2, 64: 2, 128: 2, 256: 3, 512: 2}


def display_decimals(operation, length):
    table = _MUL_DECIMALS if operation == "mul" else _ADD_DECIMALS
    return table.get(length, 4)


def round_mae(value, decimals):
    """Half-even rounding of an exact rational to a fixed-decimal string."""
    with localcontext() as ctx:
        ctx.prec = 50
        d = Decimal(value.numerator) / Decimal(value.denominator)
        return str(d.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_HALF_EVEN))


def emit_report(report, fmt):
    """CSV (length, mae_percent, wall_seconds) or a table mirroring the
    published benchmark layout (half-even rounded to column-wise decimals)."""
    if fmt == "csv":
        lines = ["length,mae_percent,wall_seconds"]
        for row in report.rows:
            lines.append(f"{row.length},{float(row.mae_percent)!r},{row.wall_seconds:.3f}")
        return "\n".join(lines) + "\n"
    if fmt == "table":
        headers = [f"2^{row.length.bit_length() - 1}" for row in report.rows]
        cells = [
            round_mae(row.mae_percent, display_decimals(report.operation, row.length))
            for row in report.rows
        ]
        label = f"{report.pair_label} ({report.operation})"
        widths = [max(len(h), len(c)) for h, c in zip(headers, cells)]
        head = "sequence".ljust(len(label)) + "  " + "  ".join(
            h.rjust(w) for h, w in zip(headers, widths)
        )
        body = label + "  " + "  ".join(c.rjust(w) for c, w in zip(cells, widths))
        return head + "\n" + body + "\n"
    raise ConfigurationError(f"unknown report format {fmt!r}")
