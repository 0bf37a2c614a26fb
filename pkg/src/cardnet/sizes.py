"""Exact comparator counts for every network family, their differences and bounds.

Two conventions coexist:

* ``size_*`` functions take literal widths ``n`` and ``k`` (powers of two);
* ``sd_*``, ``s_coeff``, ``p``, ``p_unfold`` and ``upper_bound`` take base-2
  logarithms, i.e. they describe networks with ``N = 2**n`` inputs selecting
  ``K = 2**k`` of them.

All arithmetic is on Python integers or :class:`fractions.Fraction`; floats
only appear in the rendered CSV ratio columns.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .constructions import _check_nk, _check_pow2, log2
from .network import NetworkError

INT64_MAX = 2**63 - 1


def size_max(n: int) -> int:
    _check_pow2("n", n)
    return n - 1


def size_split(n: int) -> int:
    return n // 2


def size_bit_merge(n: int) -> int:
    _check_pow2("n", n)
    return n * log2(n) // 2


def size_oe_sort(n: int) -> int:
    """Batcher odd-even mergesort: ``(log²n - log n + 4)·n/4 - 1``."""
    _check_pow2("n", n)
    lg = log2(n)
    return (lg * lg - lg + 4) * n // 4 - 1


def size_pw_merge(k: int) -> int:
    """Original pairwise merger, ``k log k - k + 1`` (its construction is not built here)."""
    _check_pow2("k", k)
    return k * log2(k) - k + 1


def size_pw_bit_merge(k: int) -> int:
    _check_pow2("k", k)
    return k // 2 + k * log2(k) // 2


def size_pw_hbit_merge(k: int) -> int:
    _check_pow2("k", k)
    return k * log2(k) // 2


def size_bit_sel(n: int, k: int) -> int:
    """Closed form for the bitonic selection network."""
    _check_nk(n, k)
    lk = log2(k)
    # n log²k/4 + n log k/4 + 2n - k log k/2 - k - n/k, all over 4
    num = n * lk * lk + n * lk + 8 * n - 2 * k * lk - 4 * k - 4 * (n // k)
    assert num % 4 == 0
    return num // 4


def _pw_sel_size(n, k, merger, rec):
    if k == 1:
        return n - 1
    if k == n:
        return size_oe_sort(n)
    return rec(n // 2, k) + rec(n // 2, k // 2) + n // 2 + merger(k)


@lru_cache(maxsize=None)
def size_pw_sel(n: int, k: int) -> int:
    _check_nk(n, k)
    return _pw_sel_size(n, k, size_pw_merge, size_pw_sel)


@lru_cache(maxsize=None)
def size_pw_hbit_sel(n: int, k: int) -> int:
    _check_nk(n, k)
    return _pw_sel_size(n, k, size_pw_hbit_merge, size_pw_hbit_sel)


@lru_cache(maxsize=None)
def size_pw_bit_sel(n: int, k: int) -> int:
    _check_nk(n, k)
    return _pw_sel_size(n, k, size_pw_bit_merge, size_pw_bit_sel)


def size_aux_sel(n: int, k: int) -> int:
    """Recursive calls of the improved pairwise network replaced by bitonic selectors."""
    _check_nk(n, k)
    if not 1 < k < n:
        raise NetworkError(f"aux_sel needs 1 < k < n, got n={n}, k={k}")
    return size_bit_sel(n // 2, k) + size_bit_sel(n // 2, k // 2) + n // 2 + size_pw_hbit_merge(k)


def aux_bit_sel_gap(n: int, k: int) -> Fraction:
    """``(n-k)·log k/2 - (n - k/2 - n/k)``; nonnegative for powers of two ``1 < k < n``."""
    return Fraction((n - k) * log2(k), 2) - (n - Fraction(k, 2) - Fraction(n, k))


# -- size difference between pw_sel and pw_hbit_sel (log coordinates) ----------

def _check_log_pair(n, k):
    if not 0 <= k <= n:
        raise NetworkError(f"need 0 <= k <= n, got n={n}, k={k}")


@lru_cache(maxsize=None)
def sd_recursive(n: int, k: int) -> int:
    _check_log_pair(n, k)
    if k == 0 or k == n:
        return 0
    return 2 ** (k - 1) * k - 2**k + 1 + sd_recursive(n - 1, k) + sd_recursive(n - 1, k - 1)


def s_coeff(n: int, k: int) -> int:
    _check_log_pair(n, k)
    return sum(comb(n - k + j, j) * 2 ** (k - j) for j in range(k + 1))


def sd_closed(n: int, k: int) -> int:
    _check_log_pair(n, k)
    twice = comb(n, k) * (n + 1) - s_coeff(n, k) * (n - 2 * k + 1)
    if twice % 2:
        raise ArithmeticError(f"non-integral size difference at n={n}, k={k}")
    return twice // 2 - 2**k * (k - 1) - 1


def sd_half(N: int) -> int:
    """Size difference at ``K = N/2`` for a literal width ``N``: ``N(log N - 4)/2 + log N + 2``."""
    _check_pow2("N", N, minimum=2)
    lg = log2(N)
    return N * (lg - 4) // 2 + lg + 2


# -- upper bound on the improved network (log coordinates) -----------------------

def p(n: int, k: int) -> int:
    """Size of the improved pairwise selector with ``2**n`` inputs selecting ``2**k``."""
    _check_log_pair(n, k)
    return size_pw_hbit_sel(2**n, 2**k)


def p_unfold(n: int, k: int, m: int) -> int:
    """Recursion for :func:`p` unfolded ``m`` levels deep; equals ``p(n, k)`` for every legal ``m``."""
    _check_log_pair(n, k)
    if not 0 <= m <= min(k, n - k):
        raise NetworkError(f"unfolding depth m={m} outside [0, {min(k, n - k)}]")
    head = 0
    for i in range(m):
        for j in range(i + 1):
            head += comb(i, j) * ((k - j) * 2 ** (k - j - 1) + 2 ** (n - i - 1))
    return head + sum(comb(m, i) * p(n - m, k - i) for i in range(m + 1))


def upper_bound(n: int, k: int) -> Fraction:
    """Closed-form upper bound on ``p(n, k)``, exact rational."""
    _check_log_pair(n, k)
    m = min(k, n - k)
    three_halves = Fraction(3, 2) ** m
    quad = (k - Fraction(m, 2) - Fraction(7, 4)) ** 2 + Fraction(9 * k, 2) + Fraction(79, 16)
    return (
        Fraction(2) ** (n - 2) * quad
        + 2**k * three_halves * (Fraction(k, 2) - Fraction(m, 6))
        - 2**k * (k + 1)
        - Fraction(2) ** (n - k) * three_halves
    )


# -- table ------------------------------------------------------------------------

CSV_HEADER = (
    "log_n", "log_k", "pw_sel", "pw_hbit_sel", "bit_sel",
    "upper_bound", "codish_ratio", "upper_ratio",
)


@dataclass(frozen=True)
class SizeRow:
    log_n: int
    log_k: int
    pw_sel: int
    pw_hbit_sel: int
    bit_sel: int
    upper_bound: Fraction

    @property
    def codish_ratio(self) -> Fraction:
        return Fraction(self.pw_sel - self.pw_hbit_sel, self.pw_hbit_sel)

    @property
    def upper_ratio(self) -> Fraction:
        return (self.upper_bound - self.pw_hbit_sel) / self.pw_hbit_sel


def _checked(value, what):
    if not 0 <= value <= INT64_MAX:
        raise OverflowError(f"{what}={value} does not fit a signed 64-bit integer")
    return value


def size_table(max_log_n: int) -> list[SizeRow]:
    if not 2 <= max_log_n <= 31:
        raise NetworkError(f"max_log_n must lie in [2, 31], got {max_log_n}")
    rows = []
    for ln in range(2, max_log_n + 1):
        for lk in range(1, ln):
            N, K = 2**ln, 2**lk
            rows.append(SizeRow(
                ln, lk,
                _checked(size_pw_sel(N, K), "pw_sel"),
                _checked(size_pw_hbit_sel(N, K), "pw_hbit_sel"),
                _checked(size_bit_sel(N, K), "bit_sel"),
                upper_bound(ln, lk),
            ))
    return rows


def write_size_csv(rows: list[SizeRow], out) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([
            r.log_n, r.log_k, r.pw_sel, r.pw_hbit_sel, r.bit_sel,
            f"{float(r.upper_bound):.6f}",
            f"{float(r.codish_ratio):.6f}",
            f"{float(r.upper_ratio):.6f}",
        ])
    text = buf.getvalue()
    if out is not None:
        if isinstance(out, (str, os.PathLike)):
            with open(out, "w", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)
    return text


def emit_size_table(max_log_n: int, out=None) -> list[SizeRow]:
    """Compute all rows with ``1 <= log_k < log_n <= max_log_n`` and write them as CSV to ``out``."""
    rows = size_table(max_log_n)
    write_size_csv(rows, out)
    return rows
