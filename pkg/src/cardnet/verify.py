"""Oracles that check constructed networks against their contracts.

Selection networks are checked exhaustively on 0/1 inputs (all ``2**n`` of
them, in lexicographic order) or on random integer inputs. Mergers are checked
on inputs drawn to satisfy their preconditions, against a brute-force sort.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import constructions as C
from .network import (
    ComparatorNetwork,
    NetworkError,
    dominates,
    evaluate,
    evaluate_batch,
    is_sdominating,
    is_top_k_sorted,
    is_vshaped,
)

EXHAUSTIVE_MAX_N = 24
_CHUNK = 1 << 16


@dataclass
class VerifyReport:
    network: str
    mode: str
    tested: int = 0
    failures: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        text = f"{verdict} {self.network} [{self.mode}] {self.tested - len(self.failures)}/{self.tested} passed"
        if self.failures:
            x, y = self.failures[0]
            text += f"\n  witness: input {list(x)} -> output {list(y)}"
        return text


def _workers(workers):
    if workers is None:
        workers = int(os.environ.get("CARDNET_THREADS", "0") or 0)
    return workers if workers > 0 else (os.cpu_count() or 1)


def top_k_sorted_rows(Y: np.ndarray, k: int) -> np.ndarray:
    """Boolean mask of rows of ``Y`` that are top-k sorted."""
    ok = np.all(Y[:, : k - 1] >= Y[:, 1:k], axis=1)
    if k < Y.shape[1]:
        ok &= Y[:, :k].min(axis=1) >= Y[:, k:].max(axis=1)
    return ok


def binary_inputs(n: int, start: int = 0, stop: int | None = None) -> np.ndarray:
    """Rows ``start..stop-1`` of all 0/1 vectors of length ``n`` in lexicographic order."""
    stop = 2**n if stop is None else stop
    idx = np.arange(start, stop, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] >> shifts) & 1).astype(np.uint8)


def _check_chunk(f, k, start, stop):
    X = binary_inputs(f.n, start, stop)
    Y = evaluate_batch(f, X)
    bad = np.flatnonzero(~top_k_sorted_rows(Y, k))
    return [(tuple(int(v) for v in X[i]), tuple(int(v) for v in Y[i])) for i in bad]


def verify_selection_exhaustive(f: ComparatorNetwork, k: int, name: str | None = None,
                                workers: int | None = None) -> VerifyReport:
    if f.n > EXHAUSTIVE_MAX_N:
        raise NetworkError(
            f"exhaustive check of {f.n} channels exceeds the {EXHAUSTIVE_MAX_N}-channel budget; "
            "use random mode instead")
    if not 1 <= k <= f.n:
        raise NetworkError(f"k={k} out of range for width {f.n}")
    total = 2**f.n
    bounds = [(s, min(s + _CHUNK, total)) for s in range(0, total, _CHUNK)]
    report = VerifyReport(name or f"network(n={f.n})", "exhaustive-binary", total)
    nw = min(_workers(workers), len(bounds))
    if nw > 1:
        with ThreadPoolExecutor(nw) as pool:
            parts = list(pool.map(lambda b: _check_chunk(f, k, *b), bounds))
    else:
        parts = [_check_chunk(f, k, *b) for b in bounds]
    for part in parts:
        report.failures.extend(part)
    return report


def verify_selection_random(f: ComparatorNetwork, k: int, trials: int = 1000, seed: int = 0,
                            name: str | None = None) -> VerifyReport:
    if trials < 1:
        raise NetworkError("trials must be positive")
    if not 1 <= k <= f.n:
        raise NetworkError(f"k={k} out of range for width {f.n}")
    rng = np.random.default_rng(seed)
    X = rng.integers(0, 2**16, size=(trials, f.n), dtype=np.int64)
    Y = evaluate_batch(f, X)
    bad = np.flatnonzero(~top_k_sorted_rows(Y, k))
    report = VerifyReport(name or f"network(n={f.n})", "random-integer", trials)
    report.failures = [(tuple(int(v) for v in X[i]), tuple(int(v) for v in Y[i])) for i in bad]
    return report


# -- merger inputs ------------------------------------------------------------------

def merger_precondition(l, r, k: int) -> bool:
    """``l`` top-k sorted, ``r`` top-k/2 sorted, ``l[:k/2]`` dominates ``r[:k/2]``."""
    h = k // 2
    if len(l) < k or len(r) < h:
        return False
    return is_top_k_sorted(l, k) and is_top_k_sorted(r, h) and dominates(l[:h], r[:h])


def random_merger_input(k: int, rng: np.random.Generator, high: int = 16):
    """Rejection-sample ``(l, r)``, both of length ``k``, satisfying :func:`merger_precondition`."""
    h = k // 2
    while True:
        l = sorted(rng.integers(0, high, size=k).tolist(), reverse=True)
        r = sorted(rng.integers(0, high, size=k).tolist(), reverse=True)
        if dominates(l[:h], r[:h]):
            return tuple(l), tuple(r)


def binary_merger_inputs(k: int):
    """All 0/1 windows of width ``2k`` satisfying the merger precondition."""
    for row in binary_inputs(2 * k):
        l, r = tuple(int(v) for v in row[:k]), tuple(int(v) for v in row[k:])
        if merger_precondition(l, r, k):
            yield l, r


MERGERS = {
    "pw-hbit-merge": C.make_pw_hbit_merge,
    "pw-bit-merge": C.make_pw_bit_merge,
}


def front_sequence(k: int, l, r) -> tuple[int, ...]:
    """The sequence fed to the second merger stage: ``l_1..l_{k/2}`` followed by the split's upper half."""
    y = evaluate(C.make_merger_front(k), tuple(l) + tuple(r))
    return y[:k]


def verify_merger_contract(kind: str, k: int, trials: int = 1000, seed: int = 0,
                           exhaustive: bool = False) -> VerifyReport:
    """Check that a merger outputs the sorted ``k`` largest of ``l :: r`` on valid inputs.

    Each input also has its intermediate sequence checked to be v-shaped and
    s-dominating; a violation is recorded as a failure like a wrong output.
    """
    try:
        net = MERGERS[kind](k)
    except KeyError:
        raise NetworkError(f"unknown merger {kind!r}") from None
    if exhaustive:
        inputs = list(binary_merger_inputs(k))
        mode = "exhaustive-binary"
    else:
        rng = np.random.default_rng(seed)
        inputs = [random_merger_input(k, rng) for _ in range(trials)]
        mode = "random-integer"
    report = VerifyReport(f"{kind}(k={k})", mode, len(inputs))
    for l, r in inputs:
        x = l + r
        y = evaluate(net, x)
        b = front_sequence(k, l, r)
        expected = tuple(sorted(x, reverse=True)[:k])
        if y[:k] != expected or not (is_vshaped(b) and is_sdominating(b)):
            report.failures.append((x, y))
    return report


# -- sequence generators for the structural lemmas ---------------------------------

def random_bitonic(n: int, rng: np.random.Generator, high: int = 16) -> tuple[int, ...]:
    """Ascending run, then descending run, then a random circular shift."""
    peak = int(rng.integers(0, n))
    up = sorted(rng.integers(0, high, size=peak + 1).tolist())
    down = sorted(rng.integers(0, up[-1] + 1, size=n - peak - 1).tolist(), reverse=True)
    s = up + down
    shift = int(rng.integers(0, n))
    return tuple(s[shift:] + s[:shift])


def random_vshape_sdominating(k: int, rng: np.random.Generator, high: int = 16) -> tuple[int, ...]:
    """A v-shape s-dominating sequence of even length ``k``.

    A nonincreasing prefix of length ``i > k/2`` is drawn first; the
    nondecreasing tail is then bounded above by the mirrored prefix elements.
    """
    i = int(rng.integers(k // 2 + 1, k + 1))
    b = sorted(rng.integers(0, high, size=i).tolist(), reverse=True)
    for pos in range(i, k):  # 0-based; mirror of pos is k-1-pos < i
        lo, hi = b[-1], b[k - 1 - pos]
        b.append(int(rng.integers(lo, hi + 1)))
    return tuple(b)
