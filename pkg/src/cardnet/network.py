"""Comparators, comparator networks and the sequence predicates used to reason about them.

Channels are 1-based throughout. A comparator ``(hi, lo)`` routes the maximum
of its two inputs to channel ``hi`` and the minimum to ``lo``, so every sorted
sequence in this package is *nonincreasing*.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class NetworkError(ValueError):
    """Invalid construction parameters or malformed network data."""


class Comparator(NamedTuple):
    hi: int
    lo: int


@dataclass(frozen=True)
class ComparatorNetwork:
    n: int
    comps: tuple[Comparator, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise NetworkError(f"channel count must be positive, got {self.n}")
        comps = tuple(Comparator(int(i), int(j)) for i, j in self.comps)
        for c in comps:
            if not 1 <= c.hi < c.lo <= self.n:
                raise NetworkError(f"comparator {tuple(c)} invalid for {self.n} channels")
        object.__setattr__(self, "comps", comps)

    def size(self) -> int:
        return len(self.comps)

    def __len__(self):
        return len(self.comps)

    def __iter__(self):
        return iter(self.comps)

    def __call__(self, s):
        return evaluate(self, s)

    def then(self, other: ComparatorNetwork) -> ComparatorNetwork:
        """Sequential composition: ``self`` first, then ``other``."""
        if other.n != self.n:
            raise NetworkError("cannot compose networks of different widths")
        return ComparatorNetwork(self.n, self.comps + other.comps)

    def to_text(self) -> str:
        lines = [f"n {self.n}"]
        lines += [f"{c.hi} {c.lo}" for c in self.comps]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ComparatorNetwork:
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows or len(rows[0]) != 2 or rows[0][0] != "n":
            raise NetworkError("first line must be 'n <channels>'")
        try:
            n = int(rows[0][1])
            comps = []
            for lineno, row in enumerate(rows[1:], start=2):
                if len(row) != 2:
                    raise NetworkError(f"line {lineno}: expected '<hi> <lo>'")
                comps.append(Comparator(int(row[0]), int(row[1])))
        except ValueError as exc:
            if isinstance(exc, NetworkError):
                raise
            raise NetworkError(str(exc)) from None
        return cls(n, tuple(comps))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "comparators": [list(c) for c in self.comps]})

    @classmethod
    def from_json(cls, text: str) -> ComparatorNetwork:
        data = json.loads(text)
        return cls(data["n"], tuple(tuple(c) for c in data["comparators"]))


def identity(n: int) -> ComparatorNetwork:
    return ComparatorNetwork(n)


def apply_comparator(c: Comparator, s: Sequence[int]) -> tuple[int, ...]:
    hi, lo = c
    if not 1 <= hi < lo <= len(s):
        raise NetworkError(f"comparator {tuple(c)} out of range for length {len(s)}")
    out = list(s)
    a, b = out[hi - 1], out[lo - 1]
    if a < b:
        out[hi - 1], out[lo - 1] = b, a
    return tuple(out)


def evaluate(f: ComparatorNetwork, s: Sequence[int]) -> tuple[int, ...]:
    if len(s) != f.n:
        raise NetworkError(f"input length {len(s)} does not match network width {f.n}")
    out = list(s)
    for hi, lo in f.comps:
        a, b = out[hi - 1], out[lo - 1]
        if a < b:
            out[hi - 1], out[lo - 1] = b, a
    return tuple(out)


def evaluate_batch(f: ComparatorNetwork, X: np.ndarray) -> np.ndarray:
    """Run every row of ``X`` (shape ``(batch, n)``) through ``f``. Returns a new array."""
    X = np.array(X, copy=True)
    if X.ndim != 2 or X.shape[1] != f.n:
        raise NetworkError(f"expected shape (batch, {f.n}), got {X.shape}")
    for hi, lo in f.comps:
        a = X[:, hi - 1].copy()
        b = X[:, lo - 1]
        np.maximum(a, b, out=X[:, hi - 1])
        np.minimum(a, b, out=X[:, lo - 1])
    return X


# -- sequence predicates ------------------------------------------------------

def is_sorted(s: Sequence[int]) -> bool:
    return all(s[i] >= s[i + 1] for i in range(len(s) - 1))


def _is_nondecreasing(s):
    return all(s[i] <= s[i + 1] for i in range(len(s) - 1))


def all_geq(a: Iterable[int], b: Iterable[int]) -> bool:
    """Every element of ``a`` is at least every element of ``b``."""
    a, b = list(a), list(b)
    if not a or not b:
        return True
    return min(a) >= max(b)


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        raise NetworkError("domination needs sequences of equal length")
    return all(x >= y for x, y in zip(a, b))


def is_top_k_sorted(s: Sequence[int], k: int) -> bool:
    if not 1 <= k <= len(s):
        raise NetworkError(f"k={k} out of range for length {len(s)}")
    return is_sorted(s[:k]) and all_geq(s[:k], s[k:])


def _up_down(s):
    i = 0
    while i + 1 < len(s) and s[i] <= s[i + 1]:
        i += 1
    while i + 1 < len(s) and s[i] >= s[i + 1]:
        i += 1
    return i + 1 >= len(s)


def is_bitonic(s: Sequence[int]) -> bool:
    s = list(s)
    return any(_up_down(s[r:] + s[:r]) for r in range(max(len(s), 1)))


def is_vshaped(s: Sequence[int]) -> bool:
    i = 0
    while i + 1 < len(s) and s[i] >= s[i + 1]:
        i += 1
    return _is_nondecreasing(s[i:])


def _require_even(s):
    if len(s) % 2:
        raise NetworkError(f"sequence length must be even, got {len(s)}")


def is_sdominating(s: Sequence[int]) -> bool:
    _require_even(s)
    k = len(s)
    return all(s[j] >= s[k - 1 - j] for j in range(k // 2))


def is_vshape_sdominating(s: Sequence[int]) -> bool:
    return len(s) % 2 == 0 and is_vshaped(s) and is_sdominating(s)


def vshape_point(s: Sequence[int]) -> int:
    """Smallest 1-based ``i > k/2`` with ``s_i < s_{i+1}``; ``k`` when ``s`` is nonincreasing."""
    _require_even(s)
    if not is_vshape_sdominating(s):
        raise NetworkError("sequence is not v-shape s-dominating")
    k = len(s)
    for i in range(k // 2 + 1, k):
        if s[i - 1] < s[i]:
            return i
    return k


def left(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(s[: len(s) // 2])


def right(s: Sequence[int]) -> tuple[int, ...]:
    return tuple(s[len(s) // 2:])
