"""Generators for max, splitter, merger, sorter and selection networks.

Every builder has a private generator form taking the list of channels it acts
on, so recursive constructions compose by passing sub-lists. The public
``make_*`` functions wrap them into a :class:`ComparatorNetwork` on channels
``1..n``. All parameters are assumed to be powers of two.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .network import Comparator, ComparatorNetwork, NetworkError

Pairs = Iterator[Comparator]


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def log2(n: int) -> int:
    return n.bit_length() - 1


def _check_pow2(name, value, minimum=1):
    if not isinstance(value, int) or value < minimum or not is_power_of_two(value):
        raise NetworkError(f"{name} must be a power of two >= {minimum}, got {value!r}")


def _check_nk(n, k):
    _check_pow2("n", n)
    _check_pow2("k", k)
    if k > n:
        raise NetworkError(f"k={k} exceeds n={n}")


def _network(n, pairs):
    return ComparatorNetwork(n, tuple(pairs))


# -- channel-level generators ---------------------------------------------------

def _max(ch: Sequence[int]) -> Pairs:
    # tournament tree; max ends on ch[0]
    if len(ch) < 2:
        return
    half = len(ch) // 2
    yield from _max(ch[:half])
    yield from _max(ch[half:])
    yield Comparator(ch[0], ch[half])


def _split(ch: Sequence[int]) -> Pairs:
    half = len(ch) // 2
    for i in range(half):
        yield Comparator(ch[i], ch[half + i])


def _bit_split(ch: Sequence[int]) -> Pairs:
    n = len(ch)
    for i in range(n // 2):
        yield Comparator(ch[i], ch[n - 1 - i])


def _half_split(ch: Sequence[int]) -> Pairs:
    k = len(ch)
    for i in range(k // 4, k // 2):
        yield Comparator(ch[i], ch[k // 2 + i])


def _bit_merge(ch: Sequence[int]) -> Pairs:
    if len(ch) < 2:
        return
    yield from _split(ch)
    half = len(ch) // 2
    yield from _bit_merge(ch[:half])
    yield from _bit_merge(ch[half:])


def _oe_merge(ch: Sequence[int]) -> Pairs:
    # merges two sorted halves of ch
    if len(ch) < 2:
        return
    if len(ch) == 2:
        yield Comparator(ch[0], ch[1])
        return
    yield from _oe_merge(ch[0::2])
    yield from _oe_merge(ch[1::2])
    for a, b in zip(ch[1::2], ch[2::2]):
        yield Comparator(a, b)


def _oe_sort(ch: Sequence[int]) -> Pairs:
    if len(ch) < 2:
        return
    half = len(ch) // 2
    yield from _oe_sort(ch[:half])
    yield from _oe_sort(ch[half:])
    yield from _oe_merge(ch)


def _half_bit_merge(ch: Sequence[int]) -> Pairs:
    if len(ch) <= 2:
        return
    yield from _half_split(ch)
    half = len(ch) // 2
    yield from _half_bit_merge(ch[:half])
    yield from _bit_merge(ch[half:])


def _merger_window(ch: Sequence[int], k: int) -> list[int]:
    # ch holds l_1..l_k followed by r_1..r_{k/2}; the bitonic split acts on
    # l_{k/2+1..k} :: r_{1..k/2}
    return list(ch[k // 2: k]) + list(ch[k: k + k // 2])


def _pw_bit_merge(ch: Sequence[int], k: int) -> Pairs:
    yield from _bit_split(_merger_window(ch, k))
    yield from _bit_merge(ch[:k])


def _pw_hbit_merge(ch: Sequence[int], k: int) -> Pairs:
    yield from _bit_split(_merger_window(ch, k))
    yield from _half_bit_merge(ch[:k])


def _bit_sel(ch: Sequence[int], k: int) -> Pairs:
    blocks = [ch[i: i + k] for i in range(0, len(ch), k)]
    for block in blocks:
        yield from _oe_sort(block)
    while len(blocks) > 1:
        merged = []
        for a, b in zip(blocks[0::2], blocks[1::2]):
            yield from _bit_split(list(a) + list(b))
            yield from _bit_merge(a)
            merged.append(a)
        blocks = merged


def _pw_sel(ch: Sequence[int], k: int, half: bool) -> Pairs:
    n = len(ch)
    if k == 1:
        yield from _max(ch)
        return
    if k == n:
        yield from _oe_sort(ch)
        return
    yield from _split(ch)
    lch, rch = ch[: n // 2], ch[n // 2:]
    yield from _pw_sel(lch, k, half)
    yield from _pw_sel(rch, k // 2, half)
    # l_{k+1..n/2} and r_{k/2+1..n/2} pass through untouched
    merge_ch = list(lch[:k]) + list(rch[: k // 2])
    if half:
        yield from _pw_hbit_merge(merge_ch, k)
    else:
        yield from _pw_bit_merge(merge_ch, k)


# -- public builders -----------------------------------------------------------------

def make_max(n: int) -> ComparatorNetwork:
    _check_pow2("n", n)
    return _network(n, _max(range(1, n + 1)))


def make_split(n: int) -> ComparatorNetwork:
    if n < 2 or n % 2:
        raise NetworkError(f"splitter needs an even width, got {n}")
    return _network(n, _split(range(1, n + 1)))


def make_bit_split(n: int) -> ComparatorNetwork:
    if n < 2 or n % 2:
        raise NetworkError(f"bitonic splitter needs an even width, got {n}")
    return _network(n, _bit_split(range(1, n + 1)))


def make_half_split(k: int) -> ComparatorNetwork:
    _check_pow2("k", k, minimum=4)
    return _network(k, _half_split(range(1, k + 1)))


def make_bit_merge(n: int) -> ComparatorNetwork:
    _check_pow2("n", n)
    return _network(n, _bit_merge(range(1, n + 1)))


def make_half_bit_merge(k: int) -> ComparatorNetwork:
    """Sorts any v-shape s-dominating input of width ``k``."""
    _check_pow2("k", k, minimum=2)
    return _network(k, _half_bit_merge(range(1, k + 1)))


def make_oe_sort(n: int) -> ComparatorNetwork:
    _check_pow2("n", n)
    return _network(n, _oe_sort(range(1, n + 1)))


def make_bit_sel(n: int, k: int) -> ComparatorNetwork:
    _check_nk(n, k)
    return _network(n, _bit_sel(range(1, n + 1), k))


def make_pw_bit_merge(k: int) -> ComparatorNetwork:
    """Improved pairwise merger (bitonic splitter + full bitonic merger).

    The network has ``2k`` channels: ``l_1..l_k`` on channels ``1..k`` and
    ``r_1..r_k`` on ``k+1..2k``. Only ``r_1..r_{k/2}`` are read; the rest of
    ``r`` passes through. The sorted ``k`` largest end on channels ``1..k``.
    """
    _check_pow2("k", k, minimum=2)
    return _network(2 * k, _pw_bit_merge(range(1, 2 * k + 1), k))


def make_pw_hbit_merge(k: int) -> ComparatorNetwork:
    """Like :func:`make_pw_bit_merge` but with half splitters; ``k*log(k)/2`` comparators."""
    _check_pow2("k", k, minimum=2)
    return _network(2 * k, _pw_hbit_merge(range(1, 2 * k + 1), k))


def make_merger_front(k: int) -> ComparatorNetwork:
    """First stage shared by both pairwise mergers, on the same ``2k`` layout."""
    _check_pow2("k", k, minimum=2)
    return _network(2 * k, _bit_split(_merger_window(range(1, 2 * k + 1), k)))


def make_pw_hbit_sel(n: int, k: int, half: bool = True) -> ComparatorNetwork:
    """Pairwise selection network with the improved merger.

    ``half=False`` gives the variant merging with the bitonic-splitter merger
    (``make_pw_bit_merge``) instead of the half-splitter one.
    """
    _check_nk(n, k)
    return _network(n, _pw_sel(range(1, n + 1), k, half))


def make_pw_bit_sel(n: int, k: int) -> ComparatorNetwork:
    return make_pw_hbit_sel(n, k, half=False)


BUILDERS = {
    "max": make_max,
    "split": make_split,
    "bit-split": make_bit_split,
    "half-split": make_half_split,
    "oe-sort": make_oe_sort,
    "bit-merge": make_bit_merge,
    "pw-bit-merge": make_pw_bit_merge,
    "pw-hbit-merge": make_pw_hbit_merge,
    "bit-sel": make_bit_sel,
    "pw-bit-sel": make_pw_bit_sel,
    "pw-hbit-sel": make_pw_hbit_sel,
}

SELECTION_KINDS = ("pw-hbit-sel", "pw-bit-sel", "bit-sel")


def build(kind: str, n: int, k: int | None = None) -> ComparatorNetwork:
    """Build a network by its CLI name. Single-parameter kinds take their size from ``n``."""
    try:
        builder = BUILDERS[kind]
    except KeyError:
        raise NetworkError(f"unknown network type {kind!r}") from None
    if kind in SELECTION_KINDS:
        if k is None:
            raise NetworkError(f"{kind} needs k")
        return builder(n, k)
    return builder(n)
