"""Exit criteria for the package. Each test prints one PASS/FAIL line; run with ``pytest -s``
(or ``python tests/test_acceptance.py``) to see them."""

import itertools
import time

import numpy as np
import pytest
from pysat.solvers import Minisat22

from cardnet import constructions as C
from cardnet import sizes as S
from cardnet.cnf import encode_cardinality, encode_network
from cardnet.network import all_geq, evaluate, is_bitonic, is_vshape_sdominating, left, right
from cardnet.propagation import SelectionEncoding, arc_sweep, subsets_to_check, tree_root
from cardnet.verify import (
    random_bitonic,
    random_vshape_sdominating,
    verify_merger_contract,
    verify_selection_exhaustive,
)

SELECTORS = {
    "pw-hbit-sel": C.make_pw_hbit_sel,
    "pw-bit-sel": C.make_pw_bit_sel,
    "bit-sel": C.make_bit_sel,
}


def pow2_upto(n, start=1):
    v = start
    while v <= n:
        yield v
        v *= 2


def report(num, title, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def test_01_selection_correctness():
    t0 = time.perf_counter()
    bad = []
    for n in (2, 4, 8, 16):
        for k in pow2_upto(n):
            for name, make in SELECTORS.items():
                rep = verify_selection_exhaustive(make(n, k), k, name=name)
                if not rep.passed or rep.tested != 2**n:
                    bad.append((name, n, k))
    elapsed = time.perf_counter() - t0
    report(1, "exhaustive binary selection check", not bad and elapsed < 10,
           f"{elapsed:.2f}s, failures={bad}")


def test_02_size_formula_agreement():
    bad = []
    for n in pow2_upto(2**10):
        for k in pow2_upto(n):
            if C.make_bit_sel(n, k).size() != S.size_bit_sel(n, k):
                bad.append(("bit_sel", n, k))
            if C.make_pw_hbit_sel(n, k).size() != S.size_pw_hbit_sel(n, k):
                bad.append(("pw_hbit_sel", n, k))
    for k in pow2_upto(2**10, 2):
        if C.make_pw_hbit_merge(k).size() != k * S.log2(k) // 2:
            bad.append(("pw_hbit_merge", k))
    report(2, "constructed sizes equal the closed/recursive formulas", not bad, str(bad[:5]))


def test_03_size_difference():
    bad = [(n, k) for n in range(21) for k in range(n + 1) if S.sd_recursive(n, k) != S.sd_closed(n, k)]
    for n in range(21):
        for k in range(n + 1):
            N, K = 2**n, 2**k
            if S.size_pw_sel(N, K) - S.size_pw_hbit_sel(N, K) != S.sd_closed(n, k):
                bad.append(("diff", n, k))
    spots = {8: 1, 16: 6, 32: 23}
    for N, want in spots.items():
        n = S.log2(N)
        got = S.size_pw_sel(N, N // 2) - S.size_pw_hbit_sel(N, N // 2)
        if not got == want == S.sd_half(N):
            bad.append(("half-k", N, got))
    report(3, "size difference recursion, closed form and k = N/2 values agree", not bad, str(bad[:5]))


def test_04_bound_chain():
    bad = []
    for ln in range(2, 16):
        for lk in range(1, ln):
            n, k = 2**ln, 2**lk
            if not S.size_pw_hbit_sel(n, k) <= S.size_aux_sel(n, k) <= S.size_bit_sel(n, k):
                bad.append(("chain", n, k))
            if S.aux_bit_sel_gap(n, k) < 0:
                bad.append(("gap", n, k))
    for n in range(13):
        for k in range(n + 1):
            vals = {S.p_unfold(n, k, m) for m in range(min(k, n - k) + 1)}
            if vals != {S.p(n, k)} or S.p(n, k) > S.upper_bound(n, k):
                bad.append(("unfold", n, k))
    tight = S.p_unfold(3, 2, 1) == S.upper_bound(3, 2) == 18
    report(4, "size bound chain and unfolded upper bound", not bad and tight, str(bad[:5]))


def test_05_saving_curve_shape():
    rows = [r for r in S.size_table(7) if r.log_n == 7]
    ratio = {r.log_k: r.codish_ratio for r in rows}
    argmax = max(ratio, key=ratio.get)
    ok = (
        ratio[1] == 0
        and all(ratio[lk] > 0 for lk in range(2, 7))
        and argmax >= 4
        and all(r.codish_ratio >= 0 and r.upper_ratio >= 0 for r in S.size_table(15))
    )
    report(5, "pw_sel/pw_hbit_sel ratio at N=2^7: zero at K=2, positive above, peak in upper range", ok,
           f"peak at log k={argmax}, ratios={[round(float(v), 4) for v in ratio.values()]}")


def test_06_encoding_semantics():
    bad = []
    for n in range(1, 11):
        xs = list(itertools.product((0, 1), repeat=n))
        for k in range(1, n + 1):
            f = encode_cardinality(n, k, "lt", "half")
            with Minisat22(bootstrap_with=f.clauses) as solver:
                for x in xs:
                    sat = solver.solve(assumptions=[i if x[i - 1] else -i for i in range(1, n + 1)])
                    if sat != (sum(x) < k):
                        bad.append((n, k, x))
                        break
    report(6, "projected models are exactly the assignments with < k true", not bad, str(bad[:3]))


def test_07_arc_consistency():
    t0 = time.perf_counter()
    bad = []
    for n, samples in ((4, None), (8, None), (16, 100), (32, 100)):
        for k in pow2_upto(n):
            for name, make in SELECTORS.items():
                res = arc_sweep(make(n, k), k, subsets_to_check(n, k, samples, seed=0))
                if not res.passed:
                    bad.append((name, n, k, res.failures[0]))
    elapsed = time.perf_counter() - t0
    report(7, "forward propagation and arc-consistency", not bad and elapsed < 60,
           f"{elapsed:.2f}s, failures={bad[:3]}")


def test_08_comparator_propagation():
    from cardnet.propagation import unit_propagate
    h = encode_network(C.make_split(2), "half")
    f = encode_network(C.make_split(2), "full")

    def vals(formula, assume):
        st = unit_propagate(formula, assume)
        return tuple(st[v] for v in (1, 2, 3, 4))

    checks = [
        vals(h, [1])[2] is True and vals(h, [2])[2] is True,
        vals(h, [1, 2])[2:] == (True, True),
        vals(h, [-3])[:2] == (False, False),
        vals(h, [2, -4])[0] is False,
        vals(h, [1, -4])[1] is False,
        # converse implications of the full encoding
        vals(f, [4])[:2] == (True, True),
        vals(f, [-1, -2])[2:] == (False, False),
        vals(f, [3, -1])[1] is True,
        vals(f, [-1])[3] is False,
    ]
    report(8, "single-comparator propagation properties", all(checks), str(checks))


def test_09_structural_lemmas():
    rng = np.random.default_rng(0)
    trials = 10_000
    bad = []
    for n in (4, 8, 16):
        split = C.make_split(n)
        for _ in range(trials):
            y = evaluate(split, random_bitonic(n, rng))
            if not (is_bitonic(left(y)) and is_bitonic(right(y)) and all_geq(left(y), right(y))):
                bad.append(("split-bitonic", n, y))
    for k in (4, 8, 16):
        hs, sp = C.make_half_split(k), C.make_split(k)
        for b in itertools.product((0, 1), repeat=k):
            if is_vshape_sdominating(b) and evaluate(hs, b) != evaluate(sp, b):
                bad.append(("half=split binary", k, b))
        for _ in range(trials):
            b = random_vshape_sdominating(k, rng)
            y = evaluate(hs, b)
            if y != evaluate(sp, b):
                bad.append(("half=split", k, b))
            if not (is_vshape_sdominating(left(y)) and is_bitonic(right(y)) and all_geq(left(y), right(y))):
                bad.append(("half-split outputs", k, b))
    for kind in ("pw-bit-merge", "pw-hbit-merge"):
        for k in (4, 8, 16):
            rep = verify_merger_contract(kind, k, trials=trials, seed=k)
            if not rep.passed or rep.tested < trials:
                bad.append((kind, k, rep.failures[:1]))
    report(9, "structural lemmas and merger contracts over 10^4 inputs each", not bad, str(bad[:3]))


def test_10_confluence_paths_tree():
    import random
    from cardnet.cnf import CnfFormula
    from cardnet.propagation import unit_propagate

    bad = []
    f = encode_network(C.make_pw_hbit_sel(8, 4), "half")
    f.clauses.append((-f.outputs[4],))
    base = unit_propagate(f, [2, 3, 7]).values
    for seed in range(100):
        clauses = list(f.clauses)
        random.Random(seed).shuffle(clauses)
        if unit_propagate(CnfFormula(f.num_vars, clauses), [2, 3, 7]).values != base:
            bad.append(("confluence", seed))

    for n in (2, 4, 8):
        for k in pow2_upto(n):
            for name, make in SELECTORS.items():
                enc = SelectionEncoding(make(n, k), k)
                for s in subsets_to_check(n, k):
                    undefined = [i for i in range(1, n + 1) if i not in s]
                    if not undefined:
                        continue
                    yk = enc.y[k]
                    for x in undefined:
                        path = enc.propagation_path(s, x)
                        if path[-1] != yk or not enc.is_path(path):
                            bad.append(("path", name, n, k, s, x))
                    if tree_root(enc.propagation_tree(s)) != yk:
                        bad.append(("tree", name, n, k, s))
    report(10, "UP confluence, propagation paths end at y_k, paths form a tree", not bad, str(bad[:3]))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-s", "-q"]))
