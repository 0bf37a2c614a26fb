import io
import itertools
import random

import pytest
from pysat.solvers import Minisat22

from cardnet.cnf import (
    CnfFormula,
    DimacsError,
    Encoding,
    encode_cardinality,
    encode_network,
    parse_dimacs,
    read_dimacs,
    to_dimacs,
    write_dimacs,
)
from cardnet.constructions import make_bit_sel, make_oe_sort, make_pw_hbit_sel
from cardnet.network import ComparatorNetwork, identity
from cardnet.propagation import unit_propagate


def wire_values(f, x):
    """Exact 0/1 value of every variable of ``encode_network(f)`` on input ``x``."""
    vals = {i + 1: bool(v) for i, v in enumerate(x)}
    wire = list(range(1, f.n + 1))
    nxt = f.n + 1
    for hi, lo in f.comps:
        a, b = wire[hi - 1], wire[lo - 1]
        vals[nxt], vals[nxt + 1] = vals[a] or vals[b], vals[a] and vals[b]
        wire[hi - 1], wire[lo - 1] = nxt, nxt + 1
        nxt += 2
    return vals


def satisfied(clauses, vals):
    return all(any(vals[abs(l)] == (l > 0) for l in c) for c in clauses)


def test_single_comparator_half():
    f = encode_network(ComparatorNetwork(2, ((1, 2),)), "half")
    assert f.num_vars == 4
    assert f.clauses == [(-1, 3), (-2, 3), (-1, -2, 4)]
    assert f.inputs == {1: 1, 2: 2} and f.outputs == {1: 3, 2: 4}


def test_single_comparator_full():
    f = encode_network(ComparatorNetwork(2, ((1, 2),)), Encoding.FULL)
    assert len(f.clauses) == 6
    models = set()
    for bits in itertools.product((False, True), repeat=4):
        vals = dict(zip(range(1, 5), bits))
        if satisfied(f.clauses, vals):
            models.add(bits)
    assert models == {(a, b, a or b, a and b) for a in (False, True) for b in (False, True)}


def test_empty_network():
    f = encode_network(identity(3))
    assert f.clauses == [] and f.outputs == f.inputs == {1: 1, 2: 2, 3: 3}


@pytest.mark.parametrize("net", [make_pw_hbit_sel(8, 4), make_bit_sel(16, 4), make_oe_sort(8)])
def test_counts(net):
    for kind, per in (("half", 3), ("full", 6)):
        f = encode_network(net, kind)
        assert f.num_clauses == per * net.size()
        assert f.num_vars == net.n + 2 * net.size()
        f.validate()


def test_full_encoding_is_functional():
    net = make_pw_hbit_sel(8, 4)
    f = encode_network(net, "full")
    with Minisat22(bootstrap_with=f.clauses) as s:
        for x in itertools.product((0, 1), repeat=8):
            assumptions = [v if x[i - 1] else -v for i, v in f.inputs.items()]
            assert s.solve(assumptions=assumptions)
            model = {abs(l): l > 0 for l in s.get_model()}
            assert model == wire_values(net, x)


def test_half_encoding_least_model_and_up():
    net = make_pw_hbit_sel(8, 2)
    f = encode_network(net, "half")
    for x in itertools.product((0, 1), repeat=8):
        exact = wire_values(net, x)
        assert satisfied(f.clauses, exact)
        # UP from the true inputs sets exactly the wires carrying a 1
        st = unit_propagate(f, [i for i in f.inputs if x[i - 1]])
        assert set(st.true_vars()) == {v for v, b in exact.items() if b}


def test_cardinality_n2_lt1():
    f = encode_cardinality(2, 1, "lt")
    assert f.clauses == [(-1, 3), (-2, 3), (-1, -2, 4), (-3,)]
    st = unit_propagate(f)
    assert st[1] is False and st[2] is False
    text = to_dimacs(f)
    assert "p cnf 4 4" in text and len([ln for ln in text.splitlines() if ln.endswith(" 0")]) == 4


def test_cardinality_le_is_lt_plus_one():
    assert encode_cardinality(6, 2, "le") == encode_cardinality(6, 3, "lt")


def test_cardinality_degenerate_bounds():
    with pytest.warns(UserWarning):
        f = encode_cardinality(8, 9, "lt")
    assert f.trivially_true and f.clauses == [] and to_dimacs(f).endswith("p cnf 0 0\n")
    g = encode_cardinality(3, 0, "lt")
    assert g.unsatisfiable_marker
    assert to_dimacs(g).endswith("p cnf 0 1\n0\n")


def test_padding_is_folded():
    f = encode_cardinality(5, 2, "lt")
    f.validate()
    assert f.inputs == {i: i for i in range(1, 6)}
    full = make_pw_hbit_sel(8, 2)
    assert f.num_vars < 8 + 2 * full.size()
    assert all(abs(l) <= f.num_vars for c in f.clauses for l in c)


def _projected_models(f, n):
    out = set()
    with Minisat22(bootstrap_with=f.clauses) as s:
        for x in itertools.product((0, 1), repeat=n):
            if s.solve(assumptions=[i if x[i - 1] else -i for i in range(1, n + 1)]):
                out.add(x)
    return out


@pytest.mark.parametrize("n, k", [(8, 3), (5, 2), (6, 4), (7, 7), (3, 1)])
def test_cardinality_semantics(n, k):
    f = encode_cardinality(n, k, "lt")
    expected = {x for x in itertools.product((0, 1), repeat=n) if sum(x) < k}
    assert _projected_models(f, n) == expected


def test_full_encoding_cardinality_semantics():
    f = encode_cardinality(6, 3, "lt", "full")
    expected = {x for x in itertools.product((0, 1), repeat=6) if sum(x) < 3}
    assert _projected_models(f, 6) == expected


# -- DIMACS -------------------------------------------------------------------------

def test_dimacs_empty():
    assert to_dimacs(CnfFormula()) == "p cnf 0 0\n"
    assert parse_dimacs("p cnf 0 0\n") == CnfFormula()


def test_dimacs_round_trip_random():
    rnd = random.Random(11)
    clauses = []
    for _ in range(100):
        vs = rnd.sample(range(1, 31), rnd.randint(1, 5))
        clauses.append(tuple(v if rnd.random() < 0.5 else -v for v in vs))
    f = CnfFormula(30, clauses, {1: 1, 2: 2}, {1: 29, 2: 30})
    buf = io.StringIO()
    write_dimacs(f, buf)
    buf.seek(0)
    assert read_dimacs(buf) == f
    g = CnfFormula(30, list(reversed(clauses)), {1: 1, 2: 2}, {1: 29, 2: 30})
    assert g == f


def test_dimacs_file_round_trip(tmp_path):
    f = encode_cardinality(8, 3, "lt")
    path = tmp_path / "c.cnf"
    write_dimacs(f, path)
    assert read_dimacs(path) == f
    assert read_dimacs(str(path)).outputs == f.outputs


@pytest.mark.parametrize("text, lineno", [
    ("p cnf x 1\n1 0\n", 1),
    ("c hi\np dnf 2 1\n1 0\n", 2),
    ("p cnf 2 1\n1 a 0\n", 2),
    ("p cnf 2 1\n1 3 0\n", 2),
    ("1 2 0\n", 1),
    ("p cnf 2 2\n1 2 0\n", 2),
    ("p cnf 2 1\n1 2\n", 2),
])
def test_dimacs_errors(text, lineno):
    with pytest.raises(DimacsError) as exc:
        parse_dimacs(text)
    assert exc.value.lineno == lineno


def test_validate_rejects_tautology():
    with pytest.raises(ValueError):
        CnfFormula(2, [(1, -1)]).validate()
