"""CNF encodings of comparator networks and of ``x_1 + ... + x_n < k`` constraints.

Each comparator with input variables ``a`` (upper), ``b`` (lower) gets two
fresh output variables ``c`` (upper, max) and ``d`` (lower, min). The half
encoding emits ``a -> c``, ``b -> c``, ``a & b -> d``; the full encoding adds
the three converse clauses so that ``c = a | b`` and ``d = a & b``.
"""

from __future__ import annotations

import io
import os
import re
import warnings
from dataclasses import dataclass, field
from enum import Enum

from .constructions import make_pw_hbit_sel
from .network import ComparatorNetwork

Clause = tuple[int, ...]


class Encoding(str, Enum):
    HALF = "half"
    FULL = "full"


class DimacsError(ValueError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass
class CnfFormula:
    num_vars: int = 0
    clauses: list[Clause] = field(default_factory=list)
    inputs: dict[int, int] = field(default_factory=dict)    # x_i -> variable id
    outputs: dict[int, int] = field(default_factory=dict)   # y_i -> variable id
    trivially_true: bool = False

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def unsatisfiable_marker(self) -> bool:
        return any(len(c) == 0 for c in self.clauses)

    def __eq__(self, other):
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and sorted(self.clauses) == sorted(other.clauses)
            and self.inputs == other.inputs
            and self.outputs == other.outputs
            and self.trivially_true == other.trivially_true
        )

    def validate(self):
        for idx, clause in enumerate(self.clauses):
            vs = {abs(l) for l in clause}
            if 0 in vs or max(vs, default=0) > self.num_vars:
                raise ValueError(f"clause {idx} references a variable outside 1..{self.num_vars}")
            if any(-l in clause for l in clause):
                raise ValueError(f"clause {idx} is tautological")


def comparator_clauses(a: int, b: int, c: int, d: int, kind: Encoding | str = Encoding.HALF) -> list[Clause]:
    clauses = [(-a, c), (-b, c), (-a, -b, d)]
    if Encoding(kind) is Encoding.FULL:
        clauses += [(-c, a, b), (-d, a), (-d, b)]
    return clauses


# Constant-false wires (padding channels) are represented by 0 in the wire map.
_FALSE = 0


def _encode(f: ComparatorNetwork, kind: Encoding, n_real: int):
    wire = [i + 1 if i < n_real else _FALSE for i in range(f.n)]
    next_var = n_real + 1
    clauses: list[Clause] = []
    for hi, lo in f.comps:
        a, b = wire[hi - 1], wire[lo - 1]
        if a == _FALSE and b == _FALSE:
            continue
        if a == _FALSE or b == _FALSE:
            # max(v, 0) = v and min(v, 0) = 0: the comparator is a pass-through
            wire[hi - 1], wire[lo - 1] = (a or b), _FALSE
            continue
        c, d = next_var, next_var + 1
        next_var += 2
        clauses += comparator_clauses(a, b, c, d, kind)
        wire[hi - 1], wire[lo - 1] = c, d
    inputs = {i: i for i in range(1, n_real + 1)}
    outputs = {i + 1: v for i, v in enumerate(wire) if v != _FALSE}
    return CnfFormula(next_var - 1, clauses, inputs, outputs)


def encode_network(f: ComparatorNetwork, kind: Encoding | str = Encoding.HALF) -> CnfFormula:
    """Inputs get ids ``1..n``; each comparator allocates ``c`` then ``d`` in order."""
    return _encode(f, Encoding(kind), f.n)


def _next_pow2(n):
    return 1 << (n - 1).bit_length()


def encode_cardinality(n_vars: int, bound: int, relation: str = "lt",
                       kind: Encoding | str = Encoding.HALF) -> CnfFormula:
    """CNF whose models, projected onto ``x_1..x_n``, are the assignments with sum ``< bound``
    (or ``<= bound`` for ``relation="le"``).

    Widths that are not powers of two are padded with constant-false channels
    after the real inputs and folded away. A bound that is not a power of two
    is served by the next larger selector with the unit clause placed on the
    ``bound``-th output.
    """
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if relation == "le":
        k = bound + 1
    elif relation == "lt":
        k = bound
    else:
        raise ValueError(f"unsupported relation {relation!r}")
    kind = Encoding(kind)
    if k <= 0:
        return CnfFormula(0, [()])
    if k > n_vars:
        warnings.warn(f"sum of {n_vars} variables < {k} always holds; emitting an empty formula",
                      stacklevel=2)
        return CnfFormula(trivially_true=True)
    width = _next_pow2(n_vars)
    net = make_pw_hbit_sel(width, _next_pow2(k))
    formula = _encode(net, kind, n_vars)
    yk = formula.outputs.get(k)
    if yk is not None:
        formula.clauses.append((-yk,))
    return formula


# -- DIMACS --------------------------------------------------------------------------

def to_dimacs(formula: CnfFormula) -> str:
    lines = []
    if formula.trivially_true:
        lines.append("c trivially true")
    lines += [f"c input x{i} = {v}" for i, v in sorted(formula.inputs.items())]
    lines += [f"c output y{i} = {v}" for i, v in sorted(formula.outputs.items())]
    lines.append(f"p cnf {formula.num_vars} {len(formula.clauses)}")
    lines += [" ".join(map(str, clause + (0,))) for clause in formula.clauses]
    return "\n".join(lines) + "\n"


def write_dimacs(formula: CnfFormula, out=None) -> str:
    """Serialize ``formula``; if ``out`` is a path or text stream, write it there too."""
    text = to_dimacs(formula)
    if isinstance(out, (str, os.PathLike)):
        with open(out, "w") as fh:
            fh.write(text)
    elif out is not None:
        out.write(text)
    return text


_MAP_RE = re.compile(r"c (input|output) ([xy])(\d+) = (\d+)\s*$")


def parse_dimacs(text: str) -> CnfFormula:
    formula = CnfFormula()
    header = None
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("c"):
            m = _MAP_RE.match(line)
            if m:
                target = formula.inputs if m.group(1) == "input" else formula.outputs
                target[int(m.group(3))] = int(m.group(4))
            elif line == "c trivially true":
                formula.trivially_true = True
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise DimacsError(lineno, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(lineno, f"malformed problem line {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(lineno, f"malformed problem line {line!r}") from None
            if min(header) < 0:
                raise DimacsError(lineno, "negative counts in problem line")
            formula.num_vars = header[0]
            continue
        if header is None:
            raise DimacsError(lineno, "clause before problem line")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(lineno, f"bad literal {tok!r}") from None
            if abs(lit) > header[0]:
                raise DimacsError(lineno, f"literal {lit} exceeds declared {header[0]} variables")
            if lit == 0:
                formula.clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if header is None:
        raise DimacsError(0, "missing problem line")
    if pending:
        raise DimacsError(lineno, "last clause not terminated by 0")
    if len(formula.clauses) != header[1]:
        raise DimacsError(lineno, f"header declares {header[1]} clauses, found {len(formula.clauses)}")
    return formula


def read_dimacs(source) -> CnfFormula:
    """Parse DIMACS from a path or a text stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source) as fh:
            return parse_dimacs(fh.read())
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return parse_dimacs(source.read())
    raise TypeError("read_dimacs expects a path or a readable text stream")
