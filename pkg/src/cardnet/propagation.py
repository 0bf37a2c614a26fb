"""Unit propagation over three-valued assignments, and arc-consistency checks for
half-encoded selection networks.

The engine is deliberately plain: no watched literals, just per-literal
occurrence lists and a queue of clauses to revisit after each assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cnf import CnfFormula, Encoding, encode_network
from .network import ComparatorNetwork, NetworkError

UNDEF = None


@dataclass
class TriAssignment:
    num_vars: int
    values: list = field(default=None)
    trail: list[tuple[int, bool, int | None]] = field(default_factory=list)
    conflict: int | None = None     # index of the falsified clause, -1 for clashing assumptions

    def __post_init__(self):
        if self.values is None:
            self.values = [UNDEF] * (self.num_vars + 1)

    def __getitem__(self, var: int):
        return self.values[var]

    @property
    def ok(self) -> bool:
        return self.conflict is None

    def copy(self) -> TriAssignment:
        return TriAssignment(self.num_vars, list(self.values), list(self.trail), self.conflict)

    def value_of(self, lit: int):
        v = self.values[abs(lit)]
        if v is UNDEF:
            return UNDEF
        return v if lit > 0 else not v

    def true_vars(self) -> list[int]:
        return [v for v in range(1, self.num_vars + 1) if self.values[v] is True]

    def replay(self) -> TriAssignment:
        """Rebuild the state from the trail alone."""
        out = TriAssignment(self.num_vars)
        for var, val, _ in self.trail:
            if out.values[var] is not UNDEF:
                raise AssertionError(f"variable {var} assigned twice on the trail")
            out.values[var] = val
        return out

    def format_trace(self) -> str:
        lines = []
        for var, val, cause in self.trail:
            by = "assumption" if cause is None else f"clause {cause}"
            lines.append(f"var {var} := {int(val)} by {by}")
        if self.conflict is not None:
            lines.append(f"conflict in clause {self.conflict}")
        return "\n".join(lines)


class Propagator:
    """Occurrence lists for one formula; :meth:`propagate` may be called repeatedly."""

    def __init__(self, formula: CnfFormula):
        self.formula = formula
        self.clauses = formula.clauses
        self.occurs: dict[int, list[int]] = {}
        for idx, clause in enumerate(self.clauses):
            for lit in clause:
                self.occurs.setdefault(lit, []).append(idx)

    def propagate(self, assumptions=(), start: TriAssignment | None = None) -> TriAssignment:
        """Least fixpoint of unit propagation from ``assumptions`` (and ``start`` if given)."""
        state = TriAssignment(self.formula.num_vars) if start is None else start.copy()
        if not state.ok:
            return state
        queue = []
        for lit in assumptions:
            cur = state.value_of(lit)
            if cur is False:
                state.conflict = -1
                return state
            if cur is UNDEF:
                self._assign(state, lit, None)
                queue.append(lit)
        if start is None:
            pending = list(range(len(self.clauses)))
        else:
            pending = [i for lit in queue for i in self.occurs.get(-lit, ())]
        while True:
            for lit in queue:
                pending.extend(self.occurs.get(-lit, ()))
            queue = []
            if not pending:
                return state
            idx = pending.pop()
            unit = None
            for lit in self.clauses[idx]:
                val = state.value_of(lit)
                if val is True:
                    break
                if val is UNDEF:
                    if unit is not None:
                        break
                    unit = lit
            else:
                if unit is None:
                    state.conflict = idx
                    return state
                self._assign(state, unit, idx)
                queue.append(unit)

    @staticmethod
    def _assign(state, lit, cause):
        var = abs(lit)
        state.values[var] = lit > 0
        state.trail.append((var, lit > 0, cause))


def unit_propagate(formula: CnfFormula, assumptions=()) -> TriAssignment:
    return Propagator(formula).propagate(assumptions)


# -- arc-consistency harness -----------------------------------------------------------

@dataclass
class ArcReport:
    passed: bool
    reason: str
    state: TriAssignment

    def __bool__(self):
        return self.passed


class SelectionEncoding:
    """Half encoding of a selection network plus the cached propagator for it."""

    def __init__(self, f: ComparatorNetwork, k: int):
        if not 1 <= k <= f.n:
            raise NetworkError(f"k={k} out of range for width {f.n}")
        self.network = f
        self.k = k
        self.formula = encode_network(f, Encoding.HALF)
        self.propagator = Propagator(self.formula)
        self.x = self.formula.inputs
        self.y = self.formula.outputs
        # variable -> comparator (a, b, c, d), for path checks
        self.consumers: dict[int, tuple[int, int, int, int]] = {}
        for i in range(0, len(self.formula.clauses), 3):
            (na, c), (nb, _), (_, _, d) = self.formula.clauses[i: i + 3]
            quad = (-na, -nb, c, d)
            self.consumers[-na] = quad
            self.consumers[-nb] = quad

    def _check_true_inputs(self, true_inputs):
        true_inputs = sorted(set(true_inputs))
        if len(true_inputs) != self.k - 1:
            raise NetworkError(f"need exactly k-1={self.k - 1} true inputs, got {len(true_inputs)}")
        if any(not 1 <= i <= self.network.n for i in true_inputs):
            raise NetworkError("true input index out of range")
        return true_inputs

    def forward(self, true_inputs) -> TriAssignment:
        true_inputs = self._check_true_inputs(true_inputs)
        return self.propagator.propagate([self.x[i] for i in true_inputs])

    def forward_check(self, true_inputs) -> ArcReport:
        true_inputs = self._check_true_inputs(true_inputs)
        state = self.forward(true_inputs)
        if not state.ok:
            return ArcReport(False, "conflict during forward propagation", state)
        missing = [j for j in range(1, self.k) if state[self.y[j]] is not True]
        if missing:
            return ArcReport(False, f"outputs {missing} not set to 1", state)
        touched = [i for i in range(1, self.network.n + 1)
                   if i not in true_inputs and state[self.x[i]] is not UNDEF]
        if touched:
            return ArcReport(False, f"inputs {touched} assigned by forward propagation", state)
        return ArcReport(True, "ok", state)

    def arc_check(self, true_inputs) -> ArcReport:
        true_inputs = self._check_true_inputs(true_inputs)
        state = self.forward(true_inputs)
        state = self.propagator.propagate([-self.y[self.k]], start=state)
        if not state.ok:
            return ArcReport(False, "conflict after asserting the k-th output false", state)
        rest = [i for i in range(1, self.network.n + 1) if i not in true_inputs]
        not_false = [i for i in rest if state[self.x[i]] is not False]
        if not_false:
            return ArcReport(False, f"inputs {not_false} not forced to 0", state)
        return ArcReport(True, "ok", state)

    def propagation_path(self, true_inputs, x: int) -> list[int]:
        """Variables set to 1 when input ``x`` is raised after forward propagation, starting at ``x``'s variable."""
        state = self.forward(true_inputs)
        var = self.x.get(x)
        if var is None or state[var] is not UNDEF:
            raise NetworkError(f"x{x} is not an undefined input")
        before = len(state.trail)
        scratch = self.propagator.propagate([var], start=state)
        return [v for v, val, _ in scratch.trail[before:] if val]

    def propagation_tree(self, true_inputs) -> dict[int, int]:
        """Union of all propagation paths as a child -> parent edge map."""
        state = self.forward(true_inputs)
        edges: dict[int, int] = {}
        for i in range(1, self.network.n + 1):
            if state[self.x[i]] is UNDEF:
                path = self.propagation_path(true_inputs, i)
                for a, b in zip(path, path[1:]):
                    if edges.setdefault(a, b) != b:
                        raise AssertionError(f"variable {a} has two successors")
        return edges

    def is_path(self, path) -> bool:
        """Consecutive variables are an input and an output of one comparator."""
        for a, b in zip(path, path[1:]):
            quad = self.consumers.get(a)
            if quad is None or b not in quad[2:]:
                return False
        return True


def forward_propagation_check(f: ComparatorNetwork, k: int, true_inputs) -> bool:
    return SelectionEncoding(f, k).forward_check(true_inputs).passed


def arc_consistency_check(f: ComparatorNetwork, k: int, true_inputs) -> bool:
    return SelectionEncoding(f, k).arc_check(true_inputs).passed


def extract_propagation_path(f: ComparatorNetwork, k: int, true_inputs, x: int) -> list[int]:
    return SelectionEncoding(f, k).propagation_path(true_inputs, x)


def tree_root(edges: dict[int, int]) -> int | None:
    """The unique root of a child -> parent map if it is a single-rooted tree, else ``None``."""
    if not edges:
        return None
    roots = set(edges.values()) - set(edges)
    if len(roots) != 1:
        return None
    root = roots.pop()
    for node in edges:
        seen = set()
        while node != root:
            if node in seen:
                return None
            seen.add(node)
            node = edges[node]
    return root


@dataclass
class SweepResult:
    tested: int
    failures: list[tuple[tuple[int, ...], str]]

    @property
    def passed(self) -> bool:
        return not self.failures


def subsets_to_check(n: int, k: int, samples: int | None = None, seed: int = 0):
    """All ``(k-1)``-subsets of ``1..n``, or ``samples`` of them drawn with ``seed``."""
    if samples is None:
        return [tuple(c) for c in itertools.combinations(range(1, n + 1), k - 1)]
    rng = np.random.default_rng(seed)
    return [tuple(sorted(int(i) + 1 for i in rng.choice(n, size=k - 1, replace=False)))
            for _ in range(samples)]


def arc_sweep(f: ComparatorNetwork, k: int, subsets) -> SweepResult:
    """Forward-propagation and arc-consistency checks over the given subsets."""
    enc = SelectionEncoding(f, k)
    failures = []
    subsets = list(subsets)
    for s in subsets:
        for rep in (enc.forward_check(s), enc.arc_check(s)):
            if not rep:
                failures.append((s, rep.reason))
                break
    return SweepResult(len(subsets), failures)
