"""Coxeter diagrams, finite-type recognition and Solomon growth polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactpoly import IntPolynomial, bracket

INF = 0  # order label for "no relation"; matches the JSON edge encoding

FINITE_TAGS = ("A", "B", "D", "E6", "E7", "E8", "F4", "H3", "H4", "I2")


class CoxeterDiagram:
    """Symmetric Coxeter matrix over named generators.

    ``order(s, t)`` is 1 on the diagonal, an integer >= 2 off it, or
    ``INF`` (stored as 0) when ``st`` has infinite order.
    """

    __slots__ = ("generators", "_m")

    def __init__(self, generators: Sequence[str], edges: Mapping[tuple[str, str], int] | Iterable = ()):
        gens = tuple(generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        index = {g: i for i, g in enumerate(gens)}
        n = len(gens)
        m = [[2] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = 1
        items = edges.items() if isinstance(edges, Mapping) else ((e[:2], e[2]) for e in edges)
        for (s, t), label in items:
            i, j = (index[s], index[t]) if isinstance(s, str) else (s, t)
            if i == j:
                raise ValueError("diagonal entries are fixed to 1")
            if label != INF and (not isinstance(label, int) or label < 2):
                raise ValueError(f"invalid order label {label!r} for ({s}, {t})")
            m[i][j] = m[j][i] = label
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "_m", tuple(tuple(r) for r in m))

    def __setattr__(self, name, value):
        raise AttributeError("CoxeterDiagram is immutable")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return self._m

    def order(self, s, t) -> int:
        i = self.generators.index(s) if isinstance(s, str) else s
        j = self.generators.index(t) if isinstance(t, str) else t
        return self._m[i][j]

    def edges(self) -> list[tuple[int, int, int]]:
        """All pairs with label != 2, as ``(i, j, m)`` with ``i < j`` and ``m = 0`` for infinity."""
        n = self.rank
        return [(i, j, self._m[i][j]) for i in range(n) for j in range(i + 1, n) if self._m[i][j] != 2]

    def restrict(self, subset: Iterable[int]) -> CoxeterDiagram:
        idx = sorted(subset)
        gens = [self.generators[i] for i in idx]
        edges = {(gens[a], gens[b]): self._m[i][j]
                 for a, i in enumerate(idx) for b, j in enumerate(idx) if a < b and self._m[i][j] != 2}
        return CoxeterDiagram(gens, edges)

    def relabel(self, perm: Sequence[int]) -> CoxeterDiagram:
        """Diagram whose generator ``k`` is this diagram's generator ``perm[k]``."""
        gens = [self.generators[p] for p in perm]
        return CoxeterDiagram(gens, [(a, b, self._m[perm[a]][perm[b]])
                                     for a in range(len(perm)) for b in range(a + 1, len(perm))
                                     if self._m[perm[a]][perm[b]] != 2])

    def __eq__(self, other) -> bool:
        if isinstance(other, CoxeterDiagram):
            return self.generators == other.generators and self._m == other._m
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.generators, self._m))

    def __repr__(self) -> str:
        return f"CoxeterDiagram({list(self.generators)}, edges={self.edges()})"

    def to_json(self) -> dict:
        return {"generators": list(self.generators), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict | str) -> CoxeterDiagram:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(data["generators"], [tuple(e) for e in data["edges"]])


@dataclass(frozen=True, order=True)
class FiniteComponent:
    tag: str
    rank: int
    m: int | None = None  # dihedral label, only for I2

    def __str__(self) -> str:
        if self.tag == "I2":
            return f"I2({self.m})"
        if self.tag in ("A", "B", "D"):
            return f"{self.tag}{self.rank}"
        return self.tag


@dataclass(frozen=True)
class FiniteTypeDecomposition:
    components: tuple[FiniteComponent, ...] = ()

    @property
    def rank(self) -> int:
        return sum(c.rank for c in self.components)

    def __str__(self) -> str:
        return " x ".join(str(c) for c in self.components) or "trivial"


def _components(m, nodes):
    seen, comps = set(), []
    for start in nodes:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in nodes:
                if w not in seen and m[v][w] != 2:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def _classify_component(m, comp) -> FiniteComponent | None:
    n = len(comp)
    if n == 1:
        return FiniteComponent("A", 1)
    adj = {v: [w for w in comp if w != v and m[v][w] != 2] for v in comp}
    labels = {}
    for v in comp:
        for w in adj[v]:
            if m[v][w] == INF:
                return None
            labels[frozenset((v, w))] = m[v][w]
    if n == 2:
        (lab,) = labels.values()
        if lab == 3:
            return FiniteComponent("A", 2)
        if lab == 4:
            return FiniteComponent("B", 2)
        return FiniteComponent("I2", 2, lab)
    # rank >= 3: must be a tree
    if len(labels) != n - 1:
        return None
    degrees = {v: len(adj[v]) for v in comp}
    heavy = [(e, lab) for e, lab in labels.items() if lab != 3]
    if any(d > 3 for d in degrees.values()):
        return None
    branch = [v for v, d in degrees.items() if d == 3]
    if branch:
        if heavy or len(branch) > 1:
            return None
        centre = branch[0]
        arms = []
        for first in adj[centre]:
            length, prev, cur = 1, centre, first
            while degrees[cur] == 2:
                nxt = next(w for w in adj[cur] if w != prev)
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        p, q, r = sorted(arms)
        if (p, q) == (1, 1):
            return FiniteComponent("D", n)
        if (p, q) == (1, 2) and r in (2, 3, 4):
            return FiniteComponent(f"E{n}", n)
        return None
    # a path
    if not heavy:
        return FiniteComponent("A", n)
    if len(heavy) > 1:
        return None
    (edge, lab), = heavy
    ends = {v for v, d in degrees.items() if d == 1}
    at_end = bool(edge & ends)
    if lab == 4:
        if at_end:
            return FiniteComponent("B", n)
        if n == 4:
            return FiniteComponent("F4", 4)
        return None
    if lab == 5 and at_end and n in (3, 4):
        return FiniteComponent(f"H{n}", n)
    return None


def recognize_finite_type(d: CoxeterDiagram) -> FiniteTypeDecomposition | None:
    """Decompose ``d`` into irreducible finite types, or ``None`` if the group is infinite."""
    m = d.matrix
    comps = []
    for comp in _components(m, list(range(d.rank))):
        c = _classify_component(m, comp)
        if c is None:
            return None
        comps.append(c)
    return FiniteTypeDecomposition(tuple(sorted(comps)))


def exponents(c: FiniteComponent) -> tuple[int, ...]:
    n = c.rank
    if c.tag == "A":
        return tuple(range(1, n + 1))
    if c.tag == "B":
        return tuple(range(1, 2 * n, 2))
    if c.tag == "D":
        return tuple(range(1, 2 * n - 2, 2)) + (n - 1,)
    if c.tag == "I2":
        return (1, c.m - 1)
    return {
        "E6": (1, 4, 5, 7, 8, 11),
        "E7": (1, 5, 7, 9, 11, 13, 17),
        "E8": (1, 7, 11, 13, 17, 19, 23, 29),
        "F4": (1, 5, 7, 11),
        "H3": (1, 5, 9),
        "H4": (1, 11, 19, 29),
    }[c.tag]


@lru_cache(maxsize=None)
def solomon_growth(ft: FiniteTypeDecomposition) -> IntPolynomial:
    """Growth polynomial of a finite Coxeter group: product of ``[e + 1]`` over all exponents."""
    result = IntPolynomial((1,))
    for comp in ft.components:
        for e in exponents(comp):
            result = result * bracket(e + 1)
    return result


@dataclass(frozen=True)
class FiniteParabolicFamily:
    diagram: CoxeterDiagram
    subsets: tuple[tuple[frozenset[int], FiniteTypeDecomposition], ...]

    def __len__(self) -> int:
        return len(self.subsets)

    def __iter__(self):
        return iter(self.subsets)

    def named(self) -> list[frozenset[str]]:
        g = self.diagram.generators
        return [frozenset(g[i] for i in s) for s, _ in self.subsets]


def finite_parabolic_family(d: CoxeterDiagram) -> FiniteParabolicFamily:
    """All generator subsets spanning a finite parabolic subgroup, by increasing size."""
    out = []
    infinite: list[frozenset[int]] = []
    for size in range(d.rank + 1):
        for subset in combinations(range(d.rank), size):
            s = frozenset(subset)
            if any(bad <= s for bad in infinite):
                continue
            ft = recognize_finite_type(d.restrict(s))
            if ft is None:
                infinite.append(s)
            else:
                out.append((s, ft))
    return FiniteParabolicFamily(d, tuple(out))


PYRAMID_GENERATORS = ("b", "A", "B", "C", "D")


def pyramid_diagram(q) -> CoxeterDiagram:
    """Diagram of the pyramid ``(k, l, m, n)`` on generators b, A, B, C, D.

    The base ``b`` meets side A at ``pi/k``, B at ``pi/m``, C at ``pi/l`` and
    D at ``pi/n``; adjacent sides are orthogonal and opposite sides are
    parallel (they meet only at the apex).
    """
    from .geometry import PyramidQuadruple, InvalidPyramid, violations

    q = PyramidQuadruple(*q)
    bad = violations(q)
    if bad:
        raise InvalidPyramid("; ".join(bad))
    return CoxeterDiagram(PYRAMID_GENERATORS, {
        ("b", "A"): q.k, ("b", "B"): q.m, ("b", "C"): q.l, ("b", "D"): q.n,
        ("A", "C"): INF, ("B", "D"): INF,
    })
