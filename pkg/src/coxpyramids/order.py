"""Containment order on Coxeter pyramids and its comparison with growth rates.

``P1 <= P2`` when some relabeling of ``P1`` has every side label at most the
matching label of ``P2``: a larger label puts that side of the projected link
farther from the origin, so the rectangles (and pyramids) nest.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Mapping

import networkx as nx

from .geometry import PyramidQuadruple, d4_images, enumerate_pyramids


def leq(q1, q2) -> bool:
    target = PyramidQuadruple(*q2).cyclic()
    return any(all(a <= b for a, b in zip(img, target)) for img in d4_images(PyramidQuadruple(*q1).cyclic()))


@dataclass(frozen=True)
class OrderRelation:
    elements: tuple[PyramidQuadruple, ...]
    pairs: frozenset[tuple[PyramidQuadruple, PyramidQuadruple]]
    hasse_edges: tuple[tuple[PyramidQuadruple, PyramidQuadruple], ...]

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.hasse_edges)
        return g

    def minimal(self) -> list[PyramidQuadruple]:
        return [q for q in self.elements if not any((p, q) in self.pairs for p in self.elements if p != q)]

    def maximal(self) -> list[PyramidQuadruple]:
        return [q for q in self.elements if not any((q, p) in self.pairs for p in self.elements if p != q)]

    def to_json(self, rates: Mapping | None = None) -> dict:
        nodes = []
        for q in self.elements:
            node = {"quadruple": list(q)}
            if rates is not None:
                node["growth_rate"] = rates[q]
            nodes.append(node)
        return {
            "nodes": nodes,
            "hasse_edges": [[list(a), list(b)] for a, b in self.hasse_edges],
            "relation_size": len(self.pairs),
        }

    def to_dot(self, rates: Mapping | None = None) -> str:
        lines = ["digraph pyramid_order {", "  rankdir=BT;", "  node [shape=box];"]
        for q in self.elements:
            label = f"({q.k},{q.l},{q.m},{q.n})"
            if rates is not None:
                label += f"\\nτ={rates[q]:.5f}"
            lines.append(f'  "{q.key()}" [label="{label}"];')
        for a, b in self.hasse_edges:
            lines.append(f'  "{a.key()}" -> "{b.key()}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_order(elements=None) -> OrderRelation:
    elems = tuple(sorted(PyramidQuadruple(*q) for q in (elements or enumerate_pyramids())))
    pairs = frozenset((a, b) for a, b in product(elems, repeat=2) if leq(a, b))
    g = nx.DiGraph()
    g.add_nodes_from(elems)
    g.add_edges_from((a, b) for a, b in pairs if a != b)
    if not nx.is_directed_acyclic_graph(g):
        raise AssertionError("relation is not antisymmetric")
    red = nx.transitive_reduction(g)
    return OrderRelation(elems, pairs, tuple(sorted(red.edges())))


@dataclass
class MonotonicityReport:
    tol: float
    checked: int = 0
    violations: list = field(default_factory=list)
    converse_exceptions: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "tol": self.tol,
            "checked_pairs": self.checked,
            "violations": [[list(a), list(b), va, vb] for a, b, va, vb in self.violations],
            "converse_exceptions": [[list(a), list(b), va, vb] for a, b, va, vb in self.converse_exceptions],
        }


def monotonicity_report(order: OrderRelation, values: Mapping, tol: float = 1e-9) -> MonotonicityReport:
    """Check ``q1 <= q2  =>  values[q1] <= values[q2] + tol`` and list the converse's failures.

    Converse exceptions are distinct pairs with ``values[q1] <= values[q2] + tol``
    that are not ordered; they are reported, not judged.
    """
    rep = MonotonicityReport(tol)
    for a, b in product(order.elements, repeat=2):
        if a == b:
            continue
        va, vb = values[a], values[b]
        if (a, b) in order.pairs:
            rep.checked += 1
            if not va <= vb + tol:
                rep.violations.append((a, b, va, vb))
        elif va <= vb + tol:
            rep.converse_exceptions.append((a, b, va, vb))
    return rep
