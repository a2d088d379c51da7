"""Classification of Coxeter pyramids through their projected links.

A pyramid is normalized with its ideal apex at infinity and its base on the
unit hemisphere. Its apex link projects to an axis-parallel rectangle inside
the closed unit disk, with sides A (bottom), B (right), C (top), D (left).
The side making dihedral angle ``pi/x`` with the base lies at distance
``cos(pi/x)`` from the origin. Quadruples are written ``(k, l, m, n)`` with
``A = pi/k``, ``C = pi/l``, ``B = pi/m``, ``D = pi/n``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, NamedTuple


class InvalidPyramid(ValueError):
    """A quadruple that does not describe a finite-volume Coxeter pyramid."""


class Corner(enum.Enum):
    MATERIAL = "material"
    IDEAL = "ideal"
    EXCLUDED = "excluded"


def adjacent_pair_ok(a: int, b: int) -> Corner:
    """Classify the base vertex where sides with labels ``a`` and ``b`` meet.

    Strict ``1/a + 1/b > 1/2`` gives a spherical vertex link (a finite vertex),
    equality a Euclidean one (an ideal vertex), anything less no vertex at all.
    """
    s = Fraction(1, a) + Fraction(1, b)
    if s > Fraction(1, 2):
        return Corner.MATERIAL
    if s == Fraction(1, 2):
        return Corner.IDEAL
    return Corner.EXCLUDED


class PyramidQuadruple(NamedTuple):
    k: int
    l: int  # noqa: E741
    m: int
    n: int

    def cyclic(self) -> tuple[int, int, int, int]:
        """Labels in side order A, B, C, D."""
        return (self.k, self.m, self.l, self.n)

    @classmethod
    def from_cyclic(cls, seq) -> PyramidQuadruple:
        a, b, c, d = seq
        return cls(a, c, b, d)

    def __str__(self) -> str:
        return f"({self.k},{self.l},{self.m},{self.n})"

    def key(self) -> str:
        return f"{self.k},{self.l},{self.m},{self.n}"


def parse_quadruple(text: str) -> PyramidQuadruple:
    """Parse ``"k,l,m,n"`` (parentheses and spaces tolerated)."""
    parts = text.strip().strip("()").split(",")
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated integers, got {text!r}")
    try:
        return PyramidQuadruple(*(int(p) for p in parts))
    except ValueError:
        raise ValueError(f"expected four comma-separated integers, got {text!r}") from None


def side_pairs(q: PyramidQuadruple) -> list[tuple[str, int, int]]:
    """Adjacent side pairs (AB, BC, CD, DA) with their labels."""
    a, b, c, d = q.cyclic()
    return [("AB", a, b), ("BC", b, c), ("CD", c, d), ("DA", d, a)]


def violations(q) -> list[str]:
    """Names of the pyramid conditions ``q`` fails, in any labeling."""
    out = []
    if any(not isinstance(x, int) or x < 2 for x in q):
        return ["labels must be integers >= 2"]
    q = PyramidQuadruple(*q)
    for name, a, b in side_pairs(q):
        if adjacent_pair_ok(a, b) is Corner.EXCLUDED:
            out.append(f"adjacent pair {name}=({a},{b}) has 1/{a}+1/{b} < 1/2")
    if q.k == 2 and q.l == 2:
        out.append("opposite sides A, C both labelled 2 (degenerate rectangle)")
    if q.m == 2 and q.n == 2:
        out.append("opposite sides B, D both labelled 2 (degenerate rectangle)")
    return out


def is_canonical(q: PyramidQuadruple) -> bool:
    k, l, m, n = q
    return k <= l and m <= n and k <= m and (k != m or l <= n)


def d4_images(seq) -> list[tuple[int, int, int, int]]:
    """The 8 images of a cyclic side sequence under the dihedral group of the square."""
    s = tuple(seq)
    rots = [s[i:] + s[:i] for i in range(4)]
    refl = [tuple(reversed(r)) for r in rots]
    return rots + refl


def canonicalize(q) -> PyramidQuadruple:
    q = PyramidQuadruple(*q)
    bad = violations(q)
    if bad:
        raise InvalidPyramid("; ".join(bad))
    found = {PyramidQuadruple.from_cyclic(s) for s in d4_images(q.cyclic())}
    found = [c for c in found if is_canonical(c)]
    if len(found) != 1:
        raise AssertionError(f"{q}: expected one canonical image, got {sorted(found)}")
    return found[0]


def validate(q) -> PyramidQuadruple:
    """Return ``q`` as a canonical quadruple, raising :class:`InvalidPyramid` otherwise."""
    q = PyramidQuadruple(*q)
    bad = violations(q)
    if bad:
        raise InvalidPyramid("; ".join(bad))
    if not is_canonical(q):
        raise InvalidPyramid(f"{q} is not in canonical order (canonical form {canonicalize(q)})")
    return q


def enumerate_pyramids(max_label: int = 6) -> list[PyramidQuadruple]:
    """All canonical pyramid quadruples, sorted lexicographically.

    A label >= 7 forces both neighbouring labels to 2, which makes the
    rectangle degenerate, so ``max_label = 6`` is exhaustive.
    """
    labels = range(2, max_label + 1)
    found = set()
    for q in product(labels, repeat=4):
        q = PyramidQuadruple(*q)
        if is_canonical(q) and not violations(q):
            found.add(q)
    return sorted(found)


@dataclass(frozen=True)
class ProjectedLink:
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    corners: dict

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def corner_points(self) -> dict[str, tuple[float, float]]:
        return {
            "AB": (self.x_max, self.y_min),
            "BC": (self.x_max, self.y_max),
            "CD": (self.x_min, self.y_max),
            "DA": (self.x_min, self.y_min),
        }


def side_distance(label: int) -> float:
    # cos(pi/2) is not exactly 0 in floating point
    return 0.0 if label == 2 else math.cos(math.pi / label)


def projected_link(q) -> ProjectedLink:
    q = PyramidQuadruple(*q)
    bad = violations(q)
    if bad:
        raise InvalidPyramid("; ".join(bad))
    corners = {name: adjacent_pair_ok(a, b) for name, a, b in side_pairs(q)}
    return ProjectedLink(
        x_min=-side_distance(q.n),
        x_max=side_distance(q.m),
        y_min=-side_distance(q.k),
        y_max=side_distance(q.l),
        corners=corners,
    )


def orbit(q) -> list[PyramidQuadruple]:
    """Distinct relabelings of ``q`` under the rectangle's symmetry group."""
    q = PyramidQuadruple(*q)
    return sorted({PyramidQuadruple.from_cyclic(s) for s in d4_images(q.cyclic())})


def all_relabelings(qs: Iterable) -> list[PyramidQuadruple]:
    return sorted({r for q in qs for r in orbit(q)})
