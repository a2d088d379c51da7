import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from coxpyramids.coxeter import (
    INF,
    CoxeterDiagram,
    FiniteComponent,
    FiniteTypeDecomposition,
    finite_parabolic_family,
    pyramid_diagram,
    recognize_finite_type,
    solomon_growth,
)
from coxpyramids.exactpoly import IntPolynomial as P, bracket
from coxpyramids.geometry import adjacent_pair_ok, Corner, InvalidPyramid

from oracles import cosine_matrix_min_eig


def path(labels):
    gens = [f"s{i}" for i in range(len(labels) + 1)]
    return CoxeterDiagram(gens, [(i, i + 1, m) for i, m in enumerate(labels)])


def test_pyramid_diagram_2323():
    d = pyramid_diagram((2, 3, 2, 3))
    assert d.generators == ("b", "A", "B", "C", "D")
    named = {(d.generators[i], d.generators[j]): m for i, j, m in d.edges()}
    assert named == {("b", "C"): 3, ("b", "D"): 3, ("A", "C"): INF, ("B", "D"): INF}


def test_pyramid_diagram_4444():
    d = pyramid_diagram((4, 4, 4, 4))
    for s in "ABCD":
        assert d.order("b", s) == 4
    assert d.order("A", "C") == d.order("B", "D") == INF
    assert d.order("A", "B") == d.order("C", "D") == 2


def test_pyramid_diagram_symmetric(pyramids):
    for q in pyramids:
        m = pyramid_diagram(q).matrix
        assert all(m[i][i] == 1 for i in range(5))
        assert all(m[i][j] == m[j][i] for i in range(5) for j in range(5))


def test_pyramid_diagram_rejects_invalid():
    with pytest.raises(InvalidPyramid):
        pyramid_diagram((2, 4, 2, 5))


@pytest.mark.parametrize("labels, expected", [
    ([], "A1"),
    ([3], "A2"),
    ([4], "B2"),
    ([5], "I2(5)"),
    ([6], "I2(6)"),
    ([3, 5], "H3"),
    ([3, 3, 5], "H4"),
    ([3, 4, 3], "F4"),
    ([3, 3, 4], "B4"),
    ([4, 3, 3], "B4"),
    ([3, 3, 3, 3], "A5"),
])
def test_recognize_paths(labels, expected):
    assert str(recognize_finite_type(path(labels))) == expected


@pytest.mark.parametrize("labels", [[3, 6], [4, 4], [3, 4, 3, 3], [5, 3, 5], [3, 3, 3, 5], [INF], [3, 7]])
def test_recognize_infinite_paths(labels):
    assert recognize_finite_type(path(labels)) is None


def test_affine_g2_gram_determinant_is_zero():
    # exact oracle: cosine matrix of the (3, 6) path is singular (affine type)
    c6 = sympy.cos(sympy.pi / 6)
    gram = sympy.Matrix([[1, -sympy.Rational(1, 2), 0], [-sympy.Rational(1, 2), 1, -c6], [0, -c6, 1]])
    assert sympy.simplify(gram.det()) == 0
    assert recognize_finite_type(path([3, 6])) is None


def test_recognize_branched():
    def star(a, b, c):
        gens, edges, idx = ["c"], [], 1
        for arm in (a, b, c):
            prev = 0
            for _ in range(arm):
                gens.append(f"v{idx}")
                edges.append((prev, idx, 3))
                prev = idx
                idx += 1
        return CoxeterDiagram(gens, edges)

    assert str(recognize_finite_type(star(1, 1, 1))) == "D4"
    assert str(recognize_finite_type(star(1, 1, 3))) == "D6"
    assert str(recognize_finite_type(star(1, 2, 2))) == "E6"
    assert str(recognize_finite_type(star(1, 2, 3))) == "E7"
    assert str(recognize_finite_type(star(1, 2, 4))) == "E8"
    assert recognize_finite_type(star(2, 2, 2)) is None
    assert recognize_finite_type(star(1, 3, 3)) is None


def test_recognize_cycle_is_infinite():
    tri = CoxeterDiagram("xyz", [(0, 1, 3), (1, 2, 3), (0, 2, 3)])
    assert recognize_finite_type(tri) is None


def test_recognize_reducible():
    d = CoxeterDiagram("abc", [(1, 2, 5)])
    assert str(recognize_finite_type(d)) == "A1 x I2(5)"


labels = st.sampled_from([2, 2, 2, 3, 3, 4, 5, 6, INF])


@st.composite
def diagrams(draw, max_rank=5):
    n = draw(st.integers(1, max_rank))
    edges = [(i, j, draw(labels)) for i in range(n) for j in range(i + 1, n)]
    return CoxeterDiagram([f"g{i}" for i in range(n)], [e for e in edges if e[2] != 2])


@given(diagrams())
@settings(max_examples=300, deadline=None)
def test_recognition_matches_positive_definiteness(d):
    finite = recognize_finite_type(d) is not None
    assert finite == (cosine_matrix_min_eig(d.matrix) > 1e-9)


@given(diagrams(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_recognition_invariant_under_relabeling(d, rnd):
    perm = list(range(d.rank))
    rnd.shuffle(perm)
    assert recognize_finite_type(d) == recognize_finite_type(d.relabel(perm))


@pytest.mark.parametrize("tag, rank, m, order", [
    ("A", 3, None, 24), ("B", 3, None, 48), ("D", 4, None, 192), ("E6", 6, None, 51840),
    ("F4", 4, None, 1152), ("H3", 3, None, 120), ("H4", 4, None, 14400), ("I2", 2, 7, 14),
    ("E8", 8, None, 696729600),
])
def test_solomon_order(tag, rank, m, order):
    ft = FiniteTypeDecomposition((FiniteComponent(tag, rank, m),))
    assert solomon_growth(ft)(1) == order


def test_solomon_examples():
    h3 = FiniteTypeDecomposition((FiniteComponent("H3", 3),))
    assert solomon_growth(h3) == bracket(2) * bracket(6) * bracket(10)
    assert solomon_growth(FiniteTypeDecomposition()) == P([1])
    a1_i25 = recognize_finite_type(CoxeterDiagram("abc", [(1, 2, 5)]))
    assert solomon_growth(a1_i25) == P([1, 1]) ** 2 * P([1, 1, 1, 1, 1])


def test_family_2323():
    fam = finite_parabolic_family(pyramid_diagram((2, 3, 2, 3)))
    sizes = [len(s) for s, _ in fam]
    assert len(fam) == 18
    assert [sizes.count(k) for k in range(6)] == [1, 5, 8, 4, 0, 0]


def test_family_empty_diagram():
    fam = finite_parabolic_family(CoxeterDiagram([]))
    assert [s for s, _ in fam] == [frozenset()]


def test_family_properties(pyramids):
    for q in pyramids:
        fam = finite_parabolic_family(pyramid_diagram(q))
        named = set(fam.named())
        # downward closed
        for s in named:
            for r in range(len(s)):
                assert all(frozenset(sub) in named for sub in itertools.combinations(s, r))
        assert not any({"A", "C"} <= s or {"B", "D"} <= s for s in named)
        k, l, m, n = q
        for triple, (x, y) in {("b", "A", "B"): (k, m), ("b", "B", "C"): (m, l),
                               ("b", "C", "D"): (l, n), ("b", "D", "A"): (n, k)}.items():
            assert (frozenset(triple) in named) == (adjacent_pair_ok(x, y) is Corner.MATERIAL)


def test_diagram_json_roundtrip():
    d = pyramid_diagram((3, 3, 4, 6))
    assert CoxeterDiagram.from_json(d.to_json()) == d
    edges = d.to_json()["edges"]
    assert [1, 3, 0] in edges and [2, 4, 0] in edges
