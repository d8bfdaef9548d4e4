import json
import os
from fractions import Fraction

import pytest

import toric_ic as ti

FIXTURES = os.environ.get(
    "TORIC_IC_FIXTURES", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")
)


def octahedron():
    pts = []
    for i in range(3):
        for s in (1, -1):
            v = [0, 0, 0]
            v[i] = s
            pts.append(v)
    return ti.Polytope.from_vertices(pts)


def test_octahedron_class():
    p = octahedron()
    assert p.f_vector() == [6, 12, 8, 1]
    assert ti.global_ih_class(p) == [1, 5, 5, 1]
    assert ti.ih_betti_numbers(p) == [1, 0, 5, 0, 5, 0, 1]


def test_square_cone_summands():
    cone = ti.Polytope.from_vertices([[0, 0, 0]], rays=[[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]])
    assert not cone.is_compact
    stalks = ti.local_ic_polynomials(cone)
    apex = next(f["id"] for f in cone.faces() if f["dim"] == 0)
    assert stalks[apex] == [1, 1]
    assert ti.decomposition_summands(cone) == [(2, 1, -1), (4, 1, -2)]
    ih, ihc = ti.punctured_cone_classes(cone)
    assert [a + b for a, b in zip(ih, ihc)] == [0] * len(ih)


def test_exact_rationals():
    p = ti.Polytope.from_inequalities([[1, 0, 0], [0, 1, 0], [-1, -1, Fraction(-5, 2)]])
    assert sorted(map(tuple, p.vertices)) == [(0, 0), (0, Fraction(5, 2)), (Fraction(5, 2), 0)]
    assert all(isinstance(x, Fraction) for v in p.vertices for x in v)
    with pytest.raises(TypeError):
        ti.Polytope.from_vertices([[0.5, 0], [1, 0], [0, 1]])


def test_counts_and_curves():
    tri = ti.Polytope.from_vertices([[0, 0], [3, 0], [0, 3]])
    assert ti.count_lattice_points(tri) == 10
    assert ti.count_interior_lattice_points(tri) == 1
    assert ti.skeleton_count(tri) == 9
    assert ti.ehrhart_polynomial(tri) == [1, Fraction(9, 2), Fraction(9, 2)]
    assert ti.geometric_genus(tri) == 1
    assert ti.frontier_hodge(tri) == {0: 8, 1: 1}
    assert ti.curve_e_polynomial(tri) == {(0, 0): -8, (0, 1): -1, (1, 0): -1, (1, 1): 1}
    assert ti.high_weight_table(3) == [(4, 2, 2, 1), (3, 1, 1, 3)]


def test_prime_cut_pyramid():
    pyr = ti.Polytope.from_vertices([[0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0], [1, 1, 2]])
    assert not pyr.is_prime()
    r = ti.prime_cut(pyr, Fraction(1, 4))
    assert r["cut"].is_prime()
    assert r["cut"].f_vector() == [8, 12, 6, 1]
    assert r["rounds"] >= 1
    # L^2 + 2L + 1 at the apex.
    assert {(2, 2): 1, (1, 1): 2, (0, 0): 1} in r["multipliers"]


def test_errors_carry_codes():
    strip = ti.Polytope.from_vertices([[0, 0], [1, 0]], rays=[[0, 1]])
    with pytest.raises(ti.ToricError) as info:
        ti.local_ic_polynomials(strip)
    assert info.value.code == "unsupported_shape"
    with pytest.raises(ti.ToricError):
        ti.Polytope.from_file("/nonexistent/file.vrep")


def test_unimodular_invariance():
    p = octahedron()
    q = p.transform([[1, 1, 0], [0, 1, 0], [0, 2, 1]])
    assert q.vertices != p.vertices
    assert ti.global_ih_class(q) == ti.global_ih_class(p)


def test_cli_json():
    code, out, err = ti.run(["--format", "json", "ih", os.path.join(FIXTURES, "octahedron.vrep")])
    assert code == 0, err
    report = json.loads(out)
    assert report["report"]["class"]["coeffs"] == [1, 5, 5, 1]
    code, _, err = ti.run(["faces", "/nonexistent/file.vrep"])
    assert code == 1 and err
