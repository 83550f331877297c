"""Ideal slices, Hilbert functions, minimal generators."""

import pytest

from gorensum.fields import GF, QQ
from gorensum.ideals import (
    Algebra,
    NotArtinianError,
    ideal_slices,
    minimal_generators,
)
from gorensum.poly import Ring, parse_poly


def algebra(varnames, gens, field=QQ):
    ring = Ring(varnames, field)
    return Algebra(ring, [parse_poly(ring, g) for g in gens])


def test_monomial_complete_intersection_hilbert():
    A = algebra(["x", "y"], ["x^3", "y^3"])
    # (1-s^3)^2 / (1-s)^2 = (1+s+s^2)^2
    assert A.hilbert_function() == (1, 2, 3, 2, 1)
    assert A.socle_degree == 4
    assert A.dimension_k() == 9


def test_example_factors_hilbert():
    A = algebra(["x", "y", "z"], ["x^3", "y^4", "z^4"])
    B = algebra(["u", "v"], ["u^5", "v^5"])
    assert A.hilbert_function() == (1, 3, 6, 9, 10, 9, 6, 3, 1)
    assert B.hilbert_function() == (1, 2, 3, 4, 5, 4, 3, 2, 1)


def test_non_artinian_raises():
    A = algebra(["x", "y"], ["x*y"])
    with pytest.raises(NotArtinianError):
        A.hilbert_function()
    assert A.hilbert_values(4) == [1, 2, 2, 2, 2]


def test_hilbert_independent_of_field():
    for gens in (["x^2", "x*y", "y^3"], ["x^2 + y^2", "x*y"]):
        hq = algebra(["x", "y"], gens).hilbert_function()
        hp = algebra(["x", "y"], gens, GF(32003)).hilbert_function()
        assert hq == hp


def test_membership():
    A = algebra(["x", "y"], ["x^2 - y^2", "x*y"])
    s = A.slices
    assert s.contains(parse_poly(A.ring, "x^3"))
    assert s.contains(parse_poly(A.ring, "y^3"))
    assert not s.contains(parse_poly(A.ring, "x^2"))


def test_inhomogeneous_generator_rejected():
    ring = Ring(["x", "y"], QQ)
    with pytest.raises(ValueError, match="generator 1"):
        Algebra(ring, [parse_poly(ring, "x^2"), parse_poly(ring, "x + y^2")])


def test_minimal_generators_drop_redundant():
    # x^4 lies in (x^2), so it is not minimal
    ring = Ring(["x", "y"], QQ)
    gens = [parse_poly(ring, g) for g in ["x^2", "x^4", "y^3"]]
    slices = ideal_slices(ring, gens, 5)
    mingens = minimal_generators(slices, 5)
    assert sorted(str(g) for g in mingens) == ["x^2", "y^3"]


def test_minimal_generator_count_is_beta1():
    # the cross ideal of blocks (1,1,1) needs exactly three generators
    A = algebra(["x", "y", "z"], ["x*y", "x*z", "y*z", "x*y*z"])
    mingens = minimal_generators(A.slices, 4)
    assert len(mingens) == 3
    assert all(g.degree() == 2 for g in mingens)


def test_degree_cap_is_configurable():
    ring = Ring(["x"], QQ)
    A = Algebra(ring, [parse_poly(ring, "x^9")], degree_cap=4)
    with pytest.raises(NotArtinianError):
        A.hilbert_function()
    B = Algebra(ring, [parse_poly(ring, "x^9")])
    assert B.hilbert_function() == (1,) * 9
