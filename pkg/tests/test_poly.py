"""Polynomial rings, grevlex monomial order, parsing, joined rings."""

import pytest
from hypothesis import given, settings, strategies as st

from gorensum.fields import GF, QQ
from gorensum.poly import Poly, Ring, embed, joined_ring, parse_poly


@pytest.fixture
def rxyz():
    return Ring(["x", "y", "z"], QQ)


def test_monomial_basis_counts(rxyz):
    from math import comb

    for d in range(6):
        assert len(rxyz.monomial_basis(d)) == comb(d + 2, 2)


def test_grevlex_order_degree_two(rxyz):
    # standard grevlex on x > y > z
    assert rxyz.monomial_basis(2) == (
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    )


def test_parse_round_trip(rxyz):
    for text in ["x^2*y^3*z^3 + u^4", "x - y", "3*x^2 + 2", "x^3"]:
        if "u" in text:
            continue
        p = parse_poly(rxyz, text)
        assert parse_poly(rxyz, str(p)) == p


def test_parse_coefficients(rxyz):
    p = parse_poly(rxyz, "2*x^2 - 3*y*z + 1/2")
    assert p.terms[(2, 0, 0)] == QQ.of(2)
    assert p.terms[(0, 1, 1)] == QQ.of(-3)
    assert p.terms[(0, 0, 0)] == QQ.of("1/2")


def test_parse_rejects_unknown_variable(rxyz):
    with pytest.raises(ValueError):
        parse_poly(rxyz, "x + w")


def test_parse_rejects_garbage(rxyz):
    for bad in ["", "x^", "++x", "x**y"]:
        with pytest.raises(ValueError):
            parse_poly(rxyz, bad)


def test_mod_p_coefficients():
    r = Ring(["x"], GF(7))
    p = parse_poly(r, "10*x")
    assert p.terms[(1,)] == 3


def poly_strategy(ring, maxdeg=4):
    mono = st.tuples(*[st.integers(0, maxdeg) for _ in range(ring.nvars)])
    return st.dictionaries(mono, st.integers(-10, 10), max_size=5).map(
        lambda d: Poly(ring, {e: ring.field.of(c) for e, c in d.items()})
    )


RING = Ring(["x", "y"], QQ)


@given(poly_strategy(RING), poly_strategy(RING), poly_strategy(RING))
@settings(max_examples=100, deadline=None)
def test_ring_axioms(p, q, r):
    assert (p + q) - q == p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)


@given(poly_strategy(RING))
@settings(max_examples=50, deadline=None)
def test_coefficient_vector_round_trip(p):
    if not p.is_homogeneous() or p.is_zero():
        return
    d = p.degree()
    assert Poly.from_vector(RING, d, p.coefficient_vector(d)) == p


def test_homogeneous_detection(rxyz):
    assert parse_poly(rxyz, "x^2 + y*z").is_homogeneous()
    assert not parse_poly(rxyz, "x^2 + y").is_homogeneous()
    assert rxyz.zero().is_homogeneous()
    assert rxyz.zero().degree() == -1


def test_joined_ring_blocks():
    r1 = Ring(["x", "y"], QQ)
    r2 = Ring(["u"], QQ)
    big = joined_ring([r1, r2])
    assert big.variables == ("x", "y", "u")
    assert big.block_var_indices() == [(0, 2), (2, 3)]


def test_joined_ring_rejects_name_clash():
    with pytest.raises(ValueError):
        joined_ring([Ring(["x"], QQ), Ring(["x"], QQ)])


def test_embed_multiplies_disjointly():
    r1 = Ring(["x"], QQ)
    r2 = Ring(["u"], QQ)
    big = joined_ring([r1, r2])
    p = embed(parse_poly(r1, "x^2"), big, 0)
    q = embed(parse_poly(r2, "u^3"), big, 1)
    assert p * q == parse_poly(big, "x^2*u^3")
