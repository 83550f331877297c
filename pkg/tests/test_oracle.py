"""The Koszul-homology Betti oracle against hand-checkable resolutions."""

import pytest

from gorensum.betti import BettiTable, betti_socle2, cross_ideal_multi_table
from gorensum.fields import GF, QQ
from gorensum.ideals import Algebra, NotArtinianError
from gorensum.oracle import ScaleCapError, socle_basis, tor_betti
from gorensum.poly import Ring, parse_poly

Fp = GF(32003)


def algebra(varnames, gens, field=Fp):
    ring = Ring(varnames, field)
    return Algebra(ring, [parse_poly(ring, g) for g in gens])


def koszul_table(degrees):
    from itertools import combinations

    t = BettiTable()
    for i in range(len(degrees) + 1):
        for sub in combinations(degrees, i):
            t.add(i, sum(sub), 1)
    return t


def test_principal_ideal():
    A = algebra(["x"], ["x^4"])
    assert tor_betti(A).entries == {(0, 0): 1, (1, 4): 1}


def test_complete_intersections_resolve_by_koszul_complex():
    for gens, degs in [
        (["x^2", "y^3"], [2, 3]),
        (["x^3", "y^4", "z^4"], [3, 4, 4]),
        (["x^2 + y^2", "x*y"], [2, 2]),
    ]:
        names = ["x", "y", "z"][: 2 if len(gens) == 2 else 3]
        A = algebra(names, gens)
        assert tor_betti(A) == koszul_table(degs), gens


def test_socle_degree_two_table():
    # dual generator x^2 + y^2 + z^2: h-vector (1, 3, 1)
    A = algebra(
        ["x", "y", "z"],
        ["x*y", "x*z", "y*z", "x^2 - y^2", "y^2 - z^2"],
    )
    assert A.hilbert_function() == (1, 3, 1)
    assert tor_betti(A, check_d2=True) == betti_socle2(3)


def test_oracle_agrees_over_qq_and_gf():
    gens = ["x^2", "x*y", "y^3"]
    tq = tor_betti(algebra(["x", "y"], gens, QQ))
    tp = tor_betti(algebra(["x", "y"], gens, Fp))
    assert tq == tp


def test_non_artinian_requires_degree_bound():
    A = algebra(["x", "y", "z"], ["x*y", "x*z", "y*z"])
    with pytest.raises(NotArtinianError):
        tor_betti(A)
    t = tor_betti(A, max_internal_degree=4)
    assert t == cross_ideal_multi_table((1, 1, 1))


def test_scale_caps():
    with pytest.raises(ScaleCapError):
        tor_betti(algebra([f"x{i}" for i in range(9)], ["x0^2"]), max_vars=8)
    with pytest.raises(ScaleCapError):
        tor_betti(algebra(["x"], ["x^50"]), max_dim=10)


def test_socle_basis_gorenstein():
    A = algebra(["x", "y"], ["x^3", "y^3"])
    soc = socle_basis(A)
    assert len(soc) == 1
    assert str(soc[0]) == "x^2*y^2"


def test_socle_basis_level_of_type_two():
    A = algebra(["x", "y"], ["x^2", "x*y", "y^2"])
    assert len(socle_basis(A)) == 2


def test_socle_annihilated_by_maximal_ideal():
    A = algebra(["x", "y"], ["x^2 - y^2", "x*y^2"])
    for s in socle_basis(A):
        for v in A.ring.variables:
            prod = A.ring.var_poly(v) * s
            assert A.slices.contains(prod)


def test_regularity_equals_socle_degree():
    for gens in (["x^3", "y^3"], ["x^2", "x*y", "y^4"]):
        A = algebra(["x", "y"], gens)
        assert tor_betti(A).regularity() == A.socle_degree
