"""Exact-arithmetic toolkit for graded Artinian Gorenstein algebras:
Macaulay dual generators, fiber products and connected sums, closed-form
graded Betti tables, a Koszul-homology Betti oracle, and doubling
certificates."""

from .apolarity import (
    DualGenerator,
    annihilator,
    catalecticant,
    check_cs_conditions,
    contract,
    dual_socle,
)
from .betti import (
    BettiTable,
    betti_connected_sum_K,
    betti_fiber_product_K,
    betti_socle2,
    cross_ideal_table,
    inflate_betti,
)
from .constructions import (
    Factor,
    connected_sum_K,
    connected_sum_T,
    fiber_product_K,
    hilbert_closed_form,
)
from .doubling import cm1_check, doubling_certificate, theorem43_harness
from .fields import GF, QQ, DEFAULT_PRIME
from .ideals import Algebra, NotArtinianError
from .oracle import tor_betti
from .poly import Poly, Ring, parse_poly

__all__ = [
    "Algebra",
    "BettiTable",
    "DualGenerator",
    "Factor",
    "GF",
    "NotArtinianError",
    "Poly",
    "QQ",
    "DEFAULT_PRIME",
    "Ring",
    "annihilator",
    "betti_connected_sum_K",
    "betti_fiber_product_K",
    "betti_socle2",
    "catalecticant",
    "check_cs_conditions",
    "cm1_check",
    "connected_sum_K",
    "connected_sum_T",
    "contract",
    "cross_ideal_table",
    "doubling_certificate",
    "dual_socle",
    "fiber_product_K",
    "hilbert_closed_form",
    "inflate_betti",
    "parse_poly",
    "theorem43_harness",
    "tor_betti",
]
