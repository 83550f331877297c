"""Macaulay duality: contraction, catalecticants, annihilators, Thom classes.

The dual ring reuses the base variable names; a polynomial is "dual" by
position, not by syntax.  The module action is contraction,
x_i o X_j^k = X_j^(k-1) delta_ij, which introduces no binomial coefficients
and therefore works unchanged in any characteristic.
"""

from dataclasses import dataclass
from typing import Optional

from . import linalg
from .ideals import Algebra, IdealSlices, minimal_generators
from .linalg import Matrix
from .poly import Poly


def contract(f, F):
    """Contraction action of f in Q on F in the dual ring Q'."""
    if f.ring != F.ring:
        raise ValueError("contraction requires a common ring")
    fld = f.ring.field
    terms = {}
    for a, ca in f.terms.items():
        for b, cb in F.terms.items():
            if all(bi >= ai for ai, bi in zip(a, b)):
                e = tuple(bi - ai for ai, bi in zip(a, b))
                terms[e] = fld.add(terms.get(e, fld.zero), fld.mul(ca, cb))
    return Poly(f.ring, terms)


class DualGenerator:
    """Homogeneous element of the dual ring defining an AG algebra."""

    __slots__ = ("ring", "F", "d")

    def __init__(self, F):
        if F.is_zero():
            raise ValueError("dual generator must be nonzero")
        if not F.is_homogeneous():
            raise ValueError("dual generator must be homogeneous")
        d = F.degree()
        if d < 1:
            raise ValueError("dual generator must have positive degree")
        self.ring = F.ring
        self.F = F
        self.d = d


def catalecticant(F: DualGenerator, i: int) -> Matrix:
    """Matrix of f |-> f o F from Q_i to Q'_(d-i), over the monomial bases."""
    if not 0 <= i <= F.d:
        raise ValueError(f"degree {i} outside 0..{F.d}")
    ring = F.ring
    fld = ring.field
    dom = ring.monomial_basis(i)
    codom_index = ring.monomial_index(F.d - i)
    m = Matrix(fld, len(codom_index), len(dom))
    for c, a in enumerate(dom):
        for b, cb in F.F.terms.items():
            if all(bi >= ai for ai, bi in zip(a, b)):
                e = tuple(bi - ai for ai, bi in zip(a, b))
                m.rows[codom_index[e]][c] = cb
    return m


def annihilator_slices(F: DualGenerator) -> IdealSlices:
    """Slices of Ann(F) through degree d+1 (kernels of the catalecticants)."""
    ring = F.ring
    rows_by_degree = {}
    for i in range(F.d + 1):
        rows_by_degree[i] = linalg.kernel_rows(
            ring.field, catalecticant(F, i).rows, len(ring.monomial_basis(i))
        )
    # beyond the socle degree the ideal is everything
    top = ring.monomial_basis(F.d + 1)
    eye = []
    for k in range(len(top)):
        v = [ring.field.zero] * len(top)
        v[k] = ring.field.one
        eye.append(v)
    rows_by_degree[F.d + 1] = eye
    return IdealSlices.from_degree_rows(ring, rows_by_degree)


def annihilator(F: DualGenerator) -> Algebra:
    """The AG algebra Q/Ann(F), presented by canonical minimal generators."""
    slices = annihilator_slices(F)
    gens = minimal_generators(slices, F.d + 1)
    return Algebra(F.ring, gens)


def hilbert_from_catalecticants(F: DualGenerator):
    """Hilbert function of Q/Ann(F): the catalecticant ranks."""
    return tuple(linalg.rank(catalecticant(F, i)) for i in range(F.d + 1))


def dual_socle(F: DualGenerator) -> Poly:
    """Canonical homogeneous sigma of degree d with sigma o F = 1.

    This represents the Thom class of the projection Q/Ann(F) -> K; the
    echelon-canonical solution (free coordinates zero) pins the choice.
    """
    ring = F.ring
    m = catalecticant(F, F.d)
    x = linalg.solve_particular(m, [ring.field.one])
    if x is None:
        raise ValueError("dual generator is degenerate")  # cannot happen: F != 0
    return Poly.from_vector(ring, F.d, x)


def socle_and_thom_to_K(A: Algebra, F: DualGenerator) -> Poly:
    """Thom class of A -> K for the orientation given by F."""
    from .oracle import socle_basis  # deferred: oracle depends on ideals only

    soc = socle_basis(A)
    if len(soc) != 1:
        raise ValueError(f"not Gorenstein: socle dimension {len(soc)}")
    sigma = dual_socle(F)
    if A.slices.contains(sigma):
        raise ValueError("orientation does not match the algebra")
    return sigma


@dataclass
class CsReport:
    """Outcome of the connected-sum compatibility checks for (F, G, tau)."""

    condition_a: bool
    condition_b: bool
    first_failing_degree: Optional[int] = None
    t_is_base_field: bool = False
    note: str = ""
    holds: bool = False
    k: int = 0


def check_cs_conditions(F: DualGenerator, G: DualGenerator, tau: Poly) -> CsReport:
    """Check the two hypotheses for Q/Ann(F) # Q/Ann(G) over T = Q/Ann(tau o F):

    (a) tau o F = tau o G != 0, and
    (b) Ann(tau o F) = Ann(F) + Ann(G) in every degree through k+1,
    where k is the socle degree of T.
    """
    if F.ring != G.ring or tau.ring != F.ring:
        raise ValueError("F, G and tau must live in one ring")
    if F.d != G.d:
        raise ValueError("dual generators must share the socle degree")
    if tau.is_zero() or not tau.is_homogeneous():
        raise ValueError("tau must be homogeneous and nonzero")

    tF = contract(tau, F.F)
    tG = contract(tau, G.F)
    cond_a = (not tF.is_zero()) and tF == tG

    if tau.degree() == 0:
        # Scalar tau: the only sensible target is T = K.  The literal
        # condition (a) compares F and G themselves; for factors in disjoint
        # variables the projections to K are trivially compatible instead.
        disjoint = not (_support(F.F) & _support(G.F))
        note = (
            "disjoint-variable, trivially compatible (T = K)"
            if disjoint
            else "scalar tau without disjoint variables"
        )
        return CsReport(
            condition_a=cond_a,
            condition_b=disjoint,
            t_is_base_field=True,
            note=note,
            holds=disjoint,
            k=0,
        )

    k = F.d - tau.degree()
    if not cond_a:
        return CsReport(condition_a=False, condition_b=False, holds=False, k=k)

    T_dual = DualGenerator(tF)
    ann_t = annihilator_slices(T_dual)
    ann_f = annihilator_slices(F)
    ann_g = annihilator_slices(G)
    fld = F.ring.field
    for d in range(k + 2):
        ncols = len(F.ring.monomial_basis(d))
        lhs = ann_t.slice(d)[0] if d <= k + 1 else []
        rhs = list(ann_f.slice(d)[0]) + list(ann_g.slice(d)[0])
        if not linalg.row_space_equal(fld, lhs, rhs, ncols):
            return CsReport(
                condition_a=True,
                condition_b=False,
                first_failing_degree=d,
                holds=False,
                k=k,
            )
    return CsReport(condition_a=True, condition_b=True, holds=True, k=k)


def _support(poly):
    return {i for e in poly.terms for i, k in enumerate(e) if k}
