"""Independent ground truth for graded Betti numbers.

Betti numbers are computed as the homology of the Koszul complex on all the
ring variables tensored with the quotient algebra, one (homological degree,
internal degree) slice at a time, by exact rank computations.  Only ranks are
needed, the complex is finite and explicit for Artinian quotients, and no
Groebner machinery is involved.
"""

import itertools

from . import linalg
from .betti import BettiTable
from .ideals import Algebra, NotArtinianError
from .poly import Poly


class ScaleCapError(Exception):
    pass


def hilbert_function(algebra: Algebra):
    """Hilbert function through the socle degree; errors if not Artinian."""
    return list(algebra.hilbert_function())


class _QuotientArithmetic:
    """Graded basis of A = Q/I and the multiplication maps by each variable."""

    def __init__(self, algebra, top=None):
        self.algebra = algebra
        self.ring = algebra.ring
        self.field = algebra.ring.field
        if top is None:
            self.hf = list(algebra.hilbert_function())
            self.artinian = True
        else:
            self.hf = algebra.hilbert_values(top + 1)
            self.artinian = False
        self.top = len(self.hf) - 1
        # quotient basis per degree: indices of non-pivot monomials
        self.qmono = [algebra.slices.quotient_monomials(d) for d in range(self.top + 2)]
        self._mult = {}

    def dim(self, d):
        if 0 <= d <= self.top:
            return self.hf[d]
        if d > self.top and not self.artinian:
            raise ValueError(f"degree {d} beyond the computed range")
        return 0

    def mult_columns(self, k, d):
        """Columns of multiplication by x_k from A_d to A_(d+1)."""
        key = (k, d)
        if key not in self._mult:
            ring, f = self.ring, self.field
            basis = ring.monomial_basis(d)
            up_index = ring.monomial_index(d + 1)
            up_q = self.qmono[d + 1]
            up_pos = {m: r for r, m in enumerate(up_q)}
            slices = self.algebra.slices
            cols = []
            for mono_idx in self.qmono[d]:
                e = list(basis[mono_idx])
                e[k] += 1
                j = up_index[tuple(e)]
                vec = [f.zero] * len(up_index)
                vec[j] = f.one
                reduced = slices.reduce(d + 1, vec)
                cols.append([reduced[m] for m in up_q])
            self._mult[key] = cols
        return self._mult[key]


def _koszul_differential(qa, i, j):
    """Matrix of d_i : (Lambda^i K^n (x) A)_j -> (Lambda^(i-1) K^n (x) A)_j.

    Bases: sorted index subsets paired with the quotient basis of A in the
    complementary internal degree; signs by position parity.
    """
    n = qa.ring.nvars
    f = qa.field
    dom_sets = list(itertools.combinations(range(n), i))
    cod_sets = list(itertools.combinations(range(n), i - 1))
    cod_pos = {s: p for p, s in enumerate(cod_sets)}
    dom_a = qa.dim(j - i)
    cod_a = qa.dim(j - i + 1)
    nrows = len(cod_sets) * cod_a
    ncols = len(dom_sets) * dom_a
    rows = [[f.zero] * ncols for _ in range(nrows)]
    if nrows == 0 or ncols == 0:
        return rows, nrows, ncols
    for sp, s in enumerate(dom_sets):
        for pos, k in enumerate(s):
            target = s[:pos] + s[pos + 1 :]
            block = cod_pos[target] * cod_a
            cols = qa.mult_columns(k, j - i)
            negate = pos % 2 == 1
            for b in range(dom_a):
                col = sp * dom_a + b
                for r, val in enumerate(cols[b]):
                    if val:
                        v = f.neg(val) if negate else val
                        rows[block + r][col] = f.add(rows[block + r][col], v)
    return rows, nrows, ncols


def tor_betti(algebra: Algebra, max_vars=8, max_dim=2000, check_d2=False,
              max_internal_degree=None):
    """Graded Betti table of A over its polynomial ring, via Koszul homology.

    Non-Artinian quotients are supported when max_internal_degree bounds the
    internal degrees to scan (it must be at least the regularity for the
    table to be complete).  Every run is cross-checked against the Euler
    characteristic identity
    sum_i (-1)^i sum_j beta_ij s^j = HF_A(s) * (1-s)^n, degreewise over the
    scanned range.
    """
    ring = algebra.ring
    n = ring.nvars
    if n > max_vars:
        raise ScaleCapError(f"{n} variables exceeds the cap of {max_vars}")
    if max_internal_degree is None:
        hf = list(algebra.hilbert_function())
        socle = len(hf) - 1
        qa = _QuotientArithmetic(algebra)
        jmax = lambda i: i + socle
        euler_cap = None
    else:
        hf = algebra.hilbert_values(max_internal_degree + 1)
        qa = _QuotientArithmetic(algebra, top=max_internal_degree)
        jmax = lambda i: max_internal_degree
        euler_cap = max_internal_degree
    if sum(hf) > max_dim:
        raise ScaleCapError(f"dim_K {sum(hf)} exceeds the cap of {max_dim}")
    f = ring.field

    table = BettiTable()
    rank_cache = {}

    def drank(i, j):
        if i < 1 or i > n:
            return 0
        key = (i, j)
        if key not in rank_cache:
            rows, nrows, ncols = _koszul_differential(qa, i, j)
            if nrows == 0 or ncols == 0:
                rank_cache[key] = 0
            else:
                rank_cache[key] = linalg.rank(
                    linalg.Matrix(f, nrows, ncols, rows)
                )
            if check_d2 and 0 < ncols <= 80 and i >= 2:
                _assert_d_squared_zero(qa, i, j)
        return rank_cache[key]

    for i in range(n + 1):
        for j in range(i, jmax(i) + 1):
            dim_ij = len(list(itertools.combinations(range(n), i))) * qa.dim(j - i)
            if dim_ij == 0:
                continue
            b = dim_ij - drank(i, j) - drank(i + 1, j)
            if b < 0:
                raise AssertionError(f"negative homology rank at ({i},{j})")
            if b:
                table.add(i, j, b)

    _euler_check(table, hf, n, cap=euler_cap)
    return table


def _assert_d_squared_zero(qa, i, j):
    rows2, nr2, nc2 = _koszul_differential(qa, i, j)
    rows1, nr1, nc1 = _koszul_differential(qa, i - 1, j)
    if nr2 == 0 or nc2 == 0 or nr1 == 0:
        return
    f = qa.field
    for c in range(nc2):
        mid = [rows2[r][c] for r in range(nr2)]
        out = linalg.Matrix(f, nr1, nc1, rows1).mul_vector(mid)
        assert not any(out), f"d^2 != 0 at ({i},{j})"


def _euler_check(table, hf, n, cap=None):
    # coefficients of HF_A(s) * (1-s)^n
    target = {}
    from .betti import binom

    for d, h in enumerate(hf):
        for k in range(n + 1):
            c = h * binom(n, k) * (-1) ** k
            target[d + k] = target.get(d + k, 0) + c
    got = {}
    for (i, j), c in table.entries.items():
        got[j] = got.get(j, 0) + ((-1) ** i) * c
    degrees = set(target) | set(got)
    if cap is not None:
        degrees = {j for j in degrees if j <= cap}
    for j in degrees:
        if target.get(j, 0) != got.get(j, 0):
            raise AssertionError(
                f"Euler characteristic mismatch in internal degree {j}: "
                f"{got.get(j, 0)} vs {target.get(j, 0)}"
            )


def socle_basis(algebra: Algebra):
    """Homogeneous representatives of (0 : m_A); the count is the type."""
    qa = _QuotientArithmetic(algebra)
    ring = algebra.ring
    f = ring.field
    out = []
    for d in range(qa.top + 1):
        a_d = qa.dim(d)
        if a_d == 0:
            continue
        a_up = qa.dim(d + 1)
        rows = []
        if a_up:
            for k in range(ring.nvars):
                cols = qa.mult_columns(k, d)
                for r in range(a_up):
                    rows.append([cols[b][r] for b in range(a_d)])
        kern = linalg.kernel_rows(f, rows, a_d) if rows else None
        if kern is None:
            kern = [
                [f.one if b == t else f.zero for b in range(a_d)]
                for t in range(a_d)
            ]
        basis = ring.monomial_basis(d)
        for v in kern:
            terms = {}
            for coeff, mono_idx in zip(v, qa.qmono[d]):
                if coeff:
                    terms[basis[mono_idx]] = coeff
            out.append(Poly(ring, terms))
    return out
