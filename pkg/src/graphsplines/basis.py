"""Spline matrices, exact determinants, basis verdicts, and the integer
flow-up oracle.

The basis criterion: n candidate splines form a module basis exactly when
the determinant of their spline matrix equals a unit times the graph's
determinant target.  The determinant always has the target as an exact
divisor, so the verdict reduces to a unit test on the quotient.

Over the integers the full spline module is the lattice of solutions of
the edge congruences.  ``flowup_basis`` computes it exactly: the lattice
is the projection of the kernel of the edge-difference system augmented
with label-multiplied slack columns, and a row Hermite form of that
projection is the flow-up basis.  Its diagonal must reproduce the leading
values, which doubles as an internal cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .graphs import LabeledGraph
from .rings import ZZ, Domain
from .splines import determinant_target, first_violation, leading_values


class InternalConsistencyError(RuntimeError):
    """An exactness guarantee failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class BasisVerdict:
    """Outcome of the determinant criterion for one candidate set."""

    determinant: object
    q: object
    quotient: Optional[object]
    is_basis: bool


def spline_matrix(g: LabeledGraph, splines: Sequence[Sequence]) -> list[list]:
    """Rows ordered from the last vertex down to the first; column k is
    the k-th candidate spline."""
    if len(splines) != g.n:
        raise ValueError(f"expected {g.n} splines, got {len(splines)}")
    d = g.domain
    cols = [[d.coerce(v) for v in f] for f in splines]
    for f in cols:
        if len(f) != g.n:
            raise ValueError("spline length does not match the vertex count")
    return [[cols[c][g.n - 1 - r] for c in range(g.n)] for r in range(g.n)]


def cofactor_determinant(d: Domain, rows: list[list]):
    """Expansion along the first column; quadratic-free small-n path."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = d.zero
    sign = 1
    for r in range(n):
        a = rows[r][0]
        if not d.is_zero(a):
            minor = [row[1:] for k, row in enumerate(rows) if k != r]
            term = d.mul(a, cofactor_determinant(d, minor))
            total = d.add(total, term if sign > 0 else d.neg(term))
        sign = -sign
    return total


def bareiss_determinant(d: Domain, rows: list[list]):
    """Fraction-free elimination; every interior division is exact."""
    n = len(rows)
    m = [list(row) for row in rows]
    sign = 1
    prev = d.one
    for k in range(n - 1):
        if d.is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not d.is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return d.zero
        pivot = m[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                num = d.sub(d.mul(m[r][c], pivot), d.mul(m[r][k], m[k][c]))
                m[r][c] = d.exact_div(num, prev)
            m[r][k] = d.zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else d.neg(det)


def determinant(d: Domain, rows: list[list]):
    """Exact determinant over an integral domain, sign preserved."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return d.one
    if n <= 4:
        return cofactor_determinant(d, rows)
    return bareiss_determinant(d, rows)


def _require_splines(g: LabeledGraph, splines: Sequence[Sequence]) -> None:
    for pos, f in enumerate(splines):
        e = first_violation(g, f)
        if e is not None:
            raise ValueError(
                f"candidate #{pos} is not a spline: edge "
                f"{g.vertex_names[e.u]}-{g.vertex_names[e.v]} "
                f"(label {g.domain.format(e.label)}) fails"
            )


def determinant_quotient(g: LabeledGraph, splines: Sequence[Sequence]):
    """Exact quotient determinant / target for n candidate splines.

    The division is guaranteed to come out even; a remainder means a
    broken exactness guarantee and is reported as an internal error.
    """
    _require_splines(g, splines)
    det = determinant(g.domain, spline_matrix(g, splines))
    q = determinant_target(g)
    try:
        return g.domain.exact_div(det, q)
    except ArithmeticError as exc:
        raise InternalConsistencyError(
            f"determinant {g.domain.format(det)} is not a multiple of the "
            f"target {g.domain.format(q)}"
        ) from exc


def check_basis(g: LabeledGraph, splines: Sequence[Sequence]) -> BasisVerdict:
    """Determinant criterion: a basis exactly when the quotient is a unit.

    Works unchanged on non-complete graphs, since completing a graph with
    unit labels changes neither the spline set nor the target.
    """
    if len(splines) != g.n:
        raise ValueError(f"expected {g.n} candidate splines, got {len(splines)}")
    _require_splines(g, splines)
    det = determinant(g.domain, spline_matrix(g, splines))
    q = determinant_target(g)
    try:
        quotient = g.domain.exact_div(det, q)
    except ArithmeticError as exc:
        raise InternalConsistencyError(
            f"determinant {g.domain.format(det)} is not a multiple of the "
            f"target {g.domain.format(q)}"
        ) from exc
    return BasisVerdict(
        determinant=det,
        q=q,
        quotient=quotient,
        is_basis=g.domain.is_unit(quotient),
    )


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    return g, x, y


def _row_hermite(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row echelon form over the integers with unimodular row operations.

    Returns (h, u) with u * mat == h, pivots positive, entries above each
    pivot reduced into [0, pivot), and zero rows at the bottom.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    h = [list(r) for r in mat]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = None
        for rr in range(r, rows):
            if h[rr][c]:
                pivot_row = rr
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            h[r], h[pivot_row] = h[pivot_row], h[r]
            u[r], u[pivot_row] = u[pivot_row], u[r]
        for rr in range(r + 1, rows):
            if not h[rr][c]:
                continue
            g, x, y = _xgcd(h[r][c], h[rr][c])
            pa, pb = h[r][c] // g, h[rr][c] // g
            h[r], h[rr] = (
                [x * s + y * t for s, t in zip(h[r], h[rr])],
                [-pb * s + pa * t for s, t in zip(h[r], h[rr])],
            )
            u[r], u[rr] = (
                [x * s + y * t for s, t in zip(u[r], u[rr])],
                [-pb * s + pa * t for s, t in zip(u[r], u[rr])],
            )
        if h[r][c] < 0:
            h[r] = [-v for v in h[r]]
            u[r] = [-v for v in u[r]]
        for rr in range(r):
            q = h[rr][c] // h[r][c]
            if q:
                h[rr] = [s - q * t for s, t in zip(h[rr], h[r])]
                u[rr] = [s - q * t for s, t in zip(u[rr], u[r])]
        r += 1
    return h, u


def flowup_basis(g: LabeledGraph) -> list[list[int]]:
    """Flow-up basis of the integer spline lattice.

    Returns n splines; the k-th vanishes on the first k-1 vertices and its
    value at vertex k equals that vertex's leading value, which is checked
    and enforced.  The splines form a module basis: the lattice is solved
    exactly, not constructed greedily.
    """
    if g.domain is not ZZ:
        raise ValueError("the flow-up oracle works over the integer domain only")
    leads = leading_values(g)
    n, m = g.n, g.m
    # Kernel of [differences | -labels] picks out (values, slacks) with
    # value[u] - value[v] = label * slack on every edge.
    kt = [[0] * m for _ in range(n + m)]
    for e in g.edges:
        kt[e.u][e.index] = 1
        kt[e.v][e.index] = -1
        kt[n + e.index][e.index] = -e.label
    h, u = _row_hermite(kt)
    kernel = [u[r] for r in range(n + m) if not any(h[r])]
    if len(kernel) != n:
        raise InternalConsistencyError(
            f"kernel rank {len(kernel)} differs from the vertex count {n}"
        )
    projected = [row[:n] for row in kernel]
    echelon, _ = _row_hermite(projected)
    for k in range(n):
        if any(echelon[k][j] for j in range(k)) or echelon[k][k] != leads[k]:
            raise InternalConsistencyError(
                "flow-up diagonal does not reproduce the leading values"
            )
    return echelon


def span_coordinates(g: LabeledGraph, basis: Sequence[Sequence[int]],
                     f: Sequence[int]) -> Optional[list[int]]:
    """Integer coordinates of ``f`` in the span of ``basis``, or None.

    The basis vectors must be linearly independent; the system is solved
    exactly through the Hermite form.
    """
    if g.domain is not ZZ:
        raise ValueError("span coordinates are computed over the integers only")
    rows = [list(map(g.domain.coerce, b)) for b in basis]
    if len(f) != g.n or any(len(b) != g.n for b in rows):
        raise ValueError("vector lengths must match the vertex count")
    h, u = _row_hermite(rows)
    if any(not any(row) for row in h):
        raise ValueError("basis vectors are linearly dependent")
    pivots = [next(j for j, v in enumerate(row) if v) for row in h]
    rem = list(f)
    y = [0] * len(rows)
    k = 0
    for c in range(g.n):
        if k < len(pivots) and pivots[k] == c:
            q, r = divmod(rem[c], h[k][c])
            if r:
                return None
            y[k] = q
            if q:
                rem = [s - q * t for s, t in zip(rem, h[k])]
            k += 1
        elif rem[c]:
            return None
    return [sum(y[k] * u[k][j] for k in range(len(rows))) for j in range(len(rows))]
