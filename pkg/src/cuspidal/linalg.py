"""Exact Gaussian elimination: rank, reduced row echelon form, kernels.

Matrices are lists of rows of :class:`FieldElement`.  Prime fields get a
fast path operating on raw integer residues; the generic path covers the
rationals and extension fields.  Elimination is fraction-free only in
the sense that every field here is exact; no rounding ever occurs.
"""

from __future__ import annotations

from .fields import Field, FieldElement, PrimeField


def _rref_prime(rows, p):
    """RREF over GF(p) on integer payload rows; returns (rows, pivots)."""
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c] % p:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [(ri[j] - f * rr[j]) % p for j in range(n)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def _rref_generic(rows, field):
    m = len(rows)
    if m == 0:
        return [], []
    n = len(rows[0])
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if not rows[i][c].is_zero():
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                ri, rr = rows[i], rows[r]
                rows[i] = [ri[j] - f * rr[j] for j in range(n)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def rref(rows, field: Field):
    """Reduced row echelon form.  Returns (reduced nonzero rows, pivot columns)."""
    if isinstance(field, PrimeField):
        raw = [[e.val for e in row] for row in rows]
        red, piv = _rref_prime(raw, field.p)
        out = [[FieldElement(field, v) for v in row] for row in red]
        return out, piv
    return _rref_generic(rows, field)


def rank(rows, field: Field) -> int:
    return len(rref(rows, field)[1])


def kernel_basis(rows, field: Field, ncols: int):
    """Basis of the right kernel of the matrix, as coefficient vectors.

    Deterministic: one basis vector per non-pivot column, with a 1 in
    that column, in increasing column order.
    """
    red, pivots = rref(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    zero = field.zero()
    one = field.one()
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve(rows, rhs, field: Field):
    """One solution of A x = b, or None if inconsistent."""
    if not rows:
        return None
    n = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, field)
    for r, pc in enumerate(pivots):
        if pc == n:
            return None
    x = [field.zero()] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return x
