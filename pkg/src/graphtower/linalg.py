"""Exact linear algebra: fraction-free determinants and Smith normal form.

Determinants use the Bareiss algorithm, whose divisions are exact over any
integral domain; the ring is abstracted through a tiny protocol so the same
routine serves integers, cyclotomic integers, polynomials and Laurent
polynomials.
"""

from __future__ import annotations

from typing import Any, Protocol, Sequence


class Ring(Protocol):
    """Minimal integral-domain interface used by the determinant routine."""

    def zero(self) -> Any: ...
    def one(self) -> Any: ...
    def add(self, a: Any, b: Any) -> Any: ...
    def sub(self, a: Any, b: Any) -> Any: ...
    def mul(self, a: Any, b: Any) -> Any: ...
    def neg(self, a: Any) -> Any: ...
    def is_zero(self, a: Any) -> bool: ...
    def exact_div(self, a: Any, b: Any) -> Any: ...


class IntRing:
    """Arbitrary-precision integers."""

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a: int, b: int) -> int:
        return a + b

    def sub(self, a: int, b: int) -> int:
        return a - b

    def mul(self, a: int, b: int) -> int:
        return a * b

    def neg(self, a: int) -> int:
        return -a

    def is_zero(self, a: int) -> bool:
        return a == 0

    def exact_div(self, a: int, b: int) -> int:
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact division {a} / {b}")
        return q


ZZ = IntRing()


def det_in_ring(matrix: Sequence[Sequence[Any]], ring: Ring) -> Any:
    """Determinant by fraction-free (Bareiss) elimination with row pivoting."""
    n = len(matrix)
    if n == 0:
        return ring.one()
    m = [list(row) for row in matrix]
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        pivot_row = next((r for r in range(k, n) if not ring.is_zero(m[r][k])), None)
        if pivot_row is None:
            return ring.zero()
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            head = row_i[k]
            for j in range(k + 1, n):
                num = ring.sub(ring.mul(pivot, row_i[j]), ring.mul(head, row_k[j]))
                row_i[j] = ring.exact_div(num, prev)
            row_i[k] = ring.zero()
        prev = pivot
    result = m[n - 1][n - 1]
    return result if sign == 1 else ring.neg(result)


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant specialised to plain integers (hot path)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        # smallest nonzero pivot keeps intermediate entries small
        pivot_row = None
        best = None
        for r in range(k, n):
            v = m[r][k]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                pivot_row = r
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            head = row_i[k]
            if head == 0:
                for j in range(k + 1, n):
                    row_i[j] = pivot * row_i[j] // prev
            else:
                for j in range(k + 1, n):
                    row_i[j] = (pivot * row_i[j] - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def det_int_poly_matrix(
        matrix: Sequence[Sequence[Sequence[int]]]) -> tuple[int, ...]:
    """Determinant of a matrix of integer polynomials (coefficient tuples).

    Uses evaluation at integer points followed by exact Lagrange
    interpolation, which beats symbolic elimination for the large matrices
    coming from derived graphs.  Returns ascending coefficients.
    """
    from fractions import Fraction

    n = len(matrix)
    if n == 0:
        return (1,)
    # degree bound: sum over rows of the maximal entry degree
    bound = sum(max((len(entry) - 1 for entry in row), default=0)
                for row in matrix)
    points = range(bound + 1)
    values = []
    for t in points:
        evaluated = [[_eval_poly(entry, t) for entry in row] for row in matrix]
        values.append(det_int(evaluated))
    # Lagrange interpolation over Q; the result is known to be integral
    full = [1]
    for t_j in points:
        full = _poly_shift_mul(full, -t_j)
    coeffs = [Fraction(0)] * (bound + 1)
    for i, t_i in enumerate(points):
        # basis polynomial full / (x − t_i) by synthetic division
        basis = [0] * (len(full) - 1)
        carry = 0
        for d in range(len(full) - 1, 0, -1):
            carry = full[d] + carry * t_i
            basis[d - 1] = carry
        denom = 1
        for j, t_j in enumerate(points):
            if j != i:
                denom *= t_i - t_j
        scale = Fraction(values[i], denom)
        for d, c in enumerate(basis):
            if c:
                coeffs[d] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolated determinant is not integral")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _eval_poly(coeffs: Sequence[int], x: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * x + c
    return value


def _poly_shift_mul(poly: list, constant: int) -> list:
    """Multiply a polynomial (ascending coeffs) by (x + constant)."""
    out = [0] + list(poly)
    for i, c in enumerate(poly):
        out[i] += c * constant
    return out


def smith_invariant_factors(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors d_1 | d_2 | ... of an integer matrix.

    Deterministic pivoting: smallest nonzero absolute value, row-major ties.
    The returned list has length min(rows, cols); trailing zeros mark rank
    deficiency.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    size = min(rows, cols)
    diag: list[int] = []
    t = 0
    while t < size:
        # locate the smallest nonzero entry of the trailing block
        pivot = None
        best = None
        for i in range(t, rows):
            row = m[i]
            for j in range(t, cols):
                v = row[j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            m[t], m[pi] = m[pi], m[t]
        if pj != t:
            for row in m:
                row[t], row[pj] = row[pj], row[t]
        while True:
            p = m[t][t]
            done = True
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // p
                    if q:
                        row_i, row_t = m[i], m[t]
                        for j in range(t, cols):
                            row_i[j] -= q * row_t[j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // p
                    if q:
                        for row in m:
                            row[j] -= q * row[t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if done:
                break
        # enforce divisibility of the trailing block by the pivot
        p = m[t][t]
        offender = None
        for i in range(t + 1, rows):
            row = m[i]
            for j in range(t + 1, cols):
                if row[j] % p:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_o, row_t = m[offender], m[t]
            for j in range(t, cols):
                row_t[j] += row_o[j]
            continue
        diag.append(abs(p))
        t += 1
    diag.extend([0] * (size - len(diag)))
    return diag
