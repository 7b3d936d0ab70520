"""Exact dense linear algebra over the rationals.

Matrices are lists of rows. Integer entries stay ``int``; everything else is
``fractions.Fraction``. No function mutates its arguments.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, PreconditionError, SingularMatrixError, SizeGuardError

MAX_DIM = 512

Matrix = Sequence[Sequence]


def _check_square(M: Matrix) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise DimensionError(f"matrix is not square: {n} rows, a row of length {len(row)}")
    return n


def _guard(n: int, limit: int | None) -> None:
    if limit is not None and n > limit:
        raise SizeGuardError(f"dimension {n} exceeds the size guard {limit}")


def _is_integral(M: Matrix) -> bool:
    return all(
        isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1)
        for row in M
        for x in row
    )


def to_fractions(M: Matrix) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in M]


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Matrix) -> list[list]:
    return [list(col) for col in zip(*M)]


def matmul(A: Matrix, B: Matrix) -> list[list]:
    if A and len(A[0]) != len(B):
        raise DimensionError("inner dimensions do not match")
    Bt = transpose(B) if B else []
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def determinant(M: Matrix, limit: int | None = MAX_DIM) -> Fraction:
    """Exact determinant; the 0x0 determinant is 1.

    Integer matrices go through Bareiss fraction-free elimination, anything
    else through plain rational Gaussian elimination.
    """
    n = _check_square(M)
    _guard(n, limit)
    if n == 0:
        return Fraction(1)
    if _is_integral(M):
        return Fraction(_bareiss([[int(x) for x in row] for row in M]))
    return _gauss_det(to_fractions(M))


def _bareiss(A: list[list[int]]) -> int:
    n = len(A)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        pivot = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                q, r = divmod(pivot * row_i[j] - aik * row_k[j], prev)
                assert r == 0, "Bareiss step produced an inexact division"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def _gauss_det(A: list[list[Fraction]]) -> Fraction:
    n = len(A)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        pivot = A[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = A[i][k] / pivot
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return det


def inverse(M: Matrix, limit: int | None = MAX_DIM) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = _check_square(M)
    _guard(n, limit)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for k in range(n):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            raise SingularMatrixError("cannot invert a singular matrix", det=0)
        A[k], A[piv] = A[piv], A[k]
        pivot = A[k][k]
        A[k] = [x / pivot for x in A[k]]
        for i in range(n):
            if i != k and A[i][k]:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return [row[n:] for row in A]


def complement_minor(M: Matrix, rows: Iterable[int], cols: Iterable[int]) -> list[list]:
    """``M[rows^c, cols^c]``: drop the given 1-based rows and columns."""
    n = _check_square(M)
    rows, cols = set(rows), set(cols)
    if len(rows) != len(cols):
        raise DimensionError(f"deleted index sets differ in size: {len(rows)} vs {len(cols)}")
    for idx in rows | cols:
        if not 1 <= idx <= n:
            raise DimensionError(f"index {idx} outside 1..{n}")
    keep_r = [i for i in range(n) if i + 1 not in rows]
    keep_c = [j for j in range(n) if j + 1 not in cols]
    return [[M[i][j] for j in keep_c] for i in keep_r]


def adjugate(M: Matrix, limit: int | None = MAX_DIM) -> list[list[Fraction]]:
    """Classical adjugate from cofactors; works for singular matrices too."""
    n = _check_square(M)
    if n == 0:
        raise DimensionError("adjugate of the 0x0 matrix is undefined")
    _guard(n, limit)
    adj = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sign = -1 if (i + j) % 2 else 1
            # adj[j][i] is the (i, j) cofactor
            adj[j][i] = sign * determinant(complement_minor(M, {i + 1}, {j + 1}), limit=None)
    return adj


def cofactor_sum(M: Matrix, limit: int | None = MAX_DIM) -> Fraction:
    """Sum of all cofactors, i.e. ``1' adj(M) 1``."""
    return sum((x for row in adjugate(M, limit) for x in row), Fraction(0))


def moore_penrose_laplacian(L: Matrix, limit: int | None = MAX_DIM) -> list[list[Fraction]]:
    """Pseudoinverse of a rank ``n-1`` matrix with zero row and column sums.

    With ``B`` the leading ``(n-1)`` block, ``C = B^-1``, ``x = Ce``,
    ``y = C'e`` and ``s = e'Ce``::

        L+ = [[C - e y'/n - x e'/n, -x/n], [-y'/n, 0]] + s/n^2 * 11'
    """
    n = _check_square(L)
    _guard(n, limit)
    for i, row in enumerate(L):
        if sum(row) != 0:
            raise PreconditionError(f"row {i + 1} of the Laplacian does not sum to zero")
    for j in range(n):
        if sum(row[j] for row in L) != 0:
            raise PreconditionError(f"column {j + 1} of the Laplacian does not sum to zero")
    if n == 1:
        return [[Fraction(0)]]
    B = [list(row[: n - 1]) for row in L[: n - 1]]
    if determinant(B, limit=None) == 0:
        raise PreconditionError(
            f"rank of the Laplacian is below {n - 1}: leading block B is singular"
        )
    C = inverse(B, limit=None)
    m = n - 1
    x = [sum(row) for row in C]
    y = [sum(C[i][j] for i in range(m)) for j in range(m)]
    s = sum(x)
    corner = s / (n * n)
    P = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            P[i][j] = C[i][j] - (x[i] + y[j]) / n + corner
        P[i][m] = -x[i] / n + corner
        P[m][i] = -y[i] / n + corner
    P[m][m] = corner
    return P


def is_moore_penrose(A: Matrix, X: Matrix) -> bool:
    """Check the four Penrose conditions exactly."""
    n = _check_square(A)
    if _check_square(X) != n:
        raise DimensionError("A and X must have the same dimension")
    AX = matmul(A, X)
    XA = matmul(X, A)
    return (
        mat_equal(matmul(AX, A), A)
        and mat_equal(matmul(XA, X), X)
        and mat_equal(transpose(AX), AX)
        and mat_equal(transpose(XA), XA)
    )


def format_rational(x) -> str:
    """``p/q`` in lowest terms with ``q > 0``, or ``p`` when ``q == 1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_decimal(x, digits: int) -> str:
    """Fixed-point approximation, round-half-even, marked with a trailing ``~``."""
    x = Fraction(x)
    scaled = round(x * 10**digits)  # Fraction.__round__ rounds half to even
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}~"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}~"
