"""Exact square matrices of size 1..4.

Entries may be any scalar type with exact +, -, *, / and equality against 0
and 1: in practice ``fractions.Fraction`` or ``sl2kit.numberfield.FieldElement``
(the two coerce against each other, so mixed matrices behave).  Floats are
rejected on construction; everything in this module is exact.

Matrices are immutable and hashable, which is what the tree and word-ball
code rely on for deduplication.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularError


def _coerce_scalar(x):
    if isinstance(x, bool) or isinstance(x, float) or isinstance(x, complex):
        raise TypeError("exact scalars only (int, Fraction or FieldElement)")
    if isinstance(x, int):
        return Fraction(x)
    return x


def mat(rows) -> "Matrix":
    """Build a Matrix from nested sequences, coercing ints to Fractions."""
    coerced = tuple(tuple(_coerce_scalar(x) for x in row) for row in rows)
    return Matrix(coerced)


class Matrix:
    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        n = len(rows)
        if n not in (1, 2, 3, 4) or any(len(r) != n for r in rows):
            raise ValueError("square matrices of size 1..4 only")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n))
                         for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.n != self.n:
            raise ValueError("size mismatch")
        a, b = self.rows, other.rows
        n = self.n
        return Matrix(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)))

    def __rmul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        s = _coerce_scalar(scalar)
        return Matrix(tuple(tuple(s * x for x in row) for row in self.rows))

    def scale(self, scalar) -> "Matrix":
        return self.__rmul__(scalar)

    def __add__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix(tuple(tuple(x + y for x, y in zip(r, s))
                            for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix) or other.n != self.n:
            return NotImplemented
        return Matrix(tuple(tuple(x - y for x, y in zip(r, s))
                            for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix(tuple(tuple(-x for x in row) for row in self.rows))

    def transpose(self) -> "Matrix":
        n = self.n
        return Matrix(tuple(tuple(self.rows[j][i] for j in range(n))
                            for i in range(n)))

    def trace(self):
        t = self.rows[0][0]
        for i in range(1, self.n):
            t = t + self.rows[i][i]
        return t

    def det(self):
        r = self.rows
        if self.n == 1:
            return r[0][0]
        if self.n == 2:
            return r[0][0] * r[1][1] - r[0][1] * r[1][0]
        # cofactor expansion along the first row; n <= 4 keeps this cheap
        total = None
        for j in range(self.n):
            minor = Matrix(tuple(tuple(row[k] for k in range(self.n) if k != j)
                                 for row in r[1:]))
            term = r[0][j] * minor.det()
            if j % 2 == 1:
                term = -term
            total = term if total is None else total + term
        return total

    def inverse(self) -> "Matrix":
        if self.n == 2:
            d = self.det()
            if d == 0:
                raise SingularError("matrix is singular")
            (a, b), (c, e) = self.rows
            return Matrix(((e / d, -b / d), (-c / d, a / d)))
        return self._gauss_jordan_inverse()

    def _gauss_jordan_inverse(self) -> "Matrix":
        n = self.n
        aug = [list(self.rows[i]) + [Fraction(1) if i == j else Fraction(0)
                                     for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if pivot is None:
                raise SingularError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Matrix(tuple(tuple(row[n:]) for row in aug))

    def charpoly(self) -> tuple:
        """Characteristic polynomial det(xI - A), coefficients constant-first.

        Faddeev-LeVerrier recursion; the divisions are by the integers 1..n,
        always exact in characteristic zero.
        """
        n = self.n
        ident = Matrix.identity(n)
        coeffs_desc = [Fraction(1)]
        m = self
        for k in range(1, n + 1):
            c = -(m.trace() / k)
            coeffs_desc.append(c)
            if k < n:
                m = self * (m + c * ident)
        return tuple(reversed(coeffs_desc))

    def is_identity(self) -> bool:
        return all(self.rows[i][j] == (1 if i == j else 0)
                   for i in range(self.n) for j in range(self.n))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.rows)
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix[{body}]"


# ---------------------------------------------------------------------------
# exact linear algebra helpers (generic over the scalar type)
# ---------------------------------------------------------------------------

def linear_solve(rows, rhs):
    """Solve A*x = rhs exactly.

    ``rows`` is a list of equations (len m), each of length n; overdetermined
    systems are fine.  Returns a length-n list, with free variables set to
    zero, or None when the system is inconsistent.  Pivoting is deterministic:
    first usable row, columns left to right.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(rows[i]) + [rhs[i]] for i in range(m)]
    pivots = []
    row = 0
    for col in range(n):
        pr = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if pr is None:
            continue
        aug[row], aug[pr] = aug[pr], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][n] != 0:
            return None
    zero = rhs[0] - rhs[0] if m else 0
    sol = [zero for _ in range(n)]
    for r, col in enumerate(pivots):
        sol[col] = aug[r][n]
    return sol


def rank(rows) -> int:
    """Rank of a rectangular exact matrix, by Gaussian elimination."""
    work = [list(r) for r in rows]
    m = len(work)
    if m == 0:
        return 0
    n = len(work[0])
    rk = 0
    for col in range(n):
        pr = next((r for r in range(rk, m) if work[r][col] != 0), None)
        if pr is None:
            continue
        work[rk], work[pr] = work[pr], work[rk]
        pv = work[rk][col]
        work[rk] = [x / pv for x in work[rk]]
        for r in range(m):
            if r != rk and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[rk])]
        rk += 1
        if rk == m:
            break
    return rk
