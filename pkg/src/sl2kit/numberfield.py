"""Exact arithmetic in small number fields Q(gamma).

A field is declared by a monic integer polynomial of degree 1..4 that is
irreducible over Q; ``gamma`` denotes a root.  Elements are stored as tuples
of Fractions (c_0, ..., c_{m-1}) meaning c_0 + c_1*gamma + ... in the power
basis, and every operation is exact.  Irreducibility for these degrees is
decided by the rational-root test plus, for quartics, an exhaustive search
for integer quadratic factors (Gauss's lemma makes that complete for monic
integer polynomials).

Plain rationals interoperate: FieldElement arithmetic accepts int and
Fraction operands, and an element whose higher coefficients vanish compares
and hashes equal to the corresponding Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import NotMonicError, ReducibleError
from .matrices import linear_solve

MAX_DEGREE = 4


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_int_poly(coeffs, x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _reducible_witness(coeffs):
    """A monic factor of the polynomial (constant-first), or None.

    Checks integer roots first (any rational root of a monic integer
    polynomial is an integer dividing the constant term), then for quartics
    searches integer quadratic factors x^2 + px + q directly.
    """
    deg = len(coeffs) - 1
    if deg == 1:
        return None
    c0 = coeffs[0]
    if c0 == 0:
        return (0, 1)  # the factor x
    for d in _divisors(c0):
        for r in (d, -d):
            if _eval_int_poly(coeffs, r) == 0:
                return (-r, 1)
    if deg == 4:
        a0, a1, a2, a3 = coeffs[0], coeffs[1], coeffs[2], coeffs[3]
        for d in _divisors(a0):
            for q in (d, -d):
                s, rem = divmod(a0, q)
                if rem != 0:
                    continue
                # x^4+a3x^3+a2x^2+a1x+a0 = (x^2+px+q)(x^2+rx+s)
                # requires p+r = a3 and p*r = a2-q-s
                disc = a3 * a3 - 4 * (a2 - q - s)
                if disc < 0:
                    continue
                t = isqrt(disc)
                if t * t != disc:
                    continue
                for p in ((a3 + t) // 2, (a3 - t) // 2):
                    if (a3 + t) % 2 != 0 and (a3 - t) % 2 != 0:
                        break
                    r = a3 - p
                    if p * r == a2 - q - s and p * s + q * r == a1:
                        return (q, p, 1)
    return None


def make_field(minpoly) -> "NumberField":
    """Declare Q(gamma) from monic integer coefficients, constant term first."""
    coeffs = tuple(minpoly)
    if not coeffs or not all(isinstance(c, int) and not isinstance(c, bool)
                             for c in coeffs):
        raise NotMonicError("coefficients must be integers, constant term first")
    if coeffs[-1] != 1:
        raise NotMonicError("defining polynomial must be monic")
    deg = len(coeffs) - 1
    if not 1 <= deg <= MAX_DEGREE:
        raise ValueError(f"degree must be between 1 and {MAX_DEGREE}, got {deg}")
    witness = _reducible_witness(coeffs)
    if witness is not None:
        raise ReducibleError(
            f"polynomial {_poly_str(coeffs)} factors over Q; "
            f"one factor is {_poly_str(witness)}",
            witness=witness)
    return NumberField(coeffs)


def _poly_str(coeffs) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        elif k == 1:
            parts.append(f"{c}*x" if c != 1 else "x")
        else:
            parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
    return " + ".join(parts) if parts else "0"


class NumberField:
    """Q(gamma) for gamma a root of a certified-irreducible monic polynomial.

    Use make_field() rather than the constructor; the constructor trusts its
    input.  Fields compare and hash by their defining polynomial.
    """

    __slots__ = ("minpoly", "_powers")

    def __init__(self, minpoly):
        object.__setattr__(self, "minpoly", tuple(int(c) for c in minpoly))
        m = self.degree
        # gamma^k for k = 0 .. 2m-2 as coefficient tuples; products of two
        # elements never need more than gamma^(2m-2)
        powers = [tuple(Fraction(1 if i == k else 0) for i in range(m))
                  for k in range(m)]
        rel = tuple(Fraction(-c) for c in self.minpoly[:m])  # gamma^m
        cur = rel
        for _ in range(m, 2 * m - 1):
            powers.append(cur)
            top = cur[m - 1]
            shifted = (Fraction(0),) + cur[:m - 1]
            cur = tuple(s + top * r for s, r in zip(shifted, rel))
        object.__setattr__(self, "_powers", tuple(powers))

    def __setattr__(self, name, value):
        raise AttributeError("NumberField is immutable")

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def element(self, coeffs) -> "FieldElement":
        """Element from rational coefficients; short tuples are zero-padded."""
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) > self.degree:
            raise ValueError("too many coefficients for this field")
        cs = cs + tuple(Fraction(0) for _ in range(self.degree - len(cs)))
        return FieldElement(self, cs)

    def from_rational(self, q) -> "FieldElement":
        return self.element((Fraction(q),))

    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    def one(self) -> "FieldElement":
        return self.from_rational(1)

    def gamma(self) -> "FieldElement":
        if self.degree == 1:
            return self.from_rational(-self.minpoly[0])
        return self.element((0, 1))

    def __eq__(self, other):
        if not isinstance(other, NumberField):
            return NotImplemented
        return self.minpoly == other.minpoly

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        return f"NumberField({_poly_str(self.minpoly)})"


class FieldElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other):
        """Bring ``other`` into this field, or return None if impossible."""
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return other
            if other.is_rational:
                return self.field.from_rational(other.coeffs[0])
            return None
        if isinstance(other, bool) or isinstance(other, float):
            return None
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    @property
    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field,
                            tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        m = self.field.degree
        a, b = self.coeffs, o.coeffs
        conv = [Fraction(0)] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    conv[i + j] += ai * bj
        powers = self.field._powers
        out = list(conv[:m])
        for k in range(m, 2 * m - 1):
            ck = conv[k]
            if ck != 0:
                pk = powers[k]
                for i in range(m):
                    out[i] += ck * pk[i]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise ZeroDivisionError("division by zero in number field")
        m = self.field.degree
        # columns are the coordinates of x*gamma^j; solve x*y = 1
        gamma_j = [self.field.element(tuple(1 if i == j else 0 for i in range(m)))
                   for j in range(m)]
        cols = [(self * g).coeffs for g in gamma_j]
        rows = [[cols[j][i] for j in range(m)] for i in range(m)]
        rhs = [Fraction(1 if i == 0 else 0) for i in range(m)]
        sol = linear_solve(rows, rhs)
        assert sol is not None  # nonzero elements of a field are invertible
        return FieldElement(self.field, tuple(sol))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.field.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparisons ------------------------------------------------------

    def __bool__(self):
        return any(c != 0 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self.coeffs == other.coeffs
            if self.is_rational and other.is_rational:
                return self.coeffs[0] == other.coeffs[0]
            return False
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        # rational-valued elements hash like their Fraction so mixed-type
        # matrices stay hash-consistent with their Fraction twins
        if self.is_rational:
            return hash(self.coeffs[0])
        return hash((self.field.minpoly, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            elif k == 1:
                terms.append(f"{c}*g")
            else:
                terms.append(f"{c}*g^{k}")
        return " + ".join(terms) if terms else "0"


def minimal_polynomial(x) -> tuple:
    """Monic minimal polynomial of x over Q, coefficients constant-first.

    The power vectors 1, x, x^2, ... are accumulated in the field's power
    basis and the first linear dependence is solved exactly (deterministic
    first-nonzero pivoting), so the degree always divides the field degree.
    """
    if isinstance(x, bool):
        raise TypeError("exact scalars only")
    if isinstance(x, (int, Fraction)):
        return (Fraction(-x), Fraction(1))
    m = x.field.degree
    vectors = [x.field.one().coeffs]
    cur = x.field.one()
    for k in range(1, m + 1):
        cur = cur * x
        vectors.append(cur.coeffs)
        rows = [[vectors[j][i] for j in range(k)] for i in range(m)]
        rhs = [-vectors[k][i] for i in range(m)]
        sol = linear_solve(rows, rhs)
        if sol is not None:
            return tuple(sol) + (Fraction(1),)
    raise AssertionError("unreachable: dependence must occur by degree m")


def is_algebraic_integer(x) -> bool:
    """True iff the minimal polynomial of x has integer coefficients."""
    return all(c.denominator == 1 for c in minimal_polynomial(x))
