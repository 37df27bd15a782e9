"""Discrete valuations on Q and their coefficientwise extension to Q(gamma).

The p-adic valuation sends p^n * a/b (a, b prime to p) to n, and 0 to +infinity
(represented by math.inf, which orders and adds correctly against ints).

The extension to Q(gamma) takes the minimum of the p-adic valuations of the
power-basis coefficients.  That rule is a genuine valuation exactly when the
defining polynomial stays irreducible modulo p (the extension is then
unramified with residue field of size p^degree); extend() certifies this gate
and refuses otherwise, attaching a concrete multiplicativity counterexample
when its search finds one.  Example of a refusal: p = 2 with gamma^2 = 2 has
val(gamma) = 0 by the rule, yet val(gamma^2) = val(2) = 1.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .errors import NotAValuationError
from .numberfield import FieldElement, NumberField

INF = math.inf


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _int_val(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


class PAdicValuation:
    """The valuation nu_p on Q; call it on an int or Fraction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"p must be a prime number, got {p!r}")
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("PAdicValuation is immutable")

    @property
    def uniformizer(self) -> int:
        return self.p

    @property
    def residue_size(self) -> int:
        return self.p

    def __call__(self, x):
        if isinstance(x, int) and not isinstance(x, bool):
            x = Fraction(x)
        if not isinstance(x, Fraction):
            raise TypeError(f"expected a rational number, got {type(x).__name__}")
        if x == 0:
            return INF
        return _int_val(x.numerator, self.p) - _int_val(x.denominator, self.p)

    def __repr__(self):
        return f"PAdicValuation(p={self.p})"


# ---------------------------------------------------------------------------
# extension to a number field
# ---------------------------------------------------------------------------

def _poly_mod_p(coeffs, p: int) -> tuple:
    return tuple(c % p for c in coeffs)


def _has_root_mod_p(coeffs, p: int) -> bool:
    for r in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * r + c) % p
        if acc == 0:
            return True
    return False


def _divides_mod_p(divisor, coeffs, p: int) -> bool:
    """Does the monic ``divisor`` divide ``coeffs`` in F_p[x]?"""
    rem = list(coeffs)
    dd = len(divisor) - 1
    while len(rem) - 1 >= dd and any(c % p for c in rem):
        lead = rem[-1] % p
        if lead == 0:
            rem.pop()
            continue
        shift = len(rem) - 1 - dd
        for i, c in enumerate(divisor):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        while rem and rem[-1] % p == 0:
            rem.pop()
    return not any(c % p for c in rem)


def _irreducible_mod_p(coeffs, p: int) -> bool:
    cs = _poly_mod_p(coeffs, p)
    deg = len(cs) - 1
    if deg == 1:
        return True
    if _has_root_mod_p(cs, p):
        return False
    if deg == 4:
        # no linear factor; a factorization must involve a quadratic
        for b in range(p):
            for c in range(p):
                if _divides_mod_p((c, b, 1), cs, p):
                    return False
    return True


def _min_rule(x, base: PAdicValuation):
    """The coefficientwise-minimum rule, computed without an ExtendedValuation."""
    vals = [base(c) for c in x.coeffs]
    return min(vals)


def _find_counterexample(field: NumberField, base: PAdicValuation):
    """A pair (x, y) with rule(xy) != rule(x) + rule(y), or None.

    Deterministic small candidates first (powers and shifts of gamma), then a
    seeded random sweep.
    """
    p = base.p
    g = field.gamma()
    candidates = [g ** k for k in range(1, field.degree + 1)]
    candidates += [g + c for c in range(1, p + 2)]
    candidates += [g - c for c in range(1, p + 2)]
    rng = random.Random(20211)
    for _ in range(400):
        coeffs = tuple(Fraction(rng.randint(-p * p, p * p))
                       for _ in range(field.degree))
        x = field.element(coeffs)
        if x:
            candidates.append(x)
    for i, x in enumerate(candidates):
        for y in candidates[i:]:
            if not x or not y:
                continue
            if _min_rule(x * y, base) != _min_rule(x, base) + _min_rule(y, base):
                return (x, y)
    return None


def extend(p: int, field: NumberField) -> "ExtendedValuation":
    """Extend nu_p to Q(gamma), gated on irreducibility of the minimal
    polynomial modulo p."""
    base = PAdicValuation(p)
    if not _irreducible_mod_p(field.minpoly, p):
        pair = _find_counterexample(field, base)
        detail = ""
        if pair is not None:
            x, y = pair
            detail = (f"; counterexample x = {x!r}, y = {y!r} has "
                      f"rule(x*y) != rule(x) + rule(y)")
        raise NotAValuationError(
            f"defining polynomial is reducible mod {p}, so the "
            f"coefficientwise-minimum rule is not a valuation{detail}",
            counterexample=pair)
    return ExtendedValuation(base, field)


class ExtendedValuation:
    """Certified unramified extension of nu_p to Q(gamma).

    Instances come from extend(); the constructor does not re-run the gate.
    Accepts FieldElement, Fraction or int arguments (rationals are treated as
    constant elements, which agrees with the minimum rule).
    """

    __slots__ = ("base", "field")

    def __init__(self, base: PAdicValuation, field: NumberField):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ExtendedValuation is immutable")

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def uniformizer(self) -> int:
        return self.base.p

    @property
    def residue_degree(self) -> int:
        return self.field.degree

    @property
    def residue_size(self) -> int:
        return self.base.p ** self.field.degree

    def __call__(self, x):
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return self.base(x)
        if not isinstance(x, FieldElement) or x.field != self.field:
            raise TypeError("expected an element of the declared field")
        return min(self.base(c) for c in x.coeffs)

    def __repr__(self):
        return f"ExtendedValuation(p={self.p}, field={self.field!r})"
