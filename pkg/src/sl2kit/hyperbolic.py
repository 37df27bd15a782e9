"""Upper half-space model and displacement at the archimedean place.

Points are (z, t) with z complex and t > 0; real matrices act on the t-axis
slice exactly as on the upper half-plane, so one set of formulas covers both
the real and complex cases.  A 2x2 complex matrix g of determinant 1 acts by

    D  = |c z + d|^2 + |c|^2 t^2
    z' = ((a z + b) * conj(c z + d) + a * conj(c) * t^2) / D
    t' = t / D

and the distance is arccosh(1 + (|z1 - z2|^2 + (t1 - t2)^2) / (2 t1 t2)).
The displacement of the basepoint (0, 1) under g has the closed form
arccosh((sum of |g_ij|^2) / 2); the halving makes the identity displace by 0,
and the Moebius formulas above serve as the independent oracle in the tests.

Exact field entries reach this module through an ArchimedeanEmbedding, which
pins down a complex root of the defining polynomial (numpy estimates, Newton
polish, deterministic descending (Re, Im) ordering, |minpoly(root)| < 1e-12
enforced).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

import numpy as np

from .errors import DegenerateInputError
from .matrices import Matrix
from .numberfield import FieldElement, NumberField

_ROOT_TOL = 1e-12


def _refine_root(coeffs, z: complex) -> complex:
    """Newton polish of a root estimate; coeffs are ints, constant-first."""
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    for _ in range(80):
        pz = _horner(coeffs, z)
        if abs(pz) < 1e-16:
            break
        dz = _horner(deriv, z)
        if dz == 0:
            break
        step = pz / dz
        z -= step
        if abs(step) < 1e-17 * max(1.0, abs(z)):
            break
    return z


def _horner(coeffs, z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


class ArchimedeanEmbedding:
    """Ring map Q(gamma) -> C given by one chosen root of the minimal
    polynomial; with no field it is just Fraction -> float."""

    __slots__ = ("field", "root_index", "root", "roots")

    def __init__(self, field: NumberField | None = None, root_index: int = 0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "root_index", root_index)
        if field is None:
            object.__setattr__(self, "roots", ())
            object.__setattr__(self, "root", None)
            return
        raw = np.roots(list(reversed(field.minpoly)))
        refined = [_refine_root(field.minpoly, complex(r)) for r in raw]
        # irreducible over Q implies squarefree, so roots are simple and the
        # descending (Re, Im) order is unambiguous
        refined.sort(key=lambda z: (z.real, z.imag), reverse=True)
        if not 0 <= root_index < len(refined):
            raise ValueError(f"root_index out of range 0..{len(refined) - 1}")
        root = refined[root_index]
        if abs(_horner(field.minpoly, root)) >= _ROOT_TOL:
            raise ArithmeticError("root refinement failed its tolerance")
        object.__setattr__(self, "roots", tuple(refined))
        object.__setattr__(self, "root", root)

    def __setattr__(self, name, value):
        raise AttributeError("ArchimedeanEmbedding is immutable")

    def __call__(self, x) -> complex:
        if isinstance(x, FieldElement):
            if self.field is None or x.field != self.field:
                if x.is_rational:
                    return complex(x.as_fraction())
                raise ValueError("element does not belong to the embedded field")
            acc = 0j
            for c in reversed(x.coeffs):
                acc = acc * self.root + complex(c)
            return acc
        if isinstance(x, (int, Fraction)):
            return complex(x)
        raise TypeError(f"cannot embed {type(x).__name__}")

    def __repr__(self):
        if self.field is None:
            return "ArchimedeanEmbedding(Q)"
        return (f"ArchimedeanEmbedding({self.field!r}, "
                f"root_index={self.root_index}, root={self.root:.6g})")


def embed_matrix(g: Matrix, emb: ArchimedeanEmbedding | None = None):
    """Entries of g as complex floats, nested row-major tuples."""
    if emb is None:
        emb = ArchimedeanEmbedding()
    return tuple(tuple(emb(x) for x in row) for row in g.rows)


class HPoint:
    """A point (z, t) of the upper half-space, t > 0."""

    __slots__ = ("z", "t")

    def __init__(self, z, t):
        t = float(t)
        if not t > 0:
            raise DegenerateInputError(f"height must be positive, got {t}")
        object.__setattr__(self, "z", complex(z))
        object.__setattr__(self, "t", t)

    def __setattr__(self, name, value):
        raise AttributeError("HPoint is immutable")

    def __repr__(self):
        return f"HPoint(z={self.z:.6g}, t={self.t:.6g})"


BASEPOINT = HPoint(0j, 1.0)


def _complex_entries(g):
    if isinstance(g, Matrix):
        raise TypeError("embed exact matrices first (see embed_matrix)")
    (a, b), (c, d) = g
    return complex(a), complex(b), complex(c), complex(d)


def mobius_act(g, p: HPoint) -> HPoint:
    """Action of a determinant-1 complex matrix ((a,b),(c,d)) on (z, t)."""
    a, b, c, d = _complex_entries(g)
    if abs(a * d - b * c - 1) > 1e-9:
        raise ValueError("matrix must have determinant 1 (within 1e-9)")
    cz_d = c * p.z + d
    denom = abs(cz_d) ** 2 + abs(c) ** 2 * p.t ** 2
    z_new = ((a * p.z + b) * cz_d.conjugate() + a * c.conjugate() * p.t ** 2) / denom
    return HPoint(z_new, p.t / denom)


def hyp_distance(p: HPoint, q: HPoint) -> float:
    arg = 1.0 + (abs(p.z - q.z) ** 2 + (p.t - q.t) ** 2) / (2.0 * p.t * q.t)
    return math.acosh(max(1.0, arg))


def displacement_hyp(g: Matrix, emb: ArchimedeanEmbedding | None = None) -> float:
    """Distance the basepoint (0, 1) moves under g: arccosh(sum |g_ij|^2 / 2)."""
    if g.n != 2:
        raise ValueError("expected a 2x2 matrix")
    rows = embed_matrix(g, emb)
    a, b = rows[0]
    c, d = rows[1]
    if abs(a * d - b * c - 1) > 1e-9:
        raise ValueError("matrix must have determinant 1 (within 1e-9)")
    s = abs(a) ** 2 + abs(b) ** 2 + abs(c) ** 2 + abs(d) ** 2
    return math.acosh(max(1.0, s / 2.0))
