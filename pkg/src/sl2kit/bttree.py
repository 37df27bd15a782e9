"""The tree of lattice classes for SL(2) over Q with a p-adic valuation.

Vertices are homothety classes of rank-2 lattices over the valuation ring O
(denominators prime to p; coefficientwise in the unramified extension case).
Every class has a unique canonical representative spanned by the columns of

    [[p^n, b],
     [0,   1]]

with the offset b reduced modulo p^n * O: for rationals b = m * p^v with
0 <= m < p^(n-v) and m prime to p (so 0 <= b < p^n), and coefficientwise in
the extension case.  The pair (n, b) is the vertex identity used for hashing
and BFS deduplication.

Two classes are adjacent when p*L < M < L for representatives; each vertex
has exactly q+1 neighbours (q the residue field size): the q classes
M*[[p, j],[0, 1]] for residue representatives j, plus M*[[1, 0],[0, p]].
The closed-form distance between u and v is

    val(det g) - 2 * min_ij val(g_ij)    for g = M_u^-1 * M_v,

which equals the graph distance (BFS over the neighbour relation arbitrates
this in the tests).  GL(2) acts by g . v = canonicalize(g * M_v); elements of
SL(2) act as isometries.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import SingularError
from .matrices import Matrix, mat
from .numberfield import FieldElement, NumberField
from .valuations import INF, ExtendedValuation, PAdicValuation, extend


class TreeContext:
    """A prime (or its certified unramified extension) plus scalar helpers."""

    __slots__ = ("valuation", "p", "field", "_reps", "_hash")

    def __init__(self, valuation):
        if not isinstance(valuation, (PAdicValuation, ExtendedValuation)):
            raise TypeError("expected a PAdicValuation or ExtendedValuation")
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "p", valuation.uniformizer)
        field = valuation.field if isinstance(valuation, ExtendedValuation) else None
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_reps", None)
        object.__setattr__(self, "_hash", hash((self.p, field.minpoly if field else None)))

    def __setattr__(self, name, value):
        raise AttributeError("TreeContext is immutable")

    @property
    def residue_size(self) -> int:
        return self.valuation.residue_size

    def residue_reps(self):
        """Representatives of the residue field: 0..p-1, coefficientwise in
        the extension case (p^degree of them)."""
        reps = self._reps
        if reps is None:
            if self.field is None:
                reps = tuple(Fraction(j) for j in range(self.p))
            else:
                m = self.field.degree
                reps = tuple(self.field.element(cs)
                             for cs in itertools.product(range(self.p), repeat=m))
            object.__setattr__(self, "_reps", reps)
        return reps

    def coerce(self, x):
        if self.field is not None:
            if isinstance(x, FieldElement):
                if x.field != self.field:
                    raise ValueError("element from a different field")
                return x
            return self.field.from_rational(x)
        if isinstance(x, FieldElement):
            return x.as_fraction()
        if isinstance(x, int):
            return Fraction(x)
        return x

    def val(self, x):
        return self.valuation(x)

    def zero(self):
        return self.coerce(0)

    def __eq__(self, other):
        if not isinstance(other, TreeContext):
            return NotImplemented
        if self.p != other.p:
            return False
        a = self.field.minpoly if self.field else None
        b = other.field.minpoly if other.field else None
        return a == b

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if self.field is None:
            return f"TreeContext(p={self.p})"
        return f"TreeContext(p={self.p}, field={self.field!r})"


def tree_context(p: int, field: NumberField | None = None) -> TreeContext:
    """Context for the tree of nu_p, extended to ``field`` when given."""
    if field is None:
        return TreeContext(PAdicValuation(p))
    return TreeContext(extend(p, field))


class TreeVertex:
    """Canonical lattice class (n, b); build these via canonicalize()."""

    __slots__ = ("ctx", "n", "b", "_hash")

    def __init__(self, ctx: TreeContext, n: int, b):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "_hash", hash((ctx, n, b)))

    def __setattr__(self, name, value):
        raise AttributeError("TreeVertex is immutable")

    def __eq__(self, other):
        if not isinstance(other, TreeVertex):
            return NotImplemented
        return (self.ctx == other.ctx and self.n == other.n
                and self.b == other.b)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"TreeVertex(n={self.n}, b={self.b!r})"


def base_vertex(ctx: TreeContext) -> TreeVertex:
    """The class of the standard lattice O^2."""
    return TreeVertex(ctx, 0, ctx.zero())


def matrix_form(v: TreeVertex) -> Matrix:
    """The canonical representative [[p^n, b], [0, 1]]."""
    ctx = v.ctx
    pn = Fraction(ctx.p) ** v.n
    return mat([[ctx.coerce(pn), v.b], [ctx.zero(), ctx.coerce(1)]])


def _reduce_fraction(b: Fraction, n: int, p: int) -> Fraction:
    """Canonical representative of b modulo p^n * Z_(p)."""
    if b == 0:
        return Fraction(0)
    v = _frac_val(b, p)
    if v >= n:
        return Fraction(0)
    unit = b / Fraction(p) ** v  # numerator and denominator both prime to p
    mod = p ** (n - v)
    m = unit.numerator * pow(unit.denominator, -1, mod) % mod
    return m * Fraction(p) ** v


def _frac_val(x: Fraction, p: int) -> int:
    num, den, v = abs(x.numerator), x.denominator, 0
    while num % p == 0:
        num //= p
        v += 1
    if v:
        return v
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _reduce_offset(b, n: int, ctx: TreeContext):
    if ctx.field is None:
        return _reduce_fraction(b, n, ctx.p)
    return ctx.field.element(tuple(_reduce_fraction(c, n, ctx.p)
                                   for c in b.coeffs))


def canonicalize(m: Matrix, ctx: TreeContext) -> TreeVertex:
    """Canonical vertex of the lattice spanned by the columns of m.

    Column operations over the valuation ring plus one homothety: swap the
    bottom-row entries so the divider has minimal valuation, clear the other
    one with a single exact division (the quotient is integral by the swap),
    rescale by the remaining corner, and reduce the offset.
    """
    if m.n != 2:
        raise ValueError("expected a 2x2 matrix")
    a = ctx.coerce(m.rows[0][0])
    b = ctx.coerce(m.rows[0][1])
    c = ctx.coerce(m.rows[1][0])
    d = ctx.coerce(m.rows[1][1])
    if a * d - b * c == 0:
        raise SingularError("columns do not span a lattice")
    if ctx.val(d) > ctx.val(c):
        a, b = b, a
        c, d = d, c
    if c != 0:
        q = c / d  # val(c) >= val(d), so q is integral
        a = a - q * b
    # lattice is now spanned by (a, 0) and (b, d); scale by 1/d
    n = ctx.val(a) - ctx.val(d)
    off = _reduce_offset(b / d, n, ctx)
    return TreeVertex(ctx, n, off)


def _check_same_tree(u: TreeVertex, v: TreeVertex):
    if u.ctx != v.ctx:
        raise ValueError("vertices belong to different trees")


def distance(u: TreeVertex, v: TreeVertex) -> int:
    """Graph distance, by the valuation formula on g = M_u^-1 * M_v.

    For canonical forms g is upper triangular with diagonal (p^(v.n - u.n), 1)
    and corner (v.b - u.b) / p^u.n, so the formula
    val(det g) - 2 * min_ij val(g_ij) evaluates without building matrices.
    """
    _check_same_tree(u, v)
    dn = v.n - u.n
    dv = u.ctx.val(v.b - u.b)  # INF when the offsets agree
    return dn - 2 * min(dn, dv - u.n, 0)


def vertices_equal(u: TreeVertex, v: TreeVertex) -> bool:
    """True iff u and v are the same lattice class (distance zero)."""
    return distance(u, v) == 0


def act(g: Matrix, v: TreeVertex) -> TreeVertex:
    """The class of g * M_v; any invertible g acts, SL(2) isometrically."""
    return canonicalize(g * matrix_form(v), v.ctx)


def neighbors(v: TreeVertex) -> set:
    """The q+1 adjacent classes."""
    ctx = v.ctx
    m = matrix_form(v)
    p = ctx.coerce(ctx.p)
    one, zero = ctx.coerce(1), ctx.zero()
    out = set()
    for j in ctx.residue_reps():
        out.add(canonicalize(m * mat([[p, ctx.coerce(j)], [zero, one]]), ctx))
    out.add(canonicalize(m * mat([[one, zero], [zero, p]]), ctx))
    return out


def ball(v: TreeVertex, radius: int) -> set:
    """All vertices within the given graph distance of v, via BFS."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    seen = {v}
    frontier = [v]
    for _ in range(radius):
        nxt = []
        for u in frontier:
            for w in neighbors(u):
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen
