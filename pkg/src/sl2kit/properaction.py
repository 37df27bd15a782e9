"""Displacement profiles and bounded enumeration for marked subgroups.

A marked group is a finite list of determinant-1 generators.  The ring they
live in is detected from the entries: s is the lcm of all coefficient
denominators, the relevant primes are the distinct prime factors of s, and
entries must stay inside Z[1/s, gamma].  The displacement profile of an
element is one tree distance per prime (base vertex to its image) together
with the hyperbolic displacement at the archimedean place; the properness
predicate is strict: every coordinate < C.

enumerate_bounded lists, exactly and completely, the elements of the full
arithmetic group SL(2, Z[1/s]) whose profile is < C in every coordinate
(rational case only).  The search space is finite because the tree bound
caps denominators at p_k^floor(C/2) and the hyperbolic bound caps the common
numerators at D * sqrt(2 cosh C) for D the product of those prime powers;
every candidate inside the box is then filtered by the exact predicate, and
the candidate count is checked against a budget first (parameter, else the
SL2KIT_ENUM_BUDGET environment variable, else 10^7).

word_bfs produces the empirical side: all distinct products of at most
max_len generators and inverses, filtered by the same predicate, so that
properness_check can certify word_bfs as a subset of enumerate_bounded and
report the finite bound.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

from .bttree import act, base_vertex, distance, tree_context
from .errors import (BudgetExceededError, DetNotOneError, EntryOutsideRingError,
                     UnsupportedError)
from .hyperbolic import ArchimedeanEmbedding, displacement_hyp
from .matrices import Matrix, mat
from .numberfield import FieldElement, NumberField

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "SL2KIT_ENUM_BUDGET"


class Ring:
    """Z[1/s, gamma], described by s, its prime factors, and the field."""

    __slots__ = ("s", "primes", "field")

    def __init__(self, s: int, primes, field: NumberField | None):
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "primes", tuple(primes))
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Ring is immutable")

    def __repr__(self):
        gen = ", gamma" if self.field is not None else ""
        return f"Ring(Z[1/{self.s}{gen}], primes={list(self.primes)})"


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def _entry_denominator(x) -> int:
    if isinstance(x, FieldElement):
        den = 1
        for c in x.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return den
    return x.denominator


def ring_detect(generators, field: NumberField | None = None) -> Ring:
    """Smallest Z[1/s, gamma] containing every generator entry."""
    s = 1
    for g in generators:
        for row in g.rows:
            for x in row:
                if isinstance(x, FieldElement) and field is None:
                    raise EntryOutsideRingError(
                        "field elements present but no field was declared")
                d = _entry_denominator(x)
                s = s * d // math.gcd(s, d)
    return Ring(s, _prime_factors(s), field)


class MarkedGroup:
    """Generators plus their detected ring; build via make_group()."""

    def __init__(self, generators, ring: Ring, root_index: int = 0):
        self.generators = tuple(generators)
        self.ring = ring
        self.root_index = root_index
        self._contexts = None
        self._embedding = None

    @property
    def tree_contexts(self):
        if self._contexts is None:
            self._contexts = tuple(tree_context(p, self.ring.field)
                                   for p in self.ring.primes)
        return self._contexts

    @property
    def embedding(self) -> ArchimedeanEmbedding:
        if self._embedding is None:
            self._embedding = ArchimedeanEmbedding(self.ring.field,
                                                   self.root_index)
        return self._embedding

    def __repr__(self):
        return f"MarkedGroup({len(self.generators)} generators, {self.ring!r})"


def make_group(generators, field: NumberField | None = None,
               root_index: int = 0) -> MarkedGroup:
    gens = tuple(generators)
    for g in gens:
        if not isinstance(g, Matrix) or g.n != 2:
            raise ValueError("generators must be 2x2 matrices")
        if g.det() != 1:
            raise DetNotOneError(f"generator {g!r} has determinant {g.det()}")
    return MarkedGroup(gens, ring_detect(gens, field), root_index)


class DisplacementProfile:
    """Per-prime tree displacements plus the hyperbolic displacement."""

    __slots__ = ("trees", "hyp")

    def __init__(self, trees, hyp: float):
        object.__setattr__(self, "trees", tuple(trees))
        object.__setattr__(self, "hyp", float(hyp))

    def __setattr__(self, name, value):
        raise AttributeError("DisplacementProfile is immutable")

    def less_than(self, bound: float) -> bool:
        return all(t < bound for t in self.trees) and self.hyp < bound

    def __repr__(self):
        return f"DisplacementProfile(trees={list(self.trees)}, hyp={self.hyp:.6g})"


def _check_entries_in_ring(g: Matrix, ring: Ring):
    for row in g.rows:
        for x in row:
            if isinstance(x, FieldElement):
                if ring.field is None or x.field != ring.field:
                    raise EntryOutsideRingError(
                        f"entry {x!r} is not in the declared field")
            d = _entry_denominator(x)
            for p in ring.primes:
                while d % p == 0:
                    d //= p
            if d != 1:
                raise EntryOutsideRingError(
                    f"entry denominator has a prime factor outside "
                    f"{{{', '.join(map(str, ring.primes))}}}" if ring.primes
                    else "entries must be integral (s = 1)")


def displacement(g: Matrix, group: MarkedGroup) -> DisplacementProfile:
    """Profile of g acting on the product of the trees and the half-space."""
    if g.det() != 1:
        raise DetNotOneError("displacement requires determinant 1")
    _check_entries_in_ring(g, group.ring)
    trees = []
    for ctx in group.tree_contexts:
        v0 = base_vertex(ctx)
        trees.append(distance(v0, act(g, v0)))
    return DisplacementProfile(trees, displacement_hyp(g, group.embedding))


# ---------------------------------------------------------------------------
# word balls
# ---------------------------------------------------------------------------

def word_ball(generators, max_len: int):
    """Distinct products of at most max_len generators/inverses, in BFS
    discovery order (deterministic for a fixed generator order)."""
    ident = Matrix.identity(2)
    steps = list(generators) + [g.inverse() for g in generators]
    order = [ident]
    seen = {ident}
    frontier = [ident]
    for _ in range(max_len):
        nxt = []
        for m in frontier:
            for s in steps:
                prod = m * s
                if prod not in seen:
                    seen.add(prod)
                    order.append(prod)
                    nxt.append(prod)
        frontier = nxt
    return order


def word_bfs(group: MarkedGroup, max_len: int, C: float) -> set:
    """Ball elements whose displacement profile is < C in every coordinate."""
    return {g for g in word_ball(group.generators, max_len)
            if displacement(g, group).less_than(C)}


# ---------------------------------------------------------------------------
# exact enumeration
# ---------------------------------------------------------------------------

class EnumerationResult:
    __slots__ = ("elements", "C", "complete")

    def __init__(self, elements, C: float, complete: bool):
        object.__setattr__(self, "elements", frozenset(elements))
        object.__setattr__(self, "C", float(C))
        object.__setattr__(self, "complete", bool(complete))

    def __setattr__(self, name, value):
        raise AttributeError("EnumerationResult is immutable")

    def __repr__(self):
        return (f"EnumerationResult({len(self.elements)} elements, "
                f"C={self.C}, complete={self.complete})")


def _resolve_budget(budget) -> int:
    if budget is not None:
        return int(budget)
    return int(os.environ.get(BUDGET_ENV_VAR, DEFAULT_BUDGET))


def enumerate_bounded(group: MarkedGroup, C: float,
                      budget: int | None = None) -> EnumerationResult:
    """All of SL(2, Z[1/s]) with displacement profile < C, exactly.

    Superset search box: entries a_ij / D with D = prod p_k^floor(C/2)
    (tree bound) and |a_ij| <= D*sqrt(2 cosh C) + 1 (hyperbolic bound); the
    fourth entry is solved from the determinant.  Every candidate is then
    filtered by the exact displacement predicate.
    """
    if group.ring.field is not None:
        raise UnsupportedError(
            "exact enumeration supports the rational case only")
    if not C > 0:
        raise ValueError("the bound C must be positive")
    budget = _resolve_budget(budget)
    n_max = int(math.floor(C / 2))
    D = 1
    for p in group.ring.primes:
        D *= p ** n_max
    B = int(D * math.sqrt(2.0 * math.cosh(C))) + 1
    width = 2 * B + 1
    candidates = width ** 3 + width ** 2
    if candidates > budget:
        raise BudgetExceededError(
            f"search box holds ~{candidates} candidate tuples, over the "
            f"budget of {budget}")
    D2 = D * D
    Df = Fraction(D)
    found = set()

    def consider(a11, a12, a21, a22):
        g = Matrix(((Fraction(a11, 1) / Df, Fraction(a12, 1) / Df),
                    (Fraction(a21, 1) / Df, Fraction(a22, 1) / Df)))
        if displacement(g, group).less_than(C):
            found.add(g)

    for a11 in range(-B, B + 1):
        if a11 == 0:
            continue
        for a12 in range(-B, B + 1):
            for a21 in range(-B, B + 1):
                num = D2 + a12 * a21
                if num % a11:
                    continue
                a22 = num // a11
                if -B <= a22 <= B:
                    consider(a11, a12, a21, a22)
    for a12 in range(-B, B + 1):
        if a12 == 0 or D2 % a12:
            continue
        a21 = -(D2 // a12)
        if not -B <= a21 <= B:
            continue
        for a22 in range(-B, B + 1):
            consider(0, a12, a21, a22)
    return EnumerationResult(found, C, True)


# ---------------------------------------------------------------------------
# cross-check
# ---------------------------------------------------------------------------

class PropernessReport:
    __slots__ = ("contained", "word_count", "enum_count", "certificate",
                 "violations")

    def __init__(self, contained, word_count, enum_count, certificate,
                 violations):
        object.__setattr__(self, "contained", bool(contained))
        object.__setattr__(self, "word_count", int(word_count))
        object.__setattr__(self, "enum_count", int(enum_count))
        object.__setattr__(self, "certificate", str(certificate))
        object.__setattr__(self, "violations", tuple(violations))

    def __setattr__(self, name, value):
        raise AttributeError("PropernessReport is immutable")

    def __repr__(self):
        status = "ok" if self.contained else "VIOLATED"
        return (f"PropernessReport({status}, words={self.word_count}, "
                f"bound={self.enum_count})")


def properness_check(group: MarkedGroup, C: float, max_len: int,
                     budget: int | None = None) -> PropernessReport:
    """Certify word_bfs(C, max_len) as a subset of the exact enumeration."""
    result = enumerate_bounded(group, C, budget)
    words = word_bfs(group, max_len, C)
    violations = sorted(words - result.elements, key=repr)
    return PropernessReport(
        contained=not violations,
        word_count=len(words),
        enum_count=len(result.elements),
        certificate=(f"bounded-displacement set is finite, "
                     f"cardinality {len(result.elements)}"),
        violations=violations)
