"""Faithful 4-dimensional representation built from trace functionals.

Each group element g defines the functional h -> tr(gh) on 2x2 matrices.
When four group elements g1..g4 have linearly independent functionals
(equivalently the Gram matrix tr(g_i g_k) is invertible, the trace pairing
being nondegenerate), left translation g.f_h = f_{gh} acts on their span and
its coordinate table is recovered by solving the Gram system

    tr(g g_i g_k) = sum_j P_ij tr(g_j g_k).

alpha() returns the transpose of that table: the row-convention table
composes contravariantly (P(gh) = P(h) P(g)), so the transpose is the side
that satisfies alpha(gh) = alpha(g) alpha(h).

Everything here is exact.  Entry integrality is measured per element with
is_algebraic_integer and reported, never assumed.
"""

from __future__ import annotations

from .errors import DetNotOneError, RankDeficientError
from .matrices import Matrix, rank
from .numberfield import is_algebraic_integer


def integral_characteristic(g: Matrix) -> bool:
    """True when the characteristic polynomial of g has algebraic-integer
    coefficients; for determinant one only the trace needs testing."""
    if g.det() != 1:
        raise DetNotOneError("integral characteristic is defined for "
                             "determinant-one matrices")
    return is_algebraic_integer(g.trace())


class TraceBasis:
    """Four group elements whose trace functionals span the dual of the
    2x2 matrix space, together with their Gram matrix."""

    __slots__ = ("elements", "gram", "_gram_inv")

    def __init__(self, elements, gram: Matrix):
        elements = tuple(elements)
        if len(elements) != 4:
            raise ValueError("a trace basis has exactly four elements")
        if gram.n != 4 or gram.det() == 0:
            raise RankDeficientError("Gram matrix must be invertible 4x4")
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "_gram_inv", None)

    def __setattr__(self, name, value):
        raise AttributeError("TraceBasis is immutable")

    def gram_inverse(self) -> Matrix:
        inv = self._gram_inv
        if inv is None:
            inv = self.gram.inverse()
            object.__setattr__(self, "_gram_inv", inv)
        return inv

    def __repr__(self):
        return f"TraceBasis({list(self.elements)!r})"


def _gram_rows(elements):
    return [[(a * b).trace() for b in elements] for a in elements]


def select_basis(words) -> TraceBasis:
    """Greedily pick the first four stream elements with independent trace
    functionals (running Gram rank must grow at each acceptance).

    The stream order decides the result, so feeding a breadth-first word
    ball gives a reproducible basis.  Raises RankDeficient if the stream
    ends first; that happens exactly when the functionals of the whole
    stream stay inside a proper subspace (e.g. all-diagonal input).
    """
    chosen = []
    for g in words:
        if not isinstance(g, Matrix) or g.n != 2:
            raise ValueError("stream must yield 2x2 matrices")
        candidate = chosen + [g]
        if rank(_gram_rows(candidate)) == len(candidate):
            chosen = candidate
            if len(chosen) == 4:
                rows = _gram_rows(chosen)
                return TraceBasis(chosen, Matrix(tuple(tuple(r) for r in rows)))
    raise RankDeficientError(
        f"stream exhausted with trace rank {len(chosen)} < 4")


def alpha(g: Matrix, basis: TraceBasis) -> Matrix:
    """4x4 image of g: column i expresses g*g_i in the basis g_1..g_4."""
    rhs_rows = []
    for gi in basis.elements:
        left = g * gi
        rhs_rows.append(tuple((left * gk).trace() for gk in basis.elements))
    table = Matrix(tuple(rhs_rows)) * basis.gram_inverse()
    return table.transpose()


def reconstruct(m4: Matrix, basis: TraceBasis) -> Matrix:
    """Rebuild the 2x2 element from its 4x4 image.

    Column 0 of the image gives the coordinates of g*g_1 in the basis
    (this is the elementary-matrix probe behind injectivity: the trace
    functional of g*g_1 determines all four of its entries).
    """
    combo = None
    for j, gj in enumerate(basis.elements):
        term = m4[j, 0] * gj
        combo = term if combo is None else combo + term
    return combo * basis.elements[0].inverse()


class Rep4:
    """Callable wrapper caching alpha images by exact matrix value.

    The cache is append-only and every solve is pure, so concurrent reads
    and redundant recomputation are both harmless.
    """

    def __init__(self, basis: TraceBasis):
        self.basis = basis
        self._cache = {}
        ident = alpha(Matrix.identity(2), basis)
        if not ident.is_identity():
            raise ArithmeticError("alpha(identity) must be the identity")
        self._cache[Matrix.identity(2)] = ident

    def __call__(self, g: Matrix) -> Matrix:
        m = self._cache.get(g)
        if m is None:
            m = alpha(g, self.basis)
            self._cache[g] = m
        return m

    def __repr__(self):
        return f"Rep4(cached={len(self._cache)})"


def _poly_square(coeffs):
    out = [None] * (2 * len(coeffs) - 1)
    for i, a in enumerate(coeffs):
        for j, b in enumerate(coeffs):
            t = a * b
            out[i + j] = t if out[i + j] is None else out[i + j] + t
    return tuple(out)


def verify_embedding(rep: Rep4, samples) -> dict:
    """Measure the representation on concrete samples.

    Checks, all exact: homomorphism on consecutive sample pairs, injectivity
    (identity image only for the identity, plus full reconstruction through
    the probe), the characteristic-polynomial square identity, determinant
    one, and per-element integrality of the 4x4 entries.  Failures are
    collected in the report, not raised.
    """
    samples = list(samples)
    failures = []
    pairs = 0
    for a, b in zip(samples, samples[1:]):
        pairs += 1
        if rep(a * b) != rep(a) * rep(b):
            failures.append(f"homomorphism: {a!r} * {b!r}")
    identity_images = 0
    entry_integrality = []
    for g in samples:
        m = rep(g)
        if m.is_identity():
            identity_images += 1
            if not g.is_identity():
                failures.append(f"injectivity: nonidentity {g!r} maps to I")
        if reconstruct(m, rep.basis) != g:
            failures.append(f"probe: reconstruction mismatch for {g!r}")
        if m.charpoly() != _poly_square(g.charpoly()):
            failures.append(f"characteristic square identity: {g!r}")
        if m.det() != 1:
            failures.append(f"determinant: {g!r}")
        entry_integrality.append(
            all(is_algebraic_integer(x) for row in m.rows for x in row))
    return {
        "samples": len(samples),
        "homomorphism_pairs": pairs,
        "identity_images": identity_images,
        "entry_integrality": entry_integrality,
        "all_entries_integral": all(entry_integrality) if samples else True,
        "failures": failures,
        "ok": not failures,
    }
