import random
from fractions import Fraction

import pytest

from sl2kit import Matrix, SingularError, linear_solve, mat, rank


def test_mat_coerces_ints():
    m = mat([[1, 2], [3, 4]])
    assert m[0, 0] == Fraction(1)
    assert isinstance(m[1, 1], Fraction)


def test_floats_rejected():
    with pytest.raises(TypeError):
        mat([[1.0, 0], [0, 1]])
    with pytest.raises(TypeError):
        mat([[True, 0], [0, 1]])


def test_sizes():
    with pytest.raises(ValueError):
        mat([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(ValueError):
        mat([[1, 2, 3, 4, 5]] * 5)


def test_identity_and_product():
    i2 = Matrix.identity(2)
    m = mat([[1, 1], [0, 1]])
    assert i2 * m == m
    assert m * m == mat([[1, 2], [0, 1]])
    assert m.inverse() == mat([[1, -1], [0, 1]])


def test_det_examples():
    a = Fraction(7, 3)
    assert mat([[a, 0], [0, 1 / a]]).det() == 1
    assert mat([[0, 1], [-1, 0]]).det() == 1
    assert mat([[1, 2, 3], [4, 5, 6], [7, 8, 10]]).det() == -3


def test_det_4x4_vs_permutation_expansion():
    import itertools
    rng = random.Random(11)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(4)]
                for _ in range(4)]
        m = mat(rows)
        total = Fraction(0)
        for perm in itertools.permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = Fraction(sign)
            for i in range(4):
                term *= rows[i][perm[i]]
            total += term
        assert m.det() == total


def test_inverse_roundtrip():
    rng = random.Random(5)
    done = 0
    while done < 25:
        n = rng.choice((2, 3, 4))
        m = mat([[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)])
        if m.det() == 0:
            continue
        assert (m * m.inverse()).is_identity()
        assert (m.inverse() * m).is_identity()
        done += 1


def test_singular_inverse():
    with pytest.raises(SingularError):
        mat([[1, 2], [2, 4]]).inverse()
    with pytest.raises(SingularError):
        mat([[1, 0, 0], [0, 1, 0], [1, 1, 0]]).inverse()


def test_charpoly_2x2():
    m = mat([[2, 3], [5, 7]])
    # det(xI - A) = x^2 - tr x + det, constant term first
    assert m.charpoly() == (Fraction(-1), Fraction(-9), Fraction(1))


def test_charpoly_constant_term_is_signed_det():
    rng = random.Random(17)
    for _ in range(30):
        n = rng.choice((2, 3, 4))
        m = mat([[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)])
        cp = m.charpoly()
        assert len(cp) == n + 1
        assert cp[-1] == 1
        assert cp[0] == (-1) ** n * m.det()
        # evaluate at the matrix itself: Cayley-Hamilton
        acc = Matrix.identity(n).scale(cp[0])
        power = Matrix.identity(n)
        for c in cp[1:]:
            power = power * m
            acc = acc + power.scale(c)
        assert all(acc[i, j] == 0 for i in range(n) for j in range(n))


def test_transpose_trace_neg():
    m = mat([[1, 2], [3, 4]])
    assert m.transpose() == mat([[1, 3], [2, 4]])
    assert m.trace() == 5
    assert -m == mat([[-1, -2], [-3, -4]])
    assert m - m == mat([[0, 0], [0, 0]])


def test_scalar_multiplication():
    m = mat([[1, 2], [3, 4]])
    assert Fraction(1, 2) * m == mat([[Fraction(1, 2), 1],
                                      [Fraction(3, 2), 2]])
    assert m.scale(2) == mat([[2, 4], [6, 8]])


def test_hash_dedup():
    a = mat([[1, 1], [0, 1]])
    b = mat([[1, 1], [0, 1]])
    assert a == b and hash(a) == hash(b)
    assert len({a, b, a * b}) == 2


def test_immutable():
    m = mat([[1, 0], [0, 1]])
    with pytest.raises(AttributeError):
        m.rows = ()


def test_linear_solve_unique():
    sol = linear_solve([[Fraction(2), Fraction(1)],
                        [Fraction(1), Fraction(3)]],
                       [Fraction(5), Fraction(10)])
    assert sol == [Fraction(1), Fraction(3)]


def test_linear_solve_inconsistent_and_free():
    rows = [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]]
    assert linear_solve(rows, [Fraction(1), Fraction(3)]) is None
    # consistent but underdetermined: free variable pinned to zero
    sol = linear_solve(rows, [Fraction(3), Fraction(6)])
    assert sol == [Fraction(3), Fraction(0)]


def test_linear_solve_overdetermined():
    rows = [[Fraction(1), Fraction(0)],
            [Fraction(0), Fraction(1)],
            [Fraction(1), Fraction(1)]]
    assert linear_solve(rows, [Fraction(2), Fraction(3), Fraction(5)]) == \
        [Fraction(2), Fraction(3)]
    assert linear_solve(rows, [Fraction(2), Fraction(3), Fraction(4)]) is None


def test_rank():
    assert rank([[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]) == 1
    assert rank([[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]) == 2
    assert rank([]) == 0
