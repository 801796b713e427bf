import itertools

import pytest

from carlitz_units.errors import DegreeMismatch, DivisionByZero, NotPrime, ReducibleModulus
from carlitz_units.fq import factor_int, fq_inv, fq_pow, is_prime_int, make_field


def test_prime_fields():
    for p in (2, 3, 5, 7):
        F = make_field(p)
        assert F.q == p and F.k == 1
        assert list(F.elements()) == list(range(p))


def test_f4_construction():
    F = make_field(2, 2, [1, 1, 1])
    assert F.q == 4
    assert F.generator == 2  # digits [0, 1], i.e. t


@pytest.mark.parametrize(
    "args, exc",
    [((4,), NotPrime), ((1,), NotPrime), ((2, 2, [1, 0, 1]), ReducibleModulus), ((2, 3, [1, 1, 1]), DegreeMismatch)],
)
def test_make_field_rejects(args, exc):
    with pytest.raises(exc):
        make_field(*args)


def test_inverse_examples():
    F3 = make_field(3)
    assert fq_inv(1, F3) == 1
    assert fq_inv(2, F3) == 2
    F4 = make_field(2, 2, [1, 1, 1])
    t, t1 = F4.from_digits([0, 1]), F4.from_digits([1, 1])
    assert fq_inv(t, F4) == t1
    assert F4.mul(t, t1) == 1
    with pytest.raises(DivisionByZero):
        fq_inv(0, F3)


def test_pow_examples():
    F3 = make_field(3)
    assert fq_pow(2, 0, F3) == 1
    assert fq_pow(2, 2, F3) == 1
    assert fq_pow(2, -1, F3) == 2


@pytest.mark.parametrize("p, k, mod", [(2, 1, None), (3, 1, None), (2, 2, [1, 1, 1]), (3, 2, [2, 2, 1]), (2, 3, [1, 1, 0, 1])])
def test_field_axioms_exhaustive(p, k, mod):
    F = make_field(p, k, mod)
    els = list(F.elements())
    for a in els:
        assert fq_pow(a, F.q, F) == a  # Frobenius fixes F_q
        if a:
            assert fq_pow(a, F.q - 1, F) == 1
            assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
    for a, b in itertools.product(els, repeat=2):
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(els[:5], repeat=3):
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_f9_multiplication_matches_polynomial_reduction():
    # independent check: multiply digit vectors mod (t^2 + 2t + 2) over F_3 by hand
    F = make_field(3, 2, [2, 2, 1])
    for a, b in itertools.product(range(9), repeat=2):
        a0, a1 = a % 3, a // 3
        b0, b1 = b % 3, b // 3
        c0, c1, c2 = a0 * b0, a0 * b1 + a1 * b0, a1 * b1
        # t^2 = -2t - 2 = t + 1
        c0, c1 = (c0 + c2) % 3, (c1 + c2) % 3
        assert F.mul(a, b) == c0 + 3 * c1


def test_int_helpers():
    assert [n for n in range(30) if is_prime_int(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factor_int(360) == {2: 3, 3: 2, 5: 1}
