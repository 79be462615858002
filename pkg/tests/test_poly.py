import random

import pytest

from poisson_forge.poly import Poly, Z, ZB, monomial_conjugate
from poisson_forge.scalar import I, Scalar

from conftest import SEED, rand_poly, rand_scalar


def _cases(n=40):
    rng = random.Random(SEED)
    return [(rand_poly(rng, 3, 3, False), rand_poly(rng, 3, 3, False), rand_poly(rng, 2, 2, False))
            for _ in range(n)]


@pytest.mark.parametrize("p, q, r", _cases())
def test_ring_laws(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p - p == Poly()


@pytest.mark.parametrize("p, q, r", _cases(20))
def test_partials_obey_leibniz(p, q, r):
    for k in range(8):
        assert (p * q).partial(k) == p.partial(k) * q + p * q.partial(k)


@pytest.mark.parametrize("p, q, r", _cases(20))
def test_evaluation_is_a_homomorphism(p, q, r):
    rng = random.Random(hash(str(p)) & 0xFFFF)
    pt = [rand_scalar(rng, 3) for _ in range(4)]
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)
    # zb_k evaluates to the conjugate of z_k
    assert p.conjugate().evaluate(pt) == p.evaluate(pt).conjugate()


def test_substitute_then_evaluate():
    rng = random.Random(SEED)
    p = rand_poly(rng, 4, 3, False)
    images = [rand_poly(rng, 2, 1, True) for _ in range(8)]
    pt = [rand_scalar(rng) for _ in range(4)]
    inner = [img.evaluate(pt) for img in images]
    # evaluate p at independent values for all eight slots
    total = Scalar(0)
    for m, c in p.items():
        term = c
        for k, e in enumerate(m):
            term = term * inner[k] ** e
        total = total + term
    assert p.substitute(images).evaluate(pt) == total


def test_canonical_text():
    p = Z[0] ** 2 * I - Z[1] * Z[3] * 2 + 3
    assert str(p) == "i*z0^2 - 2*z1*z3 + 3"
    assert str(ZB[2] * Z[0]) == "z0*zb2"


def test_conjugate_swaps_variables():
    m = (1, 0, 2, 0, 0, 3, 0, 1)
    assert monomial_conjugate(m) == (0, 3, 0, 1, 1, 0, 2, 0)
    assert (Z[0] * I).conjugate() == ZB[0] * -I


def test_homogeneity_and_holomorphy():
    assert (Z[0] * Z[1] + Z[2] ** 2).is_homogeneous(2)
    assert not (Z[0] + Z[1] ** 2).is_homogeneous()
    assert not (Z[0] * ZB[1]).is_holomorphic()
    assert Poly().degree() == -1


def test_bad_monomials_rejected():
    with pytest.raises(ValueError):
        Poly({(1, 0, 0): 1})
    with pytest.raises(ValueError):
        Poly({(-1, 0, 0, 0, 0, 0, 0, 0): 1})
