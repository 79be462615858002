import random
from fractions import Fraction

import pytest

from poisson_forge.multivector import MVec
from poisson_forge.poly import Poly
from poisson_forge.scalar import Scalar
from poisson_forge.tensors import PHI, Tensor2, phi, slots

SEED = 20240611


def rand_scalar(rng, size=4, real=False):
    re = Fraction(rng.randint(-size, size), rng.randint(1, 3))
    im = 0 if real else Fraction(rng.randint(-size, size), rng.randint(1, 3))
    return Scalar(re, im)


def rand_tensor(rng, cls=Tensor2, density=0.4):
    return cls([rand_scalar(rng) if rng.random() < density else 0 for _ in slots(cls.q)])


def rand_phi_fixed(rng, cls=Tensor2):
    t = rand_tensor(rng, cls)
    return (t + phi(t)) * Scalar(Fraction(1, 2))


def rand_poly(rng, nterms=3, maxdeg=2, holomorphic=True):
    terms = {}
    nv = 4 if holomorphic else 8
    for _ in range(nterms):
        m = [0] * 8
        for _ in range(rng.randint(0, maxdeg)):
            m[rng.randrange(nv)] += 1
        terms[tuple(m)] = rand_scalar(rng, 3)
    return Poly(terms)


def rand_mvec(rng, grade, ndirs=4, holomorphic=True, nterms=3):
    import itertools
    idx = list(itertools.combinations(range(ndirs), grade))
    return MVec(grade, [(w, rand_poly(rng, nterms, 2, holomorphic)) for w in rng.sample(idx, min(3, len(idx)))])


def rand_quadric_matrix(rng):
    """Random symmetric s in gl(2,H) meet S^2 C^4."""
    s = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i, 4):
            s[i][j] = s[j][i] = rand_scalar(rng, 3)
    half = Scalar(Fraction(1, 2))
    out = [[None] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            t = s[PHI[i]][PHI[j]].conjugate()
            if (i + j) & 1:
                t = -t
            out[i][j] = (s[i][j] + t) * half
    return out


@pytest.fixture
def rng():
    return random.Random(SEED)
