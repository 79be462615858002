import itertools
import random

import pytest

from poisson_forge.cp3 import sample_grid
from poisson_forge.fixtures import FIXTURES, NEGATIVE_CONTROL, V, family_mvec, real_family_mvec
from poisson_forge.hp1 import (QUAT, NotPhiRealError, b_coefficients, complex_to_real_bivector,
                               hp1_chart_bracket, hp1_chart_pushforward, hp1_coordinate_image,
                               hstar_derivative, is_poisson_hp1, jmap, pointwise_vanishes_hp1,
                               realify)
from poisson_forge.multivector import (EULER, MVec, conjugate_mvec, graded_parts, schouten,
                                       wedge)
from poisson_forge.parser import parse_mvec
from poisson_forge.scalar import I, Scalar
from poisson_forge.tensors import is_phi_fixed, mvec_of_tensor, phi, tensor_of_mvec

from conftest import SEED, rand_mvec, rand_phi_fixed

HP1_FIXTURES = ["ex4.7.2", "ex4.7.3", "ex4.7.4"]

# reference differentials: t0, t1 occupy the z0, z1 slots and d/dt0, d/dt1 the d0, d1 slots
REFERENCE_V0 = ["-z0*d0 - z1*d1", "zb1*d0 - zb0*d1", "d0", "d1"]
REFERENCE_V1 = ["d0", "d1", "-z0*d0 - z1*d1", "zb1*d0 - zb0*d1"]


@pytest.mark.parametrize("m, reference", [(0, REFERENCE_V0), (1, REFERENCE_V1)])
def test_reference_chart_differentials(m, reference):
    for k, src in enumerate(reference):
        img = hp1_coordinate_image(m, k)
        assert graded_parts(img).get((1, 0)) == parse_mvec(src)
        # the barred directions go to the conjugate vector
        assert hp1_coordinate_image(m, k + 4) == conjugate_mvec(img)


def test_jmap_squares_to_minus_one():
    p = (Scalar(1, 2), Scalar(0, -1), Scalar(3), Scalar(1, 1))
    assert jmap(jmap(p)) == tuple(-x for x in p)


def test_realify_structure():
    rng = random.Random(SEED)
    for _ in range(25):
        t = rand_phi_fixed(rng)
        r = realify(t)
        assert conjugate_mvec(r.field) == r.field
        assert r.part(2, 0) == mvec_of_tensor(t)
        assert hstar_derivative(r.field).is_zero()
        for (i, j, k, l), b in b_coefficients(t).items():
            assert r.b_coefficient(j, i, l, k) == -b.conjugate()


def test_realify_rejects_non_real_tensors():
    with pytest.raises(NotPhiRealError):
        realify(FIXTURES["ex3.5.1"].tensor())


def test_three_zero_part_of_bracket():
    rng = random.Random(SEED + 1)
    for _ in range(8):
        a, b = rand_phi_fixed(rng), rand_phi_fixed(rng)
        lhs = graded_parts(schouten(realify(a).field, realify(b).field)).get((3, 0), MVec.zero(3))
        assert lhs == schouten(mvec_of_tensor(a), mvec_of_tensor(b))


def test_mixed_coefficient_of_ex472():
    t = FIXTURES["ex4.7.2"].tensor()
    b = b_coefficients(t)
    assert b[(3, 2, 0, 0)] == I
    # doubling it breaks invariance under the j-action
    r = realify(t).field
    bumped = r + MVec(2, [((0, 4), parse_mvec("i*z3*zb2").coefficient(()))])
    bumped = bumped + conjugate_mvec(bumped - r)
    assert conjugate_mvec(bumped) == bumped
    assert not hstar_derivative(bumped).is_zero()


@pytest.mark.parametrize("m", (0, 1))
def test_vertical_fields_push_forward_to_zero(m):
    rng = random.Random(SEED + m)
    for x in (EULER + conjugate_mvec(EULER), QUAT.lprime_real, (EULER - conjugate_mvec(EULER)) * I):
        for _ in range(5):
            y = rand_mvec(rng, 1, 8, holomorphic=False)
            assert hp1_chart_pushforward(wedge(y, x), m).is_zero()


@pytest.mark.parametrize("name", HP1_FIXTURES)
def test_hp1_fixtures(name):
    f = FIXTURES[name]
    v = is_poisson_hp1(f.tensor())
    assert v.poisson and v.phi_real and v.cp3_poisson and v.nontrivial
    assert is_poisson_hp1(f.tensor(), "charts") == v
    real = realify(f.tensor())
    for m in (0, 1):
        chart = hp1_chart_pushforward(real, m)
        assert chart.is_real() and not chart.is_zero()
        assert hp1_chart_bracket(chart).is_zero()


def test_non_real_structures_are_rejected():
    v = is_poisson_hp1(FIXTURES["ex3.5.1"].tensor())
    assert v.cp3_poisson and not v.phi_real and not v.poisson


def test_real_negative_control_fails_on_both_charts():
    t = tensor_of_mvec(parse_mvec(NEGATIVE_CONTROL), 2)
    real = tensor_of_mvec(mvec_of_tensor(t) + mvec_of_tensor(phi(t)), 2)
    assert is_phi_fixed(real)
    v = is_poisson_hp1(real)
    assert v.phi_real and not v.poisson
    for m in (0, 1):
        assert not hp1_chart_bracket(hp1_chart_pushforward(realify(real), m)).is_zero()


def test_commuting_family_is_poisson_on_charts():
    rng = random.Random(SEED + 2)
    for _ in range(3):
        coeffs = [Scalar(rng.randint(-5, 5)) for _ in range(3)]
        w = real_family_mvec(V, coeffs)
        assert conjugate_mvec(w) == w and hstar_derivative(w).is_zero()
        for m in (0, 1):
            assert hp1_chart_bracket(hp1_chart_pushforward(w, m)).is_zero()


def test_realify_is_not_the_wedge_realification_for_ex471():
    # both have holomorphic part v1 ^ v2 and are invariant, but they differ by
    # a real invariant (1,1) bivector that survives on the charts
    t = tensor_of_mvec(family_mvec(V, (1, 0, 0)), 2)
    diff = realify(t).field - real_family_mvec(V, (1, 0, 0))
    assert set(graded_parts(diff)) == {(1, 1)}
    assert conjugate_mvec(diff) == diff
    assert hstar_derivative(diff).is_zero()
    expected = parse_mvec("i*(z0*zb0 + z1*zb1)*(d0/\\db0 - d1/\\db1)")
    assert diff == expected
    assert not hp1_chart_pushforward(diff, 0).is_zero()
    assert not hp1_chart_bracket(hp1_chart_pushforward(realify(t), 0)).is_zero()


def test_pointwise_vanishing_of_first_family_member():
    w = real_family_mvec(V, (1, 0, 0))
    # at (1, 0, 0, 0) the field v1 is the Euler field, so v1 ^ v2 is vertical
    assert pointwise_vanishes_hp1(w, (1, 0, 0, 0))
    assert not pointwise_vanishes_hp1(w, (0, 1, 0, 1))


def test_vertical_frame_annihilates_on_every_grid_point():
    w = wedge(QUAT.lprime_real, parse_mvec("z2*d0 + zb2*db0"))
    for pt in itertools.islice(sample_grid(), 30):
        assert pointwise_vanishes_hp1(w, pt)


def test_real_frame_conversion():
    x = complex_to_real_bivector(parse_mvec("d0 + db0"))
    assert x == parse_mvec("d0")
    y = complex_to_real_bivector(parse_mvec("i*(d0 - db0)"))
    assert y == parse_mvec("db0")
