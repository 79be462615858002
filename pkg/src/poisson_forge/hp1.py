"""Real multivectors on HP^1 = S^4 built from Phi-fixed holomorphic tensors."""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .cp3 import ZeroPointError, is_poisson_cp3
from .linalg import SpanBasis
from .multivector import (EULER, MVec, conjugate_mvec, evaluate_mvec_at, graded_parts,
                          schouten, vector_field, wedge)
from .poly import ONE_POLY, ZERO_POLY, Z, ZB
from .scalar import I, ZERO, Scalar
from .tensors import PHI, Tensor2, is_phi_fixed, mvec_of_tensor

T_NAMES = ("t0", "t1", "_2", "_3", "tb0", "tb1", "_6", "_7")
DT_NAMES = ("dt0", "dt1", "_d2", "_d3", "dtb0", "dtb1", "_d6", "_d7")
REAL_FRAME_NAMES = ("dx0", "dx1", "dx2", "dx3", "dy0", "dy1", "dy2", "dy3")


class NotPhiRealError(ValueError):
    pass


def jmap(point: Sequence) -> Tuple[Scalar, ...]:
    """Right multiplication by j: (z0, z1, z2, z3) -> (-conj z1, conj z0, -conj z3, conj z2)."""
    z = [Scalar.coerce(x) for x in point]
    return (-z[1].conjugate(), z[0].conjugate(), -z[3].conjugate(), z[2].conjugate())


@dataclass(frozen=True)
class QuatConstants:
    # holomorphic part of the generator of exp(tj)
    lprime: MVec = vector_field([-ZB[1], ZB[0], -ZB[3], ZB[2]])
    phi: Tuple[int, ...] = PHI

    @property
    def lprime_real(self) -> MVec:
        return self.lprime + conjugate_mvec(self.lprime)

    @property
    def euler_real(self) -> MVec:
        return EULER + conjugate_mvec(EULER)


QUAT = QuatConstants()


# -- realification ---------------------------------------------------------------


@dataclass(frozen=True)
class RealBivector:
    """Real H*-invariant bivector a + b + conj(a); ``b`` holds the z_i zb_j d_k ^ db_l terms."""

    field: MVec

    def part(self, p: int, q: int) -> MVec:
        return graded_parts(self.field).get((p, q), MVec.zero(2))

    def b_coefficient(self, i: int, j: int, k: int, l: int) -> Scalar:
        c = self.field.coefficient((k, l + 4))
        m = [0] * 8
        m[i] += 1
        m[j + 4] += 1
        return c.coefficient(tuple(m))

    def __str__(self):
        return str(self.field)


def realify(t: Tensor2) -> RealBivector:
    """Rebuild the real bivector whose (2,0)-part is ``mvec_of_tensor(t)``.

    The mixed part has b_ijkl = 2 (-1)^(j+l) a_{i phi(j) k phi(l)} with a in the
    unrestricted-sum normalisation.
    """
    if not is_phi_fixed(t):
        raise NotPhiRealError("realify needs a Phi-fixed tensor")
    a = mvec_of_tensor(t)
    terms = []
    for i, j, k, l in itertools.product(range(4), repeat=4):
        b = t.full((i, PHI[j]), (k, PHI[l]))
        if not b:
            continue
        b = b * 2
        if (j + l) & 1:
            b = -b
        terms.append(((k, l + 4), Z[i] * ZB[j] * b))
    return RealBivector(a + MVec(2, terms) + conjugate_mvec(a))


def b_coefficients(t: Tensor2) -> Dict[Tuple[int, int, int, int], Scalar]:
    r = realify(t)
    return {idx: v for idx in itertools.product(range(4), repeat=4)
            if (v := r.b_coefficient(*idx))}


def hstar_derivative(v: MVec) -> MVec:
    """Lie derivative along the real generator of exp(tj)."""
    return schouten(QUAT.lprime_real, v)


# -- charts on HP^1 -----------------------------------------------------------------

# chart variables live in the polynomial slots of z0, z1 (t0, t1) and zb0, zb1
T0, T1 = Z[0], Z[1]
TB0, TB1 = ZB[0], ZB[1]
CHART_DIRECTIONS = (0, 1, 4, 5)


@lru_cache(maxsize=None)
def _hp1_chart(m: int):
    """Section, chart map and pushed-forward coordinate fields for V_m."""
    if m == 0:
        # s0 = h1 h0^-1; section (1, 0, t0, t1)
        num0 = ZB[0] * Z[2] + Z[1] * ZB[3]
        num1 = ZB[0] * Z[3] - Z[1] * ZB[2]
        norm = Z[0] * ZB[0] + Z[1] * ZB[1]
        section = [ONE_POLY, ZERO_POLY, T0, T1, ONE_POLY, ZERO_POLY, TB0, TB1]
    elif m == 1:
        # s1 = h0 h1^-1; section (t0, t1, 1, 0)
        num0 = ZB[2] * Z[0] + Z[3] * ZB[1]
        num1 = ZB[2] * Z[1] - Z[3] * ZB[0]
        norm = Z[2] * ZB[2] + Z[3] * ZB[3]
        section = [T0, T1, ONE_POLY, ZERO_POLY, TB0, TB1, ONE_POLY, ZERO_POLY]
    else:
        raise ValueError("HP^1 charts are V_0 and V_1")
    coords = (num0, num1, num0.conjugate(), num1.conjugate())
    # the norm is 1 on the section, so d(P/N) = dP - P dN there
    images = []
    for x in range(8):
        comps = []
        for target, p in zip(CHART_DIRECTIONS, coords):
            d = (p.partial(x) - p * norm.partial(x)).substitute(section)
            if d:
                comps.append(((target,), d))
        images.append(MVec(1, comps))
    return tuple(section), tuple(images)


def hp1_coordinate_image(m: int, direction: int) -> MVec:
    """dp(d_direction) at the section point of V_m, as a field in t, tb."""
    return _hp1_chart(m)[1][direction]


@dataclass(frozen=True)
class Hp1ChartBivector:
    chart: int
    field: MVec

    def is_zero(self) -> bool:
        return self.field.is_zero()

    def is_real(self) -> bool:
        return conjugate_mvec(self.field) == self.field

    def __str__(self):
        return self.field.to_str(T_NAMES, DT_NAMES)


def hp1_chart_pushforward(v: RealBivector | MVec, m: int) -> Hp1ChartBivector:
    field = v.field if isinstance(v, RealBivector) else v
    section, images = _hp1_chart(m)
    total = MVec.zero(field.grade)
    for idx, c in field.terms.items():
        coeff = c.substitute(section)
        if not coeff:
            continue
        img = MVec.function(coeff)
        for k in idx:
            img = wedge(img, images[k])
        total = total + MVec(field.grade, img.terms)
    return Hp1ChartBivector(m, total)


def hp1_chart_bracket(chart: Hp1ChartBivector) -> MVec:
    f = chart.field
    if f.is_zero():
        return MVec.zero(2 * f.grade - 1)
    return schouten(f, f)


# -- pointwise vanishing on S^4 -------------------------------------------------------


def complex_to_real_bivector(v: MVec) -> MVec:
    """Rewrite a constant multivector over dz, dzb in the frame dx, dy.

    dz_k = (dx_k - i dy_k)/2 and dzb_k = (dx_k + i dy_k)/2; real directions
    x_k, y_k reuse indices k and k + 4.
    """
    half = Scalar(Fraction(1, 2))
    frame = []
    for k in range(8):
        base = k % 4
        sign = -1 if k < 4 else 1
        frame.append(MVec(1, [((base,), half), ((base + 4,), I * half * sign)]))
    total = MVec.zero(v.grade)
    for idx, c in v.terms.items():
        if c.degree() > 0:
            raise ValueError("complex_to_real_bivector takes constant coefficients")
        img = MVec.function(c)
        for k in idx:
            img = wedge(img, frame[k])
        total = total + MVec(v.grade, img.terms)
    return total


def _vertical_frame(point) -> List[MVec]:
    """Real and imaginary parts of l and l' at the point, in the dx, dy frame."""
    vecs = []
    for x in (EULER, QUAT.lprime):
        xp = evaluate_mvec_at(x, point)
        xb = conjugate_mvec(xp)
        vecs.append(xp + xb)
        vecs.append((xp - xb) * I)
    return [complex_to_real_bivector(x) for x in vecs]


def pointwise_vanishes_hp1(v: RealBivector | MVec, point: Sequence) -> bool:
    """True iff v(point) lies in V ^ R^8 with V the tangent space of the H*-orbit."""
    pt = [Scalar.coerce(x) for x in point]
    if len(pt) != 4:
        raise ValueError("a point of C^4 has four coordinates")
    if not any(pt):
        raise ZeroPointError("the origin does not map to HP^1")
    field = v.field if isinstance(v, RealBivector) else v
    value = complex_to_real_bivector(evaluate_mvec_at(field, pt))
    if value.is_zero():
        return True
    q = field.grade
    coords = list(itertools.combinations(range(8), q))
    index = {w: n for n, w in enumerate(coords)}

    def flatten(x: MVec):
        out = [ZERO] * len(coords)
        for w, c in x.terms.items():
            out[index[w]] = c.constant_term()
        return out

    gens = []
    for g in _vertical_frame(pt):
        for rest in itertools.combinations(range(8), q - 1):
            gens.append(flatten(wedge(g, MVec(q - 1, [(rest, ONE_POLY)]))))
    return SpanBasis(gens).contains(flatten(value))


# -- the Poisson verdict -----------------------------------------------------------------


@dataclass(frozen=True)
class HP1Verdict:
    poisson: bool
    phi_real: bool
    cp3_poisson: bool
    nontrivial: bool

    def as_dict(self) -> dict:
        return {
            "poisson": self.poisson,
            "phi_real": self.phi_real,
            "cp3_poisson": self.cp3_poisson,
            "nontrivial": self.nontrivial,
        }


def is_poisson_hp1(t: Tensor2, method: str = "quotient") -> HP1Verdict:
    """Poisson on HP^1 iff Phi-real and Poisson on CP^3."""
    real = is_phi_fixed(t)
    cp3 = is_poisson_cp3(t, method)
    return HP1Verdict(
        poisson=real and cp3.poisson,
        phi_real=real,
        cp3_poisson=cp3.poisson,
        nontrivial=cp3.nontrivial,
    )
