"""Multivectors on CP^3: Euler quotients, affine charts, Poisson verdicts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .linalg import SpanBasis
from .multivector import EULER, MVec, evaluate_mvec_at, merge_wedge, schouten, wedge
from .poly import ONE_POLY, ZERO_POLY, Poly, poly_sum
from .scalar import I, ONE, ZERO, Scalar
from .tensors import (SymAltTensor, Tensor2, Tensor3, mvec_of_tensor, slots,
                      tensor_of_mvec)

ZETA_NAMES = ("zeta0", "zeta1", "zeta2", "zeta3", "zetab0", "zetab1", "zetab2", "zetab3")
DZETA_NAMES = ("dzeta0", "dzeta1", "dzeta2", "dzeta3", "dzetab0", "dzetab1", "dzetab2", "dzetab3")

# the holomorphic volume form dz0^dz1^dz2^dz3 as an alternating 4-covector:
# VOLUME[(a, b, c, d)] is its value on (d_a, d_b, d_c, d_d)
VOLUME: Dict[Tuple[int, ...], int] = {}
for _perm in itertools.permutations(range(4)):
    _inv = sum(1 for x, y in itertools.combinations(_perm, 2) if x > y)
    VOLUME[_perm] = -1 if _inv & 1 else 1


class ZeroPointError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectiveConstants:
    euler: MVec = EULER
    volume: Dict[Tuple[int, ...], int] = field(default_factory=lambda: dict(VOLUME))


CONSTANTS = ProjectiveConstants()


# -- Euler quotient -------------------------------------------------------------


@lru_cache(maxsize=None)
def euler_wedge_subspace(q: int) -> Tuple[SymAltTensor, ...]:
    """Generators of the kernel of the pushforward in degree q, in a fixed order.

    q = 2: (z_i d_j) ^ l for i, j in 0..3 (16 tensors, i-major).
    q = 3: b ^ l for b running over the canonical Tensor2 basis (60 tensors).
    """
    if q == 2:
        basis = [MVec(1, [((j,), Poly.var(i))]) for i in range(4) for j in range(4)]
    elif q == 3:
        basis = [mvec_of_tensor(Tensor2({s: ONE})) for s in slots(2)]
    else:
        raise ValueError("euler_wedge_subspace is defined for q = 2, 3")
    return tuple(tensor_of_mvec(wedge(b, EULER), q) for b in basis)


@lru_cache(maxsize=None)
def _euler_span(q: int) -> SpanBasis:
    return SpanBasis([g.as_vector() for g in euler_wedge_subspace(q)])


def euler_rank(q: int) -> int:
    return _euler_span(q).rank


def quotient_dimension(q: int) -> int:
    return len(slots(q)) - euler_rank(q)


def mod_euler_reduce(t: SymAltTensor, q: int | None = None) -> Tuple[bool, Optional[List[Scalar]]]:
    """(is_zero, witness): is_zero iff t lies in the span of euler_wedge_subspace(q)."""
    q = t.q if q is None else q
    if t.q != q:
        raise ValueError(f"tensor has q={t.q}, reduction asked for q={q}")
    w = _euler_span(q).witness(t.as_vector())
    return w is not None, w


def is_zero_mod_euler(t: SymAltTensor) -> bool:
    return _euler_span(t.q).contains(t.as_vector())


# -- affine charts ----------------------------------------------------------------


@dataclass(frozen=True)
class ChartBivector:
    """A multivector on the chart U_r in the affine variables zeta_m (m != r).

    ``field`` reuses the C^4 machinery: variable slot m holds zeta_m and
    direction m is d/dzeta_m.  Slot r never occurs.
    """

    chart: int
    field: MVec

    def __post_init__(self):
        r = self.chart
        for idx, c in self.field.terms.items():
            if r in idx or max(idx, default=0) >= 4:
                raise ValueError(f"direction {idx} not allowed on chart U_{r}")
            if any(m[r] or any(m[4:]) for m in c.terms):
                raise ValueError(f"coefficient {c} involves a variable not on chart U_{r}")

    def is_zero(self) -> bool:
        return self.field.is_zero()

    def __str__(self):
        return self.field.to_str(ZETA_NAMES, DZETA_NAMES)


@lru_cache(maxsize=None)
def _chart_data(r: int):
    section = [Poly.var(m) if m != r else ONE_POLY for m in range(4)] + [ZERO_POLY] * 4
    images = []
    for k in range(4):
        if k != r:
            images.append(MVec.partial(k))
        else:
            images.append(MVec(1, [((m,), -Poly.var(m)) for m in range(4) if m != r]))
    return section, images


def chart_pushforward(a: MVec, r: int) -> MVec:
    """Push a holomorphic q-vector on C^4 to U_r along the section zeta_r = 1.

    d(pi)(d_k) = dzeta_k for k != r and d(pi)(d_r) = -sum_{m != r} zeta_m dzeta_m.
    """
    if r not in range(4):
        raise ValueError("chart index must be in 0..3")
    if not a.is_holomorphic():
        raise ValueError("chart_pushforward takes a holomorphic multivector")
    section, images = _chart_data(r)
    total = MVec.zero(a.grade)
    for idx, c in a.terms.items():
        coeff = c.substitute(section)
        if not coeff:
            continue
        img = MVec.function(coeff)
        for k in idx:
            img = wedge(img, images[k])
        total = total + MVec(a.grade, img.terms)
    return total


def chart_pushforward_cp3(t: Tensor2 | MVec, r: int) -> ChartBivector:
    a = mvec_of_tensor(t) if isinstance(t, SymAltTensor) else t
    return ChartBivector(r, chart_pushforward(a, r))


def cyclic_expression(chart: ChartBivector) -> Poly:
    """sum over rotations (k,l,m) of (a,b,c) of dA_kl/dzeta_l * A_lm - A_kl * dA_lm/dzeta_l.

    A_kl is the antisymmetric coefficient of dzeta_k ^ dzeta_l.
    """
    a, b, c = [m for m in range(4) if m != chart.chart]
    A = chart.field.coefficient
    total = []
    for k, l, m in ((a, b, c), (b, c, a), (c, a, b)):
        total.append(A((k, l)).partial(l) * A((l, m)))
        total.append(-(A((k, l)) * A((l, m)).partial(l)))
    return poly_sum(total)


# the chart self-bracket equals CYCLIC_FACTOR * cyclic_expression on every chart
CYCLIC_FACTOR = Scalar(-2)


# -- pointwise behaviour ----------------------------------------------------------


def _alt_basis(q: int):
    return list(itertools.combinations(range(4), q))


def pointwise_vanishes_cp3(t: SymAltTensor | MVec, point: Sequence) -> bool:
    """True iff the value at ``point`` lies in l(point) ^ Alt^(q-1) C^4."""
    pt = [Scalar.coerce(x) for x in point]
    if len(pt) != 4:
        raise ValueError("a point of C^4 has four coordinates")
    if not any(pt):
        raise ZeroPointError("the origin does not map to CP^3")
    a = mvec_of_tensor(t) if isinstance(t, SymAltTensor) else t
    q = a.grade
    value = evaluate_mvec_at(a, pt)
    coords = _alt_basis(q)
    index = {w: n for n, w in enumerate(coords)}
    v = [ZERO] * len(coords)
    for w, c in value.terms.items():
        if max(w) >= 4:
            raise ValueError("pointwise_vanishes_cp3 takes holomorphic multivectors")
        v[index[w]] = c.constant_term()
    if not any(v):
        return True
    gens = []
    for w in _alt_basis(q - 1):
        g = [ZERO] * len(coords)
        for k in range(4):
            if not pt[k]:
                continue
            sign, key = merge_wedge((k,), w)
            if sign:
                g[index[key]] = g[index[key]] + (pt[k] if sign > 0 else -pt[k])
        gens.append(g)
    return SpanBasis(gens).contains(v)


SAMPLE_VALUES = (ZERO, ONE, I, -ONE)


def sample_grid():
    """All points with coordinates in {0, 1, i, -1}, origin excluded, in a fixed order."""
    for pt in itertools.product(SAMPLE_VALUES, repeat=4):
        if any(pt):
            yield pt


def find_nonvanishing_point(t: SymAltTensor | MVec):
    for pt in sample_grid():
        if not pointwise_vanishes_cp3(t, pt):
            return pt
    return None


# -- the Poisson verdict ------------------------------------------------------------


@dataclass(frozen=True)
class CP3Verdict:
    poisson: bool
    bracket_zero_on_C4: bool
    nontrivial: bool
    method: str

    def as_dict(self) -> dict:
        return {
            "poisson": self.poisson,
            "nontrivial": self.nontrivial,
            "bracket_zero_on_C4": self.bracket_zero_on_C4,
        }


def self_bracket(t: Tensor2) -> Tensor3:
    a = mvec_of_tensor(t)
    return tensor_of_mvec(schouten(a, a), 3) if a else Tensor3()


def is_poisson_cp3(t: Tensor2, method: str = "quotient") -> CP3Verdict:
    bracket = self_bracket(t)
    if method == "quotient":
        poisson = is_zero_mod_euler(bracket)
    elif method == "charts":
        poisson = all(chart_self_bracket(chart_pushforward_cp3(t, r)).is_zero() for r in range(4))
    else:
        raise ValueError(f"unknown method {method!r}; use 'quotient' or 'charts'")
    return CP3Verdict(
        poisson=poisson,
        bracket_zero_on_C4=bracket.is_zero(),
        nontrivial=not is_zero_mod_euler(t),
        method=method,
    )


def chart_self_bracket(chart: ChartBivector) -> MVec:
    f = chart.field
    if f.is_zero():
        return MVec.zero(3)
    return schouten(f, f)
