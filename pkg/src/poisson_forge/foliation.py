"""Degree-2 foliations of CP^3 and the bivectors they define.

A 1-form ``omega = sum f_m dz_m`` with cubic coefficients and ``i_l omega = 0``
corresponds to a bivector w through ``omega = vol(., l, w)``; the converse
direction is an explicit formula in the pieces of the f_m.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Dict, Sequence, Tuple

from .cp3 import VOLUME, is_zero_mod_euler
from .multivector import MVec
from .poly import ZERO_POLY, Poly, poly_sum
from .scalar import ZERO, Scalar
from .tensors import PHI, tensor_of_mvec

COVECTOR_NAMES = ("dz0", "dz1", "dz2", "dz3")


class FormError(ValueError):
    pass


@dataclass(frozen=True)
class OneForm:
    """sum_m f_m dz_m with polynomial f_m in z0..z3."""

    coeffs: Tuple[Poly, Poly, Poly, Poly]

    def __post_init__(self):
        if len(self.coeffs) != 4:
            raise FormError("a 1-form on C^4 has four coefficients")
        for f in self.coeffs:
            if not f.is_holomorphic():
                raise FormError(f"coefficient {f} is not holomorphic")

    @classmethod
    def of(cls, coeffs: Sequence) -> "OneForm":
        return cls(tuple(c if isinstance(c, Poly) else Poly.const(c) for c in coeffs))

    def __getitem__(self, m: int) -> Poly:
        return self.coeffs[m]

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, c) -> "OneForm":
        return OneForm(tuple(f * c for f in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def euler_pairing(self) -> Poly:
        """i_l omega = sum z_m f_m."""
        return poly_sum(Poly.var(m) * f for m, f in enumerate(self.coeffs))

    def __str__(self):
        pieces = []
        for m, f in enumerate(self.coeffs):
            if not f:
                continue
            cs = f.to_str()
            if cs == "1":
                pieces.append(COVECTOR_NAMES[m])
            elif cs == "-1":
                pieces.append("-" + COVECTOR_NAMES[m])
            elif len(f) == 1:
                pieces.append(f"{cs}*{COVECTOR_NAMES[m]}")
            else:
                pieces.append(f"({cs})*{COVECTOR_NAMES[m]}")
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def differential(f: Poly) -> OneForm:
    return OneForm(tuple(f.partial(k) for k in range(4)))


def pencil_form(f: Poly, g: Poly) -> OneForm:
    """g df - f dg for two quadrics."""
    for p in (f, g):
        if not p.is_holomorphic() or not p.is_homogeneous(2):
            raise FormError(f"pencil members must be holomorphic quadrics, got {p}")
    return differential(f) * g - differential(g) * f


def contract_to_form(w: MVec) -> OneForm:
    """omega = vol(., l, w): f_m = sum_i sum_{k<l} eps(m, i, k, l) z_i w^kl."""
    if w.grade != 2 or not w.is_holomorphic():
        raise FormError("contract_to_form takes a holomorphic bivector")
    out = [[] for _ in range(4)]
    for (k, l), c in w.terms.items():
        for i in range(4):
            for m in range(4):
                s = VOLUME.get((m, i, k, l))
                if s:
                    p = Poly.var(i) * c
                    out[m].append(p if s > 0 else -p)
    return OneForm(tuple(poly_sum(ps) for ps in out))


# -- splitting the coefficients -------------------------------------------------


@dataclass(frozen=True)
class Decomposition:
    """f_i = sum_j f_{i,j} z_j + sum_{j<k} f_{i,jk} z_j z_k + sum_{j<k<l} f_{i,jkl} z_j z_k z_l."""

    pair: Dict[Tuple[int, int], Poly] = field(default_factory=dict)
    triple: Dict[Tuple[int, Tuple[int, int]], Poly] = field(default_factory=dict)
    quad: Dict[int, Scalar] = field(default_factory=dict)

    def f2(self, i: int, j: int) -> Poly:
        return self.pair.get((i, j), ZERO_POLY)

    def f1(self, i: int, j: int, k: int) -> Poly:
        return self.triple.get((i, tuple(sorted((j, k)))), ZERO_POLY)

    def f0(self, i: int) -> Scalar:
        return self.quad.get(i, ZERO)

    def reassemble(self) -> OneForm:
        out = []
        for i in range(4):
            ps = []
            for j in range(4):
                if j != i:
                    ps.append(self.f2(i, j) * Poly.var(j))
            for j, k in itertools.combinations([x for x in range(4) if x != i], 2):
                ps.append(self.f1(i, j, k) * Poly.var(j) * Poly.var(k))
            rest = [x for x in range(4) if x != i]
            ps.append(Poly.monomial(_mono(rest), self.f0(i)))
            out.append(poly_sum(ps))
        return OneForm(tuple(out))


def _mono(indices) -> Tuple[int, ...]:
    m = [0] * 8
    for k in indices:
        m[k] += 1
    return tuple(m)


def _divide(mono: Tuple[int, ...], indices) -> Tuple[int, ...]:
    m = list(mono)
    for k in indices:
        m[k] -= 1
    return tuple(m)


def decompose_form(omega: OneForm) -> Decomposition:
    """Route each cubic monomial of f_i by its support.

    A monomial in z_i and one other z_j goes to f_{i,j}; one in two variables
    other than z_i, or in z_i and two others, goes to f_{i,jk}; z_j z_k z_l
    with i absent goes to f_{i,jkl}.  z_i^3 in f_i has no slot: such a form
    pairs nontrivially with l.
    """
    for f in omega.coeffs:
        if f and not f.is_homogeneous(3):
            raise FormError(f"coefficients must be cubic, got {f}")
    if omega.euler_pairing():
        raise FormError("the form does not vanish on the Euler field")
    pair: Dict[Tuple[int, int], list] = {}
    triple: Dict[Tuple[int, Tuple[int, int]], list] = {}
    quad: Dict[int, Scalar] = {}
    for i, f in enumerate(omega.coeffs):
        for mono, c in f.terms.items():
            support = tuple(k for k in range(4) if mono[k])
            others = tuple(k for k in support if k != i)
            if not others:
                raise FormError(f"z{i}^3 in f_{i} cannot be decomposed")
            if len(others) == 1:
                j = others[0]
                pair.setdefault((i, j), []).append(Poly.monomial(_divide(mono, (j,)), c))
            elif len(others) == 2:
                triple.setdefault((i, others), []).append(Poly.monomial(_divide(mono, others), c))
            else:
                quad[i] = quad.get(i, ZERO) + c
    return Decomposition(
        {k: s for k, ps in pair.items() if (s := poly_sum(ps))},
        {k: s for k, ps in triple.items() if (s := poly_sum(ps))},
        {k: c for k, c in quad.items() if c},
    )


# the six f_{i,j} terms: (i, j) multiplies d_k ^ d_l
_PAIR_TERMS = (
    ((0, 1), (2, 3)), ((2, 0), (1, 3)), ((0, 3), (1, 2)),
    ((1, 2), (0, 3)), ((3, 1), (0, 2)), ((2, 3), (0, 1)),
)

# the 1/3 block: for each n, (x, (p, jk), (q, jk')) gives
# (f_{p,jk} - f_{q,jk'}) z_x d_x ^ d_n
_TRIPLE_TERMS = {
    0: ((1, (3, (1, 2)), (2, (1, 3))), (2, (1, (2, 3)), (3, (1, 2))), (3, (2, (1, 3)), (1, (2, 3)))),
    1: ((0, (2, (0, 3)), (3, (0, 2))), (2, (3, (0, 2)), (0, (2, 3))), (3, (0, (2, 3)), (2, (0, 3)))),
    2: ((0, (3, (0, 1)), (1, (0, 3))), (1, (0, (1, 3)), (3, (0, 1))), (3, (1, (0, 3)), (0, (1, 3)))),
    3: ((0, (1, (0, 2)), (2, (0, 1))), (1, (2, (0, 1)), (0, (1, 2))), (2, (0, (1, 2)), (1, (0, 2)))),
}

# the 1/4 block: (k, l) -> (p, q) gives (f_{p,...} - f_{q,...}) z_k z_l d_k ^ d_l
_QUAD_TERMS = {
    (0, 1): (2, 3), (0, 2): (3, 1), (0, 3): (1, 2),
    (1, 2): (0, 3), (1, 3): (2, 0), (2, 3): (0, 1),
}


def bivector_of_form(omega: OneForm) -> MVec:
    """The bivector assembled from the pieces of omega."""
    d = decompose_form(omega)
    terms = []
    for (i, j), (k, l) in _PAIR_TERMS:
        terms.append(((k, l), d.f2(i, j)))
    third = Scalar(Fraction(1, 3))
    for n, rows in _TRIPLE_TERMS.items():
        for x, (p, (a, b)), (q, (c, e)) in rows:
            g = d.f1(p, a, b) - d.f1(q, c, e)
            if g:
                terms.append(((x, n), g * Poly.var(x) * third))
    quarter = Scalar(Fraction(1, 4))
    for (k, l), (p, q) in _QUAD_TERMS.items():
        coeff = d.f0(p) - d.f0(q)
        if coeff:
            terms.append(((k, l), Poly.var(k) * Poly.var(l) * (coeff * quarter)))
    return MVec(2, terms)


# -- the real structure on forms ----------------------------------------------------


def _phi_monomial(mono: Tuple[int, ...]) -> Tuple[Tuple[int, ...], int]:
    out = [0] * 8
    weight = 0
    for k in range(4):
        out[PHI[k]] += mono[k]
        weight += k * mono[k]
    return tuple(out), weight


def phi_form(omega: OneForm) -> OneForm:
    """Coefficient of z^a in f_m becomes (-1)^(|a| + m) conj(coefficient of phi(a) in f_phi(m))."""
    out = []
    for m in range(4):
        src = omega.coeffs[PHI[m]]
        terms = []
        for mono, c in src.terms.items():
            image, weight = _phi_monomial(mono)
            c = c.conjugate()
            if (weight + PHI[m]) & 1:
                c = -c
            terms.append(Poly.monomial(image, c))
        out.append(poly_sum(terms))
    return OneForm(tuple(out))


def is_phi_real_form(omega: OneForm) -> bool:
    return phi_form(omega) == omega


def quadric_matrix(f: Poly):
    """Symmetric s with f = sum_ij s_ij z_i z_j."""
    if not f.is_holomorphic() or (f and not f.is_homogeneous(2)):
        raise FormError("expected a holomorphic quadric")
    s = [[ZERO] * 4 for _ in range(4)]
    half = Scalar(Fraction(1, 2))
    for mono, c in f.terms.items():
        idx = [k for k in range(4) for _ in range(mono[k])]
        i, j = idx
        if i == j:
            s[i][i] = c
        else:
            s[i][j] = s[j][i] = c * half
    return s


def is_quaternionic_quadric(f: Poly) -> bool:
    """f lies in gl(2,H) meet S^2 C^4: s_ij = (-1)^(i+j) conj(s_phi(i)phi(j))."""
    s = quadric_matrix(f)
    for i in range(4):
        for j in range(4):
            t = s[PHI[i]][PHI[j]].conjugate()
            if (i + j) & 1:
                t = -t
            if s[i][j] != t:
                return False
    return True


def quadric_of_matrix(s) -> Poly:
    return poly_sum(Poly.var(i) * Poly.var(j) * Scalar.coerce(s[i][j])
                    for i in range(4) for j in range(4))


def agrees_mod_euler(a: MVec, b: MVec) -> bool:
    return is_zero_mod_euler(tensor_of_mvec(a - b, 2))
