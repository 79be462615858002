"""Polynomial multivector fields on C^4 over the eight directions d0..d3, db0..db3.

Direction ``k`` is the partial derivative with respect to polynomial variable
``k`` (0-3: z0..z3, 4-7: zb0..zb3), so a coordinate field and its variable
share one index.  Wedge monomials are stored as strictly increasing index
tuples; reordering signs are absorbed at construction.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Sequence, Tuple

from .poly import NVARS, VAR_NAMES, ZERO_POLY, Poly, conj_index, poly_sum
from .scalar import Scalar

DIRECTION_NAMES = ("d0", "d1", "d2", "d3", "db0", "db1", "db2", "db3")

Wedge = Tuple[int, ...]


class GradeError(ValueError):
    pass


def sort_wedge(indices: Sequence[int]) -> Tuple[int, Wedge]:
    """Sort a wedge monomial; returns (sign, sorted) with sign 0 on a repeat."""
    idx = list(indices)
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    for a in range(1, len(idx)):
        if idx[a] == idx[a - 1]:
            return 0, ()
    return sign, tuple(idx)


def merge_wedge(a: Wedge, b: Wedge) -> Tuple[int, Wedge]:
    """Sign and canonical form of ``a ^ b`` for two sorted wedge monomials."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    sb = set(b)
    if any(x in sb for x in a):
        return 0, ()
    # each pair (x in a, y in b) with x > y costs one transposition
    inversions = 0
    for x in a:
        for y in b:
            if x > y:
                inversions += 1
    return (-1 if inversions & 1 else 1), tuple(sorted(a + b))


class MVec:
    """A polynomial q-vector field.  ``terms`` maps sorted index tuples to nonzero Polys."""

    __slots__ = ("grade", "_terms")

    def __init__(self, grade: int, terms: Iterable[Tuple[Sequence[int], Poly]] | Dict = ()):
        if grade < 0:
            raise GradeError("grade must be non-negative")
        self.grade = grade
        acc: Dict[Wedge, Poly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for idx, coeff in items:
            idx = tuple(idx)
            if len(idx) != grade:
                raise GradeError(f"index list {idx} has length {len(idx)}, expected grade {grade}")
            if any(not 0 <= k < NVARS for k in idx):
                raise ValueError(f"direction index out of range in {idx}")
            coeff = coeff if isinstance(coeff, Poly) else Poly.const(coeff)
            sign, key = sort_wedge(idx)
            if not sign or not coeff:
                continue
            coeff = coeff if sign > 0 else -coeff
            acc[key] = acc[key] + coeff if key in acc else coeff
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, grade: int, terms: Dict[Wedge, Poly]) -> "MVec":
        m = cls.__new__(cls)
        m.grade = grade
        m._terms = terms
        return m

    @classmethod
    def zero(cls, grade: int) -> "MVec":
        return cls._raw(grade, {})

    @classmethod
    def function(cls, p) -> "MVec":
        p = p if isinstance(p, Poly) else Poly.const(p)
        return cls._raw(0, {(): p} if p else {})

    @classmethod
    def partial(cls, k: int, coeff=1) -> "MVec":
        """The 1-vector ``coeff * d_k``."""
        return cls(1, [((k,), coeff)])

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Wedge, Poly]:
        return dict(self._terms)

    def items(self):
        for k in sorted(self._terms):
            yield k, self._terms[k]

    def coefficient(self, indices: Sequence[int]) -> Poly:
        sign, key = sort_wedge(indices)
        if not sign:
            return ZERO_POLY
        c = self._terms.get(key, ZERO_POLY)
        return c if sign > 0 else -c

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_holomorphic(self) -> bool:
        """No barred directions and no zb variables in any coefficient."""
        return all(max(k, default=0) < 4 and c.is_holomorphic() for k, c in self._terms.items())

    def coefficient_degrees(self) -> set:
        return {m_deg for c in self._terms.values() for m_deg in (sum(m) for m in c.terms)}

    # -- linear structure -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, MVec):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.grade == other.grade and self._terms == other._terms

    def __hash__(self):
        return hash((self.grade, frozenset(self._terms.items())))

    def _check_grade(self, other: "MVec"):
        if self.grade != other.grade and self._terms and other._terms:
            raise GradeError(f"cannot add grade {self.grade} and grade {other.grade}")

    def __add__(self, other):
        if not isinstance(other, MVec):
            return NotImplemented
        self._check_grade(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            if k in out:
                s = out[k] + c
                if s:
                    out[k] = s
                else:
                    del out[k]
            else:
                out[k] = c
        return MVec._raw(self.grade, out)

    def __neg__(self):
        return MVec._raw(self.grade, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MVec):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c):
        """Multiply every coefficient by a Scalar, int or Poly."""
        if isinstance(c, (int, Scalar)):
            c = Poly.const(c)
        if not isinstance(c, Poly):
            return NotImplemented
        if not c:
            return MVec.zero(self.grade)
        out = {}
        for k, v in self._terms.items():
            p = v * c
            if p:
                out[k] = p
        return MVec._raw(self.grade, out)

    __rmul__ = __mul__

    def map_coefficients(self, fn) -> "MVec":
        out = {}
        for k, v in self._terms.items():
            p = fn(v)
            if p:
                out[k] = p
        return MVec._raw(self.grade, out)

    # -- text -------------------------------------------------------------

    def to_str(self, var_names: Sequence[str] = VAR_NAMES,
               dir_names: Sequence[str] = DIRECTION_NAMES) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for idx, c in self.items():
            wedge = "/\\".join(dir_names[k] for k in idx)
            cs = c.to_str(var_names)
            if not wedge:
                pieces.append(cs if len(c) == 1 else f"({cs})")
            elif len(c) == 1:
                if cs == "1":
                    pieces.append(wedge)
                elif cs == "-1":
                    pieces.append("-" + wedge)
                else:
                    pieces.append(f"{cs}*{wedge}")
            else:
                pieces.append(f"({cs})*{wedge}")
        out = pieces[0]
        for p in pieces[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"MVec(grade={self.grade}, {self})"


def vector_field(components: Sequence) -> MVec:
    """1-vector sum_k components[k] d_k over the first len(components) directions."""
    return MVec(1, [((k,), c) for k, c in enumerate(components) if c])


def wedge(a: MVec, b: MVec, *more: MVec) -> MVec:
    if more:
        return wedge(wedge(a, b), *more)
    out: Dict[Wedge, List[Poly]] = {}
    for ia, ca in a._terms.items():
        for ib, cb in b._terms.items():
            sign, key = merge_wedge(ia, ib)
            if not sign:
                continue
            p = ca * cb
            out.setdefault(key, []).append(p if sign > 0 else -p)
    terms = {}
    for k, ps in out.items():
        s = ps[0] if len(ps) == 1 else poly_sum(ps)
        if s:
            terms[k] = s
    return MVec._raw(a.grade + b.grade, terms)


def lie_bracket(x: MVec, y: MVec) -> MVec:
    """[x, y] = x(y^k) d_k - y(x^k) d_k over all eight directions."""
    if x.grade != 1 or y.grade != 1:
        raise GradeError("lie_bracket takes two 1-vectors")
    comps: Dict[int, List[Poly]] = {}
    for (i,), xi in x._terms.items():
        for (k,), yk in y._terms.items():
            d = yk.partial(i)
            if d:
                comps.setdefault(k, []).append(xi * d)
    for (i,), yi in y._terms.items():
        for (k,), xk in x._terms.items():
            d = xk.partial(i)
            if d:
                comps.setdefault(k, []).append(-(yi * d))
    return MVec._raw(1, {(k,): s for k, ps in comps.items() if (s := poly_sum(ps))})


def _contract_right(idx: Wedge, k: int) -> Tuple[int, Wedge]:
    """Right derivative of d_idx by d_k: move d_k to the end and drop it."""
    s = idx.index(k)
    sign = -1 if (len(idx) - 1 - s) & 1 else 1
    return sign, idx[:s] + idx[s + 1:]


def schouten(a: MVec, b: MVec) -> MVec:
    """Schouten-Nijenhuis bracket of two polynomial multivector fields.

    Uses the graded-derivation form
    ``[P, Q] = sum_k (P <- d_k)(d_k Q) - (-1)^((p-1)(q-1)) (Q <- d_k)(d_k P)``
    where ``<- d_k`` removes d_k from the right and ``d_k Q`` differentiates the
    coefficients of Q.  On 1-vectors this is ``lie_bracket``; it obeys graded
    antisymmetry and the graded Leibniz rule
    ``[A, B^C] = [A,B]^C + (-1)^((|A|-1)|B|) B^[A,C]``.
    """
    p, q = a.grade, b.grade
    if p == 0 or q == 0:
        raise GradeError("the Schouten bracket is only defined here for grades >= 1")
    out: Dict[Wedge, List[Poly]] = {}
    _half_bracket(a, b, 1, out)
    _half_bracket(b, a, 1 if ((p - 1) * (q - 1)) & 1 else -1, out)
    terms = {}
    for k, ps in out.items():
        s = poly_sum(ps)
        if s:
            terms[k] = s
    return MVec._raw(p + q - 1, terms)


def _half_bracket(a: MVec, b: MVec, outer: int, out: Dict[Wedge, List[Poly]]):
    # accumulates outer * sum_k (a <- d_k) ^ (d_k b)
    for ia, ca in a._terms.items():
        for k in ia:
            s1, rest = _contract_right(ia, k)
            for ib, cb in b._terms.items():
                d = cb.partial(k)
                if not d:
                    continue
                s2, key = merge_wedge(rest, ib)
                if not s2:
                    continue
                prod = ca * d
                out.setdefault(key, []).append(prod if s1 * s2 * outer > 0 else -prod)


def conjugate_mvec(a: MVec) -> MVec:
    """Swap d_k <-> db_k and conjugate the coefficients."""
    terms = []
    for idx, c in a._terms.items():
        terms.append((tuple(conj_index(k) for k in idx), c.conjugate()))
    return MVec(a.grade, terms)


def evaluate_mvec_at(a: MVec, point: Sequence) -> MVec:
    """Constant multivector obtained by evaluating every coefficient at ``point``."""
    return MVec._raw(a.grade, {k: p for k, c in a._terms.items() if (p := Poly.const(c.evaluate(point)))})


def graded_parts(a: MVec) -> Dict[Tuple[int, int], MVec]:
    """Split by type: key (p, q) counts unbarred and barred directions."""
    buckets: Dict[Tuple[int, int], Dict[Wedge, Poly]] = {}
    for idx, c in a._terms.items():
        nbar = sum(1 for k in idx if k >= 4)
        buckets.setdefault((a.grade - nbar, nbar), {})[idx] = c
    return {key: MVec._raw(a.grade, t) for key, t in sorted(buckets.items(), reverse=True)}


def lie_derivative(x: MVec, a: MVec) -> MVec:
    """L_x a for a 1-vector x."""
    if x.grade != 1:
        raise GradeError("lie_derivative takes a 1-vector first")
    if a.grade == 0:
        c = a.coefficient(())
        return MVec.function(poly_sum(xc * c.partial(k) for (k,), xc in x._terms.items()))
    return schouten(x, a)


EULER = vector_field([Poly.var(k) for k in range(4)])
