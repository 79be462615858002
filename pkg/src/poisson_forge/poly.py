"""Polynomials in z0..z3 and their formal conjugates zb0..zb3 over Q[i].

A monomial is a tuple of 8 exponents: positions 0-3 belong to z0..z3 and
positions 4-7 to zb0..zb3.  The two halves are independent formal variables;
they are coupled only by :meth:`Poly.conjugate` and :meth:`Poly.evaluate`.
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .scalar import ONE, ZERO, Scalar

NVARS = 8
VAR_NAMES = ("z0", "z1", "z2", "z3", "zb0", "zb1", "zb2", "zb3")

Monomial = Tuple[int, ...]
UNIT: Monomial = (0,) * NVARS


def conj_index(k: int) -> int:
    """Index of the conjugate variable (z_k <-> zb_k)."""
    return k + 4 if k < 4 else k - 4


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_conjugate(m: Monomial) -> Monomial:
    return m[4:] + m[:4]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_order_key(m: Monomial):
    """Graded lexicographic key; larger keys print first."""
    return (sum(m), m)


def variable_monomial(k: int, power: int = 1) -> Monomial:
    e = [0] * NVARS
    e[k] = power
    return tuple(e)


class Poly:
    """Sparse polynomial; ``terms`` maps monomials to nonzero Scalars.

    Instances are never mutated after construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Scalar] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != NVARS or any(e < 0 for e in m):
                    raise ValueError(f"bad monomial exponent vector {m!r}")
                c = Scalar.coerce(c)
                if c:
                    clean[tuple(m)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Scalar]) -> "Poly":
        # terms must already be clean: valid monomials, no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        c = Scalar.coerce(c)
        return cls._raw({UNIT: c} if c else {})

    @classmethod
    def var(cls, k: int | str, power: int = 1) -> "Poly":
        if isinstance(k, str):
            k = VAR_NAMES.index(k)
        return cls._raw({variable_monomial(k, power): ONE})

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Poly":
        return cls({m: c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in canonical (descending graded lex) order."""
        for m in sorted(self._terms, key=monomial_order_key, reverse=True):
            yield m, self._terms[m]

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def is_holomorphic(self) -> bool:
        return all(not any(m[4:]) for m in self._terms)

    def variables(self) -> set:
        return {k for m in self._terms for k in range(NVARS) if m[k]}

    def constant_term(self) -> Scalar:
        return self._terms.get(UNIT, ZERO)

    # -- ring operations --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Scalar)):
            return self._terms == Poly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @staticmethod
    def _lift(x) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    def __add__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            prev = out.get(m)
            if prev is None:
                out[m] = c
            else:
                s = prev + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Poly._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly._lift(other) - self

    def scale(self, c) -> "Poly":
        c = Scalar.coerce(c)
        if not c:
            return ZERO_POLY
        if c == ONE:
            return self
        return Poly._raw({m: v * c for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO_POLY
        out: Dict[Monomial, Scalar] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = (ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3],
                     ma[4] + mb[4], ma[5] + mb[5], ma[6] + mb[6], ma[7] + mb[7])
                c = ca * cb
                prev = out.get(m)
                out[m] = c if prev is None else prev + c
        return Poly._raw({m: c for m, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly powers must be non-negative integers")
        result, base = ONE_POLY, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and involutions ----------------------------------------

    def partial(self, k: int | str) -> "Poly":
        """Formal partial derivative; z_k and zb_k are independent."""
        if isinstance(k, str):
            k = VAR_NAMES.index(k)
        out = {}
        for m, c in self._terms.items():
            e = m[k]
            if e:
                nm = m[:k] + (e - 1,) + m[k + 1:]
                out[nm] = c * e
        return Poly._raw(out)

    def conjugate(self) -> "Poly":
        return Poly._raw({monomial_conjugate(m): c.conjugate() for m, c in self._terms.items()})

    def evaluate(self, point: Sequence) -> Scalar:
        """Substitute z_k -> point[k] and zb_k -> conj(point[k])."""
        if len(point) != 4:
            raise ValueError("a point of C^4 has four coordinates")
        pt = [Scalar.coerce(x) for x in point]
        values = pt + [x.conjugate() for x in pt]
        total = ZERO
        for m, c in self._terms.items():
            term = c
            for k, e in enumerate(m):
                if e:
                    term = term * values[k] ** e
            total = total + term
        return total

    def substitute(self, images: Sequence["Poly"]) -> "Poly":
        """Compose: replace variable k by ``images[k]`` (8 entries)."""
        if len(images) != NVARS:
            raise ValueError("substitute needs one image per variable")
        images = [Poly._lift(x) for x in images]
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(k, e):
            key = (k, e)
            if key not in powers:
                powers[key] = images[k] ** e
            return powers[key]

        total = ZERO_POLY
        for m, c in self._terms.items():
            term = Poly.const(c)
            for k, e in enumerate(m):
                if e:
                    term = term * power(k, e)
            total = total + term
        return total

    def map_monomials(self, fn) -> "Poly":
        """Rebuild from ``fn(monomial, coeff) -> (monomial, coeff)`` applied per term."""
        out: Dict[Monomial, Scalar] = {}
        for m, c in self._terms.items():
            nm, nc = fn(m, c)
            out[nm] = out.get(nm, ZERO) + nc
        return Poly._raw({m: c for m, c in out.items() if c})

    # -- text -------------------------------------------------------------

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, names: Sequence[str] = VAR_NAMES) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.items():
            parts.append(_format_term(m, c, names))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


def _format_monomial(m: Monomial, names: Sequence[str]) -> str:
    factors = []
    for k, e in enumerate(m):
        if e == 1:
            factors.append(names[k])
        elif e > 1:
            factors.append(f"{names[k]}^{e}")
    return "*".join(factors)


def _format_term(m: Monomial, c: Scalar, names: Sequence[str]) -> str:
    mono = _format_monomial(m, names)
    if not mono:
        return str(c)
    if c == ONE:
        return mono
    if c == -ONE:
        return "-" + mono
    return f"{c}*{mono}"


def poly_sum(polys: Iterable[Poly]) -> Poly:
    out: Dict[Monomial, Scalar] = {}
    for p in polys:
        for m, c in p._terms.items():
            prev = out.get(m)
            out[m] = c if prev is None else prev + c
    return Poly._raw({m: c for m, c in out.items() if c})


ZERO_POLY = Poly._raw({})
ONE_POLY = Poly._raw({UNIT: ONE})
Z = tuple(Poly.var(k) for k in range(4))
ZB = tuple(Poly.var(k + 4) for k in range(4))
