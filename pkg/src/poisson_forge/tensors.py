"""Coefficient tensors of C*-invariant holomorphic q-vectors on C^4.

A degree-q, grade-q holomorphic multivector
``sum c[u; w] z_u1...z_uq d_w1^...^d_wq`` is stored on canonical slots:
``u`` a non-decreasing q-tuple (the monomial) and ``w`` a strictly increasing
q-tuple (the wedge).  Reading a slot with arbitrary index order applies the
symmetric / alternating sign rules.
"""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .multivector import MVec, sort_wedge
from .poly import Poly
from .scalar import ONE, ZERO, Scalar

# index involution of the quaternionic j-action: 0<->1, 2<->3
PHI = (1, 0, 3, 2)

Slot = Tuple[Tuple[int, ...], Tuple[int, ...]]


class TensorDomainError(ValueError):
    pass


@lru_cache(maxsize=None)
def slots(q: int) -> Tuple[Slot, ...]:
    uppers = list(itertools.combinations_with_replacement(range(4), q))
    lowers = list(itertools.combinations(range(4), q))
    return tuple((u, w) for u in uppers for w in lowers)


@lru_cache(maxsize=None)
def slot_index(q: int) -> Dict[Slot, int]:
    return {s: n for n, s in enumerate(slots(q))}


def _perm_count(u: Sequence[int]) -> int:
    n = factorial(len(u))
    for k in set(u):
        n //= factorial(u.count(k))
    return n


class SymAltTensor:
    """Canonical-slot tensor in S^q C^4 (x) Alt^q (C^4)^v."""

    q = 0
    __slots__ = ("entries",)

    def __init__(self, entries: Sequence | Dict[Slot, object] | None = None):
        n = len(slots(self.q))
        if entries is None:
            vals = [ZERO] * n
        elif isinstance(entries, dict):
            vals = [ZERO] * n
            index = slot_index(self.q)
            for key, v in entries.items():
                if key not in index:
                    raise TensorDomainError(f"{key} is not a canonical slot for q={self.q}")
                vals[index[key]] = Scalar.coerce(v)
        else:
            if len(entries) != n:
                raise TensorDomainError(f"expected {n} entries for q={self.q}, got {len(entries)}")
            vals = [Scalar.coerce(v) for v in entries]
        self.entries: Tuple[Scalar, ...] = tuple(vals)

    @classmethod
    def for_grade(cls, q: int):
        return {1: Tensor1, 2: Tensor2, 3: Tensor3}[q]

    def get(self, upper: Sequence[int], lower: Sequence[int]) -> Scalar:
        """Entry for any index order, with symmetry in ``upper`` and alternation in ``lower``."""
        sign, w = sort_wedge(lower)
        if not sign:
            return ZERO
        v = self.entries[slot_index(self.q)[(tuple(sorted(upper)), w)]]
        return v if sign > 0 else -v

    def __getitem__(self, idx):
        if not isinstance(idx, tuple) or len(idx) != 2 * self.q:
            raise IndexError(f"expected {2 * self.q} indices")
        return self.get(idx[:self.q], idx[self.q:])

    def full(self, upper: Sequence[int], lower: Sequence[int]) -> Scalar:
        """Coefficient in the unrestricted-sum convention ``sum_{all indices} a z..z d^..^d``."""
        v = self.get(upper, lower)
        if not v:
            return v
        return v / (_perm_count(tuple(upper)) * factorial(self.q))

    def nonzero(self) -> Dict[Slot, Scalar]:
        return {s: v for s, v in zip(slots(self.q), self.entries) if v}

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __eq__(self, other):
        if not isinstance(other, SymAltTensor):
            return NotImplemented
        return self.q == other.q and self.entries == other.entries

    def __hash__(self):
        return hash((self.q, self.entries))

    def __add__(self, other):
        if not isinstance(other, SymAltTensor) or other.q != self.q:
            return NotImplemented
        return type(self)([a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, SymAltTensor) or other.q != self.q:
            return NotImplemented
        return type(self)([a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return type(self)([-a for a in self.entries])

    def __mul__(self, c):
        c = Scalar.coerce(c)
        return type(self)([a * c for a in self.entries])

    __rmul__ = __mul__

    def as_vector(self) -> List[Scalar]:
        return list(self.entries)

    def __repr__(self):
        body = ", ".join(f"{u}{w}: {v}" for (u, w), v in self.nonzero().items())
        return f"{type(self).__name__}({{{body}}})"


class Tensor1(SymAltTensor):
    """Matrix (a_ij) of the linear vector field sum a_ij z_i d_j."""

    q = 1
    __slots__ = ()

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "Tensor1":
        return cls({((i,), (j,)): m[i][j] for i in range(4) for j in range(4)})

    def matrix(self) -> List[List[Scalar]]:
        return [[self.get((i,), (j,)) for j in range(4)] for i in range(4)]


class Tensor2(SymAltTensor):
    q = 2
    __slots__ = ()

    def to_json(self) -> str:
        return json.dumps(tensor2_to_records(self), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Tensor2":
        return tensor2_from_records(json.loads(text))


class Tensor3(SymAltTensor):
    q = 3
    __slots__ = ()


def tensor2_to_records(t: Tensor2) -> List[dict]:
    out = []
    for ((i, j), (k, l)), v in t.nonzero().items():
        rec = {"i": i, "j": j, "k": k, "l": l}
        rec.update(v.to_json())
        out.append(rec)
    return out


def tensor2_from_records(records) -> Tensor2:
    if not isinstance(records, list):
        raise TensorDomainError("tensor JSON must be an array of slot records")
    seen = {}
    for rec in records:
        if not isinstance(rec, dict):
            raise TensorDomainError(f"slot record must be an object, got {rec!r}")
        missing = {"i", "j", "k", "l", "re", "im"} - rec.keys()
        if missing:
            raise TensorDomainError(f"slot record missing fields {sorted(missing)}")
        extra = rec.keys() - {"i", "j", "k", "l", "re", "im"}
        if extra:
            raise TensorDomainError(f"slot record has unknown fields {sorted(extra)}")
        idx = tuple(rec[x] for x in "ijkl")
        if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < 4 for x in idx):
            raise TensorDomainError(f"slot indices must be integers in 0..3, got {idx}")
        i, j, k, l = idx
        if not (i <= j and k < l):
            raise TensorDomainError(f"non-canonical slot {idx}: need i <= j and k < l")
        key = ((i, j), (k, l))
        if key in seen:
            raise TensorDomainError(f"duplicate slot {idx}")
        try:
            seen[key] = Scalar.from_json(rec["re"], rec["im"])
        except ValueError as exc:
            raise TensorDomainError(str(exc)) from None
    return Tensor2(seen)


# -- conversion to and from multivectors ------------------------------------


def tensor_of_mvec(a: MVec, q: int | None = None):
    q = a.grade if q is None else q
    if q not in (1, 2, 3):
        raise TensorDomainError("only q = 1, 2, 3 are supported")
    if a.grade != q:
        raise TensorDomainError(f"expected a grade-{q} multivector, got grade {a.grade}")
    index = slot_index(q)
    vals = [ZERO] * len(index)
    for w, c in a.terms.items():
        if max(w) >= 4:
            raise TensorDomainError("barred directions are not allowed in a holomorphic tensor")
        for m, v in c.terms.items():
            if any(m[4:]):
                raise TensorDomainError("coefficients must not involve zb variables")
            if sum(m) != q:
                raise TensorDomainError(f"coefficient {c} is not homogeneous of degree {q}")
            u = tuple(k for k in range(4) for _ in range(m[k]))
            vals[index[(u, w)]] = v
    return SymAltTensor.for_grade(q)(vals)


def _monomial_of(u: Sequence[int]) -> Tuple[int, ...]:
    e = [0] * 8
    for k in u:
        e[k] += 1
    return tuple(e)


def mvec_of_tensor(t: SymAltTensor) -> MVec:
    terms: Dict[Tuple[int, ...], Dict] = {}
    for (u, w), v in t.nonzero().items():
        terms.setdefault(w, {})[_monomial_of(u)] = v
    return MVec(t.q, [(w, Poly(ms)) for w, ms in terms.items()])


# -- the matrix-form bracket -------------------------------------------------


def matrix_form_bracket(a: Tensor2, b: Tensor2) -> Tensor3:
    """Bracket of two Tensor2s via commutators of the gl(4)-valued matrices A_jl.

    ``A_jl`` has (i, k) entry a_ijkl (unrestricted-sum convention).  All
    commutators ``[A_jl, B_j'l']`` form an element of (x)^3 gl(4) with upper
    indices (i, j, j') and lower indices (k, l, l'); it is projected onto
    S^3 (x) Alt^3 and multiplied by 4.
    """
    fa = _full_array(a)
    fb = _full_array(b)
    # A[j][l] is the 4x4 matrix (i, k) -> a_ijkl
    A = [[[[fa[i][j][k][l] for k in range(4)] for i in range(4)] for l in range(4)] for j in range(4)]
    B = [[[[fb[i][j][k][l] for k in range(4)] for i in range(4)] for l in range(4)] for j in range(4)]
    comm: Dict[Tuple[int, int, int, int], List[List[Scalar]]] = {}
    for j, l, jp, lp in itertools.product(range(4), repeat=4):
        comm[(j, l, jp, lp)] = _commutator(A[j][l], B[jp][lp])

    def T(upper, lower):
        i, j, jp = upper
        k, l, lp = lower
        m = comm.get((j, l, jp, lp))
        return m[i][k] if m is not None else ZERO

    vals = []
    for u, w in slots(3):
        acc = ZERO
        for su in set(itertools.permutations(u)):
            for pw in itertools.permutations(range(3)):
                sign, _ = sort_wedge(pw)
                val = T(su, tuple(w[p] for p in pw))
                if val:
                    acc = acc + val if sign > 0 else acc - val
        # the averaging projection weighs each distinct upper ordering by
        # 6/(#orderings) over 36 pairs; the canonical slot collects
        # (#orderings) * 3! unrestricted-sum entries, so the factors cancel
        vals.append(acc * 4)
    return Tensor3(vals)


def _full_array(t: Tensor2):
    return [[[[t.full((i, j), (k, l)) for l in range(4)] for k in range(4)] for j in range(4)] for i in range(4)]


def _commutator(x, y):
    out = []
    for i in range(4):
        row = []
        for k in range(4):
            acc = ZERO
            for m in range(4):
                if x[i][m] and y[m][k]:
                    acc = acc + x[i][m] * y[m][k]
                if y[i][m] and x[m][k]:
                    acc = acc - y[i][m] * x[m][k]
            row.append(acc)
        out.append(row)
    return out


# -- the real structure --------------------------------------------------------


def phi(t: SymAltTensor) -> SymAltTensor:
    """Anti-linear involution a_{i1..i2q} -> (-1)^(i1+..+i2q) conj(a_{phi(i1)..phi(i2q)})."""
    vals = []
    for u, w in slots(t.q):
        v = t.get(tuple(PHI[k] for k in u), tuple(PHI[k] for k in w)).conjugate()
        vals.append(-v if (sum(u) + sum(w)) & 1 else v)
    return type(t)(vals)


def is_phi_fixed(t: SymAltTensor) -> bool:
    return phi(t) == t


def hstar_invariant(t: SymAltTensor) -> bool:
    """Check the H*-invariance condition index by index over all 4^(2q) index tuples."""
    if t.q not in (1, 2):
        raise TensorDomainError("hstar_invariant takes a Tensor1 or Tensor2")
    q = t.q
    for idx in itertools.product(range(4), repeat=2 * q):
        lhs = t.get(idx[:q], idx[q:])
        img = tuple(PHI[k] for k in idx)
        rhs = t.get(img[:q], img[q:]).conjugate()
        if sum(idx) & 1:
            rhs = -rhs
        if lhs != rhs:
            return False
    return True


# -- quaternionic matrices ----------------------------------------------------


class QuatMatrix2:
    """2x2 quaternionic matrix; entry (k, l) is a_kl + j*b_kl with a, b in Q[i]."""

    __slots__ = ("a", "b")

    def __init__(self, a: Sequence[Sequence], b: Sequence[Sequence]):
        self.a = tuple(tuple(Scalar.coerce(x) for x in row) for row in a)
        self.b = tuple(tuple(Scalar.coerce(x) for x in row) for row in b)
        if len(self.a) != 2 or len(self.b) != 2 or any(len(r) != 2 for r in self.a + self.b):
            raise ValueError("QuatMatrix2 needs 2x2 arrays")

    @classmethod
    def identity(cls) -> "QuatMatrix2":
        return cls([[1, 0], [0, 1]], [[0, 0], [0, 0]])

    def __eq__(self, other):
        return isinstance(other, QuatMatrix2) and (self.a, self.b) == (other.a, other.b)

    def __add__(self, other):
        return QuatMatrix2([[self.a[r][c] + other.a[r][c] for c in range(2)] for r in range(2)],
                           [[self.b[r][c] + other.b[r][c] for c in range(2)] for r in range(2)])

    def __sub__(self, other):
        return self + other.scale_real(-1)

    def scale_real(self, c) -> "QuatMatrix2":
        c = Scalar.coerce(c)
        if not c.is_real():
            raise ValueError("quaternionic matrices are scaled by reals here")
        return QuatMatrix2([[x * c for x in r] for r in self.a], [[x * c for x in r] for r in self.b])

    def __matmul__(self, other):
        # (a + jb)(c + jd) = (ac - conj(b) d) + j(conj(a) d + b c)
        A = [[ZERO, ZERO], [ZERO, ZERO]]
        B = [[ZERO, ZERO], [ZERO, ZERO]]
        for r in range(2):
            for c in range(2):
                for m in range(2):
                    a, b = self.a[r][m], self.b[r][m]
                    cc, d = other.a[m][c], other.b[m][c]
                    A[r][c] = A[r][c] + a * cc - b.conjugate() * d
                    B[r][c] = B[r][c] + a.conjugate() * d + b * cc
        return QuatMatrix2(A, B)

    def commutator(self, other) -> "QuatMatrix2":
        return (self @ other) - (other @ self)


def embed_gl2h(m: QuatMatrix2) -> Tensor1:
    """4x4 complex matrix with blocks [[a, -conj(b)], [b, conj(a)]]."""
    M = [[ZERO] * 4 for _ in range(4)]
    for r in range(2):
        for c in range(2):
            a, b = m.a[r][c], m.b[r][c]
            M[2 * r][2 * c] = a
            M[2 * r][2 * c + 1] = -b.conjugate()
            M[2 * r + 1][2 * c] = b
            M[2 * r + 1][2 * c + 1] = a.conjugate()
    return Tensor1.from_matrix(M)


def matrix_commutator(x: Tensor1, y: Tensor1) -> Tensor1:
    X, Y = x.matrix(), y.matrix()
    return Tensor1.from_matrix(_commutator(X, Y))


def euler_tensor() -> Tensor1:
    return Tensor1.from_matrix([[ONE if i == j else ZERO for j in range(4)] for i in range(4)])
