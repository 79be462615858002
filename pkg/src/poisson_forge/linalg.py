"""Exact linear algebra over Q[i]: rank, solve, span membership.

Rows are stored sparsely (column -> nonzero Scalar).  Elimination is
Gauss-Jordan with first-fit pivoting in fixed column order, so results are
deterministic for a given entry order.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .scalar import ONE, ZERO, Scalar

SparseRow = Dict[int, Scalar]


class DimensionError(ValueError):
    pass


class ExactMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        data = []
        for row in entries:
            data.append({j: Scalar.coerce(x) for j, x in enumerate(row) if x})
        if cols is None:
            widths = {len(r) for r in entries}
            if len(widths) > 1:
                raise DimensionError("ragged matrix rows")
            cols = widths.pop() if widths else 0
        self.rows = len(data)
        self.cols = cols
        self._data: List[SparseRow] = data

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "ExactMatrix":
        if not columns:
            return cls([], cols=0)
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise DimensionError("all columns must share one length")
        return cls([[c[i] for c in columns] for i in range(n)], cols=len(columns))

    @classmethod
    def _from_sparse(cls, rows: List[SparseRow], cols: int) -> "ExactMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data = len(rows), cols, rows
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i].get(j, ZERO)

    def row(self, i) -> List[Scalar]:
        r = self._data[i]
        return [r.get(j, ZERO) for j in range(self.cols)]

    def to_lists(self) -> List[List[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j) -> List[Scalar]:
        return [r.get(j, ZERO) for r in self._data]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self._data == other._data

    def __mul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError("matrix product shape mismatch")
        out = []
        for r in self._data:
            acc: SparseRow = {}
            for k, a in r.items():
                for j, b in other._data[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            out.append({j: v for j, v in acc.items() if v})
        return ExactMatrix._from_sparse(out, other.cols)

    def apply(self, v: Sequence) -> List[Scalar]:
        if len(v) != self.cols:
            raise DimensionError("vector length does not match matrix columns")
        vs = [Scalar.coerce(x) for x in v]
        out = []
        for r in self._data:
            acc = ZERO
            for j, a in r.items():
                if vs[j]:
                    acc = acc + a * vs[j]
            out.append(acc)
        return out

    def rank(self) -> int:
        return len(_eliminate([dict(r) for r in self._data], self.cols)[1])

    def rref(self):
        """Reduced row echelon form: returns (R, pivot_columns)."""
        rows, pivots = _eliminate([dict(r) for r in self._data], self.cols)
        return ExactMatrix._from_sparse(rows, self.cols), pivots

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


def _eliminate(rows: List[SparseRow], ncols: int, track: Optional[List[SparseRow]] = None):
    """In-place Gauss-Jordan; rows are reordered so pivots come first.

    If ``track`` is given it receives the same row operations (used to record
    the transform E with E*M = R).
    """
    pivots: List[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        piv = None
        for i in range(r, nrows):
            if col in rows[i]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            if track is not None:
                track[r], track[piv] = track[piv], track[r]
        inv = rows[r][col].inverse()
        if inv != ONE:
            rows[r] = {j: v * inv for j, v in rows[r].items()}
            if track is not None:
                track[r] = {j: v * inv for j, v in track[r].items()}
        prow = rows[r]
        trow = track[r] if track is not None else None
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i].get(col)
            if f is None:
                continue
            _axpy(rows[i], prow, -f)
            if track is not None:
                _axpy(track[i], trow, -f)
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _axpy(target: SparseRow, source: SparseRow, f: Scalar) -> None:
    for j, v in source.items():
        nv = target.get(j, ZERO) + f * v
        if nv:
            target[j] = nv
        else:
            target.pop(j, None)


class SpanBasis:
    """Precomputed elimination of a fixed generator list for repeated membership tests."""

    def __init__(self, generators: Sequence[Sequence]):
        if not generators:
            raise DimensionError("SpanBasis needs at least one generator")
        self.dim = len(generators[0])
        if any(len(g) != self.dim for g in generators):
            raise DimensionError("all generators must share one length")
        self.ngens = len(generators)
        rows = [
            {k: Scalar.coerce(g[i]) for k, g in enumerate(generators) if g[i]}
            for i in range(self.dim)
        ]
        track = [{i: ONE} for i in range(self.dim)]
        rows, pivots = _eliminate(rows, self.ngens, track)
        self._rref = rows
        self._transform = track
        self.pivots = pivots
        self.rank = len(pivots)

    def _reduce(self, v: Sequence) -> List[Scalar]:
        if len(v) != self.dim:
            raise DimensionError(f"vector of length {len(v)} tested against span in dimension {self.dim}")
        vs = [Scalar.coerce(x) for x in v]
        out = []
        for t in self._transform:
            acc = ZERO
            for j, a in t.items():
                if vs[j]:
                    acc = acc + a * vs[j]
            out.append(acc)
        return out

    def contains(self, v: Sequence) -> bool:
        ev = self._reduce(v)
        return not any(ev[self.rank:])

    def witness(self, v: Sequence) -> Optional[List[Scalar]]:
        """Coefficients c with sum c_k g_k = v, or None when v is outside the span.

        Free generators get coefficient zero.
        """
        ev = self._reduce(v)
        if any(ev[self.rank:]):
            return None
        coeffs = [ZERO] * self.ngens
        for r, col in enumerate(self.pivots):
            coeffs[col] = ev[r]
        return coeffs


def exact_solve(m: ExactMatrix, target: Sequence) -> Optional[List[Scalar]]:
    """A solution x of m*x = target, or None if the system is inconsistent."""
    if len(target) != m.rows:
        raise DimensionError("target length does not match matrix rows")
    if m.cols == 0:
        return [] if not any(Scalar.coerce(t) for t in target) else None
    return SpanBasis([m.column(j) for j in range(m.cols)]).witness(target)


def subspace_membership(v: Sequence, generators: Sequence[Sequence]) -> Optional[List[Scalar]]:
    """Witness combination of ``generators`` equal to ``v``, or None."""
    if not generators:
        return [] if not any(Scalar.coerce(x) for x in v) else None
    if any(len(g) != len(v) for g in generators):
        raise DimensionError("all columns must share one length")
    return SpanBasis(generators).witness(v)


def rank_of(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return SpanBasis(vectors).rank
