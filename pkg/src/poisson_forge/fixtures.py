"""The worked examples, as source text plus their expected verdicts."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from .cp3 import chart_pushforward_cp3, is_poisson_cp3
from .hp1 import hp1_chart_bracket, hp1_chart_pushforward, is_poisson_hp1, realify
from .multivector import MVec, conjugate_mvec, wedge
from .parser import parse_mvec
from .scalar import Scalar
from .tensors import Tensor2, tensor_of_mvec


class UnknownFixtureError(KeyError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    source: str
    citation: str
    # expected verdict fields, e.g. {"cp3.poisson": True}
    expect: Dict[str, bool] = field(default_factory=dict)
    # expected chart output on U_r, as source text in the zeta slots
    chart_golden: Optional[Tuple[int, str]] = None
    # for the v-family the real bivector is given directly as
    # sum a_pq (v_p + conj v_p) ^ (v_q + conj v_q)
    real_family: Optional[Tuple[Tuple[str, ...], Tuple]] = None

    def mvec(self) -> MVec:
        return parse_mvec(self.source)

    def real_mvec(self) -> MVec:
        """The real bivector whose V_0, V_1 brackets the cross-check inspects."""
        if self.real_family:
            return real_family_mvec(*self.real_family)
        return realify(self.tensor()).field

    def tensor(self) -> Tensor2:
        return tensor_of_mvec(self.mvec(), 2)


# 1-vectors of the commuting families
U = ("z1*d1", "z2*d2", "z3*d3")
V = ("z0*d0 + z1*d1", "i*(z0*d0 - z1*d1)", "i*(z2*d2 - z3*d3)")


def family_source(fields: Sequence[str], coeffs: Sequence) -> str:
    """a1 X1^X2 + a2 X1^X3 + a3 X2^X3 as source text."""
    pairs = ((0, 1), (0, 2), (1, 2))
    parts = []
    for (p, q), a in zip(pairs, coeffs):
        a = Scalar.coerce(a)
        parts.append(f"{a}*({fields[p]})/\\({fields[q]})")
    return " + ".join(parts)


def family_mvec(fields: Sequence[str], coeffs: Sequence) -> MVec:
    pairs = ((0, 1), (0, 2), (1, 2))
    total = MVec.zero(2)
    for (p, q), a in zip(pairs, coeffs):
        total = total + wedge(parse_mvec(fields[p]), parse_mvec(fields[q])) * Scalar.coerce(a)
    return total


def real_family_mvec(fields: Sequence[str], coeffs: Sequence) -> MVec:
    reals = [v + conjugate_mvec(v) for v in (parse_mvec(f) for f in fields)]
    pairs = ((0, 1), (0, 2), (1, 2))
    total = MVec.zero(2)
    for (p, q), a in zip(pairs, coeffs):
        total = total + wedge(reals[p], reals[q]) * Scalar.coerce(a)
    return total


_CP3 = {"cp3.poisson": True, "cp3.nontrivial": True}
_HP1 = {"cp3.poisson": True, "cp3.nontrivial": True, "hp1.poisson": True, "hp1.phi_real": True}

FIXTURES: Dict[str, Fixture] = {f.name: f for f in (
    Fixture("ex3.5.1", "z0*z2*d1/\\d3",
            "w1 = z0 z2 d1^d3, non-trivial Poisson on CP^3",
            dict(_CP3), (0, "z2*d1/\\d3")),
    Fixture("ex3.5.2", "(z0*d1 - z1*d0)/\\(z2*d3 - z3*d2)",
            "w2, a wedge of two rotations, with a known chart form on U_0",
            dict(_CP3),
            (0, "-z3*(1+z1^2)*d1/\\d2 - z2*(1+z1^2)*d3/\\d1 + z1*(z2^2+z3^2)*d2/\\d3")),
    Fixture("ex3.5.3", "(z0*d1 + z1*d0 + z2*d3 + z3*d2)/\\(z0*d3 + z1*d2 + z2*d1 + z3*d0)",
            "w3, non-zero since a_0013 = 1 on U_0",
            dict(_CP3)),
    Fixture("ex3.5.4", family_source(U, (1, 1, 1)),
            "u-family: a1 u1^u2 + a2 u1^u3 + a3 u2^u3 with a = (1, 1, 1)",
            dict(_CP3)),
    Fixture("ex3.5.5",
            "(z0^2 - 2*z1*z3)*d0/\\d1 + (z0*z1 - 3*z2*z3)*d0/\\d2 + (2*z1^2 - 3*z0*z2)*d1/\\d2",
            "w of a degree-2 foliation form",
            dict(_CP3)),
    Fixture("ex3.5.6",
            "(z3^2 - z2^2)*d0/\\d1 + (z1^2 - z3^2)*d0/\\d2 + (z2^2 - z1^2)*d0/\\d3"
            " + (z3^2 - z0^2)*d1/\\d2 + (z0^2 - z2^2)*d1/\\d3 + (z1^2 - z0^2)*d2/\\d3",
            "w' of the form sum z_i (z_i^2 - z_j^2) dz_j",
            dict(_CP3)),
    Fixture("ex4.7.1", family_source(V, (1, 1, 1)),
            "v-family: a1 v1^v2 + a2 v1^v3 + a3 v2^v3 with a = (1, 1, 1)",
            dict(_HP1), real_family=(V, (1, 1, 1))),
    Fixture("ex4.7.2", "i*(z3^2 - z2^2)*d0/\\d1",
            "pencil f = z0^2 + z1^2, g = i z0 z1",
            dict(_HP1)),
    Fixture("ex4.7.3",
            "i*((z0^2 - z1^2)*d2/\\d3 + z0*z3*d0/\\d2 - z0*z2*d0/\\d3 - z1*z3*d1/\\d2 + z1*z2*d1/\\d3)",
            "pencil f = z0^2 + z1^2 + z2^2 + z3^2, g = i z0 z1",
            dict(_HP1)),
    Fixture("ex4.7.4",
            "i*((z0^2 - z1^2)*d2/\\d3 + (z2^2 - z3^2)*d0/\\d1 + (z0*z3 - z1*z2)*d0/\\d2"
            " + (z1*z3 - z0*z2)*d0/\\d3 + (z0*z2 - z1*z3)*d1/\\d2 + (z1*z2 - z0*z3)*d1/\\d3)",
            "pencil f = z0^2 + z1^2 + z2^2 + z3^2, g = i (z0 z1 + z2 z3)",
            dict(_HP1)),
)}

# pencil inputs (f, g) of the foliation examples
PENCILS = {
    "ex4.7.2": ("z0^2 + z1^2", "i*z0*z1"),
    "ex4.7.3": ("z0^2 + z1^2 + z2^2 + z3^2", "i*z0*z1"),
    "ex4.7.4": ("z0^2 + z1^2 + z2^2 + z3^2", "i*(z0*z1 + z2*z3)"),
}

# 1-forms of the foliation examples
FORMS = {
    "ex3.5.5": "z3*(2*z1^2 - 3*z0*z2)*dz0 + z3*(3*z2*z3 - z0*z1)*dz1"
               " + z3*(z0^2 - 2*z1*z3)*dz2 - (z0*z1^2 - 2*z0^2*z2 + z1*z2*z3)*dz3",
    "ex3.5.6": " + ".join(f"z{i}*(z{i}^2 - z{j}^2)*dz{j}" for i in range(4) for j in range(4) if i != j),
}

# the rejected bivector and its pointwise witness
NEGATIVE_CONTROL = "z2^2*d0/\\d1 + z0^2*d2/\\d3"
NEGATIVE_WITNESS = (1, 1, 1, 0)


def get_fixture(name: str) -> Fixture:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None


@dataclass
class FixtureResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, label: str, expected, got):
        self.checks.append((label, expected == got, f"expected {expected}, got {got}"))


def run_fixture(f: Fixture) -> FixtureResult:
    """Compare every recorded expectation of ``f`` against a fresh computation."""
    res = FixtureResult(f.name)
    t = f.tensor()
    quotient = is_poisson_cp3(t, "quotient")
    charts = is_poisson_cp3(t, "charts")
    got = {"cp3.poisson": quotient.poisson, "cp3.nontrivial": quotient.nontrivial}
    if any(k.startswith("hp1.") for k in f.expect):
        hv = is_poisson_hp1(t)
        got.update({"hp1.poisson": hv.poisson, "hp1.phi_real": hv.phi_real})
    for key, want in f.expect.items():
        res.add(key, want, got[key])
    res.add("cp3 methods agree", quotient.poisson, charts.poisson)
    if f.chart_golden:
        r, src = f.chart_golden
        chart = chart_pushforward_cp3(t, r)
        res.add(f"chart U_{r}", str(parse_mvec(src)), str(chart.field))
    if f.expect.get("hp1.poisson"):
        real = f.real_mvec()
        for m in (0, 1):
            bracket = hp1_chart_bracket(hp1_chart_pushforward(real, m))
            res.add(f"V_{m} chart bracket is zero", True, bracket.is_zero())
    return res
