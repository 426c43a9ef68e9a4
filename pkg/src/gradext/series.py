"""Laurent polynomials, power-series expansion, Hilbert-series identities and
growth classification of Betti sequences."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .algebra import GradedAlgebra
from .duality import ExtModule, dual_module, transpose
from .linalg import scalar_str
from .resolutions import Presentation


class SeriesError(ValueError):
    pass


class HypothesisError(SeriesError):
    """The input does not satisfy the assumptions of a formula."""


class LaurentPoly:
    """Finitely supported map exponent -> rational coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self.coeffs = {int(e): Fraction(c) for e, c in sorted((coeffs or {}).items()) if c}

    @classmethod
    def from_list(cls, values: Sequence, start: int = 0) -> "LaurentPoly":
        return cls({start + k: v for k, v in enumerate(values)})

    @classmethod
    def monomial(cls, e: int, c=1) -> "LaurentPoly":
        return cls({e: c})

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def low(self) -> int:
        return min(self.coeffs)

    @property
    def high(self) -> int:
        return max(self.coeffs)

    def __getitem__(self, e: int) -> Fraction:
        return self.coeffs.get(e, Fraction(0))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def invert_variable(self) -> "LaurentPoly":
        """p(t) -> p(t^{-1})."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient when ``other`` divides ``self`` in Q[t, 1/t]; raises otherwise."""
        if other.is_zero():
            raise SeriesError("division by zero")
        if self.is_zero():
            return LaurentPoly()
        shift = self.low - other.low
        num = [self[e] for e in range(self.low, self.high + 1)]
        den = [other[e] for e in range(other.low, other.high + 1)]
        if len(num) < len(den):
            raise HypothesisError("quotient is not a Laurent polynomial")
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        rem = list(num)
        for k in range(len(quot)):
            c = rem[k] / den[0]
            quot[k] = c
            if c:
                for j, dj in enumerate(den):
                    rem[k + j] -= c * dj
        if any(rem):
            raise HypothesisError("quotient is not a Laurent polynomial")
        return LaurentPoly.from_list(quot, shift)

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def to_pairs(self) -> list[list]:
        return [[e, scalar_str(c)] for e, c in self.coeffs.items()]

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"{scalar_str(c)}*t^{e}" for e, c in self.coeffs.items())


def from_hilbert(h: Mapping[int, int]) -> LaurentPoly:
    return LaurentPoly(dict(h))


def expand_rational(numerator: LaurentPoly, denominator: LaurentPoly, n: int) -> list[Fraction]:
    """First n+1 power-series coefficients of numerator/denominator.

    Both are taken as power series in t; the denominator's constant term
    must be nonzero.
    """
    if denominator.is_zero():
        raise SeriesError("zero denominator")
    if denominator.low < 0 or numerator.coeffs and numerator.low < 0:
        raise SeriesError("expansion is defined for polynomials in t")
    c0 = denominator[0]
    if not c0:
        raise SeriesError("denominator must have a nonzero constant term")
    out: list[Fraction] = []
    for k in range(n + 1):
        acc = numerator[k]
        for j in range(1, min(k, denominator.high) + 1):
            acc -= denominator[j] * out[k - j]
        out.append(acc / c0)
    return out


def abs_rhs(HM: LaurentPoly, HR: LaurentPoly) -> LaurentPoly:
    """H_M(t^{-1}) H_R(t) / H_R(t^{-1}) as an exact Laurent polynomial."""
    if HR.is_zero():
        raise SeriesError("H_R must be nonzero")
    return (HM.invert_variable() * HR).exact_div(HR.invert_variable())


def _signed_sum(hilberts: Iterable[tuple[int, Mapping[int, int]]]) -> LaurentPoly:
    acc = LaurentPoly()
    for n, h in hilberts:
        acc = acc + from_hilbert(h) * (-1) ** n
    return acc


def abs_formula_check(p: Presentation, A: Iterable[int], bound: int | None = None) -> dict:
    """Check the alternating Ext identities for M and M* and the parity argument.

    ``A`` is the exceptional index set (same parity, 0 excluded).  TR_i is
    verified for every 1 <= |i| <= bound outside A; a failure raises
    HypothesisError.  Returns a report dict whose ``verdict`` is the
    conjunction of all identities and of total reflexivity in the window.
    """
    A = sorted(set(int(a) for a in A))
    if 0 in A:
        raise HypothesisError("A must not contain 0")
    if len({a % 2 for a in A}) > 1:
        raise HypothesisError("A must consist of integers of the same parity")
    if bound is None:
        bound = max([abs(a) for a in A] + [2]) + 2
    if any(abs(a) > bound for a in A):
        raise HypothesisError("bound must cover A")
    sigma = 1 if A and A[0] % 2 == 0 else 0

    R: GradedAlgebra = p.algebra
    HR = from_hilbert(R.hilbert())
    ext_m = ExtModule(p)
    ext_tr = ExtModule(transpose(p))
    dual = dual_module(p)
    ext_dual = ExtModule(dual)

    tr = {}
    for i in range(-bound, bound + 1):
        if i:
            tr[i] = not (ext_m(i) if i > 0 else ext_tr(-i))
    violated = [i for i, ok in tr.items() if not ok and i not in A]
    if violated:
        raise HypothesisError(f"TR_i fails outside A at i = {violated}")

    HM = from_hilbert(p.hilbert())
    HMstar = from_hilbert(dual.hilbert())
    HMstarstar = from_hilbert(ext_dual(0))

    # every Ext^n with n <= bound is included; the hypothesis makes the rest vanish in the window
    lhs1 = _signed_sum((n, ext_m(n)) for n in range(bound + 1))
    rhs1 = abs_rhs(HM, HR)
    lhs2 = _signed_sum((n, ext_dual(n)) for n in range(bound + 1))
    rhs2 = abs_rhs(HMstar, HR)

    P = LaurentPoly()
    for n in A:
        if n > 0:
            P = P + from_hilbert(ext_m(n))
    Q = LaurentPoly()
    for n in A:
        if n < 0 and -n <= bound:
            Q = Q + from_hilbert(ext_dual(-n))
    sign = (-1) ** sigma
    parity_lhs = HR * P.invert_variable() + HR.invert_variable() * Q
    parity_rhs = HR.invert_variable() * (HMstarstar - HM) * sign

    checks = {
        "formula_1": lhs1 == rhs1,
        "formula_2": lhs2 == rhs2,
        "hom_dual_matches": from_hilbert(ext_m(0)) == HMstar,
        "parity_identity": parity_lhs == parity_rhs,
        "P_zero": P.is_zero(),
        "Q_zero": Q.is_zero(),
        "double_dual_hilbert_equal": HMstarstar == HM,
        "totally_reflexive_in_window": all(tr.values()),
    }
    return {
        "A": A,
        "bound": bound,
        "sigma": sigma,
        "H_M": HM.to_pairs(),
        "H_Mstar": HMstar.to_pairs(),
        "H_Mstarstar": HMstarstar.to_pairs(),
        "formula_1": {"lhs": lhs1.to_pairs(), "rhs": rhs1.to_pairs()},
        "formula_2": {"lhs": lhs2.to_pairs(), "rhs": rhs2.to_pairs()},
        "checks": checks,
        "verdict": all(checks.values()),
    }


@dataclass(frozen=True)
class GrowthVerdict:
    kind: str  # "constant" | "bounded" | "strictly-increasing" | "inconclusive"
    start: int | None = None  # first index of the strictly increasing tail
    min_ratio: Fraction | None = None
    max_ratio: Fraction | None = None

    @property
    def label(self) -> str:
        if self.kind == "strictly-increasing":
            return f"strictly-increasing-from({self.start})"
        return self.kind

    def to_dict(self) -> dict:
        out = {"classification": self.label}
        if self.min_ratio is not None:
            out["min_ratio"] = scalar_str(self.min_ratio)
            out["max_ratio"] = scalar_str(self.max_ratio)
        return out


def growth_analysis(b: Sequence[int]) -> GrowthVerdict:
    """Classify a finite Betti window.

    A strictly increasing tail needs at least three terms to count; its
    successive ratios are reported as evidence of exponential growth, which
    no finite window can establish.
    """
    if not b:
        raise SeriesError("empty sequence")
    if all(x == b[0] for x in b):
        return GrowthVerdict("constant")
    start = len(b) - 1
    while start > 0 and b[start - 1] < b[start]:
        start -= 1
    tail = b[start:]
    if len(tail) >= 3:
        ratios = [Fraction(tail[k + 1], tail[k]) for k in range(len(tail) - 1)] if tail[0] else []
        if ratios:
            return GrowthVerdict("strictly-increasing", start, min(ratios), max(ratios))
        return GrowthVerdict("strictly-increasing", start)
    if b[-1] <= b[-2]:
        return GrowthVerdict("bounded")
    return GrowthVerdict("inconclusive")
