"""Buchberger-criterion test for homogeneous generating sets.

This only checks whether a given set already is a Groebner basis (every
S-polynomial reduces to zero); it never completes a basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .expressions import PolyExpr, homogeneous_degree, resolve_alpha

Exponents = tuple[int, ...]
Poly = dict  # Exponents -> Fraction

KINDS = ("degrevlex", "deglex", "lex")


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    precedence: tuple[int, ...]  # variable indices, most significant first

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")

    def key(self, exps: Exponents):
        e = [exps[i] for i in self.precedence]
        if self.kind == "lex":
            return tuple(e)
        if self.kind == "deglex":
            return (sum(e), tuple(e))
        return (sum(e), tuple(-x for x in reversed(e)))

    def describe(self, variables: Sequence[str]) -> str:
        return f"{self.kind}:" + ">".join(variables[i] for i in self.precedence)

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> "MonomialOrder":
        """``"degrevlex:V>X>Y>Z"``; the precedence defaults to declaration order."""
        kind, _, prec = text.partition(":")
        if not prec:
            return cls(kind, tuple(range(len(variables))))
        names = [p.strip() for p in prec.split(">")]
        if sorted(names) != sorted(variables):
            raise ValueError(f"precedence {prec!r} must list every variable once")
        return cls(kind, tuple(list(variables).index(n) for n in names))


def to_poly(e: PolyExpr, variables: Sequence[str], alpha) -> Poly:
    if e.has_alpha():
        e = resolve_alpha(e, alpha)
    pos = {n: i for i, n in enumerate(variables)}
    out: Poly = {}
    for c, mono in e.rational_terms():
        exps = [0] * len(variables)
        for n in mono:
            exps[pos[n]] += 1
        out[tuple(exps)] = out.get(tuple(exps), Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def leading(f: Poly, order: MonomialOrder) -> Exponents:
    return max(f, key=order.key)


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(f: Poly, c: Fraction, shift: Exponents, g: Poly) -> Poly:
    out = dict(f)
    for m, v in g.items():
        mm = tuple(x + y for x, y in zip(m, shift))
        new = out.get(mm, Fraction(0)) - c * v
        if new:
            out[mm] = new
        else:
            out.pop(mm, None)
    return out


def reduce(f: Poly, basis: Sequence[Poly], order: MonomialOrder) -> Poly:
    """Full normal form of f modulo basis (remainder of multivariate division)."""
    leads = [(leading(g, order), g) for g in basis]
    f = dict(f)
    remainder: Poly = {}
    while f:
        m = leading(f, order)
        c = f[m]
        for lm, g in leads:
            if _divides(lm, m):
                shift = tuple(x - y for x, y in zip(m, lm))
                f = _sub_scaled(f, c / g[lm], shift, g)
                break
        else:
            remainder[m] = c
            del f[m]
    return remainder


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf, lg = leading(f, order), leading(g, order)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {tuple(x + y for x, y in zip(m, sf)): c / f[lf] for m, c in f.items()}
    return _sub_scaled(out, 1 / g[lg], sg, g)


def spoly_reduce_check(polys: Sequence[Poly], order: MonomialOrder) -> tuple[bool, tuple[int, int] | None]:
    """Buchberger's criterion; returns the first failing pair of indices."""
    polys = [p for p in polys if p]
    for i, j in combinations(range(len(polys)), 2):
        if reduce(s_polynomial(polys[i], polys[j], order), polys, order):
            return False, (i, j)
    return True, None


def all_orders(nvars: int) -> list[MonomialOrder]:
    return [MonomialOrder(kind, perm) for kind in KINDS for perm in permutations(range(nvars))]


def search_orders(polys: Sequence[Poly], nvars: int) -> list[MonomialOrder]:
    """Every (kind, precedence) under which the set is already a Groebner basis."""
    return [o for o in all_orders(nvars) if spoly_reduce_check(polys, o)[0]]


def standard_monomial_counts(polys: Sequence[Poly], order: MonomialOrder, nvars: int,
                             max_degree: int) -> dict[int, int]:
    """Number of monomials per degree not divisible by any leading monomial."""
    from .algebra import monomials
    leads = [leading(p, order) for p in polys if p]
    out = {}
    for d in range(max_degree + 1):
        n = sum(1 for m in monomials(nvars, d) if not any(_divides(lm, m) for lm in leads))
        if n:
            out[d] = n
    return out


def hilbert_cross_check(relations: Sequence[PolyExpr], variables: Sequence[str], alpha,
                        order: MonomialOrder, degree_bound: int = 6) -> tuple[bool, dict, dict]:
    """Compare standard-monomial counts with the linear-algebra Hilbert function."""
    from .algebra import AlgebraSpec, build
    for r in relations:
        homogeneous_degree(r)
    polys = [to_poly(r, variables, alpha) for r in relations]
    ok, _ = spoly_reduce_check(polys, order)
    if not ok:
        raise ValueError("the relations are not a Groebner basis under this order")
    A = build(AlgebraSpec(tuple(variables), tuple(relations), Fraction(alpha), degree_bound))
    counted = standard_monomial_counts(polys, order, len(variables), degree_bound)
    return counted == A.hilbert(), counted, A.hilbert()
