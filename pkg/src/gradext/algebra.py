"""Finite-dimensional standard graded algebras k[x_1..x_n]/I.

The ideal is realized degree by degree: the slice I_d is the row space of
all monomial multiples of the generators that land in degree d.  Columns are
the degree-d monomials sorted by increasing deglex order (declared
variable order, first variable largest), so row reduction eliminates the
smallest monomials first and the surviving non-pivot monomials form the
basis of R_d, listed largest first.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .expressions import PolyExpr, homogeneous_degree, parse, resolve_alpha
from .linalg import ZERO, ONE, RowSpace

Exponents = tuple[int, ...]

HilbertFunction = dict  # internal degree -> dimension, zeros omitted


def hilbert_function(values: dict[int, int]) -> dict[int, int]:
    """Normalize a degree -> dimension map: drop zeros, sort by degree."""
    return {d: v for d, v in sorted(values.items()) if v}


class AlgebraError(ValueError):
    pass


def monomials(nvars: int, degree: int) -> list[Exponents]:
    """All exponent vectors of the given total degree, ascending deglex."""
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort()
    return out


@dataclass(frozen=True)
class AlgebraSpec:
    variables: tuple[str, ...]
    relations: tuple[PolyExpr, ...]
    alpha: Fraction = Fraction(2)
    degree_bound: int = 6
    # keep a non-Artinian quotient as a window 0..degree_bound instead of failing
    allow_truncation: bool = False

    @classmethod
    def from_strings(cls, variables: Sequence[str], relations: Iterable[str],
                     alpha=2, degree_bound: int = 6,
                     allow_truncation: bool = False) -> "AlgebraSpec":
        variables = tuple(variables)
        rels = tuple(parse(r, list(variables)) for r in relations)
        return cls(variables, rels, Fraction(alpha), degree_bound, allow_truncation)


class GradedAlgebra:
    """An Artinian standard graded algebra with explicit monomial bases.

    Attributes
    ----------
    basis : list of lists of exponent tuples, one list per degree 0..top_degree
    mult : mult[(d1, d2)][a][b] is the product of basis elements a (degree d1)
        and b (degree d2) as a coefficient tuple over basis[d1 + d2]
    """

    def __init__(self, variables, alpha, basis, normal_forms, degree_bound, truncated=False):
        self.variables = tuple(variables)
        self.alpha = Fraction(alpha)
        self.basis: list[list[Exponents]] = basis
        self.degree_bound = degree_bound
        self.truncated = truncated
        self._normal = normal_forms
        self._index = [{m: k for k, m in enumerate(b)} for b in basis]
        self.top_degree = len(basis) - 1
        self.mult = self._structure_constants()

    # -- construction helpers ------------------------------------------------

    def _structure_constants(self):
        mult = {}
        top = self.top_degree
        for d1 in range(top + 1):
            for d2 in range(top + 1 - d1):
                table = []
                for a in self.basis[d1]:
                    table.append([self.normal_form(tuple(x + y for x, y in zip(a, b)))
                                  for b in self.basis[d2]])
                mult[(d1, d2)] = table
        return mult

    def normal_form(self, exps: Exponents) -> tuple[Fraction, ...] | None:
        """Coefficients of a monomial over the basis of its degree (None above top)."""
        d = sum(exps)
        if d > self.top_degree:
            self._check_known(d)
            return None
        return self._normal[d][exps]

    def _check_known(self, d: int) -> None:
        if self.truncated and d > self.top_degree:
            raise AlgebraError(f"degree {d} lies beyond the computed window 0..{self.top_degree}")

    # -- basic data ----------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def dim(self, d: int) -> int:
        if 0 <= d <= self.top_degree:
            return len(self.basis[d])
        return 0

    @property
    def dims(self) -> list[int]:
        """Dimensions for degrees 0..degree_bound."""
        return [self.dim(d) for d in range(self.degree_bound + 1)]

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self.basis)

    def monomial_name(self, exps: Exponents) -> str:
        if not any(exps):
            return "1"
        parts = []
        for name, e in zip(self.variables, exps):
            parts.extend([name] * e)
        return "*".join(parts)

    def basis_names(self, d: int) -> list[str]:
        return [self.monomial_name(m) for m in self.basis[d]] if 0 <= d <= self.top_degree else []

    # -- elements ------------------------------------------------------------

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, {0: (ONE,)})

    def scalar(self, c) -> "AlgebraElement":
        return self.one() * Fraction(c)

    def basis_element(self, d: int, k: int) -> "AlgebraElement":
        vec = [ZERO] * self.dim(d)
        vec[k] = ONE
        return AlgebraElement(self, {d: tuple(vec)})

    def monomial(self, exps: Exponents) -> "AlgebraElement":
        nf = self.normal_form(tuple(exps))
        if nf is None:
            return self.zero()
        return AlgebraElement(self, {sum(exps): nf})

    def gen(self, name: str) -> "AlgebraElement":
        i = self.variables.index(name)
        exps = [0] * self.nvars
        exps[i] = 1
        return self.monomial(tuple(exps))

    def from_expr(self, e: PolyExpr) -> "AlgebraElement":
        if e.has_alpha():
            e = resolve_alpha(e, self.alpha)
        acc = self.zero()
        pos = {name: i for i, name in enumerate(self.variables)}
        for c, mono in e.rational_terms():
            exps = [0] * self.nvars
            for name in mono:
                exps[pos[name]] += 1
            acc = acc + self.monomial(tuple(exps)) * c
        return acc

    def parse(self, text: str) -> "AlgebraElement":
        return self.from_expr(parse(text, list(self.variables)))

    def multiply(self, a: "AlgebraElement", b: "AlgebraElement") -> "AlgebraElement":
        return a * b

    def hilbert(self) -> dict[int, int]:
        return hilbert_function({d: len(b) for d, b in enumerate(self.basis)})

    def __repr__(self) -> str:
        return f"GradedAlgebra(vars={self.variables}, dims={self.dims[:self.top_degree + 1]})"


class AlgebraElement:
    """An element stored as {degree: coefficient tuple over basis[degree]}."""

    __slots__ = ("algebra", "parts", "_mats", "__weakref__")

    def __init__(self, algebra: GradedAlgebra, parts: dict[int, tuple]):
        self.algebra = algebra
        self.parts = {d: tuple(v) for d, v in sorted(parts.items()) if any(v)}
        self._mats: dict[int, list[list[Fraction]]] = {}

    def is_zero(self) -> bool:
        return not self.parts

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def degrees(self) -> list[int]:
        return list(self.parts)

    def is_homogeneous(self) -> bool:
        return len(self.parts) <= 1

    @property
    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element (None for zero)."""
        if not self.parts:
            return None
        if len(self.parts) > 1:
            raise AlgebraError(f"element {self} is not homogeneous")
        return next(iter(self.parts))

    def degree_zero_part(self) -> Fraction:
        v = self.parts.get(0)
        return v[0] if v else ZERO

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        parts = dict(self.parts)
        for d, v in other.parts.items():
            if d in parts:
                parts[d] = tuple(a + b for a, b in zip(parts[d], v))
            else:
                parts[d] = v
        return AlgebraElement(self.algebra, parts)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {d: tuple(-a for a in v) for d, v in self.parts.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return self._times(other)
        c = Fraction(other)
        return AlgebraElement(self.algebra, {d: tuple(a * c for a in v) for d, v in self.parts.items()})

    __rmul__ = __mul__

    def _times(self, other: "AlgebraElement") -> "AlgebraElement":
        A = self.algebra
        out: dict[int, list[Fraction]] = {}
        for d1, u in self.parts.items():
            for d2, w in other.parts.items():
                d = d1 + d2
                if d > A.top_degree:
                    A._check_known(d)
                    continue
                table = A.mult[(d1, d2)]
                acc = out.setdefault(d, [ZERO] * A.dim(d))
                for a, ca in enumerate(u):
                    if not ca:
                        continue
                    row = table[a]
                    for b, cb in enumerate(w):
                        if cb:
                            f = ca * cb
                            for k, x in enumerate(row[b]):
                                if x:
                                    acc[k] += f * x
        return AlgebraElement(A, {d: tuple(v) for d, v in out.items()})

    def mult_matrix(self, p: int) -> list[list[Fraction]]:
        """Columns: images of the basis of R_p under multiplication by self.

        Returned as a list indexed by source basis element; each entry is the
        coefficient list over basis[p + degree].  Only for homogeneous elements.
        """
        cached = self._mats.get(p)
        if cached is not None:
            return cached
        A = self.algebra
        e = self.degree
        if e is not None and A.dim(p):
            A._check_known(p + e)
        if e is None or p + e > A.top_degree or A.dim(p) == 0:
            cols = [[] for _ in range(A.dim(p))]
        else:
            u = self.parts[e]
            table = A.mult[(e, p)]
            n = A.dim(p + e)
            cols = []
            for b in range(A.dim(p)):
                acc = [ZERO] * n
                for a, ca in enumerate(u):
                    if ca:
                        for k, x in enumerate(table[a][b]):
                            if x:
                                acc[k] += ca * x
                cols.append(acc)
        self._mats[p] = cols
        return cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return hash(tuple(self.parts.items()))

    def __str__(self) -> str:
        A = self.algebra
        terms = []
        for d, v in self.parts.items():
            for k, c in enumerate(v):
                if not c:
                    continue
                name = A.monomial_name(A.basis[d][k])
                if name == "1":
                    body = str(abs(c))
                elif abs(c) == 1:
                    body = name
                else:
                    body = f"{abs(c)}*{name}"
                terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__


def build(spec: AlgebraSpec) -> GradedAlgebra:
    """Construct the quotient algebra by degree-wise elimination."""
    n = len(spec.variables)
    pos = {name: i for i, name in enumerate(spec.variables)}
    rels = []
    for r in spec.relations:
        if r.is_zero():
            continue
        deg = homogeneous_degree(r)
        if r.has_alpha():
            r = resolve_alpha(r, spec.alpha)
        poly: dict[Exponents, Fraction] = {}
        for c, mono in r.rational_terms():
            exps = [0] * n
            for name in mono:
                exps[pos[name]] += 1
            poly[tuple(exps)] = poly.get(tuple(exps), ZERO) + c
        rels.append((deg, poly))
    if rels and spec.degree_bound < max(d for d, _ in rels):
        raise AlgebraError("degree_bound is below the largest relation degree")

    basis: list[list[Exponents]] = []
    normal: list[dict[Exponents, tuple[Fraction, ...]]] = []
    for d in range(spec.degree_bound + 1):
        monos = monomials(n, d)
        col = {m: j for j, m in enumerate(monos)}
        space = RowSpace(len(monos))
        for rdeg, poly in rels:
            if rdeg > d:
                continue
            for mult in monomials(n, d - rdeg):
                row = {}
                for exps, c in poly.items():
                    j = col[tuple(a + b for a, b in zip(exps, mult))]
                    row[j] = row.get(j, ZERO) + c
                space.add_sparse({j: c for j, c in row.items() if c})
        reduced = dict(space.reduced_rows())
        free = [j for j in reversed(range(len(monos))) if j not in reduced]
        if not free:
            break
        fpos = {j: k for k, j in enumerate(free)}
        nf: dict[Exponents, tuple[Fraction, ...]] = {}
        for j, m in enumerate(monos):
            vec = [ZERO] * len(free)
            if j in fpos:
                vec[fpos[j]] = ONE
            else:
                for k, c in reduced[j].items():
                    if k != j:
                        vec[fpos[k]] = -c
            nf[m] = tuple(vec)
        basis.append([monos[j] for j in free])
        normal.append(nf)
    else:
        if spec.allow_truncation:
            return GradedAlgebra(spec.variables, spec.alpha, basis, normal,
                                 spec.degree_bound, truncated=True)
        raise AlgebraError(
            f"algebra is nonzero in degree {spec.degree_bound}; raise degree_bound "
            "or check that the quotient is Artinian")
    return GradedAlgebra(spec.variables, spec.alpha, basis, normal, spec.degree_bound)


def hilbert(A: GradedAlgebra) -> dict[int, int]:
    return A.hilbert()


def degree_zero_part(a: AlgebraElement) -> Fraction:
    return a.degree_zero_part()


def multiply(A: GradedAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return A.multiply(a, b)
