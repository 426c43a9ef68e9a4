"""Minimal presentations, syzygies and minimal graded free resolutions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import AlgebraElement, GradedAlgebra, hilbert_function
from .complexes import Complex
from .free_modules import (FreeModule, ModuleMap, column_to_vector, degree_range,
                           map_in_degree, piece_dim, piece_offsets, vector_to_column)
from .linalg import RowSpace, kernel_basis, rank


class Presentation:
    """The module Coker(map: source -> target)."""

    def __init__(self, map: ModuleMap):
        self.map = map
        self._hilbert: dict[int, int] | None = None

    @property
    def algebra(self) -> GradedAlgebra:
        return self.map.algebra

    @property
    def generators(self) -> FreeModule:
        return self.map.target

    @property
    def relations(self) -> FreeModule:
        return self.map.source

    def hilbert(self) -> dict[int, int]:
        if self._hilbert is None:
            self._hilbert = module_hilbert(self)
        return self._hilbert

    def is_zero_module(self) -> bool:
        return not self.hilbert()

    def __repr__(self) -> str:
        return f"Presentation({self.map!r})"


def free_presentation(A: GradedAlgebra, F: FreeModule) -> Presentation:
    """F itself, presented with no relations."""
    return Presentation(ModuleMap(A, FreeModule(), F, [[] for _ in F.twists]))


def module_hilbert(p: Presentation) -> dict[int, int]:
    A = p.algebra
    F = p.map.target
    out = {}
    for d in degree_range(F, A):
        out[d] = piece_dim(F, d, A) - rank(map_in_degree(p.map, d))
    return hilbert_function(out)


class _Submodule:
    """Graded submodule of a free module generated by chosen homogeneous columns.

    Degree pieces are filled lazily through a per-degree cursor over
    (generator, basis element) pairs and may stop at a requested dimension:
    the spans in high degrees dominate the cost of a syzygy computation.
    """

    def __init__(self, A: GradedAlgebra, F: FreeModule):
        self.A = A
        self.F = F
        self.gens: list[tuple[int, list[AlgebraElement]]] = []
        self._pieces: dict[int, tuple[RowSpace, int, int]] = {}

    def add(self, twist: int, column: list[AlgebraElement]) -> None:
        self.gens.append((twist, column))

    def piece(self, d: int, cap: int | None = None) -> RowSpace:
        A, F = self.A, self.F
        if d in self._pieces:
            space, k, b = self._pieces[d]
        else:
            space, k, b = RowSpace(piece_dim(F, d, A)), 0, 0
        limit = space.ncols if cap is None else min(cap, space.ncols)
        offs = piece_offsets(F, d, A)
        while space.dim < limit and k < len(self.gens):
            twist, column = self.gens[k]
            p = d - twist
            if b >= A.dim(p):
                k, b = k + 1, 0
                continue
            row = {}
            for i, e in enumerate(column):
                if e.is_zero():
                    continue
                base = offs[i]
                for t, x in enumerate(e.mult_matrix(p)[b]):
                    if x:
                        row[base + t] = x
            b += 1
            if row:
                space.add_sparse(row)
        self._pieces[d] = (space, k, b)
        return space


def minimize(p: Presentation) -> Presentation:
    """Cancel unit entries, then keep a minimal generating set of the relations."""
    A = p.algebra
    f = p.map
    rows_t = list(f.target.twists)
    cols_t = list(f.source.twists)
    M = [list(r) for r in f.entries]
    while True:
        hit = None
        for i in range(len(M)):
            for j in range(len(cols_t)):
                c = M[i][j].degree_zero_part()
                if c:
                    hit = (i, j, c)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j, c = hit
        # generator i is (-1/c) * sum_{k != i} M[k][j] e_k; substitute and drop
        for l in range(len(cols_t)):
            if l == j or M[i][l].is_zero():
                continue
            factor = M[i][l] * (1 / c)
            for k in range(len(M)):
                if M[k][j]:
                    M[k][l] = M[k][l] - M[k][j] * factor
        del M[i]
        del rows_t[i]
        for row in M:
            del row[j]
        del cols_t[j]

    target = FreeModule(rows_t)
    # minimal generators of the relation module: scan columns by twist
    sub = _Submodule(A, target)
    keep = []
    for j in sorted(range(len(cols_t)), key=lambda j: (cols_t[j], j)):
        column = [M[i][j] for i in range(len(M))]
        if all(e.is_zero() for e in column):
            continue
        vec = column_to_vector(target, cols_t[j], A, column)
        if sub.piece(cols_t[j]).reduce(vec):
            keep.append(j)
            sub.add(cols_t[j], column)
    keep.sort()
    source = FreeModule([cols_t[j] for j in keep])
    entries = [[M[i][j] for j in keep] for i in range(len(M))]
    return Presentation(ModuleMap(A, source, target, entries))


def syzygy(f: ModuleMap) -> ModuleMap:
    """A minimal map g with target f.source and Im g = Ker f."""
    A = f.algebra
    F = f.source
    sub = _Submodule(A, F)
    new_twists: list[int] = []
    columns: list[list[AlgebraElement]] = []
    for d in degree_range(F, A):
        if not piece_dim(F, d, A):
            continue
        kernel = kernel_basis(map_in_degree(f, d))
        if not kernel:
            continue
        space = sub.piece(d, cap=len(kernel))
        if space.dim >= len(kernel):
            continue
        for v in kernel:
            if space.add(v):
                column = vector_to_column(F, d, A, v)
                sub.add(d, column)
                new_twists.append(d)
                columns.append(column)
                if space.dim >= len(kernel):
                    break
    source = FreeModule(new_twists)
    entries = [[col[i] for col in columns] for i in range(F.rank)]
    return ModuleMap(A, source, F, entries, check=False)


@dataclass
class BettiTable:
    """Twists of each free module in a minimal resolution."""

    twists: dict[int, list[int]] = field(default_factory=dict)

    @property
    def ranks(self) -> list[int]:
        return [len(self.twists[i]) for i in sorted(self.twists)]

    def graded(self) -> dict[int, dict[int, int]]:
        out = {}
        for i, ts in sorted(self.twists.items()):
            counts: dict[int, int] = {}
            for t in ts:
                counts[t] = counts.get(t, 0) + 1
            out[i] = dict(sorted(counts.items()))
        return out

    def is_linear(self) -> bool:
        """Every generator at index i sits in degree (lowest twist at index 0) + i."""
        if not self.twists or not self.twists.get(0):
            return True
        base = min(self.twists[0])
        return all(t == base + i for i, ts in self.twists.items() for t in ts)

    def to_records(self) -> list[dict]:
        return [{"index": i, "twists": sorted(ts)} for i, ts in sorted(self.twists.items())]


def minimal_resolution(p: Presentation, length: int) -> tuple[Complex, BettiTable]:
    """Resolution F_length -> ... -> F_0 of Coker(p) starting from minimize(p)."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    A = p.algebra
    q = minimize(p)
    modules = {0: q.map.target}
    maps = {}
    current = q.map
    for i in range(1, length + 1):
        if i > 1:
            current = syzygy(current)
        modules[i] = current.source
        maps[i] = current
    betti = BettiTable({i: sorted(F.twists) for i, F in modules.items()})
    return Complex(A, modules, maps), betti


def residue_field(A: GradedAlgebra) -> Presentation:
    """k = Coker(R(-1)^n -> R) given by the variables."""
    F = FreeModule([0])
    G = FreeModule([1] * A.nvars)
    return Presentation(ModuleMap(A, G, F, [[A.gen(x) for x in A.variables]]))


def betti_of_k(A: GradedAlgebra, length: int) -> BettiTable:
    _, betti = minimal_resolution(residue_field(A), length)
    return betti
