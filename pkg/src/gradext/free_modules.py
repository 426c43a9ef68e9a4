"""Graded free modules R(-a_1) + ... + R(-a_r) and graded maps between them.

Maps act on column vectors: ``entries[i][j]`` is the image of source
generator ``j`` in target component ``i`` and is homogeneous of degree
``source.twists[j] - target.twists[i]`` (or zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraElement, GradedAlgebra
from .linalg import ZERO, KMatrix, rank


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class FreeModule:
    twists: tuple[int, ...]

    def __init__(self, twists: Sequence[int] = ()):
        object.__setattr__(self, "twists", tuple(int(a) for a in twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def dual(self) -> "FreeModule":
        return FreeModule(tuple(-a for a in self.twists))

    def __add__(self, other: "FreeModule") -> "FreeModule":
        return FreeModule(self.twists + other.twists)

    def __repr__(self) -> str:
        return f"FreeModule({list(self.twists)})"


def graded_piece(F: FreeModule, d: int, A: GradedAlgebra) -> list[tuple[int, int]]:
    """k-basis of F_d as (generator, algebra basis index) pairs."""
    return [(j, k) for j, a in enumerate(F.twists) for k in range(A.dim(d - a))]


def piece_dim(F: FreeModule, d: int, A: GradedAlgebra) -> int:
    return sum(A.dim(d - a) for a in F.twists)


def piece_offsets(F: FreeModule, d: int, A: GradedAlgebra) -> list[int]:
    offs, acc = [], 0
    for a in F.twists:
        offs.append(acc)
        acc += A.dim(d - a)
    return offs


def degree_range(F: FreeModule, A: GradedAlgebra) -> range:
    """Internal degrees where F can be nonzero."""
    if not F.twists:
        return range(0)
    return range(min(F.twists), max(F.twists) + A.top_degree + 1)


def vector_to_column(F: FreeModule, d: int, A: GradedAlgebra, vec: Sequence[Fraction]) -> list[AlgebraElement]:
    """Turn a coordinate vector of F_d into one algebra element per generator."""
    out = []
    pos = 0
    for a in F.twists:
        n = A.dim(d - a)
        chunk = tuple(vec[pos:pos + n])
        pos += n
        out.append(AlgebraElement(A, {d - a: chunk}) if n else A.zero())
    return out


def column_to_vector(F: FreeModule, d: int, A: GradedAlgebra, column: Sequence[AlgebraElement]) -> list[Fraction]:
    vec: list[Fraction] = []
    for a, e in zip(F.twists, column):
        n = A.dim(d - a)
        part = e.parts.get(d - a)
        vec.extend(part if part else [ZERO] * n)
    return vec


class ModuleMap:
    """A graded homomorphism source -> target given by a matrix over the algebra."""

    def __init__(self, algebra: GradedAlgebra, source: FreeModule, target: FreeModule,
                 entries: Sequence[Sequence[AlgebraElement]], check: bool = True):
        self.algebra = algebra
        self.source = source
        self.target = target
        self.entries = [list(row) for row in entries]
        if len(self.entries) != target.rank or any(len(r) != source.rank for r in self.entries):
            raise GradingError(
                f"matrix shape does not match {target.rank}x{source.rank}")
        if check:
            self._check_graded()

    def _check_graded(self) -> None:
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                want = self.source.twists[j] - self.target.twists[i]
                if not e.is_homogeneous() or e.degree != want:
                    raise GradingError(
                        f"entry ({i},{j}) = {e} is not homogeneous of degree {want}")

    @property
    def shape(self) -> tuple[int, int]:
        return (self.target.rank, self.source.rank)

    def entry(self, i: int, j: int) -> AlgebraElement:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_minimal(self) -> bool:
        """All entries lie in the maximal ideal."""
        return all(not e.degree_zero_part() for row in self.entries for e in row)

    def column(self, j: int) -> list[AlgebraElement]:
        return [row[j] for row in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.entries == other.entries)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"ModuleMap({self.source.twists} -> {self.target.twists}: [{body}])"


def identity_map(A: GradedAlgebra, F: FreeModule) -> ModuleMap:
    n = F.rank
    return ModuleMap(A, F, F, [[A.one() if i == j else A.zero() for j in range(n)] for i in range(n)])


def zero_map(A: GradedAlgebra, source: FreeModule, target: FreeModule) -> ModuleMap:
    return ModuleMap(A, source, target, [[A.zero()] * source.rank for _ in range(target.rank)])


def infer_twists(matrix: Sequence[Sequence[AlgebraElement]], target: FreeModule) -> FreeModule:
    """Source twists forced by homogeneity of each column."""
    if len(matrix) != target.rank:
        raise GradingError("row count does not match target rank")
    ncols = len(matrix[0]) if matrix else 0
    twists = []
    for j in range(ncols):
        forced = set()
        for i, row in enumerate(matrix):
            e = row[j]
            if e.is_zero():
                continue
            if not e.is_homogeneous():
                raise GradingError(f"entry ({i},{j}) is not homogeneous")
            forced.add(target.twists[i] + e.degree)
        if not forced:
            raise GradingError(f"column {j} is zero; its twist must be supplied")
        if len(forced) > 1:
            raise GradingError(f"column {j} forces inconsistent twists {sorted(forced)}")
        twists.append(forced.pop())
    return FreeModule(twists)


def map_in_degree(f: ModuleMap, d: int) -> KMatrix:
    """The k-matrix of f: F_d -> G_d in the graded_piece bases."""
    A = f.algebra
    src_offs = piece_offsets(f.source, d, A)
    tgt_offs = piece_offsets(f.target, d, A)
    ncols = piece_dim(f.source, d, A)
    nrows = piece_dim(f.target, d, A)
    rows = [[ZERO] * ncols for _ in range(nrows)]
    for j, a in enumerate(f.source.twists):
        p = d - a
        if A.dim(p) == 0:
            continue
        c0 = src_offs[j]
        for i in range(f.target.rank):
            e = f.entries[i][j]
            if e.is_zero():
                continue
            r0 = tgt_offs[i]
            for b, image in enumerate(e.mult_matrix(p)):
                col = c0 + b
                for k, x in enumerate(image):
                    if x:
                        rows[r0 + k][col] = x
    return KMatrix._from_trusted(rows, ncols)


def image_rank(f: ModuleMap) -> int:
    """dim_k of the image, summed over internal degrees."""
    return sum(rank(map_in_degree(f, d)) for d in degree_range(f.source, f.algebra))


def compose(f: ModuleMap, g: ModuleMap) -> ModuleMap:
    """f o g."""
    if g.target != f.source:
        raise GradingError(f"cannot compose: {g.target} != {f.source}")
    A = f.algebra
    entries = []
    for i in range(f.target.rank):
        row = []
        for j in range(g.source.rank):
            acc = A.zero()
            for k in range(f.source.rank):
                a, b = f.entries[i][k], g.entries[k][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        entries.append(row)
    return ModuleMap(A, g.source, f.target, entries)


def dual_map(f: ModuleMap) -> ModuleMap:
    """Hom(-, R) applied to f, identifying Hom(R(-a), R) with R(a)."""
    entries = [[f.entries[i][j] for i in range(f.target.rank)] for j in range(f.source.rank)]
    return ModuleMap(f.algebra, f.target.dual(), f.source.dual(), entries, check=False)


def submatrix(f: ModuleMap, rows: Sequence[int], cols: Sequence[int]) -> ModuleMap:
    src = FreeModule([f.source.twists[j] for j in cols])
    tgt = FreeModule([f.target.twists[i] for i in rows])
    return ModuleMap(f.algebra, src, tgt, [[f.entries[i][j] for j in cols] for i in rows], check=False)


def shift(F: FreeModule, n: int) -> FreeModule:
    """F(-n): every generator moved up by n."""
    return FreeModule([a + n for a in F.twists])


def matrix_from_strings(A: GradedAlgebra, grid: Sequence[Sequence[str]]) -> list[list[AlgebraElement]]:
    return [[A.parse(s) for s in row] for row in grid]


def from_strings(A: GradedAlgebra, grid: Sequence[Sequence[str]], target_twists: Sequence[int] | None = None,
                 source_twists: Sequence[int] | None = None) -> ModuleMap:
    """Build a map from expression strings, inferring source twists unless given."""
    matrix = matrix_from_strings(A, grid)
    nrows = len(matrix)
    target = FreeModule(target_twists if target_twists is not None else [0] * nrows)
    source = FreeModule(source_twists) if source_twists is not None else infer_twists(matrix, target)
    return ModuleMap(A, source, target, matrix)
