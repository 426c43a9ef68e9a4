"""Finite windows of chain complexes of graded free modules."""

from __future__ import annotations

from typing import Mapping

from .algebra import GradedAlgebra, hilbert_function
from .free_modules import (FreeModule, ModuleMap, compose, degree_range, dual_map,
                           map_in_degree, piece_dim)
from .linalg import rank


class ComplexError(ValueError):
    pass


class Complex:
    """Modules F_i for lo <= i <= hi and differentials d_i: F_i -> F_{i-1} for lo < i <= hi."""

    def __init__(self, algebra: GradedAlgebra, modules: Mapping[int, FreeModule],
                 maps: Mapping[int, ModuleMap]):
        if not modules:
            raise ComplexError("a complex needs at least one module")
        self.algebra = algebra
        self.lo = min(modules)
        self.hi = max(modules)
        if sorted(modules) != list(range(self.lo, self.hi + 1)):
            raise ComplexError("module indices must form an interval")
        if sorted(maps) != list(range(self.lo + 1, self.hi + 1)):
            raise ComplexError("differentials must be given for every lo < i <= hi")
        self.modules = dict(modules)
        self.maps = dict(maps)
        for i, d in self.maps.items():
            if d.source != self.modules[i] or d.target != self.modules[i - 1]:
                raise ComplexError(f"d_{i} does not map F_{i} -> F_{i - 1}")
        self._ranks: dict[tuple[int, int], int] = {}

    @property
    def window(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def ranks(self) -> dict[int, int]:
        return {i: F.rank for i, F in sorted(self.modules.items())}

    def map_rank(self, i: int, d: int) -> int:
        """rank of d_i in internal degree d (cached)."""
        key = (i, d)
        if key not in self._ranks:
            self._ranks[key] = rank(map_in_degree(self.maps[i], d))
        return self._ranks[key]

    def image_dim(self, i: int) -> int:
        """dim_k Im d_i over all internal degrees."""
        return sum(self.map_rank(i, d) for d in degree_range(self.modules[i], self.algebra))

    def kernel_dim(self, i: int) -> int:
        F = self.modules[i]
        return sum(piece_dim(F, d, self.algebra) for d in degree_range(F, self.algebra)) - self.image_dim(i)

    def __repr__(self) -> str:
        return f"Complex[{self.lo}, {self.hi}] ranks={list(self.ranks().values())}"


def verify_dd_zero(c: Complex) -> tuple[bool, int | None]:
    """(True, None) if every d_{i-1} d_i vanishes, else (False, first failing i)."""
    for i in range(c.lo + 2, c.hi + 1):
        if not compose(c.maps[i - 1], c.maps[i]).is_zero():
            return False, i
    return True, None


def homology(c: Complex, i: int) -> dict[int, int]:
    """Hilbert function of H_i = Ker d_i / Im d_{i+1} at an interior index."""
    if not c.lo < i < c.hi:
        raise ComplexError(f"index {i} is not interior to the window [{c.lo}, {c.hi}]")
    A = c.algebra
    F = c.modules[i]
    out = {}
    for d in degree_range(F, A):
        dim = piece_dim(F, d, A)
        if not dim:
            continue
        out[d] = dim - c.map_rank(i, d) - c.map_rank(i + 1, d)
        if out[d] < 0:
            raise ComplexError(f"negative homology at index {i}, degree {d}: not a complex")
    return hilbert_function(out)


def total_dim(h: Mapping[int, int]) -> int:
    return sum(h.values())


def dualize(c: Complex) -> Complex:
    """Hom(-, R) of a complex, reindexed so the dual differentials keep their labels.

    The dual complex has (C*)_i = (C_{-i-1})* and differential (C*)_i -> (C*)_{i-1}
    equal to (d_{-i})*.  Applying this twice returns the original complex.
    """
    modules = {-i - 1: F.dual() for i, F in c.modules.items()}
    maps = {-i: dual_map(d) for i, d in c.maps.items()}
    return Complex(c.algebra, modules, maps)


def euler_check(c: Complex, presented: Mapping[int, int], d: int) -> bool:
    """Alternating sum of dim (F_i)_d over the window equals presented(d).

    ``c`` must be a resolution window starting at its lowest index.  Raises
    if the truncation could hide contributions in degree d.
    """
    A = c.algebra
    top = c.modules[c.hi]
    base = c.modules[c.lo]
    safe = not base.twists or d <= min(base.twists) + (c.hi - c.lo)
    if not safe and c.hi > c.lo:
        # still fine when d_hi is injective in degree d
        safe = piece_dim(top, d, A) == c.map_rank(c.hi, d)
    if not safe and piece_dim(top, d, A):
        raise ComplexError(f"window [{c.lo}, {c.hi}] too short to certify degree {d}")
    alt = sum((-1) ** (i - c.lo) * piece_dim(F, d, A) for i, F in c.modules.items())
    return alt == presented.get(d, 0)
