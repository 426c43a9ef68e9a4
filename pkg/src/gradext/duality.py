"""Auslander transpose, Ext against the ring and the TR_i conditions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import hilbert_function
from .complexes import Complex, total_dim
from .free_modules import degree_range, dual_map, map_in_degree, piece_dim
from .linalg import rank
from .resolutions import Presentation, minimal_resolution, minimize, syzygy


class TRError(ValueError):
    pass


def transpose(p: Presentation) -> Presentation:
    """Tr M = Coker(phi*) for a minimal presentation phi of M."""
    q = minimize(p)
    return Presentation(dual_map(q.map))


class ExtModule:
    """Ext^*(M, R) computed from one minimal resolution, extended on demand."""

    def __init__(self, p: Presentation):
        self.presentation = minimize(p)
        self.algebra = p.algebra
        self._complex: Complex | None = None
        self._cache: dict[int, dict[int, int]] = {}

    def resolution(self, length: int) -> Complex:
        c = self._complex
        if c is None or c.hi < length:
            if c is None or c.hi == 0:
                c, _ = minimal_resolution(self.presentation, length)
            else:
                modules, maps = dict(c.modules), dict(c.maps)
                current = maps[c.hi]
                for i in range(c.hi + 1, length + 1):
                    current = syzygy(current)
                    modules[i] = current.source
                    maps[i] = current
                c = Complex(self.algebra, modules, maps)
            self._complex = c
        return c

    def __call__(self, i: int) -> dict[int, int]:
        """Hilbert function of Ext^i(M, R)."""
        if i < 0:
            raise TRError("Ext index must be nonnegative")
        if i in self._cache:
            return self._cache[i]
        A = self.algebra
        c = self.resolution(i + 1)
        F = c.modules[i]
        out = {}
        if F.rank:
            # cohomology of Hom(F_., R): Ker d_{i+1}^* / Im d_i^*
            dual_out = dual_map(c.maps[i + 1])
            dual_in = dual_map(c.maps[i]) if i >= 1 else None
            Fd = F.dual()
            for d in degree_range(Fd, A):
                dim = piece_dim(Fd, d, A)
                if not dim:
                    continue
                kernel = dim - rank(map_in_degree(dual_out, d))
                image = rank(map_in_degree(dual_in, d)) if dual_in is not None else 0
                out[d] = kernel - image
        h = hilbert_function(out)
        self._cache[i] = h
        return h


def ext(p: Presentation, i: int) -> dict[int, int]:
    """Hilbert function of Ext^i_R(Coker p, R)."""
    return ExtModule(p)(i)


def tr_condition(p: Presentation, i: int, *, _ext: ExtModule | None = None,
                 _tr_ext: ExtModule | None = None) -> bool:
    """Whether Coker p satisfies TR_i (undefined for i = 0)."""
    if i == 0:
        raise TRError("TR_i is not defined for i = 0")
    if i > 0:
        e = _ext if _ext is not None else ExtModule(p)
        return not e(i)
    e = _tr_ext if _tr_ext is not None else ExtModule(transpose(p))
    return not e(-i)


def dual_module(p: Presentation) -> Presentation:
    """M* = Ker(phi*), presented as the second syzygy of Tr M = Coker(phi*).

    Tr M is deliberately not minimized here: dropping its free summands
    would lose the free part of M*.
    """
    first = syzygy(transpose(p).map)
    return Presentation(syzygy(first))


def is_reflexive(p: Presentation) -> tuple[bool, dict[int, int], dict[int, int]]:
    """(M -> M** bijective, Hilbert of Ext^1(Tr M, R), Hilbert of Ext^2(Tr M, R))."""
    e = ExtModule(transpose(p))
    e1, e2 = e(1), e(2)
    return (not e1 and not e2), e1, e2


def dual_ext_shift_check(p: Presentation, i: int) -> bool:
    """dim Ext^i(M*, R) == dim Ext^{i+2}(Tr M, R), with M* the second syzygy of Tr M."""
    if i < 1:
        raise TRError("the shift identity is stated for i >= 1")
    lhs = total_dim(ExtModule(dual_module(p))(i))
    rhs = total_dim(ExtModule(transpose(p))(i + 2))
    return lhs == rhs


@dataclass
class TRReport:
    name: str
    window: tuple[int, int]
    verdicts: dict[int, bool] = field(default_factory=dict)
    ext_dims: dict[int, int] = field(default_factory=dict)
    reflexive: bool = False

    @property
    def totally_reflexive_in_window(self) -> bool:
        return all(self.verdicts.values())

    def pattern(self) -> list[int]:
        """Indices whose condition holds."""
        return [i for i, ok in sorted(self.verdicts.items()) if ok]

    def to_dict(self) -> dict:
        return {
            "module": self.name,
            "window": list(self.window),
            "conditions": [{"i": i, "vanishes": ok, "total_dim": self.ext_dims[i]}
                           for i, ok in sorted(self.verdicts.items())],
            "reflexive": self.reflexive,
            "totally_reflexive_in_window": self.totally_reflexive_in_window,
        }


def tr_report(p: Presentation, lo: int, hi: int, name: str = "M") -> TRReport:
    """TR_i verdicts for lo <= i <= hi, i != 0, sharing one Ext computation per side."""
    if lo > hi:
        raise TRError("empty window")
    report = TRReport(name, (lo, hi))
    ext_m = ExtModule(p)
    ext_tr = ExtModule(transpose(p))
    for i in range(lo, hi + 1):
        if i == 0:
            continue
        h = ext_m(i) if i > 0 else ext_tr(-i)
        report.verdicts[i] = not h
        report.ext_dims[i] = total_dim(h)
    report.reflexive = not ext_tr(1) and not ext_tr(2)
    return report
