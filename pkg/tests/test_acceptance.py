"""Acceptance criteria 1-10, each printing one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v -s``; the lines also
appear in a plain ``pytest -v`` run because printing bypasses capture.
"""

import random
import time
from fractions import Fraction

import pytest

from gradext.cli import main
from gradext.complexes import dualize, euler_check, homology, total_dim, verify_dd_zero
from gradext.counterexample import (PaperConfig, build_complex_C, build_M, build_paper_ring,
                                    dual_numbers, poincare_oracle, verify_growth_and_koszul,
                                    verify_lemma1, verify_lemma2, verify_theorem)
from gradext.duality import (ExtModule, dual_ext_shift_check, is_reflexive, tr_condition,
                             transpose)
from gradext.free_modules import FreeModule
from gradext.linalg import KMatrix, kernel_basis, rank
from gradext.resolutions import (Presentation, betti_of_k, free_presentation, minimal_resolution,
                                 module_hilbert, residue_field)
from gradext.series import abs_formula_check, expand_rational, LaurentPoly


@pytest.fixture
def verdict(capsys):
    def record(n: int, ok: bool, what: str, seconds: float | None = None):
        timing = f" ({seconds:.2f}s)" if seconds is not None else ""
        with capsys.disabled():
            print(f"\ncriterion {n:2d}: {'PASS' if ok else 'FAIL'} {what}{timing}")
        assert ok, f"criterion {n} failed: {what}"
    return record


def test_criterion_01_ring(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    dt = time.perf_counter() - t
    ok = A.hilbert() == {0: 1, 1: 4, 2: 3} and A.total_dim == 8 and A.top_degree == 2 and dt < 1
    verdict(1, ok, "ring has Hilbert function 1+4t+3t^2, dimension 8, top degree 2", dt)


def test_criterion_02_complex(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    C = build_complex_C(A, PaperConfig())
    rep = verify_lemma1(C)
    dt = time.perf_counter() - t
    images = dict(map(tuple, rep["image_dims"]))
    ok = ((C.lo, C.hi) == (-10, 6)
          and verify_dd_zero(C) == (True, None)
          and all(not homology(C, i) for i in range(C.lo + 1, C.hi))
          and all(images[i] == 8 for i in range(-9, 1))
          and images[1] == 8 and images[2] == 16
          and rep["verdict"] and dt < 30)
    verdict(2, ok, "C on [-10, 6] is an exact complex with image totals 8, 8, 16", dt)


def test_criterion_03_dual_pattern(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    C = build_complex_C(A, PaperConfig())
    D = dualize(C)
    h = {i: homology(D, i) for i in range(D.lo + 1, D.hi)}
    rep = verify_lemma2(C)
    dt = time.perf_counter() - t
    ok = (all((not h[i]) == (i >= 1) for i in h)
          and total_dim(h[0]) == 1
          and h[-1] and h[-2]
          and all(h[i] for i in h if i <= -3)
          and rep["verdict"] and dt < 60)
    verdict(3, ok, "H_i(C*) vanishes exactly for i >= 1 and H_0(C*) has dimension 1", dt)


def test_criterion_04_theorem(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    ok = True
    for s in range(1, 5):
        M = build_M(s, A)
        T = transpose(M)
        em, et = ExtModule(M), ExtModule(T)
        for i in range(-6, s + 4):
            if i == 0:
                continue
            ok &= tr_condition(M, i, _ext=em, _tr_ext=et) == (i < s)
            ok &= tr_condition(T, i, _ext=et, _tr_ext=ExtModule(transpose(T))) == (i > -s)
        ok &= is_reflexive(M)[0]
    ok &= not is_reflexive(transpose(build_M(1, A)))[0]
    dt = time.perf_counter() - t
    ok &= dt < 300
    verdict(4, ok, "M_s satisfies TR_i iff i < s and Tr(M_s) iff i > -s for s = 1..4; "
                   "M_s reflexive, Tr(M_1) not", dt)


def test_criterion_05_module_hilbert(verdict):
    A = build_paper_ring(PaperConfig())
    ok = all(module_hilbert(build_M(s, A)) == {1: 2, 2: 6} for s in range(1, 5))
    verdict(5, ok, "H_{M_s} = 2t + 6t^2 for s = 1..4")


def test_criterion_06_poincare(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    table = betti_of_k(A, 5)
    expansion = expand_rational(LaurentPoly({0: 1}), LaurentPoly({0: 1, 1: -4, 2: 3}), 5)
    dt = time.perf_counter() - t
    ok = (table.ranks == [1, 4, 13, 40, 121, 364] == poincare_oracle(5) == expansion
          and table.is_linear() and dt < 180)
    verdict(6, ok, "Betti numbers of k are 1, 4, 13, 40, 121, 364 with a linear table", dt)


def test_criterion_07_growth(verdict):
    A = build_paper_ring(PaperConfig())
    C = build_complex_C(A, PaperConfig())
    rep = verify_growth_and_koszul(A, C, PaperConfig())
    plus = rep["beta_plus"]
    ok = (rep["beta_minus_growth"]["classification"] == "constant"
          and set(rep["beta_minus"]) == {2}
          and all(plus[j] < plus[j + 1] for j in range(1, len(plus) - 1))
          and Fraction(rep["beta_plus_growth"]["min_ratio"]) > 1)
    verdict(7, ok, f"beta- constant 2, beta+ {plus} strictly increasing with ratios > 1")


def test_criterion_08_abs(verdict):
    t = time.perf_counter()
    A = build_paper_ring(PaperConfig())
    k = residue_field(dual_numbers())
    r1 = abs_formula_check(k, [])
    r2 = abs_formula_check(k, [1, 3])
    r3 = abs_formula_check(free_presentation(A, FreeModule([0])), [])
    dt = time.perf_counter() - t
    ok = (r1["verdict"] and r2["verdict"] and r3["verdict"]
          and r1["H_Mstar"] == [[1, "1"]] and dt < 1)
    verdict(8, ok, "alternating Ext identities hold for k over k[x]/(x^2) and for R free; "
                   "Hom(k, R) has Hilbert series t", dt)


def _random_rank_nullity(n: int) -> bool:
    rng = random.Random(20240601)
    for _ in range(n):
        m, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(c)] for _ in range(m)]
        M = KMatrix(rows, c)
        kernel = kernel_basis(M)
        if rank(M) + len(kernel) != c or any(any(M.apply(v)) for v in kernel):
            return False
    return True


def _resolutions_sound(A) -> bool:
    B = dual_numbers()
    cases = [residue_field(A), residue_field(B), free_presentation(A, FreeModule([0]))]
    cases += [build_M(s, A) for s in range(1, 5)]
    cases.append(Presentation(build_complex_C(A, PaperConfig(), top=2).maps[2]))
    for p in cases:
        c, _ = minimal_resolution(p, 4)
        if not verify_dd_zero(c)[0]:
            return False
        base = min(c.modules[0].twists)
        h = p.hilbert()
        if not all(euler_check(c, h, d) for d in range(base, base + 5)):
            return False
    return True


def _dual_identities(A) -> bool:
    modules = [build_M(1, A), build_M(2, A), free_presentation(A, FreeModule([0])),
               residue_field(dual_numbers())]
    for p in modules:
        direct, twice = ExtModule(p), ExtModule(transpose(transpose(p)))
        for i in range(1, 5):
            if total_dim(direct(i)) != total_dim(twice(i)) or not dual_ext_shift_check(p, i):
                return False
    return True


def _verdicts(alpha) -> tuple:
    cfg = PaperConfig(alpha=alpha)
    A = build_paper_ring(cfg)
    C = build_complex_C(A, cfg)
    l1, l2, th = verify_lemma1(C), verify_lemma2(C), verify_theorem(A, cfg)
    patterns = [(f["M"]["conditions"], f["TrM"]["conditions"]) for f in th["families"]]
    return (l1["checks"], l2["checks"], th["checks"],
            [[(r["i"], r["vanishes"]) for r in m] + [(r["i"], r["vanishes"]) for r in t]
             for m, t in patterns])


def test_criterion_09_properties(verdict):
    A = build_paper_ring(PaperConfig())
    parts = {
        "rank-nullity on 200 random matrices": _random_rank_nullity(200),
        "d*d = 0 and Euler identities on every resolution": _resolutions_sound(A),
        "double transpose and Ext(M*) = Ext(Tr M) shift": _dual_identities(A),
        "identical verdicts for alpha in {2, 3, 5}": _verdicts(2) == _verdicts(3) == _verdicts(5),
    }
    failed = [k for k, v in parts.items() if not v]
    verdict(9, not failed, "property suites" + (f" failing: {failed}" if failed else ""))


def test_criterion_10_determinism(verdict, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    codes = (main(["verify-paper", "--out", str(a)]), main(["verify-paper", "--out", str(b)]))
    ok = codes == (0, 0) and a.read_bytes() == b.read_bytes()
    verdict(10, ok, "two verify-paper runs give byte-identical reports")
