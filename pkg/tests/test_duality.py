import pytest

from gradext.complexes import total_dim
from gradext.counterexample import build_M
from gradext.duality import (ExtModule, TRError, dual_ext_shift_check, dual_module, ext,
                             is_reflexive, tr_condition, tr_report, transpose)
from gradext.free_modules import FreeModule
from gradext.resolutions import free_presentation, residue_field


def test_self_injective_ring(dual_numbers):
    k = residue_field(dual_numbers)
    assert ext(k, 0) == {1: 1}  # Hom(k, R) is the socle x
    assert all(not ext(k, i) for i in range(1, 6))
    assert is_reflexive(k)[0]


def test_transpose_of_k_is_shifted_k(dual_numbers):
    t = transpose(residue_field(dual_numbers))
    assert t.hilbert() == {-1: 1}


def test_free_module(ring):
    F = free_presentation(ring, FreeModule([0]))
    e = ExtModule(F)
    assert e(0) == {0: 1, 1: 4, 2: 3}
    assert all(not e(i) for i in range(1, 4))
    assert dual_module(F).hilbert() == {0: 1, 1: 4, 2: 3}


def test_tr_zero_index_undefined(ring):
    with pytest.raises(TRError):
        tr_condition(build_M(1, ring), 0)
    with pytest.raises(TRError):
        ExtModule(build_M(1, ring))(-1)


@pytest.mark.parametrize("s", [1, 2, 3])
def test_ext_pattern_of_M(ring, s):
    e = ExtModule(build_M(s, ring))
    dims = [total_dim(e(i)) for i in range(1, s + 3)]
    assert all(d == 0 for d in dims[:s - 1])
    assert all(d > 0 for d in dims[s - 1:])


def test_ext_of_M1_matches_dual_complex(ring, complex_c):
    # Ext^i(M_1, R) is the homology of the dualized complex at index 1 - i
    from gradext.complexes import dualize, homology
    e = ExtModule(build_M(1, ring))
    dual = dualize(complex_c)
    from_resolution = [total_dim(e(i)) for i in range(1, 5)]
    from_complex = [total_dim(homology(dual, 1 - i)) for i in range(1, 5)]
    assert from_resolution == from_complex == [1, 1, 3, 11]


def test_report_shares_work(ring):
    rep = tr_report(build_M(2, ring), -3, 4, "M_2")
    assert rep.pattern() == [-3, -2, -1, 1]
    rec = rep.to_dict()["conditions"][0]
    assert set(rec) == {"i", "vanishes", "total_dim"}
    with pytest.raises(TRError):
        tr_report(build_M(2, ring), 2, 1)


def test_transpose_of_M1_not_reflexive(ring):
    ok, e1, e2 = is_reflexive(transpose(build_M(1, ring)))
    assert not ok and e1 and e2


def _modules(ring, dual_numbers):
    return {
        "M_1": build_M(1, ring),
        "M_2": build_M(2, ring),
        "free": free_presentation(ring, FreeModule([0])),
        "k_dual_numbers": residue_field(dual_numbers),
    }


@pytest.mark.parametrize("name", ["M_1", "M_2", "free", "k_dual_numbers"])
def test_double_transpose_and_dual_shift(ring, dual_numbers, name):
    p = _modules(ring, dual_numbers)[name]
    direct = ExtModule(p)
    twice = ExtModule(transpose(transpose(p)))
    for i in range(1, 5):
        assert total_dim(direct(i)) == total_dim(twice(i))
        assert dual_ext_shift_check(p, i)
