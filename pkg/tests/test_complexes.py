import pytest

from gradext.complexes import (Complex, ComplexError, dualize, euler_check, homology,
                               total_dim, verify_dd_zero)
from gradext.free_modules import from_strings
from gradext.resolutions import minimal_resolution, residue_field


def periodic_x(A, n):
    """... -> R -x-> R -x-> R over k[x]/(x^2), exact in the middle."""
    maps = {i: from_strings(A, [["x"]], [i - 1], [i]) for i in range(1, n + 1)}
    modules = {i: f.source for i, f in maps.items()}
    modules[0] = maps[1].target
    return Complex(A, modules, maps)


def test_periodic_complex_exact(dual_numbers):
    c = periodic_x(dual_numbers, 5)
    assert verify_dd_zero(c) == (True, None)
    assert all(not homology(c, i) for i in range(1, 5))


def test_edges_refused(dual_numbers):
    c = periodic_x(dual_numbers, 3)
    with pytest.raises(ComplexError):
        homology(c, 0)
    with pytest.raises(ComplexError):
        homology(c, 3)


def test_dd_nonzero_detected(dual_numbers):
    A = dual_numbers
    maps = {1: from_strings(A, [["x"]], [0], [1]), 2: from_strings(A, [["1"]], [1], [1])}
    c = Complex(A, {0: maps[1].target, 1: maps[1].source, 2: maps[2].source}, maps)
    assert verify_dd_zero(c) == (False, 2)


def test_dualize_twice_is_identity(complex_c):
    dd = dualize(dualize(complex_c))
    assert (dd.lo, dd.hi) == (complex_c.lo, complex_c.hi)
    assert all(dd.maps[i] == complex_c.maps[i] for i in complex_c.maps)


def test_dual_window(complex_c):
    d = dualize(complex_c)
    assert (d.lo, d.hi) == (-7, 9)


def test_koszul_complex_homology(ring):
    """Homology is never negative on the resolution of k; the window is exact."""
    c, _ = minimal_resolution(residue_field(ring), 4)
    assert verify_dd_zero(c)[0]
    for i in range(1, 4):
        assert total_dim(homology(c, i)) == 0


def test_euler_characteristic_of_resolutions(ring, complex_c):
    from gradext.counterexample import build_M
    for p in (residue_field(ring), build_M(1, ring), build_M(3, ring)):
        c, _ = minimal_resolution(p, 4)
        h = p.hilbert()
        base = min(c.modules[0].twists)
        for d in range(base, base + 5):
            assert euler_check(c, h, d)


def test_euler_refuses_short_window(ring):
    c, _ = minimal_resolution(residue_field(ring), 1)
    with pytest.raises(ComplexError):
        euler_check(c, {0: 1}, 3)
