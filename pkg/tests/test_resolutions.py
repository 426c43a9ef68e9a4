import pytest

from gradext.counterexample import build_M, d_matrix
from gradext.free_modules import FreeModule, from_strings
from gradext.resolutions import (Presentation, betti_of_k, free_presentation, minimal_resolution,
                                 minimize, module_hilbert, residue_field, syzygy)
from gradext.complexes import verify_dd_zero


def poincare(n):
    c = [1, 4]
    while len(c) <= n:
        c.append(4 * c[-1] - 3 * c[-2])
    return c[:n + 1]


def test_betti_of_k_four_variable_ring(ring):
    table = betti_of_k(ring, 5)
    assert table.ranks == poincare(5) == [1, 4, 13, 40, 121, 364]
    assert table.is_linear()
    assert table.to_records()[1] == {"index": 1, "twists": [1, 1, 1, 1]}


def test_betti_of_k_dual_numbers(dual_numbers):
    table = betti_of_k(dual_numbers, 6)
    assert table.ranks == [1] * 7
    assert table.graded()[6] == {6: 1}


def test_resolution_of_M1(ring):
    c, table = minimal_resolution(build_M(1, ring), 5)
    assert table.ranks == [2, 2, 2, 3, 7, 19]
    assert verify_dd_zero(c)[0]
    assert all(f.is_minimal() for f in c.maps.values())


def test_module_hilbert(ring, dual_numbers):
    assert module_hilbert(build_M(2, ring)) == {1: 2, 2: 6}
    assert module_hilbert(residue_field(ring)) == {0: 1}
    assert module_hilbert(free_presentation(ring, FreeModule([0, 2]))) == {0: 1, 1: 4, 2: 4, 3: 4, 4: 3}
    assert module_hilbert(residue_field(dual_numbers)) == {0: 1}


def test_minimize_cancels_units(ring):
    # the unit kills e_0, leaving Coker [V*Y] on e_1
    f = from_strings(ring, [["1", "X"], ["0", "V*Y"]], [1, 0])
    q = minimize(Presentation(f))
    assert q.generators.twists == (0,)
    assert q.relations.twists == (2,)
    assert q.map.entries == [[ring.parse("V*Y")]]
    assert Presentation(f).hilbert() == q.hilbert()


def test_minimize_drops_redundant_relations(ring):
    f = from_strings(ring, [["V", "V*X", "X"]], [0])
    q = minimize(Presentation(f))
    assert sorted(q.relations.twists) == [1, 1]


def test_minimize_zero_map(ring):
    f = from_strings(ring, [["0"]], [0], [1])
    q = minimize(Presentation(f))
    assert q.relations.rank == 0 and q.generators.twists == (0,)


def test_syzygy_kernel_matches(ring):
    f = from_strings(ring, d_matrix(-1), [1, 1], [2, 2])
    g = syzygy(f)
    assert g.source.rank == 2
    assert syzygy(from_strings(ring, [["1"]], [0])).source.rank == 0


def test_negative_length(ring):
    with pytest.raises(ValueError):
        minimal_resolution(residue_field(ring), -1)
