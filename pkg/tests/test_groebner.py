from gradext.counterexample import RELATIONS, VARIABLES
from gradext.expressions import parse
from gradext.groebner import (MonomialOrder, hilbert_cross_check, leading, reduce, s_polynomial,
                              search_orders, spoly_reduce_check, to_poly)

import pytest


def polys(texts, variables, alpha=2):
    return [to_poly(parse(t, variables), variables, alpha) for t in texts]


def test_monomial_ideal_is_groebner():
    ps = polys(["x*x", "x*y"], ["x", "y"])
    for kind in ("degrevlex", "deglex", "lex"):
        assert spoly_reduce_check(ps, MonomialOrder(kind, (0, 1)))[0]


def test_hand_reduction_leaves_y_cubed():
    ps = polys(["x*x - y*y", "x*y"], ["x", "y"])
    order = MonomialOrder.parse("degrevlex:x>y", ["x", "y"])
    s = s_polynomial(ps[0], ps[1], order)
    # y*(x^2 - y^2) - x*(xy) = -y^3
    assert reduce(s, ps, order) == {(0, 3): -1}
    assert spoly_reduce_check(ps, order) == (False, (0, 1))


def test_order_keys():
    o = MonomialOrder.parse("degrevlex:x>y>z", ["x", "y", "z"])
    assert leading({(1, 0, 1): 1, (0, 2, 0): 1}, o) == (0, 2, 0)
    lex = MonomialOrder.parse("lex:x>y>z", ["x", "y", "z"])
    assert leading({(1, 0, 1): 1, (0, 2, 0): 1}, lex) == (1, 0, 1)
    with pytest.raises(ValueError):
        MonomialOrder.parse("degrevlex:x>y", ["x", "y", "z"])


def test_paper_relations():
    ps = polys(RELATIONS, VARIABLES)
    assert spoly_reduce_check(ps, MonomialOrder.parse("degrevlex:V>X>Y>Z", VARIABLES)) == (False, (0, 5))
    good = [o.describe(VARIABLES) for o in search_orders(ps, 4)]
    assert len(good) == 8 and "degrevlex:X>Y>V>Z" in good
    rels = [parse(r, list(VARIABLES)) for r in RELATIONS]
    for o in search_orders(ps, 4):
        ok, counted, built = hilbert_cross_check(rels, VARIABLES, 2, o, 4)
        assert ok and counted == {0: 1, 1: 4, 2: 3}


def test_cross_check_dual_numbers():
    ok, counted, _ = hilbert_cross_check([parse("x*x", ["x"])], ["x"], 2, MonomialOrder("lex", (0,)), 3)
    assert ok and counted == {0: 1, 1: 1}
