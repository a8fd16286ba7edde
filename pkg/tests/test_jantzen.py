import random
import warnings

import pytest

from corpus import C, CHI, ONE, random_rep, rep, seg, tempered
from hdual.arthur import ClassicalRep, TemperedParam, validate
from hdual.core import GLData, HalfInt
from hdual.glrep import gl_left_highest
from hdual.jantzen import AmbiguousAtZero, UnverifiedCase, highest_derivative, socle_of_rho_power
from hdual.rhodata import rho_data

BIG = ClassicalRep.tempered_rep(tempered((1, "+"), (3, "-"), (5, "+"), (5, "+"), (5, "+"), (5, "+"), (7, "-")))
CHAINS = [
    BIG,
    ClassicalRep.tempered_rep(tempered((1, "+"), (3, "+"), (5, "+"))),
    ClassicalRep.tempered_rep(tempered((1, "-"), (3, "-"), (5, "+"))),
    rep([(0, -2)], (1, "+"), (1, "+"), (3, "+")),
    rep([(0, -2)], (1, "-"), (1, "-"), (3, "+")),
]


def test_examples():
    r = highest_derivative(rep([(0, -2)], (1, "+"), (1, "+"), (1, "+"), (3, "-"), (5, "-")), ONE, 2)
    assert (r.order, r.rep) == (1, rep([(0, -2)], (1, "+"), (1, "+"), (1, "+"), (3, "-"), (3, "-")))
    assert highest_derivative(rep([(-1, -2), (0, -1)], (1, "+")), ONE, 2).order == 0
    r = highest_derivative(rep([(0, -2)], (1, "+"), (1, "+"), (1, "+"), (3, "-"), (3, "-")), ONE, 0)
    assert (r.order, r.rep) == (2, rep([(-1, -2)], (1, "+"), (3, "-"), (3, "-")))


def test_zero_rule_fixtures():
    r = highest_derivative(rep([(-2, -2), (-1, -1), (-1, -1)], (1, "+"), (1, "+"), (1, "+")), ONE, 0)
    assert r.order == 0
    # order 1 drops the rank by one: the GL part stays, sigma loses two copies
    r = highest_derivative(rep([(-2, -2), (-1, -1)], (1, "+"), (1, "+"), (1, "+")), ONE, 0)
    assert (r.order, r.rep) == (1, rep([(-2, -2), (-1, -1)], (1, "+")))


def test_negative_x_is_gl_only():
    pi = rep([(-1, -2), (0, -1)], (1, "+"))
    r = highest_derivative(pi, ONE, -1)
    g = gl_left_highest(pi.gl, ONE, -1)
    assert (r.order, r.rep.gl, r.rep.tempered) == (g.order, g.result, pi.tempered)


def _chain_steps(pi):
    data = rho_data(pi, 1, ONE)
    cur = pi
    for x, k in data.entries:
        nxt = highest_derivative(cur, ONE, x)
        assert nxt.order == k
        yield cur, x, k, nxt.rep
        cur = nxt.rep


@pytest.mark.parametrize("pi", CHAINS, ids=str)
def test_socle_inverts_chain_steps(pi):
    for before, x, k, after in _chain_steps(pi):
        if x == 0:
            with pytest.raises(AmbiguousAtZero):
                socle_of_rho_power(after, ONE, x, k)
            continue
        assert socle_of_rho_power(after, ONE, x, k) == before


def test_invariants_on_random_reps():
    rng = random.Random(23)
    for _ in range(150):
        pi = random_rep(rng)
        for twice in range(-8, 9, 2):
            x = HalfInt.from_twice(twice)
            r = highest_derivative(pi, ONE, x)
            assert validate(r.rep.tempered)
            assert all(s.center_twice < 0 for s in r.rep.gl)
            assert highest_derivative(r.rep, ONE, x).order == 0
            if x != 0:
                assert r.multiplicity == 1
                if r.order:
                    assert socle_of_rho_power(r.rep, ONE, x, r.order) == pi


def test_agrees_with_family_shape():
    pi = rep([(-2, -2), (1, -2)], (1, "-"), (3, "+"), (5, "-"), (5, "-"), (5, "-"))
    r = highest_derivative(pi, ONE, 2)
    assert (r.order, r.rep) == (3, rep([(-2, -2)], (1, "-"), (3, "+"), (3, "+"), (3, "+"), (3, "+"), (3, "+"), (5, "-")))


def test_non_self_dual_label():
    phi = TemperedParam(C, ((ONE, 1, 1),), ((CHI, 1), (CHI, 1)))
    pi = ClassicalRep(C, GLData([seg(-1, -1, CHI)]), phi)
    assert validate(phi)
    r = highest_derivative(pi, CHI, -1)
    assert (r.order, r.rep) == (1, ClassicalRep.tempered_rep(phi))
    # pi embeds in Z[-1,0] x| sigma, whose leading exponents avoid chiv|.|^1
    assert highest_derivative(pi, CHI.dual(), 1).order == 0
    for rho, x in ((CHI, -1), (CHI, 0), (CHI.dual(), 0)):
        r = highest_derivative(pi, rho, x)
        assert r.order > 0
        assert socle_of_rho_power(r.rep, rho, x, r.order) == pi


def test_bad_parity_line_warns():
    pi = ClassicalRep(C, GLData([seg("-1/2", "-1/2")]), tempered((1, "+")))
    with pytest.warns(UnverifiedCase):
        highest_derivative(pi, ONE, HalfInt("1/2"))


def test_good_parity_does_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        highest_derivative(rep([(0, -2)], (1, "+"), (1, "+"), (3, "+")), ONE, 1)
