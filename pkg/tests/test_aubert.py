import random

import pytest

from corpus import ONE, random_rep, rep, tempered
from hdual.arthur import ClassicalRep
from hdual.aubert import DualResult, ReconstructionFailed, aubert_dual, disambiguate
from hdual.rhodata import rho_data

BIG = ClassicalRep.tempered_rep(tempered((1, "+"), (3, "-"), (5, "+"), (5, "+"), (5, "+"), (5, "+"), (7, "-")))
BIG_DUAL = rep(
    [(-2, -3), (-2, -2), (-2, -2), (-1, -2), (-1, -1), (-1, -1), (0, -1)],
    (1, "-"), (1, "-"), (1, "-"), (3, "-"), (5, "+"),
)
PI_PPP = ClassicalRep.tempered_rep(tempered((1, "+"), (3, "+"), (5, "+")))
PI_MMP = ClassicalRep.tempered_rep(tempered((1, "-"), (3, "-"), (5, "+")))
PI_EPS = {e: rep([(0, -2)], (1, e), (1, e), (3, "+")) for e in "+-"}


def _negation_law(pi, hat):
    for eps in (1, -1):
        a, b = rho_data(pi, eps, ONE), rho_data(hat, -eps, ONE)
        assert b.entries == tuple((-x, k) for x, k in a.entries)


def test_big_example_resolves_to_minus():
    result = aubert_dual(BIG)
    assert result.resolved and result.rep == BIG_DUAL


def test_chain_examples():
    assert aubert_dual(PI_MMP).rep == rep([(-1, -2), (0, -1)], (1, "+"))
    assert aubert_dual(PI_PPP).rep == rep([(-2, -2), (-1, -1), (-1, -1)], (1, "+"), (1, "+"), (1, "+"))


@pytest.mark.parametrize("eps", "+-")
def test_pi_eps_stays_ambiguous(eps):
    result = aubert_dual(PI_EPS[eps])
    assert not result.resolved and len(result.candidates) == 2
    for cand in result.candidates:
        _negation_law(PI_EPS[eps], cand)
    data = {str(rho_data(c, 1, ONE)) for c in result.candidates}
    assert len(data) == 1
    with pytest.raises(ReconstructionFailed):
        result.rep


def test_supercuspidal_fixed_point():
    triv = ClassicalRep.tempered_rep(tempered((1, "+")))
    assert aubert_dual(triv) == DualResult((triv,), True)


@pytest.mark.parametrize("pi", [BIG, PI_PPP, PI_MMP], ids=str)
def test_fixture_negation_and_involution(pi):
    hat = aubert_dual(pi).rep
    _negation_law(pi, hat)
    back = aubert_dual(hat)
    assert pi in back.candidates


def test_random_involution():
    rng = random.Random(37)
    resolved = 0
    for _ in range(60):
        pi = random_rep(rng, max_support=6)
        result = aubert_dual(pi)
        for cand in result.candidates:
            _negation_law(pi, cand)
        if result.resolved:
            resolved += 1
            assert pi in aubert_dual(result.rep).candidates
    assert resolved > 40


def test_tempered_input_gives_non_tempered_dual():
    for pi in (BIG, PI_PPP, PI_MMP):
        assert not aubert_dual(pi).rep.is_tempered()


def test_dual_result_invariants():
    triv = ClassicalRep.tempered_rep(tempered((1, "+")))
    with pytest.raises(ValueError):
        DualResult((), False)
    with pytest.raises(ValueError):
        DualResult((triv, BIG), True)
    assert disambiguate([triv], BIG) == DualResult((triv,), True)
