import random

from corpus import B, C, CHI, ONE, SYM, random_tempered, tempered
from hdual.arthur import TemperedParam, delta, multiplicity, parity_same_type, sign_of, validate

BIG = tempered((1, "+"), (3, "-"), (5, "+"), (5, "+"), (5, "+"), (5, "+"), (7, "-"))


def test_parity_same_type():
    assert parity_same_type(ONE, 3, C)
    assert not parity_same_type(ONE, 2, C)
    assert not parity_same_type(CHI, 1, C) and not parity_same_type(CHI, 2, B)
    assert parity_same_type(SYM, 2, C) and parity_same_type(SYM, 1, B)
    assert parity_same_type(ONE, 2, B) and not parity_same_type(ONE, 1, B)


def test_multiplicity():
    assert multiplicity(BIG, ONE, 5) == 4
    assert multiplicity(tempered((1, "+")), ONE, 3) == 0
    assert multiplicity(tempered((1, "+")), ONE, 0) == 0
    assert multiplicity(TemperedParam(C, ()), SYM, 0) == 1


def test_sign_of():
    assert sign_of(BIG, ONE, 3) == -1
    assert sign_of(BIG, ONE, 5) == 1
    assert sign_of(TemperedParam(C, ()), SYM, 0) == 1
    assert sign_of(BIG, ONE, 9) is None


def test_delta():
    assert delta(BIG, ONE, 5) == 1
    assert delta(tempered((1, "+"), (3, "+"), (5, "+")), ONE, 5) == 0
    assert delta(tempered((1, "+"), (5, "+"), (5, "+")), ONE, 5) == 0


def test_validate():
    assert not validate(tempered((1, "+"), (3, "-")))
    assert validate(BIG)
    assert not validate(tempered((2, "+")))
    assert not validate(TemperedParam(C, ((ONE, 1, 1), (ONE, 1, -1), (ONE, 1, -1))))
    # odd total dimension for Sp, even for SO
    assert not validate(tempered((1, "+"), (3, "+")))
    assert validate(TemperedParam(B, ()))


def test_fixture_parameters_validate():
    fixtures = [
        BIG,
        tempered((1, "+"), (3, "+"), (5, "+")),
        tempered((1, "-"), (3, "-"), (5, "+")),
        tempered((1, "+"), (1, "+"), (3, "+")),
        tempered((1, "-"), (1, "-"), (3, "+")),
    ]
    assert all(validate(phi) for phi in fixtures)


def test_permutation_invariance():
    rng = random.Random(5)
    for _ in range(100):
        phi = random_tempered(rng)
        gp = list(phi.gp)
        rng.shuffle(gp)
        other = TemperedParam(C, tuple(gp))
        assert other == phi
        for a in range(0, 9):
            assert multiplicity(other, ONE, a) == multiplicity(phi, ONE, a)
            assert sign_of(other, ONE, a) == sign_of(phi, ONE, a)
