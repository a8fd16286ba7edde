"""Seeded random corpora shared by the test modules."""

from __future__ import annotations

import random

from hdual.arthur import ClassicalRep, TemperedParam, validate
from hdual.core import CuspLabel, Duality, GLData, GroupType, HalfInt, Segment

C = GroupType.C
B = GroupType.B
ONE = CuspLabel("one")
SYM = CuspLabel("sym", 2, Duality.SYMP)
CHI = CuspLabel("chi", 1, Duality.NSD, "chiv")


def tempered(*items, group=C, rho=ONE) -> TemperedParam:
    """``tempered((1, '+'), (3, '-'))`` builds pi(1+, 3-) on ``rho``."""
    gp = [(rho, a, 1 if s == "+" else -1) for a, s in items]
    return TemperedParam(group, tuple(gp))


def seg(x, y, rho=ONE) -> Segment:
    return Segment(rho, HalfInt(x), HalfInt(y))


def rep(segments, *items, group=C) -> ClassicalRep:
    return ClassicalRep(group, GLData([seg(x, y) for x, y in segments]), tempered(*items, group=group))


def random_tempered(rng: random.Random, max_copies: int = 4, dims=(1, 3, 5, 7)) -> TemperedParam:
    while True:
        gp = []
        for d in dims:
            n = rng.randint(0, max_copies) if rng.random() < 0.6 else 0
            s = rng.choice((1, -1))
            gp += [(ONE, d, s)] * n
        phi = TemperedParam(C, tuple(gp))
        if validate(phi) and sum(a for _, a, _ in phi.gp) <= 2 * max_copies * len(dims):
            return phi


def random_segment(rng: random.Random, lo: int = -3, hi: int = 2, half: bool = False) -> Segment:
    shift = HalfInt.from_twice(1) if half else HalfInt(0)
    while True:
        x = HalfInt(rng.randint(lo, hi)) + (shift if half else 0)
        y = x - rng.randint(0, 2)
        s = Segment(ONE, x, y)
        if s.center_twice < 0:
            return s


def random_tempered_b(rng: random.Random, max_copies: int = 3, dims=(2, 4, 6)) -> TemperedParam:
    """Valid parameter for SO(2n+1) on the half-integral line of ``one``."""
    while True:
        gp = []
        for d in dims:
            if rng.random() < 0.6:
                gp += [(ONE, d, rng.choice((1, -1)))] * rng.randint(0, max_copies)
        phi = TemperedParam(B, tuple(gp))
        if validate(phi):
            return phi


def random_rep(rng: random.Random, max_support: int = 8, half: bool = False) -> ClassicalRep:
    """Random rep on a good-parity line of ``one`` with at most
    ``max_support`` exponents: the integral line in Sp, or with ``half``
    the half-integral line in SO."""
    while True:
        if half:
            phi = random_tempered_b(rng)
        else:
            phi = random_tempered(rng, max_copies=3, dims=(1, 3, 5))
        size = sum(a for _, a, _ in phi.gp)
        segs = []
        for _ in range(rng.randint(0, 3)):
            segs.append(random_segment(rng, half=half))
        size += 2 * sum(s.length for s in segs)
        if size <= 2 * max_support and (phi.gp or segs):
            return ClassicalRep(B if half else C, GLData(segs), phi)


FAMILY_X = (HalfInt.from_twice(3), HalfInt(2), HalfInt.from_twice(5), HalfInt(3))


def random_family(rng: random.Random, xs=FAMILY_X, max_a: int = 4, max_b: int = 3, max_m: int = 4):
    """Random valid ABFamily on ``one``: integral x lives in Sp, half-integral x in SO."""
    from hdual.corab import ABFamily

    x = rng.choice(xs)
    group = C if x.is_integral() else B
    d = x.twice + 1
    while True:
        gp = []
        for dim in (d - 4, d - 2, d, d + 2):
            if dim < 1 or rng.random() >= 0.7:
                continue
            cap = max_m if dim in (d, d - 2) else 2
            gp += [(ONE, dim, rng.choice((1, -1)))] * rng.randint(0, cap)
        phi = TemperedParam(group, tuple(gp))
        if validate(phi):
            return ABFamily(rng.randint(0, max_a), rng.randint(0, max_b), x, ONE, phi)


def random_ladder(rng: random.Random, max_len: int = 5, lo: int = -4, hi: int = 4) -> GLData:
    """Ladder on ``one``: starts and ends both strictly increase."""
    while True:
        t = rng.randint(1, max_len)
        xs = sorted(rng.sample(range(lo, hi + 1), t))
        ys = sorted(rng.sample(range(lo, hi + 1), t))
        if all(y <= x for x, y in zip(xs, ys)):
            return GLData([Segment(ONE, HalfInt(x), HalfInt(y)) for x, y in zip(xs, ys)])
