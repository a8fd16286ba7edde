"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import os
import random
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from corpus import (  # noqa: E402
    ONE,
    random_family,
    random_ladder,
    random_rep,
    random_tempered,
    random_tempered_b,
    rep,
    tempered,
)
from hdual.arthur import ClassicalRep  # noqa: E402
from hdual.aubert import aubert_dual  # noqa: E402
from hdual.core import HalfInt  # noqa: E402
from hdual.corab import cor_ab, cor_kprime  # noqa: E402
from hdual.glrep import gl_left_highest, ladder_jacquet_left  # noqa: E402
from hdual.jantzen import highest_derivative, socle_of_rho_power  # noqa: E402
from hdual.oracle import xgt1_order_via_recursion  # noqa: E402
from hdual.rhodata import NotNormalizable, is_tempered_by_data, normal_form, rho_data  # noqa: E402

BIG = ClassicalRep.tempered_rep(tempered((1, "+"), (3, "-"), (5, "+"), (5, "+"), (5, "+"), (5, "+"), (7, "-")))
PI_PPP = ClassicalRep.tempered_rep(tempered((1, "+"), (3, "+"), (5, "+")))
PI_MMP = ClassicalRep.tempered_rep(tempered((1, "-"), (3, "-"), (5, "+")))
PI_EPS = [rep([(0, -2)], (1, e), (1, e), (3, "+")) for e in "+-"]
CHAINS = [BIG, PI_PPP, PI_MMP, *PI_EPS]
SEED = 20240601


def _ints(data):
    return [(str(x), k) for x, k in data.entries]


def criterion_1():
    data = rho_data(BIG, 1, ONE)
    want = "[(2,3),(3,1),(1,3),(2,1),(0,2),(1,1),(-1,1),(0,1),(-2,1),(-1,1); pi(one:1:+)]"
    return str(data) == want, str(data)


def criterion_2():
    checks = []
    big = aubert_dual(BIG)
    want = rep(
        [(-2, -3), (-2, -2), (-2, -2), (-1, -2), (-1, -1), (-1, -1), (0, -1)],
        (1, "-"), (1, "-"), (1, "-"), (3, "-"), (5, "+"),
    )
    checks.append(big.resolved and big.candidates == (want,))
    checks.append(str(rho_data(PI_PPP, 1, ONE)) == "[(2,1),(1,2),(0,1); pi(one:1:+)]")
    checks.append(str(rho_data(PI_MMP, 1, ONE)) == "[(1,1),(2,1),(0,1),(1,1); pi(one:1:+)]")
    for pi in PI_EPS:
        result = aubert_dual(pi)
        datas = {str(rho_data(c, 1, ONE)) for c in result.candidates}
        checks.append(
            len(result.candidates) == 2
            and not result.resolved
            and datas == {"[(0,2),(1,1),(2,1),(-1,1); pi(one:1:+)]"}
        )
    return all(checks), f"{sum(checks)}/{len(checks)} regressions"


def criterion_3(n=600):
    rng = random.Random(SEED)
    agree, xs = 0, set()
    for _ in range(n):
        fam = random_family(rng)
        xs.add(str(fam.x))
        agree += xgt1_order_via_recursion(fam) == cor_ab(fam).order
    ok = agree == n and xs == {"3/2", "2", "5/2", "3"}
    return ok, f"{agree}/{n} families, x in {sorted(xs)}"


def _chain(pi):
    cur = pi
    for x, k in rho_data(pi, 1, ONE).entries:
        nxt = highest_derivative(cur, ONE, x).rep
        yield cur, x, k, nxt
        cur = nxt


def criterion_4(n=150):
    total = good = 0
    for pi in CHAINS:
        for before, x, k, after in _chain(pi):
            if x != 0:
                total += 1
                good += socle_of_rho_power(after, ONE, x, k) == before
    rng = random.Random(SEED + 4)
    for i in range(n):
        half = i % 2 == 1
        pi = random_rep(rng, max_support=8, half=half)
        for twice in range(-8 + half, 9, 2):
            x = HalfInt.from_twice(twice)
            if x == 0:
                continue
            r = highest_derivative(pi, ONE, x)
            if r.order:
                total += 1
                good += socle_of_rho_power(r.rep, ONE, x, r.order) == pi
    return good == total, f"{good}/{total} round trips"


def criterion_5(n=200):
    rng = random.Random(SEED + 5)
    total = good = 0
    for i in range(n):
        pi = random_rep(rng, half=i % 2 == 1)
        try:
            normal_form(rho_data(pi, -1, ONE))
            normal_ok = True
        except NotNormalizable:
            normal_ok = False
        total += 1
        good += normal_ok and (is_tempered_by_data(pi) == (not pi.gl))
        phi = random_tempered(rng) if i % 2 == 0 else random_tempered_b(rng)
        total += 1
        good += is_tempered_by_data(ClassicalRep.tempered_rep(phi))
    return good == total, f"{good}/{total} checks"


def _extraction_count(ladder, x):
    count = 0
    while True:
        hits = [rest for start, rest in ladder_jacquet_left(ladder, ONE) if start == x]
        if not hits:
            return count
        ladder = hits[0]
        count += 1


def criterion_6(n=250):
    rng = random.Random(SEED + 6)
    total = good = 0
    for _ in range(n):
        ladder = random_ladder(rng)
        for x in range(-4, 5):
            total += 1
            good += _extraction_count(ladder, HalfInt(x)) == gl_left_highest(ladder, ONE, x).order
    return good == total, f"{good}/{total} (ladder, x) pairs over {n} ladders"


def criterion_7(n=100):
    cases = [BIG, PI_PPP, PI_MMP]
    rng = random.Random(SEED + 7)
    cases += [random_rep(rng, max_support=6, half=i % 2 == 1) for i in range(n)]
    total = good = 0
    for pi in cases:
        result = aubert_dual(pi)
        if not result.resolved:
            continue
        total += 1
        good += pi in aubert_dual(result.rep).candidates
    return good == total and total >= 3, f"{good}/{total} resolved duals"


def criterion_8(n=300):
    rng = random.Random(SEED + 8)
    good = 0
    for _ in range(n):
        fam = random_family(rng)
        r = cor_ab(fam)
        good += cor_kprime(fam, 0) == r.rep and cor_kprime(fam, r.order) == fam.rep()
    return good == n, f"{good}/{n} families"


CRITERIA = [
    (1, "rho-data regression", criterion_1),
    (2, "Aubert regressions", criterion_2),
    (3, "family order vs alpha-beta-gamma recursion", criterion_3),
    (4, "socle/derivative round trip", criterion_4),
    (5, "normal form and temperedness", criterion_5),
    (6, "ladder Jacquet vs left derivative", criterion_6),
    (7, "involution", criterion_7),
    (8, "k' boundaries", criterion_8),
]


def run_criterion(number, name, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {name} ({detail}; {elapsed:.2f}s)"
    return ok, line


@pytest.mark.parametrize("number, name, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, name, fn, acceptance_lines):
    ok, line = run_criterion(number, name, fn)
    print(line)
    acceptance_lines.append(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
