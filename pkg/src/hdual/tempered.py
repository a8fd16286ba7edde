"""Highest derivatives of tempered representations, the reverse steps used to
rebuild tempered parameters from rho-data, and irreducibility predicates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arthur import (
    MINUS,
    PLUS,
    ClassicalRep,
    TemperedParam,
    delta,
    multiplicity,
    parity_same_type,
    sign_of,
    validate,
)
from .core import CuspLabel, GLData, HalfInt, HdualError, Segment

__all__ = [
    "DerivativeResult",
    "MLPreconditionFailed",
    "MLStep",
    "tempered_highest_derivative",
    "ml_reconstruct",
    "ml_rebuild",
    "irr_rho_induction",
    "irr_delta_induction",
    "irr1",
]


class MLPreconditionFailed(HdualError):
    """The entries cannot end the rho-data of a tempered representation."""


@dataclass(frozen=True)
class DerivativeResult:
    order: int
    rep: ClassicalRep
    multiplicity: int = 1


def _dx(x: HalfInt) -> int:
    """2x + 1 as an integer."""
    return x.twice + 1


def tempered_highest_derivative(phi: TemperedParam, rho: CuspLabel, x) -> DerivativeResult:
    """Highest derivative of pi(phi, eta) at rho|.|^x."""
    x = HalfInt(x)
    unchanged = DerivativeResult(0, ClassicalRep.tempered_rep(phi), 1)
    if x < 0:
        return unchanged
    d = _dx(x)
    if not rho.self_dual:
        p = phi.pairs(rho, d)
        if p == 0:
            return unchanged
        rest = phi.with_pairs(rho, d, 0)
        gl = [] if x == 0 else [Segment(rho, x - 1, -x)] * p
        return DerivativeResult(p, ClassicalRep(phi.group, GLData(gl), rest), 1)
    if not parity_same_type(rho, d, phi.group):
        p = phi.pairs(rho, d)
        if p == 0:
            return unchanged
        rest = phi.with_pairs(rho, d, 0)
        if x == 0:
            return DerivativeResult(p, ClassicalRep.tempered_rep(rest), 2 ** p)
        if d - 2 >= 1:
            rest = rest.with_pairs(rho, d - 2, rest.pairs(rho, d - 2) + p)
        return DerivativeResult(2 * p, ClassicalRep.tempered_rep(rest), 1)
    m = multiplicity(phi, rho, d)
    if x == 0:
        k = m // 2
        if k == 0:
            return unchanged
        c = 2 ** (k - 1) if m % 2 == 0 else 2 ** k
        return DerivativeResult(k, ClassicalRep.tempered_rep(phi.remove(rho, 1, 2 * k)), c)
    if m == 0:
        return unchanged
    lower = d - 2
    has_lower = multiplicity(phi, rho, lower) > 0
    top_sign = sign_of(phi, rho, d)
    vanishes = has_lower and top_sign != sign_of(phi, rho, lower)
    if not vanishes:
        new = phi.with_count(rho, d, 0)
        if lower >= 1:
            new = new.add(rho, lower, m, sign_of(phi, rho, lower) or top_sign)
        return DerivativeResult(m, ClassicalRep.tempered_rep(new), 1)
    if m % 2 == 1:
        new = phi.with_count(rho, d, 1)
        if lower >= 1:
            new = new.add(rho, lower, m - 1)
        return DerivativeResult(m - 1, ClassicalRep.tempered_rep(new), 1)
    new = phi.with_count(rho, d, 0)
    if lower >= 1:
        new = new.add(rho, lower, m - 2)
    rep = ClassicalRep(phi.group, GLData([Segment(rho, x - 1, -x)]), new)
    return DerivativeResult(m - 1, rep, 1)


@dataclass(frozen=True)
class MLStep:
    """One reverse step: the entries still to undo and the rebuilt parameter."""

    remaining: tuple
    param: TemperedParam


def _entries(entries) -> list[tuple[HalfInt, int]]:
    if len(entries) == 2 and not isinstance(entries[0], (tuple, list)):
        entries = [entries]
    return [(HalfInt(x), int(k)) for x, k in entries]


def ml_reconstruct(entries, terminal: TemperedParam, rho: CuspLabel) -> list[MLStep]:
    """Undo the trailing entry (or trailing block) of an M^- rho-data.

    ``entries`` lists (x, k) pairs whose last element is undone; ``terminal``
    is the tempered parameter reached after all of them.  Returns every
    consistent predecessor, each paired with the entries left to undo.
    """
    seq = _entries(entries)
    if not seq:
        return [MLStep((), terminal)]
    x, k = seq[-1]
    if k < 1:
        raise MLPreconditionFailed("orders must be positive")
    if x < 0:
        return _ml_negative(seq, terminal, rho)
    rest = tuple(seq[:-1])
    phi = terminal
    d = _dx(x)
    if not rho.self_dual:
        if x > 0:
            raise MLPreconditionFailed("positive trailing entry for a non-self-dual label")
        return [MLStep(rest, phi.with_pairs(rho, 1, phi.pairs(rho, 1) + k))]
    if not parity_same_type(rho, d, phi.group):
        if x == 0:
            return [MLStep(rest, phi.with_pairs(rho, 1, phi.pairs(rho, 1) + k))]
        if k % 2:
            raise MLPreconditionFailed("odd order on a pair line")
        p = k // 2
        if d - 2 >= 1:
            have = phi.pairs(rho, d - 2)
            if have < p:
                raise MLPreconditionFailed(f"needs {p} pairs {rho}:{d - 2}")
            phi = phi.with_pairs(rho, d - 2, have - p)
        return [MLStep(rest, phi.with_pairs(rho, d, phi.pairs(rho, d) + p))]
    if x == 0:
        existing = phi.sign(rho, 1)
        signs = [existing] if existing is not None else [PLUS, MINUS]
        out = []
        for s in signs:
            cand = phi.add(rho, 1, 2 * k, s)
            if validate(cand):
                out.append(MLStep(rest, cand))
        return out
    lower = d - 2
    m_lower = multiplicity(phi, rho, lower)
    if lower >= 1 and m_lower < k:
        raise MLPreconditionFailed(f"needs {k} copies of {rho}:{lower}")
    has_top = phi.count(rho, d) > 0
    low_sign = sign_of(phi, rho, lower)
    if has_top and phi.sign(rho, d) != low_sign and k % 2:
        raise MLPreconditionFailed("odd order against a sign change")
    top_sign = phi.sign(rho, d) if has_top else low_sign
    new = phi.remove(rho, lower, k) if lower >= 1 else phi
    new = new.add(rho, d, k, top_sign)
    return [MLStep(rest, new)]


def _ml_negative(seq, terminal: TemperedParam, rho: CuspLabel) -> list[MLStep]:
    x_neg, k = seq[-1]
    x = -x_neg
    length = x.twice + 1  # entries x, x-1, ..., -x
    if len(seq) < length:
        raise MLPreconditionFailed("negative entry without its block")
    block = seq[-length:]
    for j, (z, _) in enumerate(block):
        if z != x - j:
            raise MLPreconditionFailed("negative entry without a descending block")
    rest = tuple(seq[:-length])
    d = _dx(x)
    phi = terminal
    if not rho.self_dual:
        orders = {kk for _, kk in block}
        if len(orders) != 1:
            raise MLPreconditionFailed("unequal orders in a pair block")
        return [MLStep(rest, phi.with_pairs(rho, d, phi.pairs(rho, d) + k))]
    if not parity_same_type(rho, d, phi.group):
        raise MLPreconditionFailed("negative entry on a pair line")
    if k != 1 or any(kk != 1 for _, kk in block[1:]):
        raise MLPreconditionFailed("tail orders must be 1")
    kp = block[0][1]
    if kp % 2 == 0:
        raise MLPreconditionFailed("leading order must be odd")
    lower = d - 2
    if lower >= 1 and multiplicity(phi, rho, lower) < kp:
        raise MLPreconditionFailed(f"needs {kp} copies of {rho}:{lower}")
    if phi.count(rho, d):
        raise MLPreconditionFailed(f"{rho}:{d} already present")
    new_sign = -sign_of(phi, rho, lower)
    new = phi.remove(rho, lower, kp - 1) if lower >= 1 else phi
    new = new.add(rho, d, kp + 1, new_sign)
    return [MLStep(rest, new)]


def ml_rebuild(entries: Sequence, terminal: TemperedParam, rho: CuspLabel) -> list[TemperedParam]:
    """All tempered parameters whose M^- rho-data is entries + terminal."""
    frontier = [MLStep(tuple(_entries(entries)) if entries else (), terminal)]
    done: list[TemperedParam] = []
    while frontier:
        step = frontier.pop()
        if not step.remaining:
            if step.param not in done:
                done.append(step.param)
            continue
        try:
            frontier.extend(ml_reconstruct(step.remaining, step.param, rho))
        except MLPreconditionFailed:
            continue
    return done


def irr_rho_induction(phi: TemperedParam, rho: CuspLabel, a: int) -> bool:
    """Irreducibility of rho|.|^((a-1)/2) x| pi(phi, eta)."""
    if a < 2:
        raise ValueError("a must be at least 2")
    below = multiplicity(phi, rho, a - 2)
    if below == 0:
        return True
    if below == 1:
        m_a = multiplicity(phi, rho, a)
        return m_a > 0 and sign_of(phi, rho, a) != sign_of(phi, rho, a - 2)
    return False


def irr_delta_induction(phi: TemperedParam, rho: CuspLabel, x, variant: str = "plain") -> bool:
    """Irreducibility of Delta[x-1,-x] x| pi(phi, eta), or of
    Delta[x-1,-x] x| L(Delta[0,-1]; pi(phi, eta)) for ``with_delta01``.

    The second form is only decided when phi contains both rho x S_{2x+1}
    and rho x S_{2x-1}; otherwise ValueError is raised.
    """
    x = HalfInt(x)
    if x < 1:
        raise ValueError("x must be at least 1")
    d = _dx(x)
    both = multiplicity(phi, rho, d) > 0 and multiplicity(phi, rho, d - 2) > 0
    differ = both and sign_of(phi, rho, d) != sign_of(phi, rho, d - 2)
    if variant == "plain":
        return differ
    if variant == "with_delta01":
        if not both:
            raise ValueError("undecided outside the case of both summands present")
        return True if not differ else _undecided()
    raise ValueError(f"unknown variant {variant!r}")


def _undecided():
    raise ValueError("undecided when the signs differ")


def irr1(a: int, phi: TemperedParam, rho: CuspLabel) -> bool:
    """Irreducibility of rho|.|^-1 x| L((rho|.|^-1)^a; pi(phi, eta))."""
    if a < 0:
        raise ValueError("a must be non-negative")
    if not parity_same_type(rho, 1, phi.group):
        raise ValueError("rho must be of the same type as phi")
    d3 = delta(phi, rho, 3) if multiplicity(phi, rho, 1) else 0
    return a >= multiplicity(phi, rho, 1) - d3
