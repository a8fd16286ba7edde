"""Independent cross-checks: the x-1, x, x-1 recursion for the family order
and depth-1 counting of Jacquet terms of induced representations."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .core import CuspLabel, GLData, HalfInt, Segment
from .corab import ABFamily
from .jantzen import highest_derivative

__all__ = ["Depth1Count", "xgt1_order_via_recursion", "depth1_terms", "depth1_jacquet_count"]


@dataclass(frozen=True)
class Depth1Count:
    """Leading terms rho'|.|^z (x) residual of mu^*(tau x| pi), with multiplicity."""

    terms: Counter

    def count(self, rho: CuspLabel, x) -> int:
        x = HalfInt(x)
        return sum(n for (r, z, _), n in self.terms.items() if r == rho and z == x)


def xgt1_order_via_recursion(fam: ABFamily) -> int:
    """max(beta - alpha - gamma, 0) + gamma from the derivatives at x-1, x, x-1."""
    if not fam.x > 1:
        raise ValueError("the recursion needs x > 1")
    below = fam.x - 1
    pi = fam.rep()
    first = highest_derivative(pi, fam.rho, below)
    second = highest_derivative(first.rep, fam.rho, fam.x)
    third = highest_derivative(second.rep, fam.rho, below)
    alpha, beta, gamma = first.order, second.order, third.order
    return max(beta - alpha - gamma, 0) + gamma


def depth1_terms(tau: GLData | Iterable[Segment], pi_support: Iterable = ()) -> Depth1Count:
    """Depth-1 terms of tau_1 x ... x tau_r x| pi.

    A segment [x, y] of rho contributes rho|.|^x (its start) and
    rho^vee|.|^-y (its dual end).  ``pi_support`` lists cuspidal exponents
    (rho, z) of a principal series containing pi; each behaves like the
    singleton [z, z].
    """
    terms: Counter = Counter()
    segs = list(tau)
    for i, seg in enumerate(segs):
        start = Segment(seg.rho, seg.x - 1, seg.y) if seg.x != seg.y else None
        end = Segment(seg.rho, seg.x, seg.y + 1) if seg.x != seg.y else None
        terms[(seg.rho, seg.x, ("start", i, str(start)))] += 1
        terms[(seg.rho.dual(), -seg.y, ("end", i, str(end)))] += 1
    for j, (rho, z) in enumerate(pi_support):
        z = HalfInt(z)
        terms[(rho, z, ("support", j, "start"))] += 1
        terms[(rho.dual(), -z, ("support", j, "end"))] += 1
    return Depth1Count(terms)


def depth1_jacquet_count(tau, pi_support, rho: CuspLabel, x) -> int:
    """Number of rho|.|^x-leading depth-1 terms of tau x| pi."""
    return depth1_terms(tau, pi_support).count(rho, x)
