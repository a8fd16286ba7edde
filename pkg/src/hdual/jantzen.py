"""Highest derivatives of arbitrary irreducible representations and their
inverses (socles of rho|.|^x-power inductions).

Three regimes are handled separately:

* rho self-dual and rho x S_{2x+1} of good parity, x > 0: Jantzen's
  reduction to the family L((rho|.|^-x)^a, Delta[x-1,-x]^b; sigma),
  followed by the GL left derivative and the partial re-induction.
* rho self-dual of the other parity, x > 0: the rho-line behaves like the
  GL multisegment tau + tau^vee + Delta[y,-y]^2 per pair, derived at x and
  at -x.
* rho not self-dual: the rho-line behaves like the GL multisegment
  tau_rho + (tau_{rho^vee})^vee + Delta[y,-y] per pair, derived at x.

For x < 0 only the GL data moves.  For x = 0 and rho self-dual the copies
of rho in the tempered part enter the GL data as [0,0] before the GL left
derivative is taken.

The second regime is outside the proven range of the method; non-tempered
input on such a line triggers an :class:`UnverifiedCase` warning.
"""

from __future__ import annotations

import warnings
from collections import Counter

from .arthur import ClassicalRep, TemperedParam, pair_key, parity_same_type, validate
from .corab import ABFamily, cor_ab_family, cor_kprime_family, InvalidFamily
from .core import CuspLabel, GLData, HalfInt, HdualError, Segment
from .glrep import (
    gl_left_highest,
    gl_left_underivative,
    gl_right_highest,
    gl_right_underivative,
)
from .tempered import DerivativeResult

__all__ = [
    "ClassicalRep",
    "DerivativeResult",
    "AmbiguousAtZero",
    "EngineInvariantError",
    "UnverifiedCase",
    "highest_derivative",
    "socle_of_rho_power",
    "socle_candidates",
]


class AmbiguousAtZero(HdualError):
    """The inverse of a derivative at rho|.|^0 with rho self-dual is not unique."""


class EngineInvariantError(HdualError, AssertionError):
    """An internal consistency check failed."""


class UnverifiedCase(UserWarning):
    """The answer comes from a model that is not backed by a proof."""


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise EngineInvariantError(message)


# rho-line models


def _line_model(rep: ClassicalRep, rho: CuspLabel):
    """(model multisegment on rho, untouched GL segments, tempered part without rho pairs)."""
    key = pair_key(rho)
    mine = [s for s in rep.gl if s.rho == rho]
    if rho.self_dual:
        model = mine + [s.dual() for s in mine]
        copies = 2
        others = [s for s in rep.gl if s.rho != rho]
    else:
        model = mine + [s.dual() for s in rep.gl if s.rho == rho.dual()]
        copies = 1
        others = [s for s in rep.gl if s.rho not in (rho, rho.dual())]
    temp = rep.tempered
    for r, a in temp.ngp:
        if r == key:
            y = HalfInt.from_twice(a - 1)
            model += [Segment(rho, y, -y)] * copies
    rest = TemperedParam(temp.group, temp.gp, tuple(e for e in temp.ngp if e[0] != key))
    return GLData(model), others, rest


def _from_line_model(model: GLData, rho: CuspLabel, others, rest: TemperedParam) -> ClassicalRep:
    neg = [s for s in model if s.center_twice < 0]
    pos = [s for s in model if s.center_twice > 0]
    zero = Counter(s.length for s in model if s.center_twice == 0)
    if rho.self_dual:
        _check(Counter(s.dual() for s in neg) == Counter(pos), "rho-line model lost its symmetry")
        _check(all(c % 2 == 0 for c in zero.values()), "odd count of symmetric segments")
        gl = list(others) + neg
        pairs = {a: c // 2 for a, c in zero.items()}
    else:
        gl = list(others) + neg + [s.dual() for s in pos]
        pairs = dict(zero)
    temp = rest
    for a, c in sorted(pairs.items()):
        temp = temp.with_pairs(rho, a, temp.pairs(rho, a) + c)
    return ClassicalRep(rest.group, GLData(gl), temp)


def _good_line(rep: ClassicalRep, rho: CuspLabel, x: HalfInt) -> bool:
    return rho.self_dual and parity_same_type(rho, x.twice + 1, rep.group)


# forward


def highest_derivative(rep: ClassicalRep, rho: CuspLabel, x) -> DerivativeResult:
    """Highest derivative D^(k) at rho|.|^x with its multiplicity."""
    x = HalfInt(x)
    if not rho.self_dual:
        model, others, rest = _line_model(rep, rho)
        res = gl_left_highest(model, rho, x)
        if res.order == 0:
            return DerivativeResult(0, rep, 1)
        return DerivativeResult(res.order, _from_line_model(res.result, rho, others, rest), 1)
    if x < 0:
        res = gl_left_highest(rep.gl, rho, x)
        return DerivativeResult(res.order, rep.with_gl(res.result), 1)
    if x == 0:
        return _at_zero(rep, rho)
    if not _good_line(rep, rho, x):
        model, others, rest = _line_model(rep, rho)
        if any(s.rho == rho and (s.x - x).is_integral() for s in rep.gl):
            warnings.warn(f"{rho}|.|^{x} lies on a line of bad parity", UnverifiedCase, stacklevel=2)
        left = gl_left_highest(model, rho, x)
        if left.order == 0:
            return DerivativeResult(0, rep, 1)
        right = gl_right_highest(left.result, rho, -x)
        _check(right.order == left.order, "asymmetric derivative on a symmetric model")
        return DerivativeResult(left.order, _from_line_model(right.result, rho, others, rest), 1)
    return _jantzen(rep, rho, x)


def _at_zero(rep: ClassicalRep, rho: CuspLabel) -> DerivativeResult:
    # good parity: every copy of rho in phi enters the GL data as [0,0]; copies
    # matched by segments starting at -1 are absorbed, the free ones pair up.
    # bad parity: one [0,0] per pair, each free one is a full step.
    zero = HalfInt(0)
    point = Segment(rho, zero, zero)
    phi = rep.tempered
    good = parity_same_type(rho, 1, phi.group)
    copies = phi.count(rho, 1) if good else phi.pairs(rho, 1)
    left = gl_left_highest(rep.gl.plus(*[point] * copies), rho, zero)
    kept = left.result.count(point)
    free = copies - kept
    used = free // 2 if good else free
    order = left.order - free + used
    if order == 0:
        return DerivativeResult(0, rep, 1)
    gl = left.result.minus(point, kept)
    sigma = _partial_zero(phi, rho, used)
    return DerivativeResult(order, ClassicalRep(rep.group, gl, sigma), _zero_multiplicity(phi, rho, used))


def _partial_zero(phi: TemperedParam, rho: CuspLabel, used: int) -> TemperedParam:
    """phi with ``used`` copies of (rho|.|^0) taken out of its rho x S_1 part."""
    if used == 0:
        return phi
    if parity_same_type(rho, 1, phi.group):
        return phi.remove(rho, 1, 2 * used)
    return phi.with_pairs(rho, 1, phi.pairs(rho, 1) - used)


def _zero_multiplicity(phi: TemperedParam, rho: CuspLabel, used: int) -> int:
    if used == 0:
        return 1
    if not parity_same_type(rho, 1, phi.group):
        return 2 ** used
    removes_all = phi.count(rho, 1) == 2 * used
    return 2 ** (used - 1) if removes_all else 2 ** used


def _jantzen(rep: ClassicalRep, rho: CuspLabel, x: HalfInt) -> DerivativeResult:
    step = Segment(rho, x - 1, -x)
    point = Segment(rho, x, x)
    others = [s for s in rep.gl if s.rho != rho]
    tau = rep.gl.on(rho)
    b = tau.count(step)
    tau1 = tau.minus(step, b)
    right = gl_right_highest(tau1, rho, -x)
    a, tau2 = right.order, right.result
    fam = ABFamily(a, b, x, rho, rep.tempered)
    k1, _ = cor_ab_family(fam)
    left = gl_left_highest(tau2.plus(*[point] * k1), rho, x)
    k, tau3 = left.order, left.result
    if k == 0:
        return DerivativeResult(0, rep, 1)
    k2 = tau3.count(point)
    tau4 = tau3.minus(point, k2)
    _check(all(s.center_twice < 0 for s in tau4), "positive segment after the left derivative")
    fam2 = cor_kprime_family(fam, k2)
    tau5 = gl_right_underivative(tau4, rho, -x, fam2.a)
    gl = GLData(list(others) + list(tau5) + [step] * fam2.b)
    _check(all(s.center_twice < 0 for s in gl), "result is not in Langlands form")
    return DerivativeResult(k, ClassicalRep(rep.group, gl, fam2.phi), 1)


# inverse


def socle_candidates(rep: ClassicalRep, rho: CuspLabel, x, k: int) -> list[ClassicalRep]:
    """Every irreducible pi whose highest derivative at rho|.|^x is the
    highest derivative of rep with order raised by k.

    There is exactly one unless x = 0 and rho is self-dual.
    """
    x = HalfInt(x)
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return [rep]
    base = highest_derivative(rep, rho, x)
    total = k + base.order
    target = base.rep
    found: list[ClassicalRep] = []
    for cand in _socle_candidates(target, rho, x, total):
        res = highest_derivative(cand, rho, x)
        if res.order == total and res.rep == target and cand not in found:
            found.append(cand)
    return found


def socle_of_rho_power(rep: ClassicalRep, rho: CuspLabel, x, k: int) -> ClassicalRep:
    """The unique irreducible subrepresentation of (rho|.|^x)^k x| rep."""
    x = HalfInt(x)
    if k == 0:
        return rep
    if x == 0 and rho.self_dual:
        raise AmbiguousAtZero(f"{rho}|.|^0 is conjugate self-dual")
    found = socle_candidates(rep, rho, x, k)
    _check(len(found) == 1, f"socle search found {len(found)} candidates")
    return found[0]


def _socle_candidates(target: ClassicalRep, rho: CuspLabel, x: HalfInt, total: int):
    if not rho.self_dual:
        model, others, rest = _line_model(target, rho)
        up = gl_left_underivative(model, rho, x, total)
        return [_from_line_model(up, rho, others, rest)]
    if x < 0:
        return [target.with_gl(gl_left_underivative(target.gl, rho, x, total))]
    if x == 0:
        return _zero_inverse(target, rho, total)
    if not _good_line(target, rho, x):
        model, others, rest = _line_model(target, rho)
        up = gl_right_underivative(model, rho, -x, total)
        up = gl_left_underivative(up, rho, x, total)
        try:
            return [_from_line_model(up, rho, others, rest)]
        except EngineInvariantError:
            return []
    return list(_jantzen_inverse(target, rho, x, total))


def _zero_inverse(target: ClassicalRep, rho: CuspLabel, total: int) -> list[ClassicalRep]:
    # over-generate: the forward check in socle_candidates filters
    zero = HalfInt(0)
    point = Segment(rho, zero, zero)
    phi = target.tempered
    good = parity_same_type(rho, 1, phi.group)
    have = phi.count(rho, 1) if good else phi.pairs(rho, 1)
    out: list[ClassicalRep] = []
    for used in range(total + 1):
        if good:
            existing = phi.sign(rho, 1)
            signs = [existing] if existing is not None else [1, -1]
            temps = [phi.add(rho, 1, 2 * used, s) for s in signs] if used else [phi]
            temps = [t for t in temps if validate(t)]
            width = have + 2 * used
        else:
            temps = [phi.with_pairs(rho, 1, have + used)]
            width = have + used
        for extra in range(width + 1):
            grown = gl_left_underivative(target.gl.plus(*[point] * extra), rho, zero, total - used)
            gl = grown.minus(point, grown.count(point))
            if any(s.center_twice >= 0 for s in gl):
                continue
            for t in temps:
                cand = ClassicalRep(target.group, gl, t)
                if cand not in out:
                    out.append(cand)
    return out


def _jantzen_inverse(target: ClassicalRep, rho: CuspLabel, x: HalfInt, total: int):
    step = Segment(rho, x - 1, -x)
    point = Segment(rho, x, x)
    others = [s for s in target.gl if s.rho != rho]
    tau = target.gl.on(rho)
    b2 = tau.count(step)
    tau5 = tau.minus(step, b2)
    full = gl_right_highest(tau5, rho, -x)
    for a2 in range(full.order, -1, -1):
        tau4 = gl_right_underivative(full.result, rho, -x, full.order - a2)
        try:
            fam2 = ABFamily(a2, b2, x, rho, target.tempered)
        except InvalidFamily:
            continue
        k2, fam1 = cor_ab_family(fam2)
        tau3 = tau4.plus(*[point] * k2)
        if gl_left_highest(tau3, rho, x).order:
            continue
        top = gl_left_underivative(tau3, rho, x, total)
        k1 = top.count(point)
        tau2 = top.minus(point, k1)
        for fam in _families_deriving_to(fam1, k1):
            tau1 = gl_right_underivative(tau2, rho, -x, fam.a)
            gl = list(others) + list(tau1) + [step] * fam.b
            if all(s.center_twice < 0 for s in gl):
                yield ClassicalRep(target.group, GLData(gl), fam.phi)


def _families_deriving_to(derived: ABFamily, k1: int):
    """Families whose closed-form highest derivative is (k1, derived)."""
    if k1 == 0:
        yield derived
        return
    rho, x, d = derived.rho, derived.x, derived.d
    phi = derived.phi
    base = phi.with_count(rho, d, 0)
    if d - 2 >= 1:
        base = base.with_count(rho, d - 2, 0)
    avail = derived.m1 + (derived.m0 if d - 2 >= 1 else 0) + k1 + 2
    # dimension of the parameter restricted to rho x S_{2x+-1} and the GL part
    size = 2 * derived.a + 2 * x.twice * derived.b + d * phi.count(rho, d) + (d - 2) * phi.count(rho, d - 2) + 2 * k1
    seen = []
    for b in (derived.b - 1, derived.b, derived.b + 1):
        if b < 0:
            continue
        for m1 in range(avail + 1):
            for m0 in range(avail + 1 if d - 2 >= 1 else 1):
                twice_a = size - 2 * x.twice * b - d * m1 - (d - 2) * m0
                if twice_a < 0 or twice_a % 2:
                    continue
                a = twice_a // 2
                for s1 in (1, -1):
                    for s0 in ((1, -1) if m0 else (1,)):
                        cand = base
                        if m1:
                            cand = cand.add(rho, d, m1, s1)
                        if m0:
                            cand = cand.add(rho, d - 2, m0, s0)
                        if m1 == 0 and s1 == -1:
                            continue
                        try:
                            fam = ABFamily(a, b, x, rho, cand)
                        except InvalidFamily:
                            continue
                        if cor_ab_family(fam) == (k1, derived) and fam not in seen:
                            seen.append(fam)
                            yield fam
