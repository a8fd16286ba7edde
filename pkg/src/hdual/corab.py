"""Highest derivatives of L((rho|.|^-x)^a, Delta_rho[x-1,-x]^b; pi(phi, eta))
at rho|.|^x, and the socles of partial re-inductions."""

from __future__ import annotations

from dataclasses import dataclass

from .arthur import (
    AParameter,
    ClassicalRep,
    TemperedParam,
    delta,
    multiplicity,
    parity_same_type,
    sign_of,
    validate,
)
from .core import CuspLabel, GLData, HalfInt, HdualError, Segment
from .tempered import DerivativeResult

__all__ = [
    "ABFamily",
    "InvalidFamily",
    "OutOfRange",
    "psi_of",
    "cor_ab",
    "cor_ab_family",
    "cor_kprime",
    "cor_kprime_family",
]


class InvalidFamily(HdualError, ValueError):
    """The (a, b, x, rho, phi) data violates the family conventions."""


class OutOfRange(HdualError, ValueError):
    """k' lies outside [0, k]."""


@dataclass(frozen=True)
class ABFamily:
    a: int
    b: int
    x: HalfInt
    rho: CuspLabel
    phi: TemperedParam

    def __post_init__(self) -> None:
        x = HalfInt(self.x)
        object.__setattr__(self, "x", x)
        if self.a < 0 or self.b < 0:
            raise InvalidFamily("a and b must be non-negative")
        if x < HalfInt.from_twice(1):
            raise InvalidFamily("x must be at least 1/2")
        if not parity_same_type(self.rho, self.d, self.phi.group):
            raise InvalidFamily(f"{self.rho} x S_{self.d} is not of good parity")
        if x == HalfInt.from_twice(1) and self.a:
            raise InvalidFamily("a must vanish at x = 1/2")
        check = validate(self.phi)
        if not check:
            raise InvalidFamily(str(check))

    @property
    def d(self) -> int:
        """2x + 1."""
        return self.x.twice + 1

    @property
    def m1(self) -> int:
        return multiplicity(self.phi, self.rho, self.d)

    @property
    def m0(self) -> int:
        return multiplicity(self.phi, self.rho, self.d - 2)

    @property
    def kappa(self) -> int:
        return self.b % 2

    @property
    def delta(self) -> int:
        return delta(self.phi, self.rho, self.d)

    def segments(self) -> list[Segment]:
        point = Segment(self.rho, -self.x, -self.x)
        step = Segment(self.rho, self.x - 1, -self.x)
        return [point] * self.a + [step] * self.b

    def rep(self, extra_gl=()) -> ClassicalRep:
        return ClassicalRep(self.phi.group, GLData(self.segments() + list(extra_gl)), self.phi)

    def replace(self, a: int, b: int, phi: TemperedParam) -> ABFamily:
        return ABFamily(a, b, self.x, self.rho, phi)


def psi_of(fam: ABFamily) -> AParameter:
    """The A-parameter attached to the b-part of the family."""
    phi, rho, d = fam.phi, fam.rho, fam.d
    items = [(r, a, 1) for r, a, _ in phi.gp]
    for r, a in phi.ngp:
        items += [(r, a, 1), (r.dual(), a, 1)]
    count = fam.b
    if fam.m1 and fam.m0:
        product = sign_of(phi, rho, d) * sign_of(phi, rho, d - 2)
        if product == (-1) ** (fam.b + 1):
            items.remove((rho, d, 1))
            if d - 2 >= 1:
                items.remove((rho, d - 2, 1))
            count = fam.b + 1
    items += [(rho, d - 1, 2)] * count
    return AParameter(phi.group, tuple(items))


def _phi_prime(fam: ABFamily, low_sign: int) -> TemperedParam:
    phi = fam.phi.with_count(fam.rho, fam.d, 0)
    if fam.d - 2 >= 1 and fam.m1:
        phi = phi.add(fam.rho, fam.d - 2, fam.m1, low_sign)
    return phi


def _shift(phi: TemperedParam, fam: ABFamily, top: int, low: int, top_sign: int) -> TemperedParam:
    """phi + (rho x S_{2x+1})^top - (rho x S_{2x-1})^low."""
    if top:
        phi = phi.add(fam.rho, fam.d, top, top_sign)
    if low and fam.d - 2 >= 1:
        phi = phi.remove(fam.rho, fam.d - 2, low)
    return phi


def _eta_b(fam: ABFamily) -> int:
    return (-1) ** fam.b * sign_of(fam.phi, fam.rho, fam.d)


def _low_sign(fam: ABFamily) -> int:
    """Sign carried by rho x S_{2x-1} in phi'."""
    if fam.m0:
        return sign_of(fam.phi, fam.rho, fam.d - 2)
    return _eta_b(fam)


def _order(fam: ABFamily) -> int:
    a, m0, m1 = fam.a, fam.m0, fam.m1
    if m0 * m1 and fam.kappa != fam.delta:
        return max(a - m0 + m1, m1 - 1)
    return max(a - m0 + m1, m1)


def cor_ab_family(fam: ABFamily) -> tuple[int, ABFamily]:
    """(k, family of the highest derivative)."""
    a, b, m0, m1 = fam.a, fam.b, fam.m0, fam.m1
    top_sign = sign_of(fam.phi, fam.rho, fam.d)
    if m1 == 0:
        l = max(a - m0, 0)
        return l, fam.replace(a - l, b, fam.phi)
    prime = _phi_prime(fam, _low_sign(fam))
    if m0:
        same = fam.kappa == fam.delta
        l = max(a - m0, 0) if same else max(a - m0 + 1, 0)
        if not same and m1 % 2:
            out = (l + m1 - 1, fam.replace(a - l, b, _shift(prime, fam, 1, 1, top_sign)))
        elif not same:
            out = (l + m1 - 1, fam.replace(a - l, b + 1, _shift(prime, fam, 0, 2, top_sign)))
        elif m1 % 2 and b > 0:
            out = (l + m1, fam.replace(a - l, b - 1, _shift(prime, fam, 1, -1, top_sign)))
        else:
            out = (l + m1, fam.replace(a - l, b, prime))
    elif m1 % 2 == 0 or b == 0:
        out = (a + m1, fam.replace(0, b, prime))
    else:
        out = (a + m1, fam.replace(0, b - 1, _shift(prime, fam, 1, -1, top_sign)))
    assert out[0] == _order(fam), "case split disagrees with the order formula"
    return out


def cor_ab(fam: ABFamily) -> DerivativeResult:
    k, result = cor_ab_family(fam)
    return DerivativeResult(k, result.rep(), 1)


def cor_kprime_family(fam: ABFamily, kprime: int) -> ABFamily:
    """Family of the socle of (rho|.|^x)^k' x| D^(k)(fam)."""
    k, derived = cor_ab_family(fam)
    if kprime < 0 or kprime > k:
        raise OutOfRange(f"k'={kprime} outside [0, {k}]")
    if kprime == 0:
        return derived
    if kprime == k:
        return fam
    a, b, m0, m1 = fam.a, fam.b, fam.m0, fam.m1
    kp = kprime
    top_sign = sign_of(fam.phi, fam.rho, fam.d)
    same = fam.kappa == fam.delta
    a0 = min(a, m0) if same else min(a, m0 - 1)
    if m1 == 0:
        return fam.replace(kp + m0, b, fam.phi)
    prime = _phi_prime(fam, _low_sign(fam))
    if m0:
        if not same:
            if kp >= m1 - 1:
                return fam.replace(kp - m1 + m0, b, fam.phi)
            if (kp - m1) % 2:
                return fam.replace(a0, b, _shift(prime, fam, kp + 1, kp + 1, top_sign))
            return fam.replace(a0, b + 1, _shift(prime, fam, kp, kp + 2, top_sign))
        if kp >= m1:
            return fam.replace(kp - m1 + m0, b, fam.phi)
        if b > 0 and (kp - m1) % 2:
            return fam.replace(a0, b - 1, _shift(prime, fam, kp + 1, kp - 1, top_sign))
        return fam.replace(a0, b, _shift(prime, fam, kp, kp, top_sign))
    if kp >= m1:
        return fam.replace(kp - m1, b, fam.phi)
    if b > 0 and (kp - m1) % 2:
        return fam.replace(0, b - 1, _shift(prime, fam, kp + 1, kp - 1, top_sign))
    return fam.replace(0, b, _shift(prime, fam, kp, kp, top_sign))


def cor_kprime(fam: ABFamily, kprime: int) -> ClassicalRep:
    return cor_kprime_family(fam, kprime).rep()
