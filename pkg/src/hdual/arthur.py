"""Tempered L-parameters with characters, A-parameter records and the
Langlands-data container used throughout the library."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .core import (
    CuspLabel,
    Duality,
    GLData,
    GroupType,
    Segment,
)

__all__ = [
    "PLUS",
    "MINUS",
    "sign_str",
    "parity_same_type",
    "opposite_type",
    "pair_key",
    "TemperedParam",
    "AParameter",
    "Violation",
    "multiplicity",
    "sign_of",
    "delta",
    "validate",
    "ClassicalRep",
]

PLUS = 1
MINUS = -1


def sign_str(sign: int) -> str:
    return "+" if sign > 0 else "-"


def parity_same_type(rho: CuspLabel, a: int, group: GroupType) -> bool:
    """Whether rho x S_a is self-dual of the type of the dual group."""
    if not rho.self_dual or a < 1:
        return False
    symplectic = (rho.duality is Duality.SYMP) == (a % 2 == 1)
    return symplectic if group is GroupType.B else not symplectic


def opposite_type(rho: CuspLabel, group: GroupType) -> bool:
    """rho self-dual of the type opposite to the dual group."""
    return rho.self_dual and not parity_same_type(rho, 1, group)


def pair_key(rho: CuspLabel) -> CuspLabel:
    """Canonical member of {rho, rho dual} used to key pairs."""
    if rho.self_dual:
        return rho
    other = rho.dual()
    return rho if rho.name < other.name else other


def _gp_key(entry):
    rho, a, sign = entry
    return (rho.name, a, -sign)


def _ngp_key(entry):
    rho, a = entry
    return (rho.name, a)


@dataclass(frozen=True)
class TemperedParam:
    """(phi, eta) as a multiset of good-parity summands with signs plus pairs.

    ``gp`` holds (rho, a, sign) per copy of rho x S_a.  ``ngp`` holds
    (rho, a) per pair rho x S_a + rho^vee x S_a, keyed by :func:`pair_key`.
    """

    group: GroupType
    gp: tuple = ()
    ngp: tuple = ()

    def __post_init__(self) -> None:
        gp = tuple(sorted(((r, int(a), int(s)) for r, a, s in self.gp), key=_gp_key))
        ngp = tuple(sorted(((pair_key(r), int(a)) for r, a in self.ngp), key=_ngp_key))
        for _, a, s in gp:
            if a < 1 or s not in (PLUS, MINUS):
                raise ValueError("bad good-parity entry")
        for _, a in ngp:
            if a < 1:
                raise ValueError("bad pair entry")
        object.__setattr__(self, "gp", gp)
        object.__setattr__(self, "ngp", ngp)

    @classmethod
    def trivial(cls, group: GroupType) -> TemperedParam:
        return cls(group)

    # read access

    def count(self, rho: CuspLabel, a: int) -> int:
        return sum(1 for r, b, _ in self.gp if r == rho and b == a)

    def sign(self, rho: CuspLabel, a: int) -> Optional[int]:
        for r, b, s in self.gp:
            if r == rho and b == a:
                return s
        return None

    def pairs(self, rho: CuspLabel, a: int) -> int:
        key = pair_key(rho)
        return sum(1 for r, b in self.ngp if r == key and b == a)

    def labels(self) -> set[CuspLabel]:
        out = {r for r, _, _ in self.gp}
        for r, _ in self.ngp:
            out.add(r)
            out.add(r.dual())
        return out

    def is_empty(self) -> bool:
        return not self.gp and not self.ngp

    # functional edits

    def with_count(self, rho: CuspLabel, a: int, count: int, sign: Optional[int] = None) -> TemperedParam:
        """Set the multiplicity of the isotype (rho, a); keeps its sign unless given."""
        if count < 0:
            raise ValueError(f"negative multiplicity for {rho}:{a}")
        if a == 0:
            return self
        if sign is None:
            sign = self.sign(rho, a)
        if sign is None:
            if count:
                raise ValueError(f"sign needed for new summand {rho}:{a}")
            sign = PLUS
        kept = [e for e in self.gp if not (e[0] == rho and e[1] == a)]
        kept.extend((rho, a, sign) for _ in range(count))
        return TemperedParam(self.group, tuple(kept), self.ngp)

    def add(self, rho: CuspLabel, a: int, count: int = 1, sign: Optional[int] = None) -> TemperedParam:
        if a == 0:
            return self
        current = self.count(rho, a)
        if sign is None:
            sign = self.sign(rho, a)
        return self.with_count(rho, a, current + count, sign)

    def remove(self, rho: CuspLabel, a: int, count: int = 1) -> TemperedParam:
        if a == 0:
            return self
        return self.with_count(rho, a, self.count(rho, a) - count)

    def with_pairs(self, rho: CuspLabel, a: int, count: int) -> TemperedParam:
        if count < 0:
            raise ValueError(f"negative pair count for {rho}:{a}")
        if a == 0:
            return self
        key = pair_key(rho)
        kept = [e for e in self.ngp if not (e[0] == key and e[1] == a)]
        kept.extend((key, a) for _ in range(count))
        return TemperedParam(self.group, self.gp, tuple(kept))

    def __str__(self) -> str:
        items = [f"{r}:{a}:{sign_str(s)}" for r, a, s in self.gp]
        items += [f"{r}:{a}:pair" for r, a in self.ngp]
        return f"pi({','.join(items)})"


@dataclass(frozen=True)
class AParameter:
    """Multiset of summands rho x S_a x S_b."""

    group: GroupType
    summands: tuple = ()

    def __post_init__(self) -> None:
        items = tuple(sorted(((r, int(a), int(b)) for r, a, b in self.summands),
                             key=lambda e: (e[0].name, e[1], e[2])))
        object.__setattr__(self, "summands", items)

    @classmethod
    def from_tempered(cls, phi: TemperedParam) -> AParameter:
        items = [(r, a, 1) for r, a, _ in phi.gp]
        for r, a in phi.ngp:
            items.append((r, a, 1))
            items.append((r.dual(), a, 1))
        return cls(phi.group, tuple(items))

    def multiplicity(self, rho: CuspLabel, a: int, b: int = 1) -> int:
        return sum(1 for r, c, d in self.summands if r == rho and c == a and d == b)

    def counter(self) -> Counter:
        return Counter(self.summands)


def multiplicity(phi: TemperedParam, rho: CuspLabel, a: int) -> int:
    """m_phi(rho x S_a), with m(rho x S_0) = 1 for rho of opposite type."""
    if a == 0:
        return 1 if opposite_type(rho, phi.group) else 0
    return phi.count(rho, a)


def sign_of(phi: TemperedParam, rho: CuspLabel, a: int) -> Optional[int]:
    """eta(rho x S_a); + for S_0 under the opposite-type convention."""
    if a == 0:
        return PLUS if opposite_type(rho, phi.group) else None
    return phi.sign(rho, a)


def delta(phi: TemperedParam, rho: CuspLabel, d: int) -> int:
    """1 iff m_d m_{d-2} != 0 and the two signs differ."""
    if d < 2:
        raise ValueError("delta needs d >= 2")
    if multiplicity(phi, rho, d) == 0 or multiplicity(phi, rho, d - 2) == 0:
        return 0
    return int(sign_of(phi, rho, d) != sign_of(phi, rho, d - 2))


@dataclass(frozen=True)
class Violation:
    message: str

    def __bool__(self) -> bool:  # a violation is a failed check
        return False

    def __str__(self) -> str:
        return self.message


class _Ok:
    ok = True

    def __bool__(self) -> bool:
        return True

    def __repr__(self) -> str:
        return "ok"


OK = _Ok()


def validate(phi: TemperedParam):
    """Return ``OK`` or the first violated invariant as a :class:`Violation`."""
    signs: dict = {}
    product = PLUS
    for rho, a, s in phi.gp:
        if not parity_same_type(rho, a, phi.group):
            return Violation(f"{rho}:{a} is not of good parity for group {phi.group.value}")
        key = (rho, a)
        if signs.setdefault(key, s) != s:
            return Violation(f"{rho}:{a} carries both signs")
        product *= s
    if product != PLUS:
        return Violation("product of signs is -")
    dim = sum(r.dim * a for r, a, _ in phi.gp) + sum(2 * r.dim * a for r, a in phi.ngp)
    if dim % 2 != (1 if phi.group is GroupType.C else 0):
        return Violation(f"dimension {dim} has the wrong parity for group {phi.group.value}")
    for rho, a in phi.ngp:
        if parity_same_type(rho, a, phi.group):
            return Violation(f"pair {rho}:{a} is of good parity")
    return OK


@dataclass(frozen=True)
class ClassicalRep:
    """Langlands data L(tau_1, ..., tau_r; sigma) of a classical group rep."""

    group: GroupType
    gl: GLData = field(default_factory=GLData)
    tempered: TemperedParam = None

    def __post_init__(self) -> None:
        gl = self.gl if isinstance(self.gl, GLData) else GLData(self.gl)
        object.__setattr__(self, "gl", gl)
        if self.tempered is None:
            object.__setattr__(self, "tempered", TemperedParam(self.group))
        if self.tempered.group is not self.group:
            raise ValueError("tempered part belongs to another group")
        for seg in gl:
            if seg.center_twice >= 0:
                raise ValueError(f"{seg} has non-negative central exponent")

    @classmethod
    def tempered_rep(cls, phi: TemperedParam) -> ClassicalRep:
        return cls(phi.group, GLData(), phi)

    def with_gl(self, gl: Iterable[Segment]) -> ClassicalRep:
        return ClassicalRep(self.group, GLData(gl), self.tempered)

    def with_tempered(self, phi: TemperedParam) -> ClassicalRep:
        return ClassicalRep(self.group, self.gl, phi)

    def labels(self) -> set[CuspLabel]:
        out = set(self.tempered.labels())
        for seg in self.gl:
            out.add(seg.rho)
            out.add(seg.rho.dual())
        return out

    def is_tempered(self) -> bool:
        return not self.gl

    def __str__(self) -> str:
        if not self.gl:
            return str(self.tempered)
        segs = ",".join(str(s) for s in self.gl)
        return f"L({segs}; {self.tempered})"
