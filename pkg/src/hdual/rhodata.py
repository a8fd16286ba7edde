"""rho-data: iterated extremal highest derivatives, their block normal form,
the temperedness test, segment stripping and the Langlands GL part."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .arthur import ClassicalRep
from .core import CuspLabel, GLData, HalfInt, HdualError, Segment, cuspidal_support
from .jantzen import highest_derivative

__all__ = [
    "RhoData",
    "NormalForm",
    "NonTermination",
    "NotNormalizable",
    "PreconditionFailed",
    "rho_data",
    "normal_form",
    "is_tempered_by_data",
    "strip_segment",
    "langlands_from_data",
    "support_size",
]


class NonTermination(HdualError):
    """The derivative loop exceeded its iteration bound."""


class NotNormalizable(HdualError):
    """The entries violate the block normal form."""


class PreconditionFailed(HdualError):
    """A stripping precondition does not hold."""


def _entry(x, k) -> tuple[HalfInt, int]:
    return HalfInt(x), int(k)


@dataclass(frozen=True)
class RhoData:
    epsilon: int
    rho: CuspLabel
    entries: tuple
    terminal: ClassicalRep

    def __post_init__(self) -> None:
        if self.epsilon not in (1, -1):
            raise ValueError("epsilon must be +1 or -1")
        entries = tuple(_entry(x, k) for x, k in self.entries)
        for (x, _), (y, _) in zip(entries, entries[1:]):
            if x == y:
                raise ValueError("consecutive exponents must differ")
        if any(k < 1 for _, k in entries):
            raise ValueError("orders must be positive")
        object.__setattr__(self, "entries", entries)

    def negated(self, terminal: ClassicalRep) -> RhoData:
        """Entries (-x, k) on rho^vee with the given terminal."""
        return RhoData(-self.epsilon, self.rho.dual(), tuple((-x, k) for x, k in self.entries), terminal)

    def __str__(self) -> str:
        body = ",".join(f"({x},{k})" for x, k in self.entries)
        sep = "; " if body else ""
        return f"[{body}{sep}{self.terminal}]"


@dataclass(frozen=True)
class NormalForm:
    blocks: tuple

    def flatten(self) -> list[tuple[HalfInt, int]]:
        return [e for block in self.blocks for e in block]

    @property
    def starts(self) -> list[HalfInt]:
        return [block[0][0] for block in self.blocks]

    @staticmethod
    def block_sum(block) -> HalfInt:
        return block[0][0] + block[-1][0]


def support_size(rep: ClassicalRep) -> int:
    """Total number of cuspidal exponents; bounds every derivative loop."""
    size = sum(s.length for s in rep.gl)
    size += sum(a for _, a, _ in rep.tempered.gp)
    size += sum(2 * a for _, a in rep.tempered.ngp)
    return size


def _bound(rep: ClassicalRep) -> int:
    env = os.environ.get("HDUAL_MAX_SUPPORT")
    if env:
        return int(env)
    return support_size(rep) + 1


def rho_data(rep: ClassicalRep, epsilon: int, rho: CuspLabel) -> RhoData:
    """M^epsilon_rho(rep)."""
    if epsilon not in (1, -1):
        raise ValueError("epsilon must be +1 or -1")
    current = rep
    entries: list[tuple[HalfInt, int]] = []
    for _ in range(_bound(rep)):
        points = sorted({z for r, z in cuspidal_support(current) if r == rho},
                        key=lambda z: z.twice, reverse=epsilon > 0)
        for z in points:
            res = highest_derivative(current, rho, z)
            if res.order:
                entries.append((z, res.order))
                current = res.rep
                break
        else:
            return RhoData(epsilon, rho, tuple(entries), current)
    raise NonTermination(f"rho-data of {rep} did not terminate")


def normal_form(data) -> NormalForm:
    """Split minus-data into maximal blocks x, x-1, ... and check the invariants."""
    if isinstance(data, RhoData):
        if data.epsilon != -1:
            raise NotNormalizable("normal form is defined for minus-data")
        entries = data.entries
    else:
        entries = tuple(_entry(x, k) for x, k in data)
    blocks: list[list] = []
    for x, k in entries:
        if blocks and blocks[-1][-1][0] - 1 == x:
            blocks[-1].append((x, k))
        else:
            blocks.append([(x, k)])
    for block in blocks:
        for (_, k1), (_, k2) in zip(block, block[1:]):
            if k2 > k1:
                raise NotNormalizable(f"orders increase inside block {block}")
    for b1, b2 in zip(blocks, blocks[1:]):
        if not b1[0][0] < b2[0][0]:
            raise NotNormalizable("block starts do not increase")
    return NormalForm(tuple(tuple(b) for b in blocks))


def is_tempered_by_data(rep: ClassicalRep) -> bool:
    for rho in sorted(rep.labels(), key=lambda r: r.name):
        form = normal_form(rho_data(rep, -1, rho))
        if any(NormalForm.block_sum(b) < 0 for b in form.blocks):
            return False
    return True


def strip_segment(data: RhoData, block_index: int) -> tuple[Segment, RhoData]:
    """Remove Delta_rho[x_1, x_t] of the given block from minus-data."""
    form = normal_form(data)
    if not 0 <= block_index < len(form.blocks):
        raise PreconditionFailed("block index out of range")
    block = form.blocks[block_index]
    total = NormalForm.block_sum(block)
    if total >= 0:
        raise PreconditionFailed("block has non-negative sum")
    if any(NormalForm.block_sum(b) < total for b in form.blocks[:block_index]):
        raise PreconditionFailed("an earlier block has a smaller sum")
    seg = Segment(data.rho, block[0][0], block[-1][0])
    out = []
    for i, b in enumerate(form.blocks):
        for x, k in b:
            k = k - 1 if i == block_index else k
            if k:
                out.append((x, k))
    merged = []
    for x, k in out:
        if merged and merged[-1][0] == x:
            raise NotNormalizable("stripping produced repeated exponents")
        merged.append((x, k))
    return seg, RhoData(-1, data.rho, tuple(merged), data.terminal)


def _gl_by_formula(data: RhoData) -> list[Segment]:
    segs = []
    for block in normal_form(data).blocks:
        x1 = block[0][0]
        for j, (xj, kj) in enumerate(block):
            nxt = block[j + 1][1] if j + 1 < len(block) else 0
            if x1 + xj < 0 and kj > nxt:
                segs += [Segment(data.rho, x1, xj)] * (kj - nxt)
    return segs


def _gl_by_stripping(data: RhoData) -> tuple[list[Segment], RhoData]:
    segs = []
    for _ in range(sum(k for _, k in data.entries) + 1):
        form = normal_form(data)
        sums = [NormalForm.block_sum(b) for b in form.blocks]
        negative = [s for s in sums if s < 0]
        if not negative:
            return segs, data
        seg, data = strip_segment(data, sums.index(min(negative)))
        segs.append(seg)
    raise NonTermination("stripping did not terminate")


def langlands_from_data(all_data: dict) -> tuple[GLData, dict]:
    """GL Langlands part and residual tempered minus-data, per label."""
    segs: list[Segment] = []
    residual = {}
    for rho, data in all_data.items():
        direct = _gl_by_formula(data)
        stripped, rest = _gl_by_stripping(data)
        if GLData(direct) != GLData(stripped):
            raise NotNormalizable(f"GL part disagrees between the two routes for {rho}")
        segs += direct
        residual[rho] = rest
    return GLData(segs), residual
