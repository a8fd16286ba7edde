"""GL_n derivative combinatorics on multisegments.

Highest left/right derivatives follow the counting rule of Jantzen and
Minguez.  Their inverses (underivatives) use the equivalent bracket
matching: reading the segments in the rule's order, a segment whose end is
the derived exponent closes a bracket opened by a segment ending one step
further in.  Derived segments are exactly the unmatched closers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import CuspLabel, GLData, HalfInt, HdualError, Segment

__all__ = [
    "GLDerivativeResult",
    "NotALadder",
    "segments_linked",
    "gl_left_highest",
    "gl_right_highest",
    "gl_left_underivative",
    "gl_right_underivative",
    "is_ladder",
    "ladder_jacquet_left",
    "ladder_jacquet_right",
]


class NotALadder(HdualError, ValueError):
    """Raised when a multisegment is not a ladder on a single label."""


@dataclass(frozen=True)
class GLDerivativeResult:
    order: int
    result: GLData


def segments_linked(s1: Segment, s2: Segment) -> bool:
    """True iff Delta(s1) x Delta(s2) is reducible."""
    if s1.rho != s2.rho:
        return False
    if (s1.x.twice - s2.x.twice) % 2:
        return False
    if s2.y <= s1.y and s1.x <= s2.x:
        return False
    if s1.y <= s2.y and s2.x <= s1.x:
        return False
    return max(s1.y.twice, s2.y.twice) <= min(s1.x.twice, s2.x.twice) + 2


def _shift_start(seg: Segment) -> Segment | None:
    if seg.x == seg.y:
        return None
    return Segment(seg.rho, seg.x - 1, seg.y)


def _shift_end(seg: Segment) -> Segment | None:
    if seg.x == seg.y:
        return None
    return Segment(seg.rho, seg.x, seg.y + 1)


def _left_sequence(segs: list[Segment]) -> list[Segment]:
    # y ascending; equal y ordered by x descending
    return sorted(segs, key=lambda s: (s.y.twice, -s.x.twice))


def _right_sequence_reversed(segs: list[Segment]) -> list[Segment]:
    # the rule orders by x ascending (equal x: y descending) and reads from the end
    ordered = sorted(segs, key=lambda s: (s.x.twice, -s.y.twice))
    return ordered[::-1]


def _free_closers(seq: list[Segment], is_close, is_open) -> list[int]:
    """Indices of closers reached at a new running maximum."""
    depth = 0
    free = []
    for idx, seg in enumerate(seq):
        if is_open(seg):
            depth += 1
        elif is_close(seg):
            if depth:
                depth -= 1
            else:
                free.append(idx)
    return free


def _never_closed_openers(seq: list[Segment], is_close, is_open) -> list[int]:
    """Openers left on the stack at the end, in reading order."""
    stack: list[int] = []
    for idx, seg in enumerate(seq):
        if is_open(seg):
            stack.append(idx)
        elif is_close(seg) and stack:
            stack.pop()
    return stack


def gl_left_highest(data: GLData, rho: CuspLabel, x) -> GLDerivativeResult:
    x = HalfInt(x)
    segs = [s for s in data if s.rho == rho]
    rest = [s for s in data if s.rho != rho]
    seq = _left_sequence(segs)
    free = _free_closers(seq, lambda s: s.x == x, lambda s: s.x == x - 1)
    if not free:
        return GLDerivativeResult(0, data)
    chosen = set(free)
    out = list(rest)
    for idx, seg in enumerate(seq):
        if idx in chosen:
            new = _shift_start(seg)
            if new is not None:
                out.append(new)
        else:
            out.append(seg)
    return GLDerivativeResult(len(free), GLData(out))


def gl_right_highest(data: GLData, rho: CuspLabel, y) -> GLDerivativeResult:
    y = HalfInt(y)
    segs = [s for s in data if s.rho == rho]
    rest = [s for s in data if s.rho != rho]
    seq = _right_sequence_reversed(segs)
    free = _free_closers(seq, lambda s: s.y == y, lambda s: s.y == y + 1)
    if not free:
        return GLDerivativeResult(0, data)
    chosen = set(free)
    out = list(rest)
    for idx, seg in enumerate(seq):
        if idx in chosen:
            new = _shift_end(seg)
            if new is not None:
                out.append(new)
        else:
            out.append(seg)
    return GLDerivativeResult(len(free), GLData(out))


def gl_left_underivative(data: GLData, rho: CuspLabel, x, a: int) -> GLData:
    """The unique D with gl_left_highest(D, rho, x) == (a, data).

    ``data`` is expected to have left order 0 at x.
    """
    x = HalfInt(x)
    if a < 0:
        raise ValueError("order must be non-negative")
    segs = [s for s in data if s.rho == rho]
    rest = [s for s in data if s.rho != rho]
    seq = _left_sequence(segs)
    opens = _never_closed_openers(seq, lambda s: s.x == x, lambda s: s.x == x - 1)
    convert = set(opens[:a])
    out = list(rest)
    for idx, seg in enumerate(seq):
        out.append(Segment(rho, x, seg.y) if idx in convert else seg)
    singles = a - len(convert)
    out.extend(Segment(rho, x, x) for _ in range(singles))
    return GLData(out)


def gl_right_underivative(data: GLData, rho: CuspLabel, y, a: int) -> GLData:
    """The unique D with gl_right_highest(D, rho, y) == (a, data).

    Extends the earliest unmatched [., y+1] segments first, then adds
    singletons [y, y] for the remaining count.
    """
    y = HalfInt(y)
    if a < 0:
        raise ValueError("order must be non-negative")
    segs = [s for s in data if s.rho == rho]
    rest = [s for s in data if s.rho != rho]
    seq = _right_sequence_reversed(segs)
    opens = _never_closed_openers(seq, lambda s: s.y == y, lambda s: s.y == y + 1)
    convert = set(opens[:a])
    out = list(rest)
    for idx, seg in enumerate(seq):
        out.append(Segment(rho, seg.x, y) if idx in convert else seg)
    singles = a - len(convert)
    out.extend(Segment(rho, y, y) for _ in range(singles))
    return GLData(out)


def is_ladder(data: GLData | Iterable[Segment], rho: CuspLabel | None = None) -> bool:
    segs = sorted(data, key=lambda s: s.x.twice)
    if not segs:
        return True
    label = rho or segs[0].rho
    if any(s.rho != label for s in segs):
        return False
    if any((s.x.twice - segs[0].x.twice) % 2 for s in segs):
        return False
    for prev, cur in zip(segs, segs[1:]):
        if not (prev.x < cur.x and prev.y < cur.y):
            return False
    return True


def _ladder(data: GLData, rho: CuspLabel) -> list[Segment]:
    if not is_ladder(data, rho):
        raise NotALadder(f"{data!r} is not a ladder on {rho}")
    return sorted(data, key=lambda s: s.x.twice)


def ladder_jacquet_left(ladder: GLData, rho: CuspLabel) -> list[tuple[HalfInt, GLData]]:
    """Depth-one left Jacquet terms of a ladder representation."""
    segs = _ladder(ladder, rho)
    terms = []
    for i, seg in enumerate(segs):
        if i > 0 and not segs[i - 1].x < seg.x - 1:
            continue
        rest = segs[:i] + segs[i + 1:]
        new = _shift_start(seg)
        if new is not None:
            rest.append(new)
        terms.append((seg.x, GLData(rest)))
    return terms


def ladder_jacquet_right(ladder: GLData, rho: CuspLabel) -> list[tuple[HalfInt, GLData]]:
    """Depth-one right Jacquet terms of a ladder representation."""
    segs = _ladder(ladder, rho)
    terms = []
    last = len(segs) - 1
    for i, seg in enumerate(segs):
        if i < last and not seg.y + 1 < segs[i + 1].y:
            continue
        rest = segs[:i] + segs[i + 1:]
        new = _shift_end(seg)
        if new is not None:
            rest.append(new)
        terms.append((seg.y, GLData(rest)))
    return terms
