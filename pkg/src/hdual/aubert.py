"""Aubert duals through rho-data: negate the plus-data, read off the GL part,
rebuild the tempered part bottom-up and discard inconsistent candidates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arthur import ClassicalRep, validate
from .core import CuspLabel, HalfInt, HdualError
from .jantzen import EngineInvariantError, highest_derivative, socle_candidates
from .rhodata import RhoData, langlands_from_data, rho_data
from .tempered import MLPreconditionFailed, ml_reconstruct

__all__ = ["DualResult", "ReconstructionFailed", "aubert_dual", "disambiguate", "rebuild_tempered"]


class ReconstructionFailed(HdualError):
    """No candidate survived the consistency filters."""


@dataclass(frozen=True)
class DualResult:
    candidates: tuple
    resolved: bool

    def __post_init__(self) -> None:
        cands = tuple(self.candidates)
        if not cands:
            raise ValueError("a dual result needs at least one candidate")
        if self.resolved and len(cands) != 1:
            raise ValueError("a resolved result has exactly one candidate")
        object.__setattr__(self, "candidates", cands)

    @property
    def rep(self) -> ClassicalRep:
        if not self.resolved:
            raise ReconstructionFailed("the dual is not resolved")
        return self.candidates[0]


def _labels(rep: ClassicalRep) -> list[CuspLabel]:
    return sorted(rep.labels(), key=lambda r: r.name)


def _plus_data(rep: ClassicalRep) -> dict:
    """rho -> M^+_{rho^vee}(rep)."""
    return {rho: rho_data(rep, 1, rho.dual()) for rho in _labels(rep)}


def _apply(rep: ClassicalRep, steps, rho: CuspLabel) -> ClassicalRep | None:
    for x, k in steps:
        res = highest_derivative(rep, rho, x)
        if res.order != k:
            return None
        rep = res.rep
    return rep


def _negate(entries) -> tuple:
    return tuple((-x, k) for x, k in entries)


def _obeys_negation(cand: ClassicalRep, rep: ClassicalRep, plus: dict) -> bool:
    """Both directions of the negation law between ``rep`` and ``cand``."""
    labels = set(_labels(cand)) | set(plus)
    for rho in labels:
        expected = plus[rho].entries if rho in plus else ()
        if rho_data(cand, -1, rho).entries != _negate(expected):
            return False
        if rho_data(cand, 1, rho.dual()).entries != _negate(rho_data(rep, -1, rho).entries):
            return False
    return True


@lru_cache(maxsize=None)
def aubert_dual(rep: ClassicalRep) -> DualResult:
    """Candidates for the Aubert dual of ``rep``; resolved when unique."""
    plus = _plus_data(rep)
    active = [rho for rho, data in plus.items() if data.entries]
    if not active:
        return DualResult((rep,), True)
    minus = {rho: RhoData(-1, rho, _negate(data.entries), data.terminal)
             for rho, data in plus.items()}
    gl, residual = langlands_from_data(minus)
    rho1 = active[0]
    base = aubert_dual(plus[rho1].terminal)
    candidates: list[ClassicalRep] = []
    for hat0 in base.candidates:
        if not hat0.is_tempered():
            continue
        for sigma in rebuild_tempered(residual[rho1].entries, hat0, rho1):
            try:
                cand = ClassicalRep(rep.group, gl, sigma.tempered)
            except ValueError:
                continue
            if cand in candidates or not _obeys_negation(cand, rep, plus):
                continue
            if rho_data(cand, -1, rho1).terminal != hat0:
                continue
            candidates.append(cand)
    if not candidates:
        raise ReconstructionFailed(f"no dual candidate for {rep}")
    if len(candidates) == 1:
        return DualResult(tuple(candidates), True)
    return disambiguate(candidates, rep)


def rebuild_tempered(entries, terminal: ClassicalRep, rho: CuspLabel) -> list[ClassicalRep]:
    """Tempered reps whose minus-data on rho is ``entries`` ending at ``terminal``.

    Each entry is undone by the socle inverse of the derivative.  While the
    current rep is tempered, the closed-form reverse steps are applied too;
    a closed-form candidate that survives the forward check must agree with
    the socle route.
    """
    start = (tuple((HalfInt(x), int(k)) for x, k in entries), terminal)
    frontier = [start]
    seen = {start}
    out: list[ClassicalRep] = []
    while frontier:
        ents, rep = frontier.pop()
        if not ents:
            if rep.is_tempered() and validate(rep.tempered) and rep not in out:
                out.append(rep)
            continue
        x, k = ents[-1]
        preds = socle_candidates(rep, rho, x, k)
        nxt = [(ents[:-1], p) for p in preds]
        if rep.is_tempered():
            nxt += _closed_form_steps(ents, rep, rho, preds)
        for item in nxt:
            if item not in seen:
                seen.add(item)
                frontier.append(item)
    return out


def _closed_form_steps(ents, rep: ClassicalRep, rho: CuspLabel, preds) -> list:
    try:
        steps = ml_reconstruct(ents, rep.tempered, rho)
    except MLPreconditionFailed:
        return []
    out = []
    for step in steps:
        pred = ClassicalRep.tempered_rep(step.param)
        consumed = ents[len(step.remaining):]
        if not validate(step.param) or _apply(pred, consumed, rho) != rep:
            continue
        if len(consumed) == 1 and pred not in preds:
            raise EngineInvariantError(f"closed-form step {pred} missed by the socle route")
        out.append((tuple(step.remaining), pred))
    return out


def disambiguate(candidates, original: ClassicalRep) -> DualResult:
    """Cross-chain test: derive each candidate down to a tempered rep along its
    own minus-data, dualise that smaller rep and compare with the original
    derived along the negated steps."""
    candidates = list(candidates)
    if len(candidates) < 2:
        return DualResult(tuple(candidates), len(candidates) == 1)
    plus = _plus_data(original)
    kept = []
    for cand in candidates:
        if _passes_cross_chain(cand, original, plus):
            kept.append(cand)
    if not kept:
        raise ReconstructionFailed("cross-chain test rejected every candidate")
    return DualResult(tuple(kept), len(kept) == 1)


def _passes_cross_chain(cand: ClassicalRep, original: ClassicalRep, plus: dict) -> bool:
    for rho in sorted(plus, key=lambda r: r.name):
        entries = plus[rho].entries
        if not entries:
            continue
        minus_steps = [(-x, k) for x, k in entries]
        current = cand
        for n, (x, k) in enumerate(minus_steps, start=1):
            res = highest_derivative(current, rho, x)
            if res.order != k:
                return False
            current = res.rep
            if current.is_tempered():
                target = _apply(original, entries[:n], rho.dual())
                if target is None:
                    return False
                if target not in aubert_dual(current).candidates:
                    return False
                break
    return True
