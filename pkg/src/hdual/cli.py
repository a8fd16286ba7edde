"""Command-line front end: representation notation, subcommands and output."""

from __future__ import annotations

import argparse
import re
import sys
from dataclasses import dataclass, field

from .arthur import ClassicalRep, TemperedParam, validate
from .aubert import aubert_dual
from .core import CuspLabel, Duality, GLData, GroupType, HalfInt, HdualError, Segment
from .jantzen import EngineInvariantError, highest_derivative
from .rhodata import is_tempered_by_data, rho_data
from .tempered import irr1, irr_delta_induction, irr_rho_induction

__all__ = ["Notation", "ParseError", "ValidationError", "parse_rep", "format_rep", "main"]

EXIT_OK, EXIT_INPUT, EXIT_AMBIGUOUS, EXIT_INTERNAL = 0, 1, 2, 3


class ParseError(HdualError, ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class ValidationError(HdualError, ValueError):
    """Well-formed text that does not describe a valid representation."""


@dataclass
class Notation:
    """Group and declared labels; undeclared labels are orthogonal of dimension 1."""

    group: GroupType = GroupType.C
    labels: dict = field(default_factory=dict)

    def label(self, name: str) -> CuspLabel:
        if name not in self.labels:
            self.labels[name] = CuspLabel(name)
        return self.labels[name]

    def declare(self, name: str, dim: int, kind: str) -> None:
        if kind.startswith("nsd:"):
            other = kind[4:]
            self.labels[name] = CuspLabel(name, dim, Duality.NSD, other)
            self.labels[other] = CuspLabel(other, dim, Duality.NSD, name)
        elif kind in ("orth", "symp"):
            self.labels[name] = CuspLabel(name, dim, Duality(kind))
        else:
            raise ValueError(f"unknown duality {kind!r}")


_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+(?:/2)?)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<sym>[(),;:+-]))")


class _Parser:
    def __init__(self, text: str, notation: Notation, offset: int) -> None:
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", offset + pos)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), offset + m.start(kind)))
            pos = m.end()
        self.end = offset + len(text)
        self.i = 0
        self.notation = notation

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end)

    def take(self, kind: str, value: str | None = None) -> str:
        k, v, pos = self.peek()
        if k != kind or (value is not None and v != value):
            want = value or kind
            got = v if v is not None else "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", pos)
        self.i += 1
        return v

    def at(self, kind: str, value: str) -> bool:
        k, v, _ = self.peek()
        return k == kind and v == value

    def rep(self) -> tuple[list[Segment], TemperedParam]:
        if self.at("name", "L"):
            self.take("name")
            self.take("sym", "(")
            segs = [self.segment()]
            while self.at("sym", ","):
                self.take("sym")
                segs.append(self.segment())
            self.take("sym", ";")
            temp = self.tempered()
            self.take("sym", ")")
        else:
            segs, temp = [], self.tempered()
        k, v, pos = self.peek()
        if k is not None:
            raise ParseError(f"trailing input {v!r}", pos)
        return segs, temp

    def segment(self) -> Segment:
        _, _, pos = self.peek()
        self.take("name", "D")
        self.take("sym", "(")
        rho = self.notation.label(self.take("name"))
        self.take("sym", ",")
        x = HalfInt(self.take("num"))
        self.take("sym", ",")
        y = HalfInt(self.take("num"))
        self.take("sym", ")")
        try:
            return Segment(rho, x, y)
        except ValueError as exc:
            raise ParseError(str(exc), pos) from None

    def tempered(self) -> TemperedParam:
        self.take("name", "pi")
        self.take("sym", "(")
        gp, ngp = [], []
        if not self.at("sym", ")"):
            self.item(gp, ngp)
            while self.at("sym", ","):
                self.take("sym")
                self.item(gp, ngp)
        self.take("sym", ")")
        return TemperedParam(self.notation.group, tuple(gp), tuple(ngp))

    def item(self, gp: list, ngp: list) -> None:
        rho = self.notation.label(self.take("name"))
        self.take("sym", ":")
        _, _, pos = self.peek()
        num = self.take("num")
        if "/" in num or int(num) < 1:
            raise ParseError("dimension of S_a must be a positive integer", pos)
        self.take("sym", ":")
        k, v, pos = self.peek()
        if k == "sym" and v in "+-":
            self.i += 1
            gp.append((rho, int(num), 1 if v == "+" else -1))
        elif k == "name" and v == "pair":
            self.i += 1
            ngp.append((rho, int(num)))
        else:
            raise ParseError("expected '+', '-' or 'pair'", pos)


def _directives(text: str, notation: Notation) -> tuple[str, int]:
    """Consume leading '#group' / '#rho' lines; return the body and its offset."""
    offset = 0
    lines = text.splitlines(keepends=True)
    for line in lines:
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            break
        if stripped:
            parts = stripped[1:].split()
            try:
                if parts[0] == "group" and len(parts) == 2:
                    notation.group = GroupType(parts[1])
                elif parts[0] == "rho" and len(parts) == 4:
                    notation.declare(parts[1], int(parts[2]), parts[3])
                else:
                    raise ValueError("unknown directive")
            except (ValueError, IndexError) as exc:
                raise ParseError(f"bad directive {stripped!r}: {exc}", offset) from None
        offset += len(line)
    return text[offset:], offset


def parse_rep(text: str, notation: Notation | None = None) -> ClassicalRep:
    notation = notation if notation is not None else Notation()
    body, offset = _directives(text, notation)
    segs, temp = _Parser(body, notation, offset).rep()
    check = validate(temp)
    if not check:
        raise ValidationError(str(check))
    try:
        return ClassicalRep(notation.group, GLData(segs), temp)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def format_rep(rep: ClassicalRep) -> str:
    return str(rep)


# commands


def _records(fields: list[tuple[str, object]]) -> str:
    return "\t".join(f"{k}={v}" for k, v in fields)


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _cmd_derive(args, notation: Notation) -> tuple[int, list]:
    rep = parse_rep(args.rep, notation)
    res = highest_derivative(rep, notation.label(args.rho), HalfInt(args.x))
    return EXIT_OK, [[("order", res.order), ("rep", format_rep(res.rep)), ("mult", res.multiplicity)]]


def _cmd_rho_data(args, notation: Notation) -> tuple[int, list]:
    rep = parse_rep(args.rep, notation)
    data = rho_data(rep, 1 if args.sign == "+" else -1, notation.label(args.rho))
    return EXIT_OK, [[("data", str(data))]]


def _cmd_aubert(args, notation: Notation) -> tuple[int, list]:
    result = aubert_dual(parse_rep(args.rep, notation))
    rows = [[("rep", format_rep(c)), ("resolved", _bool(result.resolved))] for c in result.candidates]
    return (EXIT_OK if result.resolved else EXIT_AMBIGUOUS), rows


def _cmd_tempered(args, notation: Notation) -> tuple[int, list]:
    rep = parse_rep(args.rep, notation)
    return EXIT_OK, [[("tempered", _bool(is_tempered_by_data(rep)))]]


def _cmd_irreducible(args, notation: Notation) -> tuple[int, list]:
    rep = parse_rep(args.rep, notation)
    if not rep.is_tempered():
        raise ValidationError("irreducibility predicates take a tempered representation")
    phi, rho = rep.tempered, notation.label(args.rho)
    if args.kind == "rho":
        value = irr_rho_induction(phi, rho, _need(args.a, "--a"))
    elif args.kind == "rho1":
        value = irr1(_need(args.a, "--a"), phi, rho)
    else:
        variant = "plain" if args.kind == "delta" else "with_delta01"
        value = irr_delta_induction(phi, rho, HalfInt(_need(args.x, "--x")), variant)
    return EXIT_OK, [[("irreducible", _bool(value))]]


def _need(value, flag: str):
    if value is None:
        raise ValidationError(f"{flag} is required for this kind")
    return value


def _text(command: str, rows: list) -> list[str]:
    if command == "derive":
        (order, rep, mult), = [[v for _, v in row] for row in rows]
        return [f"order: {order}", f"derivative: {rep}", f"multiplicity: {mult}"]
    if command == "aubert":
        out = [f"candidate: {row[0][1]}" for row in rows]
        return out + [f"resolved: {rows[0][1][1]}"]
    return [str(row[0][1]) for row in rows]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hdual", description="Highest derivatives and Aubert duals.")
    parser.add_argument("--format", choices=("text", "records"), default="text")
    parser.add_argument("--group", choices=("B", "C"), help="default group when the input has no #group line")
    parser.add_argument("--declare", action="append", default=[], metavar="NAME:DIM:TYPE",
                        help="declare a label, TYPE is orth, symp or nsd=<dual>")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="highest derivative at rho|.|^x")
    p.add_argument("--rep", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--x", required=True)

    p = sub.add_parser("rho-data", help="M^+ or M^- data")
    p.add_argument("--rep", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--sign", choices=("+", "-"), required=True)

    p = sub.add_parser("aubert", help="Aubert dual candidates")
    p.add_argument("--rep", required=True)

    p = sub.add_parser("tempered", help="temperedness from the minus data")
    p.add_argument("--rep", required=True)

    p = sub.add_parser("irreducible", help="irreducibility predicates")
    p.add_argument("--kind", choices=("rho", "delta", "delta01", "rho1"), required=True)
    p.add_argument("--rep", required=True)
    p.add_argument("--rho", required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--x")
    return parser


_COMMANDS = {
    "derive": _cmd_derive,
    "rho-data": _cmd_rho_data,
    "aubert": _cmd_aubert,
    "tempered": _cmd_tempered,
    "irreducible": _cmd_irreducible,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    notation = Notation()
    try:
        if args.group:
            notation.group = GroupType(args.group)
        for decl in args.declare:
            name, dim, kind = decl.split(":", 2)
            notation.declare(name, int(dim), kind.replace("nsd=", "nsd:"))
    except ValueError as exc:
        print(f"error: bad declaration: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        status, rows = _COMMANDS[args.command](args, notation)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (EngineInvariantError, HdualError) as exc:
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "records":
        lines = [_records(row) for row in rows]
    else:
        lines = _text(args.command, rows)
    print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
