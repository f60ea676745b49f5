"""Symbolic ordinals: Cantor normal form below epsilon_0, plus abstract limits.

An abstract limit ``L(c)`` stands for some limit ordinal larger than every
pure CNF expression, whose cofinality is only known up to the class ``c``.
Only a finite tail may follow it, so ``L(cofk)+2`` is allowed but
``L(cofk)+w`` is not.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class CofClass(Enum):
    """Cofinality classes. Only equality is meaningful between them."""

    FINITE = "finite"
    OMEGA = "omega"
    COF_KAPPA = "cof_kappa"
    OTHER_LT_KAPPA = "other_lt_kappa"
    KAPPA = "kappa"


# short names used inside L(...) and in JSON
_COF_SHORT = {
    "omega": CofClass.OMEGA,
    "cofk": CofClass.COF_KAPPA,
    "oltk": CofClass.OTHER_LT_KAPPA,
    "kappa": CofClass.KAPPA,
}
_SHORT_OF = {v: k for k, v in _COF_SHORT.items()}


def cof_from_name(name: str) -> CofClass:
    """Accept either the short (``cofk``) or long (``cof_kappa``) spelling."""
    if name in _COF_SHORT:
        return _COF_SHORT[name]
    try:
        return CofClass(name)
    except ValueError:
        raise ValueError(f"unknown cofinality class {name!r}") from None


class OrdinalError(ValueError):
    pass


class ParseError(OrdinalError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at column {pos + 1}: {text!r}")
        self.pos = pos


class OddOrdinal(OrdinalError):
    pass


class UnsupportedSymbolic(OrdinalError):
    pass


@dataclass(frozen=True)
class OrdinalExpr:
    """``head`` is the cofinality of an abstract limit, or None for pure CNF.

    ``terms`` lists ``(exponent, coefficient)`` with strictly decreasing
    exponents and positive coefficients.
    """

    terms: tuple[tuple["OrdinalExpr", int], ...] = ()
    head: CofClass | None = None

    def __post_init__(self):
        prev = None
        for e, c in self.terms:
            if not isinstance(c, int) or c <= 0:
                raise OrdinalError(f"bad coefficient {c!r}")
            if prev is not None and _cmp_pure(e, prev) >= 0:
                raise OrdinalError("exponents must strictly decrease")
            if self.head is not None and not e.is_zero:
                raise OrdinalError("only a finite tail may follow an abstract limit")
            prev = e
        if self.head in (CofClass.FINITE,):
            raise OrdinalError("an abstract limit cannot have finite cofinality")

    # -- basic predicates -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.head is None and not self.terms

    @property
    def is_pure(self) -> bool:
        return self.head is None

    @property
    def tail(self) -> int:
        """The finite part: coefficient of w^0."""
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    @property
    def is_finite(self) -> bool:
        return self.head is None and all(e.is_zero for e, _ in self.terms)

    @property
    def is_successor(self) -> bool:
        return self.tail > 0

    @property
    def is_limit(self) -> bool:
        return self.tail == 0 and not self.is_zero

    @property
    def is_even(self) -> bool:
        return self.tail % 2 == 0

    def as_int(self) -> int:
        if not self.is_finite:
            raise OrdinalError(f"{self} is not finite")
        return self.tail

    def with_tail(self, n: int) -> "OrdinalExpr":
        body = self.terms[:-1] if self.tail else self.terms
        if n:
            body = body + ((ZERO, n),)
        return OrdinalExpr(body, self.head)

    def __str__(self) -> str:
        return to_str(self)

    def __repr__(self) -> str:
        return f"Ord({to_str(self)!r})"


ZERO = OrdinalExpr()


def nat(n: int) -> OrdinalExpr:
    if n < 0:
        raise OrdinalError("negative natural")
    return OrdinalExpr(((ZERO, n),)) if n else ZERO


ONE = nat(1)
OMEGA = OrdinalExpr(((ONE, 1),))


def omega_power(e: OrdinalExpr, c: int = 1) -> OrdinalExpr:
    if not e.is_pure:
        raise UnsupportedSymbolic("exponents must be pure CNF")
    return OrdinalExpr(((e, c),))


def abstract_limit(cof: CofClass, tail: int = 0) -> OrdinalExpr:
    return OrdinalExpr(((ZERO, tail),) if tail else (), cof)


# -- comparison ----------------------------------------------------------


def _cmp_pure(a: OrdinalExpr, b: OrdinalExpr) -> int:
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp_pure(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    la, lb = len(a.terms), len(b.terms)
    return (la > lb) - (la < lb)


def ord_cmp(a: OrdinalExpr, b: OrdinalExpr) -> str:
    """Return ``lt``, ``eq``, ``gt`` or ``incomparable``."""
    if a.head is None and b.head is None:
        c = _cmp_pure(a, b)
    elif a.head is None:
        return "lt"
    elif b.head is None:
        return "gt"
    elif a.head != b.head:
        return "incomparable"
    else:
        c = (a.tail > b.tail) - (a.tail < b.tail)
    return {-1: "lt", 0: "eq", 1: "gt"}[c]


def ord_le(a: OrdinalExpr, b: OrdinalExpr) -> bool | None:
    """``a <= b`` or None when the atoms are incomparable."""
    c = ord_cmp(a, b)
    if c == "incomparable":
        return None
    return c != "gt"


def ord_lt(a: OrdinalExpr, b: OrdinalExpr) -> bool | None:
    c = ord_cmp(a, b)
    if c == "incomparable":
        return None
    return c == "lt"


# -- arithmetic ------------------------------------------------------------


def ord_add(a: OrdinalExpr, b: OrdinalExpr) -> OrdinalExpr:
    if b.is_zero:
        return a
    if b.head is not None:
        if not a.is_finite:
            raise UnsupportedSymbolic(f"cannot add {a} + {b}")
        return b
    if a.head is not None:
        if not b.is_finite:
            raise UnsupportedSymbolic(f"cannot add {a} + {b}")
        return a.with_tail(a.tail + b.tail)
    lead = b.terms[0][0]
    kept = []
    carry = 0
    for e, c in a.terms:
        k = _cmp_pure(e, lead)
        if k > 0:
            kept.append((e, c))
        elif k == 0:
            carry = c
    first = (lead, b.terms[0][1] + carry)
    return OrdinalExpr(tuple(kept) + (first,) + b.terms[1:])


def ord_succ(a: OrdinalExpr) -> OrdinalExpr:
    return ord_add(a, ONE)


def ord_double(a: OrdinalExpr) -> OrdinalExpr:
    """Left multiplication by 2: only the finite tail doubles."""
    return a.with_tail(2 * a.tail)


def ord_half(a: OrdinalExpr) -> OrdinalExpr:
    """Inverse of ``ord_double``; limits and zero are fixed."""
    if a.tail % 2:
        raise OddOrdinal(f"{a} is odd")
    return a.with_tail(a.tail // 2)


def ord_one_plus(a: OrdinalExpr) -> OrdinalExpr:
    return ord_add(ONE, a)


def ord_drop_one(level: OrdinalExpr) -> OrdinalExpr:
    """The unique alpha with ``1 + alpha == level`` (level >= 1)."""
    if level.is_zero:
        raise OrdinalError("0 is not of the form 1+alpha")
    if level.is_finite:
        return nat(level.tail - 1)
    return level


def ord_mul_omega(a: OrdinalExpr) -> OrdinalExpr:
    """Right multiplication by w, pure CNF only."""
    if a.head is not None:
        raise UnsupportedSymbolic("right multiplication by w is only defined on pure CNF")
    if a.is_zero:
        return ZERO
    return omega_power(ord_add(a.terms[0][0], ONE))


def ord_cof(a: OrdinalExpr) -> CofClass:
    if a.is_zero:
        raise OrdinalError("cofinality of 0 is undefined")
    if a.is_successor:
        return CofClass.FINITE
    if a.head is not None:
        return a.head
    return CofClass.OMEGA


# -- text form ---------------------------------------------------------------


def _exp_str(e: OrdinalExpr) -> str:
    if e.is_finite:
        return str(e.tail)
    if e == OMEGA:
        return "w"
    return f"({to_str(e)})"


def to_str(a: OrdinalExpr) -> str:
    parts = []
    if a.head is not None:
        parts.append(f"L({_SHORT_OF[a.head]})")
    for e, c in a.terms:
        if e.is_zero:
            parts.append(str(c))
            continue
        s = "w" if e == ONE else f"w^{_exp_str(e)}"
        parts.append(s if c == 1 else f"{s}*{c}")
    return "+".join(parts) if parts else "0"


_TOKEN = re.compile(r"\s*(?:(\d+)|(w)|(L\((\w+)\))|([+*^()]))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ParseError("unexpected character", text, pos)
            start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
            if m.group(1):
                self.toks.append(("nat", m.group(1), start))
            elif m.group(2):
                self.toks.append(("w", "w", start))
            elif m.group(3):
                self.toks.append(("L", m.group(4), start))
            else:
                self.toks.append((m.group(5), m.group(5), start))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else ("end", "", len(self.text))

    def take(self, kind: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self) -> OrdinalExpr:
        acc = self.term()
        while self.peek()[0] == "+":
            self.i += 1
            tok = self.peek()
            nxt = self.term()
            try:
                acc = ord_add(acc, nxt)
            except UnsupportedSymbolic as exc:
                raise ParseError(str(exc), self.text, tok[2]) from None
        return acc

    def term(self) -> OrdinalExpr:
        kind, val, pos = self.peek()
        if kind == "nat":
            self.i += 1
            base = nat(int(val))
            coeff_ok = False
        elif kind == "w":
            self.i += 1
            exp = ONE
            if self.peek()[0] == "^":
                self.i += 1
                exp = self.exponent()
            base = omega_power(exp)
            coeff_ok = True
        elif kind == "L":
            self.i += 1
            try:
                base = abstract_limit(cof_from_name(val))
            except (ValueError, OrdinalError) as exc:
                raise ParseError(str(exc), self.text, pos) from None
            coeff_ok = False
        else:
            raise ParseError("expected a term", self.text, pos)
        if self.peek()[0] == "*":
            if not coeff_ok:
                raise ParseError("coefficient only allowed on w-powers", self.text, self.peek()[2])
            self.i += 1
            c = int(self.take("nat")[1])
            if c == 0:
                return ZERO
            base = omega_power(base.terms[0][0], c)
        return base

    def exponent(self) -> OrdinalExpr:
        kind, val, pos = self.peek()
        if kind == "nat":
            self.i += 1
            return nat(int(val))
        if kind == "w":
            self.i += 1
            return OMEGA
        if kind == "(":
            self.i += 1
            e = self.expr()
            self.take(")")
            if not e.is_pure:
                raise ParseError("exponents must be pure CNF", self.text, pos)
            return e
        raise ParseError("expected an exponent", self.text, pos)


def parse(text: str) -> OrdinalExpr:
    """Parse ``w^2*3+w+4``, ``L(cofk)+2``, ``w^(w+1)`` and the like."""
    p = _Parser(text)
    if not p.toks:
        raise ParseError("empty ordinal", text, 0)
    out = p.expr()
    if p.i != len(p.toks):
        raise ParseError("trailing input", text, p.peek()[2])
    return out
