"""Exact symbolic integer expressions: literals, powers, products, sums.

Used for bounds far too large to evaluate.  Evaluation to a literal happens
only when a bit-length prediction stays under a configurable cap (default
10**6 bits), so an infeasible exponentiation is never attempted.  Printing
is canonical (non-literal operands parenthesised, ^ right-associative) and
round-trips through the parser.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_CAP_BITS = 10**6


class TowerExpr:
    """Base class; concrete nodes are Lit, Pow, Prod, Sum."""

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"TowerExpr({to_text(self)})"


@dataclass(frozen=True)
class Lit(TowerExpr):
    value: int


@dataclass(frozen=True)
class Pow(TowerExpr):
    base: TowerExpr
    exp: TowerExpr


@dataclass(frozen=True)
class Prod(TowerExpr):
    parts: tuple[TowerExpr, ...]


@dataclass(frozen=True)
class Sum(TowerExpr):
    parts: tuple[TowerExpr, ...]


def lit(v: int) -> Lit:
    return Lit(int(v))


def power(base, exp) -> TowerExpr:
    return normalize(Pow(_coerce(base), _coerce(exp)))


def product(*parts) -> TowerExpr:
    return normalize(Prod(tuple(_coerce(x) for x in parts)))


def add(*parts) -> TowerExpr:
    return normalize(Sum(tuple(_coerce(x) for x in parts)))


def _coerce(x) -> TowerExpr:
    return lit(x) if isinstance(x, int) else x


# ---------------------------------------------------------------------------
# size prediction and evaluation


def bits_bound(expr: TowerExpr, cap_bits: int = DEFAULT_CAP_BITS) -> int | None:
    """Upper bound on the bit length of the value, or None when even the
    prediction cannot be kept under control (symbolic-only expression)."""
    if isinstance(expr, Lit):
        return expr.value.bit_length()
    if isinstance(expr, Sum):
        parts = [bits_bound(x, cap_bits) for x in expr.parts]
        if any(b is None for b in parts):
            return None
        return max(parts, default=1) + len(expr.parts).bit_length()
    if isinstance(expr, Prod):
        parts = [bits_bound(x, cap_bits) for x in expr.parts]
        if any(b is None for b in parts):
            return None
        return sum(parts)
    if isinstance(expr, Pow):
        base_bits = bits_bound(expr.base, cap_bits)
        if base_bits is None:
            return None
        # the exponent value itself must be small enough to hold exactly
        e = evaluate(expr.exp, cap_bits=64)
        if e is None:
            return None
        return max(1, e * base_bits)
    raise TypeError(f"not a TowerExpr: {expr!r}")


def evaluate(expr: TowerExpr, cap_bits: int = DEFAULT_CAP_BITS) -> int | None:
    """Exact integer value iff the predicted bit length fits the cap."""
    b = bits_bound(expr, cap_bits)
    if b is None or b > cap_bits:
        return None
    return _eval(expr, cap_bits)


def _eval(expr: TowerExpr, cap_bits: int) -> int:
    if isinstance(expr, Lit):
        return expr.value
    if isinstance(expr, Sum):
        return sum(_eval(x, cap_bits) for x in expr.parts)
    if isinstance(expr, Prod):
        out = 1
        for x in expr.parts:
            out *= _eval(x, cap_bits)
        return out
    if isinstance(expr, Pow):
        return _eval(expr.base, cap_bits) ** _eval(expr.exp, cap_bits)
    raise TypeError(f"not a TowerExpr: {expr!r}")


# ---------------------------------------------------------------------------
# normalization


def normalize(expr: TowerExpr, cap_bits: int = DEFAULT_CAP_BITS) -> TowerExpr:
    """Canonical form: flatten nested sums/products, fold literal sums and
    products (within the cap), merge same-base powers and nested powers.
    Power nodes with literal operands stay symbolic; only explicit
    evaluation turns them into literals."""
    if isinstance(expr, Lit):
        return expr
    if isinstance(expr, Sum):
        flat: list[TowerExpr] = []
        for part in (normalize(x, cap_bits) for x in expr.parts):
            if isinstance(part, Sum):
                flat.extend(part.parts)
            elif isinstance(part, Lit) and part.value == 0:
                continue
            else:
                flat.append(part)
        lits = [x.value for x in flat if isinstance(x, Lit)]
        rest = [x for x in flat if not isinstance(x, Lit)]
        if lits:
            total = sum(lits)
            if total or not rest:
                rest = rest + [Lit(total)]
        if not rest:
            return Lit(0)
        if len(rest) == 1:
            return rest[0]
        return Sum(tuple(sorted(rest, key=to_text)))
    if isinstance(expr, Prod):
        flat = []
        for part in (normalize(x, cap_bits) for x in expr.parts):
            if isinstance(part, Prod):
                flat.extend(part.parts)
            elif isinstance(part, Lit) and part.value == 1:
                continue
            else:
                flat.append(part)
        if any(isinstance(x, Lit) and x.value == 0 for x in flat):
            return Lit(0)
        # merge powers sharing a structurally equal base
        by_base: dict[TowerExpr, list[TowerExpr]] = {}
        order: list[TowerExpr] = []
        lits = []
        for part in flat:
            if isinstance(part, Lit):
                lits.append(part.value)
                continue
            base, exp = (part.base, part.exp) if isinstance(part, Pow) else (part, Lit(1))
            if base not in by_base:
                by_base[base] = []
                order.append(base)
            by_base[base].append(exp)
        rest = []
        for base in order:
            exps = by_base[base]
            exp = exps[0] if len(exps) == 1 else normalize(Sum(tuple(exps)), cap_bits)
            rest.append(base if exp == Lit(1) else Pow(base, exp))
        lit_val = 1
        for v in lits:
            lit_val *= v
        if lit_val != 1:
            rest = [Lit(lit_val)] + rest
        if not rest:
            return Lit(1)
        if len(rest) == 1:
            return rest[0]
        return Prod(tuple(sorted(rest, key=to_text)))
    if isinstance(expr, Pow):
        base = normalize(expr.base, cap_bits)
        exp = normalize(expr.exp, cap_bits)
        if isinstance(exp, Lit) and exp.value == 1:
            return base
        if isinstance(exp, Lit) and exp.value == 0:
            return Lit(1)
        if isinstance(base, Lit) and base.value == 1:
            return Lit(1)
        if isinstance(base, Pow):
            return normalize(Pow(base.base, Prod((base.exp, exp))), cap_bits)
        return Pow(base, exp)
    raise TypeError(f"not a TowerExpr: {expr!r}")


# ---------------------------------------------------------------------------
# printing and parsing: integers, ^, *, +, parentheses, right-associative ^


def to_text(expr: TowerExpr) -> str:
    if isinstance(expr, Lit):
        return str(expr.value)
    if isinstance(expr, Pow):
        return f"{_atom(expr.base)}^{_atom(expr.exp)}"
    if isinstance(expr, Prod):
        return " * ".join(_factor(x) for x in expr.parts)
    if isinstance(expr, Sum):
        return " + ".join(_term(x) for x in expr.parts)
    raise TypeError(f"not a TowerExpr: {expr!r}")


def _atom(x: TowerExpr) -> str:
    return to_text(x) if isinstance(x, Lit) else f"({to_text(x)})"


def _factor(x: TowerExpr) -> str:
    return f"({to_text(x)})" if isinstance(x, Sum) else to_text(x)


def _term(x: TowerExpr) -> str:
    return to_text(x)


class _Parser:
    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        out = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                out.append(text[i:j])
                i = j
            elif ch in "+*^()":
                out.append(ch)
                i += 1
            else:
                raise ValueError(f"unexpected character {ch!r}")
        return out

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expect is not None and tok != expect):
            raise ValueError(f"expected {expect!r}, got {tok!r}")
        self.pos += 1
        return tok

    def parse_sum(self) -> TowerExpr:
        parts = [self.parse_prod()]
        while self.peek() == "+":
            self.take()
            parts.append(self.parse_prod())
        return parts[0] if len(parts) == 1 else Sum(tuple(parts))

    def parse_prod(self) -> TowerExpr:
        parts = [self.parse_pow()]
        while self.peek() == "*":
            self.take()
            parts.append(self.parse_pow())
        return parts[0] if len(parts) == 1 else Prod(tuple(parts))

    def parse_pow(self) -> TowerExpr:
        base = self.parse_atom()
        if self.peek() == "^":
            self.take()
            return Pow(base, self.parse_pow())
        return base

    def parse_atom(self) -> TowerExpr:
        tok = self.peek()
        if tok == "(":
            self.take()
            inner = self.parse_sum()
            self.take(")")
            return inner
        tok = self.take()
        if tok is None or not tok.isdigit():
            raise ValueError(f"expected an integer, got {tok!r}")
        return Lit(int(tok))


def parse(text: str) -> TowerExpr:
    p = _Parser(text)
    expr = p.parse_sum()
    if p.peek() is not None:
        raise ValueError(f"trailing input at token {p.pos}")
    return expr
