"""Sparse polynomials in x, y, z with exact rational coefficients.

Polynomials are immutable.  Terms live in a dict keyed by exponent triples;
zero coefficients are never stored.  Canonical printing and every basis
enumeration use graded reverse lexicographic order with x > y > z.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterator, NamedTuple

VARIABLES = ("x", "y", "z")


class Monomial(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def __mul__(self, other):  # type: ignore[override]
        return Monomial(self.a + other.a, self.b + other.b, self.c + other.c)

    def __str__(self) -> str:
        parts = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def grevlex_key(m: tuple[int, int, int]) -> tuple[int, int, int]:
    """Sort key; larger key means larger monomial in grevlex with x > y > z."""
    return (m[0] + m[1] + m[2], -m[2], -m[1])


def monomials(r: int) -> list[Monomial]:
    """All monomials of degree r, in decreasing grevlex order."""
    if r < 0:
        return []
    out = [Monomial(r - b - c, b, c) for c in range(r + 1) for b in range(r - c + 1)]
    out.sort(key=grevlex_key, reverse=True)
    return out


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[Monomial(*mono)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def constant(cls, value) -> Polynomial:
        return cls({(0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> Polynomial:
        exps = [0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls({tuple(exps): 1})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Terms in decreasing grevlex order."""
        for mono in sorted(self._terms, key=grevlex_key, reverse=True):
            yield mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(Monomial(*mono), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        return Polynomial({m: c * v for m, v in self._terms.items()})

    def derivative(self, var: int | str) -> Polynomial:
        i = VARIABLES.index(var) if isinstance(var, str) else var
        out = {}
        for mono, coeff in self._terms.items():
            e = mono[i]
            if e:
                exps = list(mono)
                exps[i] -= 1
                out[tuple(exps)] = coeff * e
        return Polynomial(out)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if len(degs) > 1:
            return False
        if degree is None or not degs:
            return True
        return degs == {degree}

    def integer_terms(self) -> dict[Monomial, int]:
        """Terms scaled by the lcm of the denominators, as Python ints."""
        den = lcm(*(c.denominator for c in self._terms.values())) if self._terms else 1
        return {m: int(c * den) for m, c in self._terms.items()}

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for mono, coeff in self.items():
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            body = str(mono)
            if mono.degree == 0:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            chunks.append((sign, text))
        first_sign, first = chunks[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in chunks[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def partial_derivatives(f: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    return f.derivative(0), f.derivative(1), f.derivative(2)


def degree_check(f: Polynomial) -> int | None:
    """Return N if f is nonzero and homogeneous of degree N, else None."""
    degs = f.degrees()
    if len(degs) != 1:
        return None
    return degs.pop()


# ---------------------------------------------------------------------------
# parser


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class _Parser:
    # expr  := term (('+'|'-') term)*
    # term  := unary (('*'|'/') unary)*
    # unary := ('-'|'+') unary | power
    # power := atom ('^' INT)?
    # atom  := INT | x | y | z | '(' expr ')'

    def __init__(self, text: str):
        self.text = text
        self.tokens = list(self._tokenize(text))
        self.i = 0

    def _tokenize(self, s: str):
        i, n = 0, len(s)
        while i < n:
            ch = s[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and s[j].isdigit():
                    j += 1
                yield ("int", int(s[i:j]), i)
                i = j
            elif ch.isalpha() or ch == "_":
                j = i
                while j < n and (s[j].isalnum() or s[j] == "_"):
                    j += 1
                name = s[i:j]
                if name not in VARIABLES:
                    raise PolynomialSyntaxError(
                        f"unknown identifier {name!r} (variables are x, y, z; "
                        "write products with '*')", i, s)
                yield ("var", name, i)
                i = j
            elif ch in "+-*/^()":
                yield (ch, ch, i)
                i += 1
            else:
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", i, s)
        yield ("end", None, n)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise PolynomialSyntaxError(message, tok[2], self.text)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.unary()
        while True:
            if self.peek()[0] in ("int", "var", "("):
                self.fail("implicit multiplication is not allowed; use '*'")
            if self.peek()[0] not in ("*", "/"):
                break
            op_tok = self.take()
            rhs = self.unary()
            if op_tok[0] == "*":
                value = value * rhs
            else:
                if not rhs.is_homogeneous(0) or rhs.is_zero():
                    self.fail("division only by a nonzero constant", op_tok)
                value = value.scale(1 / rhs.coefficient((0, 0, 0)))
        return value

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer literal", tok)
            self.take()
            if self.peek()[0] == "^":
                self.fail("chained '^' is not allowed; use parentheses")
            return base ** tok[1]
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind = tok[0]
        if kind == "int":
            out = Polynomial.constant(tok[1])
        elif kind == "var":
            out = Polynomial.variable(tok[1])
        elif kind == "(":
            out = self.expr()
            if self.peek()[0] != ")":
                self.fail("expected ')'")
            self.take()
        elif kind == "end":
            self.fail("unexpected end of input", tok)
        else:
            self.fail(f"unexpected {tok[1]!r}", tok)
        return out


def parse_poly(text: str) -> Polynomial:
    """Parse an expression in x, y, z into expanded normal form.

    Integer literals, ``+ - * ^`` and parentheses are accepted; ``/`` is
    allowed only with a nonzero constant divisor so that rational
    coefficients printed by ``str`` parse back.  Implicit multiplication
    (``2x``, ``xy``, ``(x)(y)``) is rejected.
    """
    return _Parser(text).parse()
