"""Symbolic Grothendieck ring of varieties on generator symbols.

The ring is free on the generators: the class of a point (the unit), the
Lefschetz class L of the affine line, projective spaces P^n, the torus Gm,
and smooth proper connected curves of genus g.  Scissor relations between
generators (such as [P^1] = L + 1) are *not* imposed on canonical forms;
they hold after realization and are checked by tests.  Geometry enters
only through the realizations:

* the Poincare polynomial, a ring morphism into Z[T] with the alternating
  sign convention P = sum (-1)^i beta_i T^i, so that P(point) = 1,
  P(L) = T^2, P(curve of genus g) = 1 - 2g T + T^2, and P(1) is the Euler
  characteristic;
* point counting over F_q on the counting generators (no count is carried
  by positive-genus curve symbols);
* the sound-but-incomplete comparison in the quotient by (L - 1): residues
  of Poincare polynomials mod T^2 - 1 certify that two classes differ,
  never that they agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class IntPoly:
    """Polynomial with integer coefficients (ascending, no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(int(c) for c in cs)

    @classmethod
    def monomial(cls, c: int, k: int) -> "IntPoly":
        return cls((0,) * k + (c,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def scale(self, c: int) -> "IntPoly":
        return IntPoly([c * a for a in self.coeffs])

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def mod_t2_minus_1(self) -> "IntPoly":
        """Residue modulo T^2 - 1 (fold T^2 -> 1)."""
        even = sum(self.coeffs[0::2])
        odd = sum(self.coeffs[1::2])
        return IntPoly((even, odd))

    def __str__(self, var: str = "T"):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"IntPoly({self})"


# Generator atoms.  The class of a point is the ring unit and corresponds
# to the empty monomial, so it never appears as an atom.
LEFSCHETZ = ("L",)
GM = ("Gm",)


def proj_atom(n: int):
    if n < 1:
        raise ValueError("projective space generator needs n >= 1")
    return ("P", n)


def curve_atom(g: int):
    if g < 0:
        raise ValueError("curve genus must be >= 0")
    return ("C", g)


def _atom_str(atom) -> str:
    if atom == LEFSCHETZ:
        return "L"
    if atom == GM:
        return "Gm"
    if atom[0] == "P":
        return f"Pn({atom[1]})"
    return f"C({atom[1]})"


class GrothElement:
    """Formal integer combination of monomials in the generator symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mono, coeff in (terms or {}).items():
            if coeff:
                clean[tuple(sorted(mono))] = int(coeff)
        self.terms = clean

    # ---- constructors ------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def from_int(cls, n: int):
        return cls({(): n})

    @classmethod
    def point(cls):
        return cls.from_int(1)

    @classmethod
    def lefschetz(cls):
        return cls({(LEFSCHETZ,): 1})

    @classmethod
    def proj_space(cls, n: int):
        return cls({(proj_atom(n),): 1})

    @classmethod
    def gm(cls):
        return cls({(GM,): 1})

    @classmethod
    def curve(cls, g: int):
        return cls({(curve_atom(g),): 1})

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, GrothElement):
            return other
        if isinstance(other, int):
            return cls.from_int(other)
        return NotImplemented

    # ---- ring operations ------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, 0) + coeff
        return GrothElement(out)

    __radd__ = __add__

    def __neg__(self):
        return GrothElement({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(sorted(m1 + m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return GrothElement(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms):
            coeff = self.terms[mono]
            body = "*".join(_atom_str(a) for a in mono) if mono else "pt"
            if body == "pt":
                term = str(coeff)
            elif coeff == 1:
                term = body
            elif coeff == -1:
                term = f"-{body}"
            else:
                term = f"{coeff}*{body}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"GrothElement({self})"


def _atom_poincare(atom) -> IntPoly:
    if atom == LEFSCHETZ:
        return IntPoly((0, 0, 1))
    if atom == GM:
        return IntPoly((-1, 0, 1))
    if atom[0] == "P":
        n = atom[1]
        coeffs = [0] * (2 * n + 1)
        coeffs[0::2] = [1] * (n + 1)
        return IntPoly(coeffs)
    g = atom[1]
    return IntPoly((1, -2 * g, 1))


def poincare(a: GrothElement) -> IntPoly:
    """Poincare-polynomial realization into Z[T].

    Determined on generators (point -> 1, L -> T^2, P^n -> 1+T^2+...+T^2n,
    Gm -> T^2 - 1, genus-g curve -> 1 - 2g T + T^2) and extended as a ring
    morphism.
    """
    total = IntPoly()
    for mono, coeff in a.terms.items():
        prod = IntPoly((1,))
        for atom in mono:
            prod = prod * _atom_poincare(atom)
        total = total + prod.scale(coeff)
    return total


def euler(a: GrothElement) -> int:
    """Topological Euler characteristic: the Poincare polynomial at T = 1."""
    return poincare(a).evaluate(1)


class QuotientVerdict(enum.Enum):
    """Outcome of comparison in the quotient ring modulo (L - 1)."""

    DISTINCT = "distinct"
    INDISTINGUISHABLE = "indistinguishable"


@dataclass(frozen=True)
class QuotientComparison:
    verdict: QuotientVerdict
    residue: IntPoly  # P(a - b) mod T^2 - 1


def eq_mod_L_minus_1(a: GrothElement, b: GrothElement) -> QuotientComparison:
    """Sound, incomplete comparison of classes modulo (L - 1).

    A nonzero residue of P(a - b) modulo T^2 - 1 certifies that the images
    of a and b in the quotient ring differ.  A zero residue proves
    nothing: the test is one-sided by design.
    """
    a = GrothElement._coerce(a)
    b = GrothElement._coerce(b)
    residue = poincare(a - b).mod_t2_minus_1()
    if residue.is_zero():
        return QuotientComparison(QuotientVerdict.INDISTINGUISHABLE, residue)
    return QuotientComparison(QuotientVerdict.DISTINCT, residue)


class CountUnavailable(ValueError):
    """Point counting asked of a generator that carries no count."""


def point_count_polynomial(a: GrothElement) -> IntPoly:
    """Number of F_q-points as a polynomial in q, when defined.

    Counts exist for the point, L, P^n and Gm generators; a genus-g curve
    symbol carries no count and raises.
    """
    total = IntPoly()
    for mono, coeff in a.terms.items():
        prod = IntPoly((1,))
        for atom in mono:
            if atom == LEFSCHETZ:
                factor = IntPoly((0, 1))
            elif atom == GM:
                factor = IntPoly((-1, 1))
            elif atom[0] == "P":
                factor = IntPoly((1,) * (atom[1] + 1))
            else:
                raise CountUnavailable(f"no point count for {_atom_str(atom)}")
            prod = prod * factor
        total = total + prod.scale(coeff)
    return total


def serre_euler(inv) -> int:
    """Euler characteristic of the motivic Serre invariant of a curve.

    Zero in the semi-stable cases (the Serre class is 0 for multiplicative
    reduction and a genus-1 curve class for good reduction), the component
    count for additive reduction.
    """
    from . import kodaira

    return euler(kodaira.serre_class(inv.type))


# ---- expression parsing for the CLI ----------------------------------------

import re as _re

_GROTH_TOKEN_RE = _re.compile(r"\s*(\d+|pt|L|Gm|Pn|C|\*\*|[()+\-*^,])")


class GrothSyntaxError(ValueError):
    """Malformed Grothendieck-ring expression."""


def _groth_tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _GROTH_TOKEN_RE.match(text, pos)
        if not m:
            raise GrothSyntaxError(f"bad character at {text[pos:]!r}")
        tok = m.group(1)
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _GrothParser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, tok):
        got = self.take()
        if got != tok:
            raise GrothSyntaxError(f"expected {tok!r}, got {got!r}")

    def parse(self) -> GrothElement:
        value = self.expr()
        if self.peek() is not None:
            raise GrothSyntaxError(f"trailing input {self.tokens[self.pos:]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() == "*":
            self.take()
            value = value * self.factor()
        return value

    def factor(self):
        sign = 1
        while self.peek() in ("+", "-"):
            if self.take() == "-":
                sign = -sign
        value = self.power()
        return value if sign > 0 else -value

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if tok is None or not tok.isdigit():
                raise GrothSyntaxError("exponent must be a nonnegative integer")
            out = GrothElement.point()
            for _ in range(int(tok)):
                out = out * base
            return out
        return base

    def _int_arg(self) -> int:
        self.expect("(")
        tok = self.take()
        if tok is None or not tok.isdigit():
            raise GrothSyntaxError("expected an integer argument")
        self.expect(")")
        return int(tok)

    def atom(self):
        tok = self.take()
        if tok is None:
            raise GrothSyntaxError("unexpected end of expression")
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok == "pt":
            return GrothElement.point()
        if tok == "L":
            return GrothElement.lefschetz()
        if tok == "Gm":
            return GrothElement.gm()
        if tok == "Pn":
            return GrothElement.proj_space(self._int_arg())
        if tok == "C":
            return GrothElement.curve(self._int_arg())
        if tok.isdigit():
            return GrothElement.from_int(int(tok))
        raise GrothSyntaxError(f"unexpected token {tok!r}")


def parse_groth(text: str) -> GrothElement:
    """Parse expressions like ``C(1) - 4*pt`` or ``Gm*Gm + L^2``."""
    tokens = _groth_tokens(text)
    if not tokens:
        raise GrothSyntaxError("empty expression")
    return _GrothParser(tokens).parse()
