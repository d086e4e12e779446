"""Dense univariate polynomials and rational functions over an exact field.

Coefficients live in one of two exact fields: the rationals (elements are
``fractions.Fraction``) or a prime field F_p (elements are ints in
``[0, p)``).  A polynomial a_0 + a_1 t + ... + a_n t^n is stored as the
tuple ``(a_0, ..., a_n)`` with a nonzero top coefficient; the zero
polynomial is the empty tuple.

Rational functions are stored as a reduced pair ``num/den`` with ``den``
monic and ``gcd(num, den) = 1``, so the t-adic order of either part is
read off the first nonzero coefficient and never needs series expansion.
"""

from __future__ import annotations

from fractions import Fraction


class RationalField:
    """The field Q. Elements are Fraction instances."""

    char = 0

    def normalize(self, a):
        if isinstance(a, Fraction):
            return a
        if isinstance(a, int):
            return Fraction(a)
        raise TypeError(f"cannot coerce {a!r} into Q")

    def from_fraction(self, q: Fraction) -> Fraction:
        return q

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def div(self, a, b):
        return a * self.invert(b)

    def pth_root(self, a):
        raise ArithmeticError("no Frobenius root in characteristic 0")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """The field F_p for a prime p. Elements are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1 % p

    def normalize(self, a):
        if isinstance(a, int):
            return a % self.p
        if isinstance(a, Fraction):
            return self.from_fraction(a)
        raise TypeError(f"cannot coerce {a!r} into F_{self.p}")

    def from_fraction(self, q: Fraction) -> int:
        if q.denominator % self.p == 0:
            raise ZeroDivisionError(f"{q} has no image in F_{self.p}")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def invert(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 in F_{self.p}")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.invert(b) % self.p

    def pth_root(self, a):
        # Frobenius x -> x^p is the identity on the prime field.
        return a % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Poly:
    """Dense polynomial in t over a RationalField or PrimeField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = [field.normalize(c) for c in coeffs]
        while cs and cs[-1] == field.zero:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def gen(cls, field):
        return cls(field, (field.zero, field.one))

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def t_order(self):
        """Index of the first nonzero coefficient; None for zero."""
        for i, c in enumerate(self.coeffs):
            if c != self.field.zero:
                return i
        return None

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        c = f.normalize(c)
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, k: int):
        """Multiply by t^k."""
        if self.is_zero() or k == 0:
            return self if k >= 0 else self._shift_down(-k)
        if k < 0:
            return self._shift_down(-k)
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def _shift_down(self, k: int):
        order = self.t_order()
        if order is None:
            return self
        if order < k:
            raise ValueError("shift would leave the polynomial ring")
        return Poly(self.field, self.coeffs[k:])

    def divmod(self, other):
        """Euclidean division; ``other`` must be nonzero."""
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        div = other.coeffs
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly(f), self
        inv_lead = f.invert(div[-1])
        quo = [f.zero] * (dq + 1)
        for i in range(dq, -1, -1):
            c = f.mul(rem[i + len(div) - 1], inv_lead)
            quo[i] = c
            if c != f.zero:
                for j, d in enumerate(div):
                    rem[i + j] = f.sub(rem[i + j], f.mul(c, d))
        return Poly(f, quo), Poly(f, rem[: len(div) - 1])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.field.invert(self.leading()))

    def derivative(self):
        f = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(f.mul(f.normalize(i), c))
        return Poly(f, out)

    def evaluate(self, x):
        f = self.field
        x = f.normalize(x)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def compose_power(self, d: int):
        """Substitute t -> t^d."""
        if d < 1:
            raise ValueError("power substitution needs d >= 1")
        if d == 1 or self.is_zero():
            return self
        f = self.field
        out = [f.zero] * ((len(self.coeffs) - 1) * d + 1)
        for i, c in enumerate(self.coeffs):
            out[i * d] = c
        return Poly(f, out)

    def gcd_monic(self, other):
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == self.field.zero:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == self.field.one else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == self.field.one else f"{c}*t^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.field!r}, {self})"


class RationalFunction:
    """Reduced fraction of polynomials with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if num.is_zero():
            den = Poly.constant(num.field, num.field.one)
        else:
            g = num.gcd_monic(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
            lead_inv = num.field.invert(den.leading())
            num = num.scale(lead_inv)
            den = den.scale(lead_inv)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, field, c):
        return cls(Poly.constant(field, c), Poly.constant(field, field.one))

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.constant(p.field, p.field.one))

    @property
    def field(self):
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def t_order(self):
        """t-adic valuation; None for the zero function."""
        n = self.num.t_order()
        if n is None:
            return None
        return n - self.den.t_order()

    def __eq__(self, other):
        return (
            isinstance(other, RationalFunction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def compose_power(self, d: int):
        return RationalFunction(
            self.num.compose_power(d), self.den.compose_power(d)
        )

    def unit_part_at_origin(self):
        """Value of t^-v(x) * x at t = 0, for nonzero x."""
        n = self.num.t_order()
        if n is None:
            raise ZeroDivisionError("zero has no unit part")
        d = self.den.t_order()
        f = self.field
        top = self.num.coeffs[n]
        bot = self.den.coeffs[d]
        return f.div(top, bot)

    def __str__(self):
        if self.den.degree() == 0 and self.den.constant_term() == self.field.one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"
