"""Exact coefficient arithmetic: rationals, dense polynomials and rational
functions in the single algebra parameter (printed as ``d``).

All values are immutable and hashable, so they can serve as keys and as
coefficients in sparse maps shared across threads.
"""

from __future__ import annotations

from fractions import Fraction

BigRational = Fraction


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients.

    ``coeffs[k]`` is the coefficient of d**k; trailing zeros are stripped, so
    the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = hash(self.coeffs)

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((as_rational(c),))

    @classmethod
    def delta(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def constant_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = as_rational(c)
        return Polynomial(tuple(x * c for x in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by d**k."""
        if not self.coeffs:
            return self
        return Polynomial((Fraction(0),) * k + self.coeffs)

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(Fraction(1, 1) / lead)

    def divmod(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dn, dd = len(rem) - 1, other.degree
        lead = other.coeffs[-1]
        if dn < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (dn - dd + 1)
        for k in range(dn - dd, -1, -1):
            c = rem[dd + k] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[j + k] -= c * b
        return Polynomial(quot), Polynomial(rem)

    def evaluate(self, v) -> Fraction:
        v = as_rational(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def substitute_negated(self) -> "Polynomial":
        """The polynomial with d replaced by -d."""
        return Polynomial(tuple(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}d" if k == 1 else f"{mag}d^{k}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def _as_poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial((x,))
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor, gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """Reduced ratio of two polynomials with a monic denominator.

    The representation is canonical, so structural equality coincides with
    equality of functions.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Polynomial.const(1) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Polynomial(), Polynomial.const(1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != 1:
                inv = Fraction(1) / lead
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den
        self._hash = hash((num, den))

    @classmethod
    def const(cls, c) -> "RationalFunction":
        return cls(Polynomial.const(c))

    @classmethod
    def delta(cls) -> "RationalFunction":
        return cls(Polynomial.delta())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.coeffs == (Fraction(1),) and self.den.coeffs == (Fraction(1),)

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def constant_value(self) -> Fraction:
        if not self.is_const():
            raise ValueError(f"{self} is not constant")
        if self.num.is_zero():
            return Fraction(0)
        return self.num.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.const(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return self._hash

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __add__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rf(other))

    def __rsub__(self, other):
        return _as_rf(other) + (-self)

    def __mul__(self, other):
        other = _as_rf(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_rf(other) / self

    def inverse(self) -> "RationalFunction":
        return RationalFunction.const(1) / self

    def evaluate(self, v) -> Fraction:
        v = as_rational(v)
        dv = self.den.evaluate(v)
        if dv == 0:
            factor = f"d - {v}" if v >= 0 else f"d + {-v}"
            raise PoleError(
                f"denominator factor ({factor}) vanishes at d = {v}"
            )
        return self.num.evaluate(v) / dv

    def substitute_negated(self) -> "RationalFunction":
        return RationalFunction(self.num.substitute_negated(), self.den.substitute_negated())

    def __str__(self):
        if self.den.degree <= 0:
            if self.num.is_const():
                return str(self.constant_value()) if not self.num.is_zero() else "0"
            return str(self.num)
        num = str(self.num) if self.num.is_const() else f"({self.num})"
        return f"{num}/({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def _as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, Polynomial)):
        return RationalFunction(_as_poly(x))
    raise TypeError(f"cannot interpret {x!r} as a rational function")


RF_ZERO = RationalFunction.const(0)
RF_ONE = RationalFunction.const(1)


def rf_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Reduced canonical form of num/den with a monic denominator."""
    return RationalFunction(num, den)


def rf_arith(op: str, a: RationalFunction, b: RationalFunction) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_evaluate(f: RationalFunction, value) -> Fraction:
    return f.evaluate(value)


def rational_to_str(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}" if c.denominator != 1 else str(c.numerator)


def rf_to_json(f: RationalFunction) -> dict:
    return {
        "num": [rational_to_str(c) for c in f.num.coeffs],
        "den": [rational_to_str(c) for c in f.den.coeffs],
    }


def rf_from_json(obj: dict) -> RationalFunction:
    return RationalFunction(
        Polynomial([Fraction(c) for c in obj["num"]]),
        Polynomial([Fraction(c) for c in obj["den"]]),
    )
