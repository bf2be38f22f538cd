"""Exact arithmetic for the coefficient field Q(v), v = q^(1/6).

Everything is done in the single variable v, so all the fractional powers
of q that show up in A2 skein theory become integer exponents:

    q = v^6,  q^(1/2) = v^3,  q^(1/3) = v^2,  q^(1/6) = v.

``LaurentPoly`` is a sparse integer Laurent polynomial in v and ``Scalar``
is a normalized fraction of two of them.  Quantum integers, quantum
binomials, q-Pochhammer symbols and q-(multi)nomials live here as well.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


class LaurentPoly:
    """Sparse Laurent polynomial in v with integer coefficients.

    Terms are stored as a dict {exponent: coefficient} with no zero
    coefficients; two equal polynomials have identical term dicts.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = t.get(e, 0) + c
                if c:
                    t[e] = c
                elif e in t:
                    del t[e]
        self.terms = t
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({0: c}) if c else LaurentPoly()

    @staticmethod
    def monomial(c: int, e: int) -> "LaurentPoly":
        return LaurentPoly({e: c}) if c else LaurentPoly()

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def min_exp(self) -> int:
        return min(self.terms)

    def max_exp(self) -> int:
        return max(self.terms)

    def content(self) -> int:
        """gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms:
            return other
        if not other.terms:
            return self
        t = dict(self.terms)
        for e, c in other.terms.items():
            c2 = t.get(e, 0) + c
            if c2:
                t[e] = c2
            elif e in t:
                del t[e]
        r = LaurentPoly()
        r.terms = t
        return r

    def __neg__(self) -> "LaurentPoly":
        r = LaurentPoly()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return LaurentPoly()
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        t = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                c = t.get(e, 0) + c1 * c2
                if c:
                    t[e] = c
                elif e in t:
                    del t[e]
        r = LaurentPoly()
        r.terms = t
        return r

    def scale(self, c: int) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly()
        r = LaurentPoly()
        r.terms = {e: c * k for e, k in self.terms.items()}
        return r

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by v^e."""
        r = LaurentPoly()
        r.terms = {k + e: c for k, c in self.terms.items()}
        return r

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = LaurentPoly.one()
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact polynomial quotient; raises if the division has a remainder."""
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"inexact division: {self} by {other}")
        return q

    def divmod(self, other):
        """Division with remainder over Q, shifted so both inputs are in Z[v].

        The quotient is returned only when it has integer coefficients;
        otherwise the remainder is reported as nonzero.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return LaurentPoly(), LaurentPoly()
        # work with exponents shifted to be ordinary polynomials
        sh = self.min_exp() - other.min_exp()
        num = {e - self.min_exp(): Fraction(c) for e, c in self.terms.items()}
        den = {e - other.min_exp(): Fraction(c) for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        quo = {}
        while num and max(num) >= dd:
            nd = max(num)
            coef = num[nd] / lead
            quo[nd - dd] = coef
            for e, c in den.items():
                e2 = e + nd - dd
                c2 = num.get(e2, Fraction(0)) - coef * c
                if c2:
                    num[e2] = c2
                elif e2 in num:
                    del num[e2]
        if any(c.denominator != 1 for c in quo.values()) or any(
            c.denominator != 1 for c in num.values()
        ):
            return LaurentPoly(), self  # non-integral: report as remainder
        q = LaurentPoly({e + sh: int(c) for e, c in quo.items()})
        r = LaurentPoly({e + other.min_exp(): int(c) for e, c in num.items()})
        return q, r

    def evaluate(self, v: Fraction) -> Fraction:
        """Exact evaluation at a rational value of v (cross-check hook)."""
        return sum((Fraction(c) * v ** e for e, c in self.terms.items()), Fraction(0))

    # -- comparisons / hashing ---------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.terms.items())))
        return self._hash

    # -- printing ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            parts.append(str(c) if e == 0 else f"{c}*v^{e}")
        return " + ".join(parts)

    def as_q_string(self) -> str:
        """Pretty form with fractional q-exponents (q = v^6)."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
                continue
            g = gcd(abs(e), 6)
            num, den = e // g, 6 // g
            exp = str(num) if den == 1 else f"{num}/{den}"
            parts.append(f"{c}*q^({exp})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


ZERO = LaurentPoly.zero()
ONE = LaurentPoly.one()


def vpow(e: int) -> LaurentPoly:
    """v^e as a polynomial (q^(e/6))."""
    return LaurentPoly({e: 1})


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Primitive gcd in Z[v] of the polynomial parts, lowest exponent 0.

    Monomial factors v^k are deliberately not part of the gcd; they are
    handled by Scalar normalization.
    """
    if a.is_zero():
        return b if b.is_zero() else b.shift(-b.min_exp())
    if b.is_zero():
        return a.shift(-a.min_exp())

    fa = {e - a.min_exp(): Fraction(c) for e, c in a.terms.items()}
    fb = {e - b.min_exp(): Fraction(c) for e, c in b.terms.items()}

    def frem(x, y):
        dd = max(y)
        lead = y[dd]
        x = dict(x)
        while x and max(x) >= dd:
            nd = max(x)
            coef = x[nd] / lead
            for e, c in y.items():
                e2 = e + nd - dd
                c2 = x.get(e2, Fraction(0)) - coef * c
                if c2:
                    x[e2] = c2
                elif e2 in x:
                    del x[e2]
        return x

    while fb:
        fa, fb = fb, frem(fa, fb)
    # rescale to primitive integer form with positive lowest coefficient
    denlcm = 1
    for c in fa.values():
        denlcm = denlcm * c.denominator // gcd(denlcm, c.denominator)
    ints = {e: int(c * denlcm) for e, c in fa.items()}
    g = 0
    for c in ints.values():
        g = gcd(g, c)
    ints = {e: c // g for e, c in ints.items()}
    lo = min(ints)
    if ints[lo] < 0:
        ints = {e: -c for e, c in ints.items()}
    return LaurentPoly({e - lo: c for e, c in ints.items()})


class Scalar:
    """Normalized fraction of Laurent polynomials in v.

    Invariants: denominator nonzero with lowest exponent 0 and positive
    lowest coefficient; numerator and denominator have trivial polynomial
    gcd and coprime integer contents.  Equality is term-by-term identity.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, _normalized=False):
        if den is None:
            den = ONE
        if den.is_zero():
            raise ZeroDivisionError("Scalar with zero denominator")
        if not _normalized:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return Scalar(ZERO, ONE, _normalized=True)

    @staticmethod
    def one() -> "Scalar":
        return Scalar(ONE, ONE, _normalized=True)

    @staticmethod
    def from_int(c: int) -> "Scalar":
        return Scalar(LaurentPoly.const(c), ONE, _normalized=True)

    @staticmethod
    def from_poly(p: LaurentPoly) -> "Scalar":
        return Scalar(p, ONE, _normalized=True)

    @staticmethod
    def vpow(e: int) -> "Scalar":
        return Scalar(LaurentPoly({e: 1}), ONE, _normalized=True)

    # -- queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> LaurentPoly:
        """Lossless conversion back to LaurentPoly; denominator must be 1."""
        if not self.den.is_one():
            raise ArithmeticError(f"scalar {self} is not a Laurent polynomial")
        return self.num

    # -- arithmetic --------------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.num, self.den, _normalized=True)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return self + (-other)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.num.is_zero() or other.num.is_zero():
            return Scalar.zero()
        if self.den.is_one() and other.den.is_one():
            return Scalar(self.num * other.num, ONE, _normalized=True)
        return Scalar(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "Scalar") -> "Scalar":
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero Scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return Scalar.one() / self ** (-n)
        r = Scalar.one()
        for _ in range(n):
            r = r * self
        return r

    def evaluate(self, v: Fraction) -> Fraction:
        return self.num.evaluate(v) / self.den.evaluate(v)

    # -- comparisons / hashing / printing -----------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Scalar) and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __str__(self) -> str:
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def as_q_string(self) -> str:
        if self.den.is_one():
            return self.num.as_q_string()
        return f"({self.num.as_q_string()}) / ({self.den.as_q_string()})"

    def __repr__(self) -> str:
        return f"Scalar({self})"


def _normalize(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return ZERO, ONE
    # pull the monomial content of the denominator into the numerator
    k = den.min_exp()
    if k:
        den = den.shift(-k)
        num = num.shift(-k)
    g = _poly_gcd(num, den)
    if not g.is_one():
        num = num.exact_div(g)
        den = den.exact_div(g)
        k = den.min_exp()
        if k:
            den = den.shift(-k)
            num = num.shift(-k)
    c = gcd(num.content(), den.content())
    if den.terms[den.min_exp()] < 0:
        c = -c
    if c != 1:
        num = LaurentPoly({e: v // c for e, v in num.terms.items()})
        den = LaurentPoly({e: v // c for e, v in den.terms.items()})
    return num, den


# -- quantum combinatorics -------------------------------------------


@lru_cache(maxsize=None)
def quantum_int(n: int) -> LaurentPoly:
    """[n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2)) = sum v^(3(n-1-2j))."""
    if n < 0:
        raise ValueError("quantum_int of a negative integer")
    return LaurentPoly({3 * (n - 1 - 2 * j): 1 for j in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("quantum_factorial of a negative integer")
    r = ONE
    for m in range(1, n + 1):
        r = r * quantum_int(m)
    return r


@lru_cache(maxsize=None)
def quantum_binom(n: int, k: int) -> LaurentPoly:
    """[n]! / ([k]! [n-k]!), computed by exact polynomial division."""
    if not 0 <= k <= n:
        raise ValueError(f"quantum_binom({n}, {k}) out of range")
    return quantum_factorial(n).exact_div(quantum_factorial(k) * quantum_factorial(n - k))


@lru_cache(maxsize=None)
def q_pochhammer(k: int) -> LaurentPoly:
    """(q)_k = prod_{l=1..k} (1 - q^l), with q = v^6."""
    if k < 0:
        raise ValueError("q_pochhammer of a negative integer")
    r = ONE
    for l in range(1, k + 1):
        r = r * LaurentPoly({0: 1, 6 * l: -1})
    return r


@lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> LaurentPoly:
    """(n choose k)_q = (q)_n / ((q)_k (q)_{n-k}), exact."""
    if not 0 <= k <= n:
        raise ValueError(f"q_binom({n}, {k}) out of range")
    return q_pochhammer(n).exact_div(q_pochhammer(k) * q_pochhammer(n - k))


def q_multinomial(n: int, parts) -> LaurentPoly:
    """(n choose n_1,...,n_m)_q = (q)_n / prod (q)_{n_i}, exact."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError("negative part in q_multinomial")
    if sum(parts) != n:
        raise ValueError(f"q_multinomial parts {parts} do not sum to {n}")
    den = ONE
    for p in parts:
        den = den * q_pochhammer(p)
    return q_pochhammer(n).exact_div(den)


def sc(p: LaurentPoly) -> Scalar:
    return Scalar.from_poly(p)


def qint(n: int) -> Scalar:
    return Scalar.from_poly(quantum_int(n))
