"""Exact dense univariate polynomials, cycle indices and root tools.

Coefficient tuples are stored constant term first with no trailing zeros,
so structural equality is polynomial equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import NoConvergence, NonIntegral, ZeroPolynomial


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _Poly:
    __slots__ = ("coeffs",)
    _coerce = staticmethod(lambda c: c)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([self._coerce(c) for c in coeffs])

    @classmethod
    def monomial(cls, k: int, c=1):
        return cls([0] * k + [c])

    @classmethod
    def x(cls):
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree, ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _promote(self, other):
        if isinstance(other, _Poly):
            cls = RatPoly if RatPoly in (type(self), type(other)) else IntPoly
            return cls, other.coeffs
        if isinstance(other, int):
            return type(self), (other,)
        if isinstance(other, Fraction):
            return RatPoly, (other,)
        return None, None

    def __add__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, oc
        size = max(len(a), len(b))
        return cls([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])

    __radd__ = __add__

    def __neg__(self):
        return type(self)([-c for c in self.coeffs])

    def __sub__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        return self + (-cls(oc))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls, oc = self._promote(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, oc
        if not a or not b:
            return cls()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return cls(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c):
        return self * c

    def __call__(self, a):
        """Horner evaluation; exact for int and Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def eval_int(self, a: int):
        return self(a)

    def eval_rat(self, a) -> Fraction:
        return Fraction(self(Fraction(a)))

    def reflect(self):
        """``P(-x)``."""
        return type(self)([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def shift(self, a):
        """``P(x + a)``."""
        return compose(self, type(self)([a, 1]))

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_monic(self) -> bool:
        return self.leading() == 1

    def content_divide(self, d):
        """Exact division of every coefficient by the integer ``d``."""
        if any(c % d for c in self.coeffs):
            raise NonIntegral(f"coefficients not divisible by {d}")
        return type(self)([c // d for c in self.coeffs])

    def lowest_degree(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ZeroPolynomial("zero polynomial has no lowest term")

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({render(self)!r})"


class IntPoly(_Poly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise NonIntegral(f"non-integer coefficient {c}")
            return c.numerator
        if isinstance(c, bool) or not isinstance(c, int):
            if isinstance(c, Rational) and c.denominator == 1:
                return int(c)
            raise TypeError(f"IntPoly coefficient must be int, got {type(c).__name__}")
        return c

    @classmethod
    def from_json(cls, data: Sequence) -> IntPoly:
        return cls(int(c) for c in data)

    def to_rat(self) -> RatPoly:
        return RatPoly(self.coeffs)

    def to_int_poly(self) -> IntPoly:
        return self


class RatPoly(_Poly):
    """Polynomial with rational coefficients kept in lowest terms."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        return Fraction(c)

    def to_int_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)


def compose(outer: _Poly, inner: _Poly):
    """``outer(inner(x))`` by Horner's rule in polynomial arithmetic."""
    cls = RatPoly if RatPoly in (type(outer), type(inner)) else IntPoly
    acc = cls()
    for c in reversed(outer.coeffs):
        acc = acc * inner + cls([c])
    return acc


def rising_factorial(n: int) -> IntPoly:
    """``x(x+1)...(x+n-1)``."""
    p = IntPoly([1])
    for i in range(n):
        p = p * IntPoly([i, 1])
    return p


def falling_factorial(n: int) -> IntPoly:
    """``x(x-1)...(x-n+1)``."""
    p = IntPoly([1])
    for i in range(n):
        p = p * IntPoly([-i, 1])
    return p


def stirling_first_unsigned(n: int, k: int) -> int:
    """Number of permutations of ``n`` points with exactly ``k`` cycles."""
    row = [1]
    for m in range(n):
        # c(m+1, k) = m*c(m, k) + c(m, k-1)
        row = [m * (row[j] if j < len(row) else 0) + (row[j - 1] if j else 0) for j in range(m + 2)]
    return row[k] if 0 <= k < len(row) else 0


def _iroot_ceil(a: int, k: int) -> int:
    """Smallest integer ``r >= 0`` with ``r**k >= a``."""
    if a <= 0:
        return 0
    r = int(round(a ** (1.0 / k)))
    while r**k < a:
        r += 1
    while r > 0 and (r - 1) ** k >= a:
        r -= 1
    return r


def root_bound(P: IntPoly) -> int:
    """Integer upper bound on the modulus of every complex root (Fujiwara)."""
    if not P:
        raise ZeroPolynomial("zero polynomial")
    d = P.degree
    lead = abs(P.leading())
    bound = 0
    for k in range(1, d + 1):
        c = abs(P[d - k])
        if not c:
            continue
        ratio = Fraction(c, 2 * lead if k == d else lead)
        bound = max(bound, _iroot_ceil(-(-ratio.numerator // ratio.denominator), k))
    return 2 * bound


def integer_roots(P: IntPoly) -> dict[int, int]:
    """All integer roots of ``P`` mapped to their multiplicities."""
    if not P:
        raise ZeroPolynomial("zero polynomial")
    roots: dict[int, int] = {}
    low = P.lowest_degree()
    if low:
        roots[0] = low
    Q = IntPoly(P.coeffs[low:])
    B = root_bound(Q) if Q.degree > 0 else 0
    for r in range(-B, B + 1):
        if r == 0:
            continue
        mult = 0
        R = Q
        while R.degree > 0 and R(r) == 0:
            R = synthetic_divide(R, r)
            mult += 1
        if mult:
            roots[r] = mult
    return dict(sorted(roots.items()))


def synthetic_divide(P: IntPoly, r: int) -> IntPoly:
    """Quotient of ``P`` by ``(x - r)``; ``r`` must be a root."""
    out = []
    acc = 0
    for c in reversed(P.coeffs):
        acc = acc * r + c
        out.append(acc)
    if out[-1] != 0:
        raise NonIntegral(f"{r} is not a root")
    return type(P)(reversed(out[:-1]))


def negative_root_run(P: IntPoly) -> int:
    """Largest ``a`` with ``P(-1) = ... = P(-a) = 0``."""
    if not P:
        raise ZeroPolynomial("zero polynomial")
    a = 0
    while P(-(a + 1)) == 0:
        a += 1
    return a


def complex_roots(P: _Poly, tol: float = 1e-10, maxsteps: int = 10_000, dps: int = 50):
    """Numerical roots of ``P`` with a relative residual below ``tol``.

    Exact factors of ``x`` are split off first and reported as exact zeros.
    The remaining roots come from a Durand-Kerner iteration carried out at
    ``dps`` decimal digits. Returns ``(root, residual)`` pairs sorted by real
    then imaginary part, where residual is ``|P(root)| / max|coeff|``.
    """
    import mpmath

    if P.degree < 1:
        raise ZeroPolynomial("need degree >= 1")
    low = P.lowest_degree()
    Q = type(P)(P.coeffs[low:])
    norm = max(abs(c) for c in P.coeffs)
    found = [complex(0.0)] * low
    if Q.degree >= 1:
        with mpmath.workdps(dps):
            coeffs = [mpmath.mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpmath.mpf(c)
                      for c in reversed(Q.coeffs)]
            try:
                rts = mpmath.polyroots(coeffs, maxsteps=maxsteps, extraprec=4 * dps)
            except mpmath.libmp.NoConvergence as exc:
                raise NoConvergence(str(exc)) from exc
            found.extend(complex(r) for r in rts)
            residuals = [float(abs(mpmath.polyval(coeffs, r))) / float(norm) for r in rts]
    else:
        residuals = []
    result = [(z, 0.0) for z in found[:low]] + list(zip(found[low:], residuals))
    for z, res in result:
        if res >= tol:
            raise NoConvergence(f"root {z} has residual {res:.3g} >= {tol}")
    result.sort(key=lambda zr: (round(zr[0].real, 12), round(zr[0].imag, 12)))
    return result


# ----------------------------------------------------------------- rendering


def _fmt_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c.numerator}/{c.denominator})"
    return str(int(c))


def render(P: _Poly, var: str = "x") -> str:
    """Descending powers with explicit signs, e.g. ``x^4 - 2x^3 + 3x^2 - 2x``."""
    if not P.coeffs:
        return "0"
    parts = []
    for k in range(P.degree, -1, -1):
        c = P.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = _fmt_coeff(mag) if (mag != 1 or k == 0) else ""
        term = body + mono
        if not parts:
            parts.append(("-" if sign == "-" else "") + term)
        else:
            parts.append(f" {sign} {term}")
    return "".join(parts)


_TERM = re.compile(r"([+-]?)\s*(?:\((-?\d+)/(\d+)\)|(\d+))?\s*(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> _Poly:
    """Inverse of :func:`render`."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return IntPoly()
    pos = 0
    coeffs: dict[int, Fraction] = {}
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {s[pos:]!r}")
        sign, num, den, whole, xpart, power = m.groups()
        if num is not None:
            c = Fraction(int(num), int(den))
        elif whole is not None:
            c = Fraction(int(whole))
        elif xpart:
            c = Fraction(1)
        else:
            raise ValueError(f"empty term in {text!r}")
        if sign == "-":
            c = -c
        k = 0 if not xpart else (int(power) if power else 1)
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
    dense = [coeffs.get(k, 0) for k in range(max(coeffs) + 1)]
    rat = RatPoly(dense)
    return rat.to_int_poly() if rat.is_integral() else rat


# -------------------------------------------------------------- cycle index


class CycleIndex:
    """Unnormalized cycle index: exponent vectors ``(e_1..e_n)`` to counts."""

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: dict[tuple[int, ...], int]):
        for exps in terms:
            if len(exps) != degree or sum((i + 1) * e for i, e in enumerate(exps)) != degree:
                raise ValueError(f"monomial {exps} does not have weight {degree}")
        self.degree = degree
        self.terms = {k: v for k, v in terms.items() if v}

    def total(self) -> int:
        return sum(self.terms.values())

    def specialize(self, values: Sequence) -> _Poly:
        """Substitute ``s_i := values[i-1]`` where each value is a poly or number."""
        acc = IntPoly()
        for exps, coef in self.terms.items():
            term = IntPoly([coef])
            for v, e in zip(values, exps):
                if e:
                    term = term * (v**e if isinstance(v, _Poly) else IntPoly([v**e]))
            acc = acc + term
        return acc

    def all_equal(self) -> IntPoly:
        """``Z(x, x, ..., x)``."""
        out = [0] * (self.degree + 1)
        for exps, coef in self.terms.items():
            out[sum(exps)] += coef
        return IntPoly(out)

    def partial_at_ones(self, k: int) -> int:
        """``dZ/ds_k`` evaluated at all ones."""
        return sum(coef * exps[k - 1] for exps, coef in self.terms.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleIndex) and (self.degree, self.terms) == (other.degree, other.terms)

    def __str__(self) -> str:
        parts = []
        for exps in sorted(self.terms, reverse=True):
            coef = self.terms[exps]
            mono = " ".join(
                f"s{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
            )
            parts.append((f"{coef} " if coef != 1 else "") + mono)
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"CycleIndex({self})"


__all__ = [
    "IntPoly",
    "RatPoly",
    "CycleIndex",
    "compose",
    "rising_factorial",
    "falling_factorial",
    "stirling_first_unsigned",
    "negative_root_run",
    "integer_roots",
    "complex_roots",
    "render",
    "parse_poly",
]
