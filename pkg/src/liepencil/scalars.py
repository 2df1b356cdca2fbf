"""Exact scalars: rationals and elements of the cyclotomic field Q(zeta_m).

Rationals are plain :class:`fractions.Fraction` values.  An element of
Q(zeta_m) is stored as its coefficient vector modulo the m-th cyclotomic
polynomial, so equality and zero tests are exact.

Mixed arithmetic promotes ``int``/``Fraction`` operands automatically.
Two cyclotomic operands must share the same order; use :meth:`lift` to
move an element into a larger field first.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Fraction",
    "CyclotomicScalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "zeta",
    "canon",
    "lift",
    "format_scalar",
    "parse_scalar",
    "field_of",
]


def euler_phi(m: int) -> int:
    result = m
    p, n = 2, m
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


def _poly_divmod(num, den):
    """Divide integer/rational coefficient lists (low degree first)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for shift in range(len(num) - len(den), -1, -1):
        c = num[shift + len(den) - 1]
        if c:
            c = Fraction(c, lead) if lead != 1 else c
            q[shift] = c
            for i, d in enumerate(den):
                num[shift + i] -= c * d
    return q, num[: len(den) - 1]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients of Phi_m (low degree first), via x^m - 1 over prod Phi_d."""
    if m < 1:
        raise ValueError(f"cyclotomic order must be positive, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem)
    coeffs = tuple(int(c) for c in num)
    assert len(coeffs) == euler_phi(m) + 1
    return coeffs


def _reduce(coeffs, m):
    """Reduce a coefficient list modulo Phi_m (Phi_m is monic)."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = list(coeffs)
    for top in range(len(c) - 1, deg - 1, -1):
        lead = c[top]
        if lead:
            base = top - deg
            for i in range(deg):
                if phi[i]:
                    c[base + i] -= lead * phi[i]
        c[top] = 0
    c = c[:deg] + [0] * (deg - len(c))
    return tuple(x if isinstance(x, Fraction) else Fraction(x) for x in c)


def _poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def _poly_sub_mul(a, b, q):
    """a - b*q for coefficient lists."""
    out = list(a) + [0] * max(0, len(b) + len(q) - 1 - len(a))
    for i, bi in enumerate(b):
        if bi:
            for j, qj in enumerate(q):
                if qj:
                    out[i + j] -= bi * qj
    return _poly_trim(out)


class CyclotomicScalar:
    """An element sum_i c_i zeta^i of Q(zeta_m), reduced modulo Phi_m."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError(f"cyclotomic order must be positive, got {order}")
        self.order = order
        self.coeffs = _reduce(coeffs, order)
        self._hash = None

    @classmethod
    def _raw(cls, order, coeffs):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    # -- helpers ---------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                raise ValueError(
                    f"cyclotomic order mismatch: {self.order} vs {other.order}; lift first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            deg = len(self.coeffs)
            return CyclotomicScalar._raw(
                self.order, (Fraction(other),) + (Fraction(0),) * (deg - 1)
            )
        return None

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicScalar._raw(
            self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar._raw(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicScalar._raw(
            self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicScalar._raw(self.order, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicScalar(self.order, prod)

    __rmul__ = __mul__

    def inverse(self) -> CyclotomicScalar:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # invariant: r_i = s_i * a (mod Phi_m)
        r0, s0 = list(cyclotomic_polynomial(self.order)), []
        r1, s1 = _poly_trim(self.coeffs), [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            r0, r1 = r1, _poly_trim(rem)
            s0, s1 = s1, _poly_sub_mul(s0, s1, _poly_trim(q))
        c = r1[0]
        return CyclotomicScalar(self.order, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return CyclotomicScalar._raw(self.order, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicScalar(self.order, [1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ------------------------------------------------------
    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, CyclotomicScalar):
            if other.order != self.order:
                return canon(self) == canon(other) if self.is_rational() and other.is_rational() else False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
        return self._hash

    def lift(self, order: int) -> CyclotomicScalar:
        """Embed into Q(zeta_order); requires self.order | order."""
        if order % self.order:
            raise ValueError(f"cannot lift Q(zeta_{self.order}) into Q(zeta_{order})")
        step = order // self.order
        out = [0] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return CyclotomicScalar(order, out)

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.order), math.sin(2 * math.pi / self.order))
        return sum(float(c) * z**i for i, c in enumerate(self.coeffs))

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"CyclotomicScalar({self.order}, '{format_scalar(self)}')"


def zeta(m: int) -> CyclotomicScalar:
    """The class of a primitive m-th root of unity in Q(zeta_m)."""
    if m < 1:
        raise ValueError(f"zeta order must be positive, got {m}")
    return CyclotomicScalar(m, [0, 1])


def canon(x):
    """Demote rational cyclotomic values and ints to ``Fraction``."""
    if isinstance(x, CyclotomicScalar):
        return x.coeffs[0] if x.is_rational() else x
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def lift(x, order: int):
    """Coerce any exact scalar into Q(zeta_order) (rationals stay rational)."""
    if isinstance(x, CyclotomicScalar):
        return x if x.order == order else x.lift(order)
    return canon(x)


def field_of(values) -> int:
    """Smallest cyclotomic order containing all given scalars (1 for Q)."""
    order = 1
    for v in values:
        if isinstance(v, CyclotomicScalar) and not v.is_rational():
            order = math.lcm(order, v.order)
    return order


def format_scalar(x) -> str:
    """Render as ``p/q`` or ``a0 + a1*z + a2*z^2``."""
    x = canon(x)
    if isinstance(x, Fraction):
        return str(x)
    parts = []
    for i, c in enumerate(x.coeffs):
        if not c:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*z")
        else:
            parts.append(f"{c}*z^{i}")
    return " + ".join(parts).replace(" + -", " - ") if parts else "0"


_TERM = re.compile(r"^(?:(?P<coef>[0-9]+(?:/[0-9]+)?)(?:\*)?)?(?P<z>z(?:\^(?P<exp>[0-9]+))?)?$")


def parse_scalar(text, field: int | None = None):
    """Parse the :func:`format_scalar` text form.

    ``field`` is the cyclotomic order used to interpret ``z``; it is only
    required when ``z`` actually occurs.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"cannot parse scalar from {text!r}")
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    s = s.replace("+-", "-").replace("--", "+")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    if "".join(tokens) != s:
        raise ValueError(f"malformed scalar {text!r}")
    coeffs: dict[int, Fraction] = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        body = tok.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("z") is None):
            raise ValueError(f"malformed scalar term {tok!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        exp = 0
        if m.group("z"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    if max(coeffs) == 0:
        return coeffs[0]
    if field is None:
        raise ValueError(f"scalar {text!r} uses z but no cyclotomic order was given")
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return canon(CyclotomicScalar(field, out))
