"""Sparse multivariate polynomials with exact coefficients.

A polynomial in ``n`` variables is a mapping from exponent tuples (length
``n``) to nonzero coefficients.  Variable ``i`` stands for the i-th basis
vector of a Lie algebra, i.e. the i-th coordinate function on the dual.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import canon, format_scalar

_ZERO = Fraction(0)


def _add_into(acc, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = canon(v)
    else:
        acc.pop(key, None)


_ATOM = re.compile(r"[A-Za-z_][\w.]*(\([\w,]*\))?")


def _atom(label: str) -> str:
    """Bracket composite labels such as ``(H1+H2)*t^4`` so products stay readable."""
    return label if _ATOM.fullmatch(label) else f"[{label}]"


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for mono, c in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"exponent {mono} does not have {nvars} entries")
                if c:
                    clean[tuple(mono)] = canon(c)
        self.terms = clean

    @classmethod
    def _wrap(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, nvars):
        return cls._wrap(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars, i, c=1):
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): c})

    @classmethod
    def linear(cls, coeffs):
        n = len(coeffs)
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                mono = [0] * n
                mono[i] = 1
                out[tuple(mono)] = canon(c)
        return cls._wrap(n, out)

    # -- queries -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def variables(self):
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic --------------------------------------------------------
    def _check(self, other):
        if other.nvars != self.nvars:
            raise ValueError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        self._check(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return Polynomial._wrap(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._wrap(self.nvars, {m: canon(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_into(acc, tuple(a + b for a, b in zip(m1, m2)), c1 * c2)
        return Polynomial._wrap(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(self.nvars, 1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus and evaluation -------------------------------------------
    def derivative(self, i: int) -> Polynomial:
        acc = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                nm = m[:i] + (e - 1,) + m[i + 1:]
                acc[nm] = canon(c * e)
        return Polynomial._wrap(self.nvars, acc)

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        total = _ZERO
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = v * x**e
                    if not v:
                        break
            total = total + v
        return canon(total)

    def gradient(self, point):
        return [self.derivative(i).evaluate(point) if any(m[i] for m in self.terms) else _ZERO
                for i in range(self.nvars)]

    # -- weights and substitutions -------------------------------------------
    def weight_components(self, weights) -> dict:
        """Split by monomial weight sum_i weights[i] * exponent_i."""
        out: dict = {}
        for m, c in self.terms.items():
            w = sum(a * b for a, b in zip(weights, m) if b)
            out.setdefault(w, {})[m] = c
        return {w: Polynomial._wrap(self.nvars, t) for w, t in sorted(out.items())}

    def restrict(self, keep) -> Polynomial:
        """Set every variable outside ``keep`` to zero."""
        keep = set(keep)
        return Polynomial._wrap(self.nvars, {
            m: c for m, c in self.terms.items()
            if all(not e or i in keep for i, e in enumerate(m))})

    def embed(self, nvars: int, mapping) -> Polynomial:
        """Rename variable i to mapping[i] in a ring with ``nvars`` variables."""
        acc = {}
        for m, c in self.terms.items():
            nm = [0] * nvars
            for i, e in enumerate(m):
                if e:
                    nm[mapping[i]] += e
            _add_into(acc, tuple(nm), c)
        return Polynomial._wrap(nvars, acc)

    def substitute(self, images) -> Polynomial:
        """Replace variable i by the polynomial images[i] (all in one common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].nvars if images else 0
        powers: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in powers:
                powers[key] = images[i] if e == 1 else power(i, e - 1) * images[i]
            return powers[key]

        acc = Polynomial.zero(target)
        for m, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            acc = acc + term
        return acc

    def scale_variables(self, factors) -> Polynomial:
        """Substitute x_i -> factors[i] * x_i."""
        acc = {}
        for m, c in self.terms.items():
            v = c
            for f, e in zip(factors, m):
                if e:
                    v = v * f**e
            if v:
                acc[m] = canon(v)
        return Polynomial._wrap(self.nvars, acc)

    # -- rendering -----------------------------------------------------------
    def sorted_terms(self):
        """Canonical order: total degree descending, then exponents lexicographically descending."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))

    def to_text(self, labels=None) -> str:
        if not self.terms:
            return "0"
        labels = [_atom(x) for x in labels] if labels else [f"x{i}" for i in range(self.nvars)]
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(labels[i])
                elif e:
                    factors.append(f"{labels[i]}^{e}")
            coef = format_scalar(c)
            if " + " in coef:
                coef = f"({coef})"
            if factors and coef in ("1", "-1"):
                parts.append(coef[:-1] + "*".join(factors))
            else:
                parts.append("*".join([coef] + factors) if factors else coef)
        return " + ".join(parts).replace(" + -", " - ")

    def to_json(self):
        return [[list(m), format_scalar(c)] for m, c in self.sorted_terms()]

    def __repr__(self):
        return f"Polynomial({self.to_text()})"
