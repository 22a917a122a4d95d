"""Sparse multivariate polynomials over the rationals, with gradings.

Coefficients are exact `fractions.Fraction` values.  A `VariableContext`
fixes an ordered variable set; at most one distinguished variable per
context may carry half-integer exponents (used for square-root sections),
all other exponents are non-negative integers.  Contexts also register
named gradings: linear weight functionals on exponent vectors plus a
constant shift, taking values in the rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Rational = Fraction


class ContextMismatchError(ValueError):
    """Raised when operands were built over different variable contexts."""


class UnsupportedDerivativeError(ValueError):
    """Raised on differentiation in the distinguished half-integer slot."""


class Grading:
    """A rational weight per variable plus a constant shift."""

    __slots__ = ("weights", "shift")

    def __init__(self, weights: Iterable, shift=0):
        self.weights = tuple(Fraction(w) for w in weights)
        self.shift = Fraction(shift)


class VariableContext:
    """Ordered variable set, optional half-integer slot, named gradings."""

    __slots__ = ("names", "_index", "half_slot", "gradings")

    def __init__(self, names: Iterable[str], half_slot: str | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self._index = {n: i for i, n in enumerate(self.names)}
        self.half_slot = self._index[half_slot] if half_slot is not None else None
        self.gradings: dict[str, Grading] = {}

    def add_grading(self, name: str, weights: Iterable, shift=0) -> None:
        g = Grading(weights, shift)
        if len(g.weights) != len(self.names):
            raise ValueError("grading weight count does not match variable count")
        self.gradings[name] = g

    def index(self, name: str) -> int:
        return self._index[name]

    def _check_exponent(self, i: int, e) -> None:
        if i == self.half_slot:
            if Fraction(e) * 2 != int(Fraction(e) * 2):
                raise ValueError(f"exponent {e} is not a half-integer")
        elif not isinstance(e, int) or e < 0:
            raise ValueError(f"exponent of {self.names[i]} must be a non-negative int, got {e!r}")

    def mono(self, exps: Mapping[str, object], coeff=1) -> "Polynomial":
        tup = [0] * len(self.names)
        for name, e in exps.items():
            i = self._index[name]
            self._check_exponent(i, e)
            tup[i] = e
        return Polynomial(self, {tuple(tup): Fraction(coeff)})

    def var(self, name: str) -> "Polynomial":
        return self.mono({name: 1})

    def const(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * len(self.names): Fraction(c)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def grade_of(self, exps: tuple, grading: str) -> Fraction:
        g = self.gradings[grading]
        total = g.shift
        for w, e in zip(g.weights, exps):
            if e:
                total += w * e
        return total


def _term_sort_key(exps: tuple):
    # graded lex, highest degree first
    return (-sum(Fraction(e) for e in exps), tuple(-Fraction(e) for e in exps))


class Polynomial:
    """Immutable-by-convention sparse polynomial: {exponent tuple: Fraction}."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: VariableContext, terms: dict):
        self.ctx = ctx
        self.terms = {m: c for m, c in terms.items() if c}

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ctx is not self.ctx:
                raise ContextMismatchError("mixed variable contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Polynomial(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return Polynomial(self.ctx, {m: c * q for m, c in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial(self.ctx, poly_mul_terms(self.terms, o.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        out = self.ctx.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def diff(self, word: Iterable[str]) -> "Polynomial":
        terms = self.terms
        for name in word:
            terms = diff_terms(self.ctx, terms, name)
        return Polynomial(self.ctx, terms)

    def grade_components(self, grading: str) -> dict:
        """Split into {grade value: Polynomial}."""
        buckets: dict = {}
        for m, c in self.terms.items():
            g = self.ctx.grade_of(m, grading)
            buckets.setdefault(g, {})[m] = c
        return {g: Polynomial(self.ctx, t) for g, t in buckets.items()}

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda it: _term_sort_key(it[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for name, e in zip(self.ctx.names, m):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"Polynomial({self})"


def poly_mul_terms(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            v = out.get(m)
            out[m] = ca * cb if v is None else v + ca * cb
    return out


def diff_terms(ctx: VariableContext, terms: dict, name: str) -> dict:
    i = ctx.index(name)
    if i == ctx.half_slot:
        raise UnsupportedDerivativeError(
            f"cannot differentiate in the half-integer slot {name!r}")
    out: dict = {}
    for m, c in terms.items():
        e = m[i]
        if e:
            dm = m[:i] + (e - 1,) + m[i + 1:]
            v = out.get(dm)
            out[dm] = c * e if v is None else v + c * e
    return out


def grade_of(poly: Polynomial, grading: str) -> Fraction:
    """Grade of a homogeneous polynomial; error if mixed or zero."""
    grades = {poly.ctx.grade_of(m, grading) for m in poly.terms}
    if len(grades) != 1:
        raise ValueError("polynomial is not grade-homogeneous")
    return grades.pop()
